#include "facering/cli.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "facering/analysis.hpp"
#include "facering/auxiliary.hpp"
#include "facering/chromatic.hpp"
#include "facering/cyclotomic.hpp"
#include "facering/errors.hpp"
#include "facering/hilbert.hpp"
#include "facering/homology.hpp"
#include "facering/io.hpp"
#include "facering/random_complex.hpp"

namespace facering::cli {

namespace {

using nlohmann::json;

struct Conventions {
  std::string contraction = "merge_vertex";
  std::string labeling = "all";
  std::string log_concavity = "signed";

  json to_json() const {
    return {{"sign", "direct_inclusion_exclusion"},
            {"contraction", contraction},
            {"labeling", labeling},
            {"log_concavity", log_concavity}};
  }
};

struct Output {
  json result;
  std::string text;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& item : split_commas(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

json strings(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Output report_output(const CheckReport& r) { return {to_json(r), to_text(r)}; }

AlphaAssignment load_assignment(const SimplicialComplex& s, const std::string& path) {
  const json doc = read_json_file(path);
  LabelSet ground;
  if (doc.is_object() && doc.contains("ground") && doc["ground"].is_array()) {
    for (const auto& g : doc["ground"]) {
      if (!g.is_string()) throw InvalidInput(path + ": /ground: expected string labels");
      ground.push_back(g.get<std::string>());
    }
  }
  return assignment_for(s, parse_alpha(doc, path), ground);
}

std::optional<AlphaAssignment> find_assignment(const SimplicialComplex& s, const std::string& alpha_path) {
  if (!alpha_path.empty()) return load_assignment(s, alpha_path);
  return search_alpha(s);
}

// --- subcommands -------------------------------------------------------

Output cmd_chromatic(const ComplexInput& in) {
  const IntPolynomial p = chromatic_polynomial(in.complex);
  json result = {{"n", in.complex.vertex_count()},
                 {"r", in.complex.minimal_nonfaces().size()},
                 {"polynomial", polynomial_to_json(p)}};
  if (in.graph) {
    const IntPolynomial g = graph_chromatic(*in.graph);
    result["graph_chromatic"] = polynomial_to_json(g);
    result["graph_agrees"] = g == p;
  }
  return {result, to_string(p) + "\n"};
}

Output cmd_oracle_count(const ComplexInput& in, std::uint64_t q) {
  const BigInt count = finite_model_count(in.complex, q);
  const BigInt value = chromatic_polynomial(in.complex).evaluate(BigInt(static_cast<unsigned long>(q)));
  json result = {{"q", q}, {"count", count.get_str()}, {"polynomial_value", value.get_str()},
                 {"agree", count == value}};
  return {result, "count = " + count.get_str() + ", chi_c(" + std::to_string(q) + ") = " + value.get_str() + "\n"};
}

Output cmd_verify_ac(const ComplexInput& in, const std::string& nonface, ContractionConvention convention) {
  const VertexMask sigma = in.complex.mask_of(split_commas(nonface));
  return report_output(verify_addition_contraction(in.complex, sigma, convention));
}

Output cmd_hilbert(const ComplexInput& in, int expand) {
  const SimplicialComplex& s = in.complex;
  const HVector h = h_vector(s);
  const KPolynomial from_h = numerator_from_h(s);
  json result = {{"n", s.vertex_count()},
                 {"d", h.d()},
                 {"f", strings(s.f_vector())},
                 {"h", strings(h.entries)},
                 {"K_from_h", polynomial_to_json(from_h.poly)}};
  std::ostringstream text;
  text << "n = " << s.vertex_count() << ", d = " << h.d() << "\n";
  text << "f = " << result["f"].dump() << "\nh = " << result["h"].dump() << "\n";
  text << "K(t) = " << to_string(from_h.poly) << "\n";
  if (s.minimal_nonfaces().size() <= 25) {
    const KPolynomial ie = numerator_by_inclusion_exclusion(s.minimal_nonfaces());
    result["K_inclusion_exclusion"] = polynomial_to_json(ie.poly);
    result["K_agree"] = ie.poly == from_h.poly;
    text << "K by inclusion-exclusion agrees: " << (ie.poly == from_h.poly ? "yes" : "no") << "\n";
  }
  if (expand >= 0) {
    const auto series = hilbert_series_coefficients(from_h.poly, s.vertex_count(), expand);
    json rows = json::array();
    for (int m = 0; m <= expand; ++m) {
      const BigInt count = standard_monomial_count(s, m);
      rows.push_back({{"m", m}, {"series", series[static_cast<std::size_t>(m)].get_str()},
                      {"standard_monomials", count.get_str()},
                      {"agree", count == series[static_cast<std::size_t>(m)]}});
      text << "m = " << m << ": series " << series[static_cast<std::size_t>(m)].get_str() << ", monomials "
           << count.get_str() << "\n";
    }
    result["expansion"] = rows;
  }
  return {result, text.str()};
}

Output cmd_verify_theorem(const ComplexInput& in, const std::string& alpha_path) {
  const auto assign = find_assignment(in.complex, alpha_path);
  if (!assign) {
    CheckReport r = CheckReport::pass("main_theorem");
    r.verdict = Verdict::kNotApplicable;
    r.witness = "no assignment with each alpha_i = sigma_i minus one vertex passes the target invariant";
    return report_output(r);
  }
  CheckReport r = verify_main_theorem(in.complex, *assign);
  r.details["alpha_source"] = alpha_path.empty() ? "search" : alpha_path;
  if (assign->size() <= 20) {
    for (const auto mode : {PropertyIMode::kLiteral, PropertyIMode::kStrict}) {
      CheckReport p = check_property_I(*assign, mode);
      p.name += "_" + std::string(to_string(mode));
      p.details["informational"] = true;
      r.children.push_back(std::move(p));
    }
  }
  return report_output(r);
}

Output cmd_lift(const ComplexInput& in, const std::string& mode) {
  const Lift lift = mode == "disjoint" ? lift_disjoint(in.complex) : lift_with_apex(in.complex);
  json result = {{"mode", mode},
                 {"complex", complex_to_json(lift.complex)},
                 {"ground", lift.assignment.alpha_ground()},
                 {"alpha", alpha_to_json(lift.assignment)}};
  return {result, result.dump(2) + "\n"};
}

Output cmd_homology(const ComplexInput& in) {
  json rows = json::array();
  std::ostringstream text;
  text << "degree  betti  torsion\n";
  for (const auto& g : reduced_homology(in.complex)) {
    rows.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", strings(g.torsion)}});
    std::string torsion;
    for (const auto& t : g.torsion) torsion += (torsion.empty() ? "Z/" : " Z/") + t.get_str();
    text << std::setw(6) << g.degree << std::setw(7) << g.betti << "  " << (torsion.empty() ? "-" : torsion) << "\n";
  }
  return {{{"homology", rows}}, text.str()};
}

Output cmd_cyclo_poly(long n) {
  const IntPolynomial p = cyclotomic_polynomial(n);
  return {{{"n", n}, {"polynomial", polynomial_to_json(p, "x")}}, to_string(p, "x") + "\n"};
}

Output cmd_uniform(int n, int r, const std::string& lift, LogConcavityMode mode) {
  const SimplicialComplex u = uniform_matroid_complex(n, r);
  json result = {{"n", n}, {"r", r}, {"f", strings(u.f_vector())}, {"h", strings(h_vector(u).entries)},
                 {"minimal_nonfaces", u.minimal_nonfaces().size()}};
  CheckReport report = log_concavity_report(u, std::nullopt, mode);
  if (lift == "apex") {
    const Lift l = lift_with_apex(u);
    result["lift"] = {{"vertices", l.complex.vertex_count()}, {"minimal_nonfaces", l.complex.minimal_nonfaces().size()}};
    report = log_concavity_report(l.complex, l.assignment, mode);
  }
  result["report"] = to_json(report);
  return {result, to_text(report)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CheckReport oracle_agreement(const SimplicialComplex& s) {
  const IntPolynomial p = chromatic_polynomial(s);
  CheckReport r = CheckReport::pass("oracle_count");
  for (std::uint64_t q = 0; q <= static_cast<std::uint64_t>(s.vertex_count()) + 1; ++q) {
    const BigInt want = finite_model_count(s, q);
    const BigInt got = p.evaluate(BigInt(static_cast<unsigned long>(q)));
    if (want != got) {
      r.verdict = Verdict::kFail;
      r.witness = "q=" + std::to_string(q) + ": count " + want.get_str() + " vs " + got.get_str();
      break;
    }
  }
  return r;
}

CheckReport hilbert_agreement(const SimplicialComplex& s) {
  CheckReport r = CheckReport::pass("hilbert_cross");
  const IntPolynomial ie = numerator_by_inclusion_exclusion(s.minimal_nonfaces()).poly;
  const IntPolynomial fh = numerator_from_h(s).poly;
  if (!(ie == fh)) {
    r.verdict = Verdict::kFail;
    r.witness = to_string(ie) + " vs " + to_string(fh);
    return r;
  }
  const auto series = hilbert_series_coefficients(ie, s.vertex_count(), 6);
  for (int m = 0; m <= 6; ++m) {
    if (series[static_cast<std::size_t>(m)] != standard_monomial_count(s, m)) {
      r.verdict = Verdict::kFail;
      r.witness = "series mismatch at m=" + std::to_string(m);
      break;
    }
  }
  return r;
}

std::string cmd_sweep(std::uint64_t seed, int instances) {
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  out << "instance_id,seed,n,r,check_name,verdict,witness\n";
  for (int k = 0; k < instances; ++k) {
    RandomComplexOptions o;
    o.vertices = 2 + static_cast<int>(rng() % 5);
    o.max_generators = 4;
    o.max_size = 3;
    const SimplicialComplex s = random_complex(rng, o);
    std::vector<CheckReport> checks;
    checks.push_back(oracle_agreement(s));
    checks.push_back(hilbert_agreement(s));
    checks.push_back(check_top_h_identity(s));
    const Lift lift = lift_with_apex(s);
    CheckReport theorem = verify_main_theorem(lift.complex, lift.assignment);
    theorem.name = "main_theorem_apex";
    checks.push_back(std::move(theorem));
    const CheckReport strict = check_property_I(lift.assignment, PropertyIMode::kStrict);
    CheckReport implied = CheckReport::pass("strict_implies_target");
    if (strict.passed()) {
      const CheckReport target = check_target_invariant(lift.assignment);
      implied.verdict = target.verdict;
      implied.witness = target.witness;
    }
    checks.push_back(std::move(implied));
    for (const auto& c : checks) {
      out << k << ',' << seed << ',' << s.vertex_count() << ',' << s.minimal_nonfaces().size() << ','
          << c.name << ',' << to_string(c.verdict) << ',' << csv_field(c.witness) << '\n';
    }
  }
  return out.str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial chromatic polynomials and face-ring invariants", "facering"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable text instead of JSON")->trigger_on_parse();

  Conventions conv;
  std::string file;
  std::string alpha_path;
  std::string nonface;
  std::string convention = "merge";
  std::string mode;
  std::string labeling = "all";
  std::string primes;
  std::string lift;
  std::string lc_mode = "signed";
  std::uint64_t q = 0;
  int expand = -1;
  int a = 0;
  long n = 0;
  long j = 0;
  int r = 0;
  std::uint64_t seed = 0;
  int instances = 50;
  bool search = false;

  auto file_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("complex", file, "Complex or graph JSON file")->required();
    sub->fallthrough();
    return sub;
  };

  file_command("chromatic", "Simplicial chromatic polynomial");
  file_command("oracle-count", "Count tuples avoiding every nonface diagonal")
      ->add_option("--q", q, "Size of the coloring set")->required();
  auto* ac = file_command("verify-ac", "Addition-contraction residuals");
  ac->add_option("--nonface", nonface, "Minimal nonface, comma separated")->required();
  ac->add_option("--convention", convention, "merge or remove")->check(CLI::IsMember({"merge", "remove"}));
  file_command("hilbert", "K-polynomial, f- and h-vectors")
      ->add_option("--expand", expand, "Also expand the Hilbert series to this degree");
  auto* vt = file_command("verify-theorem", "chi_c(S) against t^n K_T(1/t) and t^n h_T(1/t)");
  vt->add_option("--alpha", alpha_path, "Alpha assignment JSON");
  vt->add_flag("--search", search, "Search for an assignment (default without --alpha)");
  file_command("lift", "Build S from T by adding fresh vertices to its nonfaces")
      ->add_option("--mode", mode, "apex or disjoint")->required()->check(CLI::IsMember({"apex", "disjoint"}));
  file_command("verify-cc", "Constant component count identity")->add_option("--a", a)->required();
  file_command("hilb-window", "Brenti criterion on the K-polynomial window")->add_option("--a", a)->required();
  file_command("homology", "Reduced integer homology");
  auto* lc = file_command("logconcavity", "Log-concavity of h, f and chi_c");
  lc->add_option("--alpha", alpha_path, "Alpha assignment JSON");
  lc->add_option("--mode", lc_mode, "signed or absolute")->check(CLI::IsMember({"signed", "absolute"}));
  file_command("dehn-sommerville", "Palindromic h-vector");
  auto* rc = file_command("reciprocity", "Signed palindrome structure of chi_c");
  rc->add_option("--alpha", alpha_path, "Alpha assignment JSON");
  rc->add_flag("--search", search, "Search for an assignment (default without --alpha)");

  auto* cp = app.add_subcommand("cyclo-poly", "Cyclotomic polynomial");
  cp->add_option("--n", n)->required();
  cp->fallthrough();
  auto* cc = app.add_subcommand("cyclo-check", "Cyclotomic homology and h_d checks on K_{j}");
  cc->add_option("--primes", primes, "Distinct primes, comma separated")->required();
  cc->add_option("--j", j)->required();
  cc->add_option("--mode", mode, "cycltop or cyclcheck")->check(CLI::IsMember({"cycltop", "cyclcheck"}));
  cc->add_option("--labeling", labeling, "zero, one, truncated or all")
      ->check(CLI::IsMember({"zero", "one", "truncated", "all"}));
  cc->fallthrough();
  auto* un = app.add_subcommand("uniform", "Uniform matroid independence complex");
  un->add_option("--n", n)->required();
  un->add_option("--r", r)->required();
  un->add_option("--lift", lift, "apex")->check(CLI::IsMember({"apex"}));
  un->add_option("--mode", lc_mode, "signed or absolute")->check(CLI::IsMember({"signed", "absolute"}));
  un->fallthrough();
  auto* sw = app.add_subcommand("sweep", "Randomized property checks as CSV");
  sw->add_option("--seed", seed)->required();
  sw->add_option("--instances", instances)->check(CLI::Range(1, 100000));
  sw->fallthrough();

  std::vector<const char*> argv{"facering"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Output result;
    if (command == "sweep") {
      out << cmd_sweep(seed, instances);
      return kExitOk;
    }
    const LogConcavityMode lcm = lc_mode == "absolute" ? LogConcavityMode::kAbsolute : LogConcavityMode::kSigned;
    conv.log_concavity = std::string(to_string(lcm));
    if (command == "cyclo-poly") {
      result = cmd_cyclo_poly(n);
    } else if (command == "cyclo-check") {
      conv.labeling = labeling;
      CyclotomicSpec spec(parse_longs(primes));
      std::vector<ResidueLabeling> chosen;
      if (labeling == "all") chosen.assign(std::begin(kAllLabelings), std::end(kAllLabelings));
      else chosen.push_back(parse_labeling(labeling));
      result = report_output(mode == "cyclcheck" ? check_cyclcheck(spec, j, chosen) : check_cycltop(spec, j, chosen));
    } else if (command == "uniform") {
      result = cmd_uniform(static_cast<int>(n), r, lift, lcm);
    } else {
      const ComplexInput in = read_complex_file(file);
      if (command == "chromatic") {
        result = cmd_chromatic(in);
      } else if (command == "oracle-count") {
        result = cmd_oracle_count(in, q);
      } else if (command == "verify-ac") {
        const auto c = convention == "remove" ? ContractionConvention::kRemoveOnly : ContractionConvention::kMergeVertex;
        conv.contraction = std::string(to_string(c));
        result = cmd_verify_ac(in, nonface, c);
      } else if (command == "hilbert") {
        result = cmd_hilbert(in, expand);
      } else if (command == "verify-theorem") {
        result = cmd_verify_theorem(in, alpha_path);
      } else if (command == "lift") {
        result = cmd_lift(in, mode);
      } else if (command == "verify-cc") {
        result = report_output(verify_constant_component(in.complex, a));
      } else if (command == "hilb-window") {
        const HilbertWindow w = hilbert_polynomial_window(in.complex, a);
        result = report_output(w.report);
        result.result["P"] = polynomial_to_json(w.window);
      } else if (command == "homology") {
        result = cmd_homology(in);
      } else if (command == "logconcavity") {
        std::optional<AlphaAssignment> assign;
        if (!alpha_path.empty()) assign = load_assignment(in.complex, alpha_path);
        result = report_output(log_concavity_report(in.complex, assign, lcm));
      } else if (command == "dehn-sommerville") {
        result = report_output(dehn_sommerville_check(in.complex));
      } else if (command == "reciprocity") {
        const auto assign = find_assignment(in.complex, alpha_path);
        if (!assign) throw InvalidInput("no alpha assignment given or found");
        result = report_output(reciprocity_report(in.complex, *assign));
      }
    }
    if (pretty) {
      out << result.text;
    } else {
      json envelope = {{"command", command}, {"conventions", conv.to_json()}, {"result", result.result}};
      out << envelope.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const GuardExceeded& e) {
    err << json{{"error", "guard_exceeded"}, {"limit", e.limit()}, {"message", e.what()}}.dump() << "\n";
    return kExitGuard;
  } catch (const InvalidInput& e) {
    err << json{{"error", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kExitInternal;
  }
}

}  // namespace facering::cli
