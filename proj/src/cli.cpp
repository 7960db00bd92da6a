#include "freeinv/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "freeinv/random.hpp"

namespace freeinv {

namespace {

constexpr std::uint64_t kRewriteStream = 1'000'000;
constexpr std::uint64_t kSupStream = 2'000'000;
constexpr std::uint64_t kDilationStream = 3'000'000;

const char* kEvenExample = "1 + 3*x1*x2 - 7*x1*x1 - x2*x1*x2*x2";

SuperorthoBasis basis_for(const RunConfig& c) {
  return build_basis(load_rep(c.group), c.max_degree, c.method);
}

FreePoly load_polynomial(const RunConfig& c, std::size_t d) {
  if (!c.poly_text.empty() && !c.poly_file.empty()) throw InputError("give either --poly or a polynomial file, not both");
  if (!c.poly_text.empty()) return parse(c.poly_text, d);
  if (!c.poly_file.empty()) return parse(read_text_file(c.poly_file), d);
  throw InputError("rewrite needs --poly TEXT or a polynomial file");
}

// The quadratic monomial basis on two letters, which the dilation check needs.
bool is_even_quadratic_basis(const SuperorthoBasis& b) {
  if (b.alphabet_size() != 2 || b.size() < 4) return false;
  for (int k = 0; k < 4; ++k)
    if (b.element(k + 1).degree != 2 ||
        norm(b.element(k + 1).poly - FreePoly::monomial(Word::from_code(2, 2, static_cast<std::uint64_t>(k)))) > 1e-12)
      return false;
  return true;
}

FreePoly truncate(const FreePoly& p, int n) {
  FreePoly out(p.alphabet_size());
  for (int k : p.degrees())
    if (k <= n) out += p.homogeneous_part(k);
  return out;
}

class Checks {
 public:
  void add(const std::string& name, bool passed, Json detail, const std::string& failure = {}) {
    detail["passed"] = passed;
    report_[name] = std::move(detail);
    if (!passed) violations_.push_back(name + (failure.empty() ? "" : ": " + failure));
  }
  void violation(const std::string& what) { violations_.push_back(what); }
  bool passed() const { return violations_.empty(); }
  Json& report() { return report_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  Json report_ = Json::object();
  std::vector<std::string> violations_;
};

void check_elements(const SuperorthoBasis& basis, double tol, Checks& checks) {
  double worst_norm = 0.0, worst_inv = 0.0;
  std::vector<std::string> bad;
  for (const auto& e : basis.elements()) {
    const double nrm = std::abs(norm(e.poly) - 1.0);
    const double inv = norm(reynolds(basis.rep(), e.poly) - e.poly);
    worst_norm = std::max(worst_norm, nrm);
    worst_inv = std::max(worst_inv, inv);
    if (nrm > tol) bad.push_back("u" + std::to_string(e.index) + " unit norm");
    if (inv > tol) bad.push_back("u" + std::to_string(e.index) + " invariance");
  }
  Json detail{{"elements", basis.size()}, {"max_norm_error", worst_norm}, {"max_invariance_error", worst_inv}};
  const bool ok = bad.empty();
  std::string failure;
  for (std::size_t k = 0; k < bad.size() && k < 5; ++k) failure += (k ? ", " : "") + bad[k];
  if (bad.size() > 5) failure += ", ...";
  checks.add("elements", ok, std::move(detail), failure);
}

void check_counts(const SuperorthoBasis& basis, Checks& checks) {
  const CountReport cr = count(basis.rep().character(), basis.max_degree());
  const auto counts = basis.counts_by_degree();
  const bool ok = counts == cr.g;
  checks.add("counts", ok, Json{{"counts_by_degree", counts}, {"g", cr.g}}, "basis counts per degree differ from g_n");
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.max_degree < 1) throw InputError("--max-degree must be at least 1");
  if (!(c.tol > 0)) throw InputError("--tol must be positive");
  if (c.trials < 0) throw InputError("--trials must be nonnegative");
  if (c.pad < 0) throw InputError("--pad must be nonnegative");
  if (c.sizes.empty()) throw InputError("--sizes must list at least one size");
  for (int s : c.sizes)
    if (s < 1) throw InputError("--sizes entries must be positive");
}

Json cmd_count(const RunConfig& c) {
  validate(c);
  const UnitaryRep rep = load_rep(c.group);
  Json j = to_json(count(rep.character(), c.max_degree));
  return Json{{"group", rep.name()}, {"f", j["f"]}, {"g", j["g"]}, {"closed_form", j["closed_form"]}};
}

Json cmd_basis(const RunConfig& c) {
  validate(c);
  return to_json(basis_for(c));
}

Json cmd_rewrite(const RunConfig& c) {
  validate(c);
  const UnitaryRep rep = load_rep(c.group);
  const FreePoly p = load_polynomial(c, rep.dim());
  const int n = c.max_degree_given ? c.max_degree : std::max(1, p.degree());
  const SuperorthoBasis basis = build_basis(rep, n, c.method);
  return to_json(rewrite(p, basis));
}

VerifyOutcome cmd_verify(const RunConfig& c) {
  validate(c);
  const UnitaryRep rep = load_rep(c.group);
  Checks checks;
  const SuperorthoBasis basis =
      c.basis_path.empty() ? build_basis(rep, c.max_degree, c.method) : basis_from_json(read_json_file(c.basis_path), rep);
  const int n = basis.max_degree();
  const std::size_t d = rep.dim();

  check_elements(basis, c.tol, checks);
  check_counts(basis, checks);

  const SuperorthoReport so = check_superorthogonality(basis, c.pad, c.tol);
  checks.add("superorthogonality", so.passed, to_json(so), "max |<u_l w, u_m w'>| = " + std::to_string(so.max_violation));

  double psd_gap = std::numeric_limits<double>::infinity();
  {
    bool ok = true;
    for (int t = 0; t < c.trials; ++t) {
      const auto m = c.sizes[static_cast<std::size_t>(t) % c.sizes.size()];
      const OperatorTuple x = sample_row_contraction(d, m, 0.1, trial_seed(c.seed, static_cast<std::uint64_t>(t)));
      const RowBallReport r = check_partial_row_ball(basis, x, n, c.tol);
      psd_gap = std::min(psd_gap, r.psd_gap);
      ok = ok && r.passed;
    }
    if (c.trials == 0) psd_gap = 0.0;
    checks.add("row_ball", ok, Json{{"trials", c.trials}, {"min_psd_gap", psd_gap}}, "PSD gap " + std::to_string(psd_gap));
  }

  // Invariance of the stored elements is checked above, so a corrupted basis
  // can make rewriting fail; that is reported, not thrown.
  FreePoly sample_poly(d);
  HatPoly sample_hat;
  bool have_sample = false;
  {
    double worst_round = 0.0, worst_mul = 0.0;
    bool ok = true;
    std::string failure;
    for (int t = 0; t < c.trials; ++t) {
      std::mt19937_64 rng(trial_seed(c.seed, kRewriteStream + static_cast<std::uint64_t>(t)));
      const FreePoly p = random_invariant(rep, 0, n, rng);
      const int half = n / 2;
      const FreePoly q = random_invariant(rep, 0, half, rng);
      const FreePoly r = random_invariant(rep, 0, n - half, rng);
      try {
        const RewriteResult rp = rewrite(p, basis);
        worst_round = std::max(worst_round, rp.residual_norm / std::max(1.0, norm(p)));
        if (!have_sample) {
          sample_poly = p;
          sample_hat = rp.hat;
          have_sample = true;
        }
        const HatPoly qh = rewrite(q, basis).hat, rh = rewrite(r, basis).hat;
        const FreePoly prod_hat = rewrite(q * r, basis).hat.poly;
        const double err = norm(prod_hat - qh.poly * rh.poly) / std::max(1.0, norm(q * r));
        worst_mul = std::max(worst_mul, err);
      } catch (const RewriteError& e) {
        ok = false;
        failure = e.what();
      }
    }
    ok = ok && worst_round <= 1e-9 && worst_mul <= 1e-9;
    if (failure.empty() && !ok) failure = "round trip or multiplicativity error above 1e-9";
    checks.add("rewrite", ok, Json{{"trials", c.trials}, {"max_round_trip_error", worst_round}, {"max_product_error", worst_mul}},
               failure);
  }

  const bool even = is_even_quadratic_basis(basis);
  FreePoly sup_poly = sample_poly;
  HatPoly sup_hat = sample_hat;
  if (even) {
    sup_poly = truncate(parse(kEvenExample, 2), n);
    try {
      sup_hat = rewrite(sup_poly, basis).hat;
      have_sample = true;
    } catch (const RewriteError&) {
      have_sample = false;
    }
  }
  Json top{{"group", rep.name()}, {"max_degree", n}};
  if (have_sample) {
    const SupNormReport sr = sup_norm_experiment(sup_poly, sup_hat, basis, c.trials, c.sizes,
                                                 trial_seed(c.seed, kSupStream), c.tol);
    checks.add("sup_norm", sr.passed, to_json(sr), sr.violations.empty() ? "" : sr.violations.front());
    top["sup_p_est"] = sr.sup_p_est;
    top["sup_hat_est"] = sr.sup_hat_est;
  } else {
    top["sup_p_est"] = nullptr;
    top["sup_hat_est"] = nullptr;
  }
  if (even && have_sample) {
    std::vector<int> small;
    for (int s : c.sizes) small.push_back(std::min(s, 3));
    const DilationReport dr =
        check_even_dilation(sup_poly, sup_hat, basis, c.trials, small, trial_seed(c.seed, kDilationStream));
    checks.add("dilation", dr.passed, to_json(dr), dr.violations.empty() ? "" : dr.violations.front());
  }

  top["psd_gap"] = psd_gap;
  top["violations"] = checks.violations();
  top["trials"] = c.trials;
  top["seed"] = c.seed;
  top["checks"] = checks.report();
  top["passed"] = checks.passed();
  return {std::move(top), checks.passed()};
}

VerifyOutcome cmd_demo(const RunConfig& c) {
  validate(c);
  Checks checks;

  const UnitaryRep z3 = *builtin_rep("cyclic3-natural");
  const int n3 = std::min(c.max_degree, 4);
  const SuperorthoBasis b3 = build_abelian(z3, n3);
  Json elems = Json::array();
  for (const auto& e : b3.elements())
    elems.push_back(Json{{"index", e.index}, {"degree", e.degree}, {"polynomial", format(e.poly)}});
  const CountReport cr = count(z3.character(), n3);
  checks.add("cyclic3_counts", b3.counts_by_degree() == cr.g, Json{{"g", cr.g}, {"counts_by_degree", b3.counts_by_degree()}});
  const SuperorthoReport so = check_superorthogonality(b3, 2, c.tol);
  checks.add("cyclic3_superorthogonality", so.passed, to_json(so));

  const UnitaryRep ev = *builtin_rep("even2");
  const SuperorthoBasis b2 = build_basis(ev, 4);
  const FreePoly p = parse(kEvenExample, 2);
  const RewriteResult rr = rewrite(p, b2);
  const DilationReport dr = check_even_dilation(p, rr.hat, b2, c.trials, {2, 3}, trial_seed(c.seed, kDilationStream));
  checks.add("even2_dilation", dr.passed, to_json(dr));

  Json report{{"cyclic3",
               {{"basis", std::move(elems)}, {"f", cr.f}, {"g", cr.g}, {"closed_form", to_json(cr)["closed_form"]}}},
              {"even2", {{"polynomial", format(p)}, {"hat", format(rr.hat.poly, 'u')}, {"residual_norm", rr.residual_norm}}},
              {"checks", checks.report()},
              {"violations", checks.violations()},
              {"seed", c.seed},
              {"passed", checks.passed()}};
  return {std::move(report), checks.passed()};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant free polynomials under finite group actions", "freeinv"};
  app.require_subcommand(1);
  RunConfig c;
  std::string method = "auto";

  auto common = [&](CLI::App* sub, bool random) {
    sub->add_option("--group", c.group, "built-in name or JSON file")->capture_default_str();
    sub->add_option("--max-degree", c.max_degree, "largest degree N")->capture_default_str();
    sub->add_option("--tol", c.tol, "tolerance")->capture_default_str();
    sub->add_option("--method", method, "general, abelian or auto")
        ->check(CLI::IsMember({"general", "abelian", "auto"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write JSON here instead of stdout");
    if (random) {
      sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
      sub->add_option("--trials", c.trials, "random trials")->capture_default_str();
      sub->add_option("--sizes", c.sizes, "matrix sizes")->delimiter(',')->capture_default_str();
    }
  };
  auto* count_cmd = app.add_subcommand("count", "invariant dimensions f_n, generator counts g_n, closed form");
  common(count_cmd, false);
  auto* basis_cmd = app.add_subcommand("basis", "superorthonormal basis through N");
  common(basis_cmd, false);
  auto* rewrite_cmd = app.add_subcommand("rewrite", "rewrite an invariant polynomial over the basis");
  common(rewrite_cmd, false);
  rewrite_cmd->add_option("--poly", c.poly_text, "polynomial text");
  rewrite_cmd->add_option("file", c.poly_file, "file holding the polynomial");
  auto* verify_cmd = app.add_subcommand("verify", "run the property suite on a basis");
  common(verify_cmd, true);
  verify_cmd->add_option("--basis", c.basis_path, "basis JSON to verify instead of building one");
  verify_cmd->add_option("--pad", c.pad, "superorthogonality padding")->capture_default_str();
  auto* demo_cmd = app.add_subcommand("demo", "cyclic Z3 basis and the even-function dilation example");
  common(demo_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (method != "auto") c.method = method == "general" ? BasisMethod::General : BasisMethod::Abelian;
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    c.max_degree_given = sub->count("--max-degree") > 0;
  }

  try {
    Json result;
    int code = kExitOk;
    if (c.command == "count") {
      result = cmd_count(c);
    } else if (c.command == "basis") {
      result = cmd_basis(c);
    } else if (c.command == "rewrite") {
      result = cmd_rewrite(c);
    } else {
      VerifyOutcome v = c.command == "verify" ? cmd_verify(c) : cmd_demo(c);
      result = std::move(v.report);
      code = v.passed ? kExitOk : kExitVerifyFailed;
    }
    const std::string text = result.dump(2) + "\n";
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out);
      if (!f) throw InputError("cannot write " + c.out);
      f << text;
    }
    if (code != kExitOk) err << "verification failed\n";
    return code;
  } catch (const RewriteError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BasisError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const SpectrumError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const CountingError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " at position " << e.position() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace freeinv
