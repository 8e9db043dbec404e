// Command-line front end: compute, series, poincare, verify, and oracle
// verb families over the quotmot library. Exit codes: 0 pass, 1 violation,
// 2 usage error or infeasible size.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <quotmot/quotmot.hpp>
#include <quotmot/render.hpp>
#include <quotmot/testhook.hpp>

namespace {

using nlohmann::json;
using namespace quotmot;

constexpr int kDefaultOrder = 32;
constexpr int kDefaultTDeg = 12;

struct Options {
  bool as_json = false;
  int order = kDefaultOrder;
  int tdeg = kDefaultTDeg;
};

int emit_value(const Options& opt, const std::string& command, const json& params,
               const json& value_json, const std::string& value_text) {
  if (opt.as_json) {
    json out = {{"command", command}, {"params", params}, {"value", value_json}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value_text << "\n";
  }
  return 0;
}

int emit_count(const Options& opt, const std::string& command, const json& params,
               long long count, double elapsed_ms) {
  if (opt.as_json) {
    // elapsed time deliberately omitted: identical invocations must render
    // byte-identical JSON
    json out = {{"command", command}, {"params", params}, {"count", count}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << count << "  (" << elapsed_ms << " ms)\n";
  }
  return 0;
}

int emit_report(const Options& opt, const std::string& command, const VerifyReport& report) {
  if (opt.as_json) {
    json out = to_json(report);
    out["command"] = command;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << command << ": " << (report.passed() ? "PASS" : "FAIL") << "\n"
              << "  identity: " << report.identity << "\n"
              << "  range:    " << report.range << "\n";
    for (const VerifyFailure& f : report.failures)
      std::cout << "  " << f.check << " at " << f.witness << "\n";
  }
  return report.passed() ? 0 : 1;
}

VerifyReport run_verify_all(const std::string& profile) {
  VerifyReport all;
  all.identity = "full verification battery";
  all.range = "profile=" + profile;

  auto merge = [&all](const std::string& name, const VerifyReport& r) {
    for (const VerifyFailure& f : r.failures) all.fail(name + "/" + f.check, f.witness);
  };

  merge("lbinomial", verify_lbinomial(12, 12));
  merge("prelim", verify_prelim(10, 10));
  merge("thm-a", verify_theorem_A(6, 6, 16));
  merge("nested-gf-1", verify_nested_gf(1, 5, 10));
  merge("nested-gf-2", verify_nested_gf(2, 5, 10));
  merge("nested-gf-3", verify_nested_gf(3, 5, 10));
  merge("question-1-1", verify_question_poincare(8, 8, 48));

  for (int d = 1; d <= 4; ++d)
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= 3; ++n)
        merge("restriction-range", verify_restriction_range(d, r, n));

  // stabilisation of the linear locus motive
  for (int d = 1; d <= 5; ++d)
    for (int r = 1; r <= 5; ++r) {
      const int order = 12;
      if (!TruncatedLSeries(lquot_motive(d, r, order + d), order)
               .congruent(quot_infinity_motive(d, r, order))) {
        std::ostringstream os;
        os << "(d,r)=(" << d << "," << r << ")";
        all.fail("stabilisation/IdentityViolation", os.str());
      }
    }

  // oracle batteries; `quick` caps ambient dimension at 6
  std::vector<std::array<int, 4>> tuples = {
      {2, 1, 2, 2}, {3, 1, 2, 2}, {2, 2, 2, 2}, {3, 1, 2, 3}, {2, 1, 3, 2}, {3, 2, 2, 2}};
  for (auto [d, r, n, q] : tuples) {
    try {
      if (profile == "quick") {
        oracle::FiniteModulePresentation probe = oracle::build_ambient(n, r, d, q);
        if (probe.dimension > 6) continue;
      }
      merge("strata", oracle::verify_stratum_motives(d, r, n, q));
      long long count = oracle::count_punctual_quot(d, r, n, q);
      Int expected = lquot_motive(d, r, n).eval(q);
      Int modulus = 1;
      for (int i = 0; i < n + r - d + 1; ++i) modulus *= q;
      if ((Int(count) - expected) % modulus != 0) {
        std::ostringstream os;
        os << "(d,r,n,q)=(" << d << "," << r << "," << n << "," << q << ")";
        all.fail("global-congruence/CongruenceViolation", os.str());
      }
    } catch (const InfeasibleSize&) {
      // skipped by profile cap
    }
  }

  merge("nested-congruence", verify_nested_congruence({1}, 2, 2));
  merge("nested-congruence", verify_nested_congruence({2}, 2, 2));
  merge("nested-congruence", verify_nested_congruence({1, 2}, 2, 2));
  return all;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator and verifier for stabilising Quot/Hilbert motives"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
  app.add_option("--order,-N", opt.order, "L-adic working order")->capture_default_str();
  app.add_option("--tdeg,-D", opt.tdeg, "total t-degree bound")->capture_default_str();
  bool inject = false;
  app.add_flag("--inject-perturbation", inject)->group("");  // test hook, hidden

  int d = 0, n = 0, r = 0, q = 2, steps = 1;
  int dmax = 12, nmax = 12;
  int prelim_rmax = 10, prelim_dmax = 10;
  int thma_dmax = 6, thma_rmax = 6;
  int q11_dmax = 8, q11_rmax = 8;
  std::string dims_csv, hs_csv, profile = "quick";

  // ---- motive ----
  auto* motive = app.add_subcommand("motive", "closed-form motive calculators");
  motive->require_subcommand(1);
  auto* m_gr = motive->add_subcommand("gr", "Grassmannian motive [Gr(d,n)]");
  m_gr->add_option("d", d)->required();
  m_gr->add_option("n", n)->required();
  auto* m_flag = motive->add_subcommand("flag", "flag variety motive");
  m_flag->add_option("--dims", dims_csv, "comma-separated dimensions")->required();
  m_flag->add_option("--n", n)->required();
  auto* m_grinf = motive->add_subcommand("gr-inf", "stable Grassmannian motive");
  m_grinf->add_option("d", d)->required();
  auto* m_flaginf = motive->add_subcommand("flag-inf", "stable flag motive");
  m_flaginf->add_option("--dims", dims_csv)->required();
  auto* m_lquot = motive->add_subcommand("lquot", "linear punctual Quot motive");
  m_lquot->add_option("d", d)->required();
  m_lquot->add_option("r", r)->required();
  m_lquot->add_option("n", n)->required();

  // ---- limit ----
  auto* limit = app.add_subcommand("limit", "stabilised motives");
  limit->require_subcommand(1);
  auto* l_quot = limit->add_subcommand("quot", "stable punctual Quot motive");
  l_quot->add_option("d", d)->required();
  l_quot->add_option("r", r)->required();

  // ---- series ----
  auto* series = app.add_subcommand("series", "multivariate generating functions");
  series->require_subcommand(1);
  auto* s_nested = series->add_subcommand("nested", "nested punctual Hilbert series");
  s_nested->add_option("--l", steps, "number of nesting steps")->required();

  // ---- poincare ----
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials and series");
  poincare->require_subcommand(1);
  auto* p_lquot = poincare->add_subcommand("lquot", "linear punctual Quot locus");
  p_lquot->add_option("d", d)->required();
  p_lquot->add_option("r", r)->required();
  p_lquot->add_option("n", n)->required();
  auto* p_quotinf = poincare->add_subcommand("quot-inf", "stable punctual Quot scheme");
  p_quotinf->add_option("d", d)->required();
  p_quotinf->add_option("r", r)->required();
  auto* p_flaginf = poincare->add_subcommand("flag-inf", "stable flag variety");
  p_flaginf->add_option("--dims", dims_csv)->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "identity and congruence sweeps");
  verify->require_subcommand(1);
  auto* v_lbin = verify->add_subcommand("lbinomial", "L-binomial recursion identity");
  v_lbin->add_option("--dmax", dmax)->capture_default_str();
  v_lbin->add_option("--nmax", nmax)->capture_default_str();
  auto* v_prelim = verify->add_subcommand("prelim", "preliminary telescoping identity");
  v_prelim->add_option("--rmax", prelim_rmax)->capture_default_str();
  v_prelim->add_option("--dmax", prelim_dmax)->capture_default_str();
  auto* v_thma = verify->add_subcommand("thm-a", "stable Quot motive identity");
  v_thma->add_option("--dmax", thma_dmax)->capture_default_str();
  v_thma->add_option("--rmax", thma_rmax)->capture_default_str();
  auto* v_ngf = verify->add_subcommand("nested-gf", "nested generating function identity");
  v_ngf->add_option("--l", steps)->capture_default_str();
  auto* v_ncong = verify->add_subcommand("nested-congruence", "nested count congruence");
  v_ncong->add_option("--dims", dims_csv)->required();
  v_ncong->add_option("--n", n)->required();
  v_ncong->add_option("--q", q)->required();
  auto* v_q11 = verify->add_subcommand("question-1-1", "Poincare series comparison");
  v_q11->add_option("--dmax", q11_dmax)->capture_default_str();
  v_q11->add_option("--rmax", q11_rmax)->capture_default_str();
  auto* v_rrange = verify->add_subcommand("restriction-range", "restriction agreement range");
  v_rrange->add_option("--d", d)->required();
  v_rrange->add_option("--r", r)->required();
  v_rrange->add_option("--n", n)->required();
  auto* v_strata = verify->add_subcommand("strata", "stratum counts vs motives");
  v_strata->add_option("--d", d)->required();
  v_strata->add_option("--r", r)->required();
  v_strata->add_option("--n", n)->required();
  v_strata->add_option("--q", q)->required();
  auto* v_all = verify->add_subcommand("all", "full battery");
  v_all->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand("oracle", "finite-field counting oracle");
  oracle_cmd->require_subcommand(1);
  auto* o_gr = oracle_cmd->add_subcommand("count-gr", "subspace count");
  o_gr->add_option("--d", d)->required();
  o_gr->add_option("--n", n)->required();
  o_gr->add_option("--q", q)->required();
  auto* o_flag = oracle_cmd->add_subcommand("count-flag", "flag count");
  o_flag->add_option("--dims", dims_csv)->required();
  o_flag->add_option("--n", n)->required();
  o_flag->add_option("--q", q)->required();
  auto* o_quot = oracle_cmd->add_subcommand("count-quot", "punctual Quot count");
  o_quot->add_option("--d", d)->required();
  o_quot->add_option("--r", r)->required();
  o_quot->add_option("--n", n)->required();
  o_quot->add_option("--q", q)->required();
  auto* o_stratum = oracle_cmd->add_subcommand("count-stratum", "Hilbert-Samuel stratum count");
  o_stratum->add_option("--hs", hs_csv, "comma-separated Hilbert-Samuel values")->required();
  o_stratum->add_option("--r", r)->required();
  o_stratum->add_option("--n", n)->required();
  o_stratum->add_option("--q", q)->required();
  auto* o_nested = oracle_cmd->add_subcommand("count-nested", "nested chain count");
  o_nested->add_option("--dims", dims_csv)->required();
  o_nested->add_option("--n", n)->required();
  o_nested->add_option("--q", q)->required();
  auto* o_vstrata = oracle_cmd->add_subcommand("verify-strata", "stratum battery");
  o_vstrata->add_option("--d", d)->required();
  o_vstrata->add_option("--r", r)->required();
  o_vstrata->add_option("--n", n)->required();
  o_vstrata->add_option("--q", q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help/version exit cleanly; everything else is a usage error
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (inject) testhook::inject_global_perturbation();

  try {
    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&started] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                       started).count();
    };

    if (m_gr->parsed()) {
      LPolynomial p = gaussian_binomial(d, n);
      return emit_value(opt, "motive gr", {{"d", d}, {"n", n}}, to_json(p), to_string(p));
    }
    if (m_flag->parsed()) {
      LPolynomial p = flag_motive(FlagDimensions::finite(parse_int_list(dims_csv), n));
      return emit_value(opt, "motive flag", {{"dims", dims_csv}, {"n", n}}, to_json(p),
                        to_string(p));
    }
    if (m_grinf->parsed()) {
      TruncatedLSeries s = grassmannian_infinite(d, opt.order);
      return emit_value(opt, "motive gr-inf", {{"d", d}, {"order", opt.order}}, to_json(s),
                        to_string(s));
    }
    if (m_flaginf->parsed()) {
      TruncatedLSeries s =
          flag_motive_infinite(FlagDimensions::stable(parse_int_list(dims_csv)), opt.order);
      return emit_value(opt, "motive flag-inf", {{"dims", dims_csv}, {"order", opt.order}},
                        to_json(s), to_string(s));
    }
    if (m_lquot->parsed()) {
      LPolynomial p = lquot_motive(d, r, n);
      return emit_value(opt, "motive lquot", {{"d", d}, {"r", r}, {"n", n}}, to_json(p),
                        to_string(p));
    }
    if (l_quot->parsed()) {
      TruncatedLSeries s = quot_infinity_motive(d, r, opt.order);
      return emit_value(opt, "limit quot", {{"d", d}, {"r", r}, {"order", opt.order}},
                        to_json(s), to_string(s));
    }
    if (s_nested->parsed()) {
      MultiTruncatedSeries s = nested_generating_function(steps, opt.tdeg, opt.order);
      return emit_value(opt, "series nested",
                        {{"l", steps}, {"tdeg", opt.tdeg}, {"order", opt.order}}, to_json(s),
                        to_string(s));
    }
    if (p_lquot->parsed()) {
      LPolynomial p = poincare_lquot(d, r, n);
      return emit_value(opt, "poincare lquot", {{"d", d}, {"r", r}, {"n", n}}, to_json(p),
                        to_string(p, "z"));
    }
    if (p_quotinf->parsed()) {
      TruncatedLSeries s = poincare_quot_infinity(d, r, opt.order);
      return emit_value(opt, "poincare quot-inf", {{"d", d}, {"r", r}, {"order", opt.order}},
                        to_json(s), to_string(s, "z"));
    }
    if (p_flaginf->parsed()) {
      TruncatedLSeries s =
          poincare_flag_infinity(FlagDimensions::stable(parse_int_list(dims_csv)), opt.order);
      return emit_value(opt, "poincare flag-inf", {{"dims", dims_csv}, {"order", opt.order}},
                        to_json(s), to_string(s, "z"));
    }

    if (v_lbin->parsed()) return emit_report(opt, "verify lbinomial", verify_lbinomial(dmax, nmax));
    if (v_prelim->parsed())
      return emit_report(opt, "verify prelim", verify_prelim(prelim_rmax, prelim_dmax));
    if (v_thma->parsed())
      return emit_report(opt, "verify thm-a", verify_theorem_A(thma_dmax, thma_rmax, opt.order));
    if (v_ngf->parsed())
      return emit_report(opt, "verify nested-gf", verify_nested_gf(steps, opt.tdeg, opt.order));
    if (v_ncong->parsed())
      return emit_report(opt, "verify nested-congruence",
                         verify_nested_congruence(parse_int_list(dims_csv), n, q));
    if (v_q11->parsed())
      return emit_report(opt, "verify question-1-1",
                         verify_question_poincare(q11_dmax, q11_rmax, opt.order));
    if (v_rrange->parsed())
      return emit_report(opt, "verify restriction-range", verify_restriction_range(d, r, n));
    if (v_strata->parsed())
      return emit_report(opt, "verify strata", oracle::verify_stratum_motives(d, r, n, q));
    if (v_all->parsed()) return emit_report(opt, "verify all", run_verify_all(profile));

    if (o_gr->parsed())
      return emit_count(opt, "oracle count-gr", {{"d", d}, {"n", n}, {"q", q}},
                        oracle::count_grassmannian_points(d, n, q), elapsed_ms());
    if (o_flag->parsed())
      return emit_count(opt, "oracle count-flag", {{"dims", dims_csv}, {"n", n}, {"q", q}},
                        oracle::count_flag_points(parse_int_list(dims_csv), n, q), elapsed_ms());
    if (o_quot->parsed())
      return emit_count(opt, "oracle count-quot", {{"d", d}, {"r", r}, {"n", n}, {"q", q}},
                        oracle::count_punctual_quot(d, r, n, q), elapsed_ms());
    if (o_stratum->parsed())
      return emit_count(opt, "oracle count-stratum",
                        {{"h", hs_csv}, {"r", r}, {"n", n}, {"q", q}},
                        oracle::count_stratum(HilbertSamuelFunction(parse_int_list(hs_csv)), r,
                                              n, q),
                        elapsed_ms());
    if (o_nested->parsed())
      return emit_count(opt, "oracle count-nested", {{"dims", dims_csv}, {"n", n}, {"q", q}},
                        oracle::count_punctual_nested(parse_int_list(dims_csv), n, q),
                        elapsed_ms());
    if (o_vstrata->parsed())
      return emit_report(opt, "oracle verify-strata", oracle::verify_stratum_motives(d, r, n, q));
  } catch (const InfeasibleSize& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "unhandled subcommand\n";
  return 2;
}
