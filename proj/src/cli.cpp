#include "kneadkit/cli.hpp"

#include "kneadkit/combinatorics.hpp"
#include "kneadkit/cubicfam.hpp"
#include "kneadkit/fibmap.hpp"
#include "kneadkit/json_io.hpp"
#include "kneadkit/kneading.hpp"
#include "kneadkit/series.hpp"
#include "kneadkit/subshift.hpp"
#include "kneadkit/zeta.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace kneadkit {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reported with exit code 1 and the payload merged into the output.
struct DomainFailure {
  std::string reason;
  Json details = Json::object();
};

struct RunConfig {
  std::size_t order = 64;
  double tol = 1e-10;
  int depth = 12;
  std::string format = "json";
  std::string out;

  std::string rho, counts, matrix, coeffs, prefix, cycle, lambda, s = "1", from = "1", to = "1.37";
  int nu = 2, n = 6, index = -1, period = 0, kmax = 8, steps = 10;
};

template <class F>
auto parse_input(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

Combinatorics rho_arg(const RunConfig& cfg) {
  if (cfg.rho.empty()) throw UsageError("--rho is required");
  return parse_input("--rho", [&] { return Combinatorics::parse(cfg.rho); });
}

std::vector<long long> int_list(const std::string& flag, const std::string& text) {
  return parse_input(flag, [&] {
    std::vector<long long> v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) v.push_back(parse_bigint(item).get_si());
    if (v.empty()) throw DomainError("empty list");
    return v;
  });
}

std::vector<int> sign_list(const std::string& flag, const std::string& text) {
  std::vector<int> v;
  if (text.empty()) return v;
  for (long long x : int_list(flag, text)) {
    if (x != 1 && x != -1) throw UsageError(flag + ": signs must be 1 or -1");
    v.push_back(static_cast<int>(x));
  }
  return v;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

struct Output {
  Json json;
  std::string csv;  // used when non-empty
};

// ---- comb ------------------------------------------------------------------

Output comb_validate(const RunConfig& cfg) {
  Combinatorics rho = rho_arg(cfg);
  auto pm = is_pm(rho);
  if (!pm.ok) throw DomainFailure{"adjacent equal entries at " + std::to_string(*pm.witness), {{"rho", rho.entries()}}};
  auto own = is_own_combinatorics(rho);
  if (!own.ok)
    throw DomainFailure{"not its own combinatorics",
                        {{"rho", rho.entries()},
                         {"marked", own.remarking.marked},
                         {"induced", own.remarking.induced.entries()}}};
  auto dom = is_virtually_unimodal(rho);
  auto cls = classify_points(rho);
  std::vector<int> fatou, julia;
  for (std::size_t i = 0; i < cls.size(); ++i)
    (cls[i] == PointType::Fatou ? fatou : julia).push_back(static_cast<int>(i));
  auto exp = is_expanding(rho);
  Json j{{"rho", rho.entries()},
         {"pm", true},
         {"own", true},
         {"framed", is_framed(rho)},
         {"turning_points", turning_points(rho)},
         {"vu", dom.has_value()},
         {"dominant", dom ? Json(*dom) : Json(nullptr)},
         {"fatou", fatou},
         {"julia", julia},
         {"expanding", exp.ok}};
  return {j, {}};
}

Output comb_generate(const RunConfig& cfg) {
  if (cfg.nu < 2) throw UsageError("--nu must be at least 2");
  Combinatorics rho = generate_vu(cfg.nu);
  return {Json{{"rho", rho.entries()},
               {"vu", is_virtually_unimodal(rho).has_value()},
               {"expanding", is_expanding(rho).ok}},
          {}};
}

Output comb_orbit(const RunConfig& cfg) {
  Combinatorics rho = rho_arg(cfg);
  if (cfg.period > 0) {
    auto res = periodic_orbits_of_pl(PLModel(rho), cfg.period);
    Json orbits = Json::array();
    for (const auto& o : res.orbits) {
      Json pts = Json::array();
      for (const auto& x : o.cycle) pts.push_back(to_json(x));
      orbits.push_back(pts);
    }
    Json deg = Json::array();
    for (const auto& d : res.degenerate)
      deg.push_back(Json{{"itinerary", d.itinerary}, {"lo", to_json(d.lo)}, {"hi", to_json(d.hi)}});
    return {Json{{"period", cfg.period}, {"orbits", orbits}, {"degenerate", deg}}, {}};
  }
  if (cfg.index < 0 || cfg.index > rho.n()) throw UsageError("--index must lie in 0..n (or give --period)");
  auto o = orbit(rho, cfg.index);
  return {Json{{"index", cfg.index}, {"preperiod", o.preperiod}, {"cycle", o.cycle}}, {}};
}

// ---- knead -----------------------------------------------------------------

Json closed_form_guess(const Series& D) {
  std::vector<long long> c;
  for (const auto& x : D.coeffs()) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return nullptr;
    c.push_back(x.get_num().get_si());
  }
  auto cert = detect_eventual_periodicity(c);
  if (!cert) return nullptr;
  std::vector<Rational> pre, cyc;
  for (std::size_t i = 0; i < cert->preperiod; ++i) pre.emplace_back(static_cast<long>(c[i]));
  for (std::size_t i = 0; i < cert->period; ++i) cyc.emplace_back(static_cast<long>(c[cert->preperiod + i]));
  return Json{{"certificate",
               {{"preperiod", cert->preperiod}, {"period", cert->period}, {"depth", cert->depth}}},
              {"rational", to_json(rational_from_eventually_periodic(pre, cyc))}};
}

Output knead_det(const RunConfig& cfg, bool full) {
  Combinatorics rho = rho_arg(cfg);
  PLMap f{PLModel(rho)};
  if (f.modality() == 0) throw DomainFailure{"no turning points", {}};
  KneadingData kd = kneading_matrix(f, cfg.order);
  KneadingDeterminant det = kneading_determinant(kd);
  Json j = full ? to_json(kd, det) : Json{{"D", to_json(det.D)}, {"shape", kd.shape}};
  j["closed_form"] = closed_form_guess(det.D);
  if (auto c = is_virtually_unimodal(rho)) {
    auto trn = turning_points(rho);
    int idx = static_cast<int>(std::find(trn.begin(), trn.end(), *c) - trn.begin()) + 1;
    j["vu_structure"] = vu_structure_check(kd, idx).ok();
  }
  return {j, {}};
}

Output knead_unimodal(const RunConfig& cfg) {
  auto prefix = sign_list("--prefix", cfg.prefix);
  auto cycle = sign_list("--cycle", cfg.cycle);
  if (cycle.empty()) throw UsageError("--cycle is required");
  RationalFn rf = unimodal_rational_form(prefix, cycle);
  std::vector<int> eps;
  for (std::size_t i = 0; i < cfg.order; ++i)
    eps.push_back(i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()]);
  return {Json{{"D", to_json(unimodal_kneading(eps, cfg.order))}, {"rational", to_json(rf)}}, {}};
}

// ---- zeta ------------------------------------------------------------------

Output zeta_from_counts_cmd(const RunConfig& cfg) {
  std::vector<BigInt> counts;
  for (long long x : int_list("--counts", cfg.counts)) {
    if (x < 0) throw UsageError("--counts must be nonnegative");
    counts.emplace_back(static_cast<long>(x));
  }
  std::size_t N = std::min(cfg.order, counts.size());
  return {Json{{"counts", to_json(counts)}, {"zeta", to_json(zeta_from_counts(counts, N))}}, {}};
}

Output zeta_sft(const RunConfig& cfg) {
  if (cfg.matrix.empty()) throw UsageError("--matrix is required");
  AdjMatrix a = parse_input("--matrix", [&] { return AdjMatrix::parse(cfg.matrix); });
  if (cfg.n < 1) throw UsageError("--n must be positive");
  auto counts = sft_periodic_counts(a, cfg.n);
  return {Json{{"counts", to_json(counts)},
               {"zeta", to_json(zeta_from_counts(counts, static_cast<std::size_t>(cfg.n)))}},
          {}};
}

Output zeta_closed(const RunConfig& cfg) {
  if (cfg.nu < 2) throw UsageError("--nu must be at least 2");
  RationalFn z = zeta_vu_closed_form(cfg.nu);
  return {Json{{"zeta", to_json(z)}, {"counts", to_json(counts_from_zeta(z, cfg.order))}}, {}};
}

Output zeta_mt(const RunConfig& cfg, std::size_t order) {
  Combinatorics rho = rho_arg(cfg);
  PLModel model(rho);
  PLMap f(model);
  if (f.modality() == 0) throw DomainFailure{"no turning points", {}};
  std::vector<BigInt> counts;
  for (std::size_t p = 1; p <= order; ++p) {
    std::vector<DegenerateFamily> deg;
    auto pts = fixed_points_of_iterate(model, static_cast<int>(p), &deg);
    if (!deg.empty())
      throw DomainFailure{"periodic points of period " + std::to_string(p) + " are not isolated", {}};
    counts.emplace_back(static_cast<unsigned long>(pts.size()));
  }
  Series zeta = zeta_from_counts(counts, order);
  Series D = kneading_determinant(f, order).D;
  MtRelation mt = mt_relation_check(zeta, D);
  Json j{{"counts", to_json(counts)},
         {"zeta", to_json(zeta)},
         {"D", to_json(D)},
         {"phi", mt.polynomial ? to_json(*mt.polynomial) : Json(nullptr)},
         {"phi_factors", mt.factors ? Json(*mt.factors) : Json(nullptr)}};
  if (!mt.factors) throw DomainFailure{"Phi is not a product of factors (1 - t^p) at this order", j};
  return {j, {}};
}

// ---- cubic -----------------------------------------------------------------

Json cubic_summary(const Rational& s, int nmax, int depth) {
  CubicParam p = cubic_param(s);
  CriticalValue cv = critical_value(s);
  double sd = to_double(s);
  Json j{{"s", to_json(s)},
         {"a", to_json(p.a)},
         {"b", to_json(p.b)},
         {"c", to_json(p.c)},
         {"critical_value", to_json(cv.direct)},
         {"identities", {{"critical_orbit", verify_critical_orbit(s)}, {"critical_value", cv.consistent()}}}};
  Interval k = filled_julia_endpoints(sd);
  j["alpha"] = k.lo;
  j["beta"] = k.hi;
  Json counts = Json::array();
  for (int n = 1; n <= nmax; ++n) {
    auto r = count_periodic(sd, n);
    if (!r.unresolved.empty()) throw DomainFailure{"unresolved tangency at period " + std::to_string(n), j};
    counts.push_back(r.count);
  }
  j["counts"] = counts;
  BranchSystem bs = build_branch_system(sd);
  auto pieces = repeller_pieces(bs, depth);
  j["pieces"] = {{"depth", depth}, {"count", pieces.size()}, {"max_diameter", max_diameter(pieces)}};
  return j;
}

Rational s_arg(const RunConfig& cfg) {
  return parse_input("--s", [&] { return parse_rational(cfg.s); });
}

Output cubic_report(const RunConfig& cfg) {
  Rational s = s_arg(cfg);
  if (s < 1) throw UsageError("--s must be at least 1");
  int nmax = std::min(cfg.n, 8);
  return {cubic_summary(s, nmax, std::min(cfg.depth, 12)), {}};
}

Output cubic_sweep(const RunConfig& cfg) {
  Rational a = parse_input("--from", [&] { return parse_rational(cfg.from); });
  Rational b = parse_input("--to", [&] { return parse_rational(cfg.to); });
  if (cfg.steps < 1) throw UsageError("--steps must be positive");
  if (a < 1 || b < a) throw UsageError("need 1 <= --from <= --to");
  std::ostringstream csv;
  csv << "s,critical_value,alpha,beta,N1,N2,N3,N4,N5,N6\n";
  Json rows = Json::array();
  for (int i = 0; i <= cfg.steps; ++i) {
    Rational s = a + (b - a) * frac(i, cfg.steps);
    double sd = to_double(s);
    Interval k = filled_julia_endpoints(sd);
    double cv = to_double(critical_value(s).direct);
    csv << fmt(sd) << ',' << fmt(cv) << ',' << fmt(k.lo) << ',' << fmt(k.hi);
    Json counts = Json::array();
    for (int n = 1; n <= 6; ++n) {
      auto r = count_periodic(sd, n);
      csv << ',' << r.count;
      counts.push_back(r.count);
    }
    csv << '\n';
    rows.push_back({{"s", sd}, {"critical_value", cv}, {"alpha", k.lo}, {"beta", k.hi}, {"counts", counts}});
  }
  return {Json{{"rows", rows}}, cfg.format == "json" ? std::string() : csv.str()};
}

Output cubic_count(const RunConfig& cfg) {
  Rational s = s_arg(cfg);
  if (s < 1) throw UsageError("--s must be at least 1");
  if (cfg.n < 1 || cfg.n > 8) throw UsageError("--n must lie in 1..8");
  auto r = count_periodic(to_double(s), cfg.n);
  Json j{{"s", to_json(s)}, {"n", cfg.n}, {"count", r.count}, {"points", r.points},
         {"unresolved", r.unresolved}, {"laps", r.laps}};
  if (!r.unresolved.empty()) throw DomainFailure{"unresolved tangency", j};
  return {j, {}};
}

Output cubic_repeller(const RunConfig& cfg) {
  Rational s = s_arg(cfg);
  if (s < 1) throw UsageError("--s must be at least 1");
  if (cfg.depth < 0 || cfg.depth > 12) throw UsageError("--depth must lie in 0..12");
  BranchSystem bs = build_branch_system(to_double(s));
  Json diam = Json::array();
  for (int d = 1; d <= cfg.depth; ++d) diam.push_back(max_diameter(repeller_pieces(bs, d)));
  Json pieces = Json::array();
  for (const auto& p : repeller_pieces(bs, cfg.depth))
    pieces.push_back({{"word", p.word.str()}, {"lo", p.piece.lo}, {"hi", p.piece.hi}});
  return {Json{{"s", to_json(s)},
               {"J", {bs.J.lo, bs.J.hi}},
               {"J1", {bs.J1.lo, bs.J1.hi}},
               {"J2", {bs.J2.lo, bs.J2.hi}},
               {"count", pieces.size()},
               {"pieces", pieces},
               {"max_diameter", diam}},
          {}};
}

// ---- fib -------------------------------------------------------------------

Output fib_find(const RunConfig& cfg) {
  auto r = find_fib_lambda(cfg.depth, cfg.tol);
  return {Json{{"lambda", to_double(r.lambda)},
               {"lambda_exact", to_json(r.lambda)},
               {"lo", to_json(r.lo)},
               {"hi", to_json(r.hi)},
               {"depth", r.depth},
               {"symbols", r.symbols},
               {"steps", r.steps}},
          {}};
}

Output fib_check(const RunConfig& cfg) {
  Rational lambda;
  if (cfg.lambda.empty())
    lambda = find_fib_lambda(cfg.depth, cfg.tol).lambda;
  else
    lambda = parse_input("--lambda", [&] { return parse_rational(cfg.lambda); });
  if (cfg.kmax < 1) throw UsageError("--kmax must be positive");
  IntervalFamily fam = interval_families(lambda, cfg.kmax);
  StructureReport st = verify_structure(fam, cfg.kmax);
  DiameterReport dr = diameter_ratios(fam, cfg.kmax);
  std::ostringstream csv;
  csv << "k,nu,C,residual\n";
  Json rows = Json::array();
  for (const auto& r : dr.rows) {
    csv << r.k << ',' << fmt(r.nu) << ',' << fmt(r.C) << ',' << fmt(r.residual) << '\n';
    rows.push_back({{"k", r.k}, {"nu", r.nu}, {"C", r.C}, {"one_minus_C", r.one_minus_C}, {"residual", r.residual}, {"product_error", r.product_error}});
  }
  Json checks = Json::object();
  for (const auto& [name, ok] : st.checks) checks[name] = ok;
  Json M = Json::array();
  for (int k = 0; k <= std::min(cfg.kmax, 4); ++k) {
    Json level = Json::array();
    for (const auto& piece : fam.levels[k].M) level.push_back({piece.left, piece.right});
    M.push_back(level);
  }
  Json j{{"lambda", to_double(lambda)},
         {"kmax", cfg.kmax},
         {"structure", checks},
         {"diameters", rows},
         {"nu_above_one", dr.nu_above_one},
         {"C_in_unit_interval", dr.C_in_unit_interval},
         {"C_increasing", dr.C_increasing},
         {"M", M}};
  bool ok = st.ok() && dr.nu_above_one && dr.C_in_unit_interval && dr.C_increasing;
  if (!ok) throw DomainFailure{"structural property failed", j};
  return {j, cfg.format == "csv" ? csv.str() : std::string()};
}

// ---- series ----------------------------------------------------------------

Output series_detect(const RunConfig& cfg) {
  auto c = int_list("--coeffs", cfg.coeffs);
  auto cert = detect_eventual_periodicity(c);
  Json j{{"depth", c.size()}};
  if (cert) {
    j["certificate"] = {{"preperiod", cert->preperiod}, {"period", cert->period}, {"depth", cert->depth}};
    std::vector<Rational> pre, cyc;
    for (std::size_t i = 0; i < cert->preperiod; ++i) pre.emplace_back(static_cast<long>(c[i]));
    for (std::size_t i = 0; i < cert->period; ++i) cyc.emplace_back(static_cast<long>(c[cert->preperiod + i]));
    j["rational"] = to_json(rational_from_eventually_periodic(pre, cyc));
  } else {
    j["certificate"] = nullptr;
    j["rational"] = nullptr;
  }
  return {j, {}};
}

void emit(const Output& o, const RunConfig& cfg, std::ostream& out) {
  std::string text = o.csv.empty() ? o.json.dump() + "\n" : o.csv;
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"kneading invariants, zeta functions and the Fibonacci examples", "kneadkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "write the result to this file instead of stdout");
  app.add_option("--order", cfg.order, "series truncation order N (>= 8)");
  app.add_option("--tol", cfg.tol, "numeric tolerance (> 0)");
  app.add_option("--depth", cfg.depth, "depth (fib: Fibonacci level, cubic: word length)");
  bool order_given = false;

  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto* comb = group("comb", "combinatorics rho");
  auto* cv = comb->add_subcommand("validate", "check conditions and classify a combinatorics");
  cv->add_option("--rho", cfg.rho, "comma-separated entries")->required();
  auto* cg = comb->add_subcommand("generate", "virtually unimodal expanding combinatorics");
  cg->add_option("--nu", cfg.nu, "number of turning points (>= 2)")->required();
  auto* co = comb->add_subcommand("orbit", "orbit of an index, or periodic orbits of the PL model");
  co->add_option("--rho", cfg.rho)->required();
  co->add_option("--index", cfg.index, "marked index");
  co->add_option("--period", cfg.period, "list PL periodic orbits of this minimal period");

  auto* knead = group("knead", "kneading invariants");
  auto* kd = knead->add_subcommand("det", "kneading determinant of the PL model");
  kd->add_option("--rho", cfg.rho)->required();
  auto* km = knead->add_subcommand("matrix", "kneading matrix, determinant and per-column values");
  km->add_option("--rho", cfg.rho)->required();
  auto* ku = knead->add_subcommand("unimodal", "D(t) of an eventually periodic sign sequence");
  ku->add_option("--prefix", cfg.prefix, "signs before the cycle, e.g. -1");
  ku->add_option("--cycle", cfg.cycle, "repeating signs, e.g. -1,1,-1")->required();

  auto* zeta = group("zeta", "Artin-Mazur zeta functions");
  auto* zc = zeta->add_subcommand("from-counts", "zeta series from N_1..N_n");
  zc->add_option("--counts", cfg.counts)->required();
  auto* zs = zeta->add_subcommand("sft", "trace counts of an adjacency matrix");
  zs->add_option("--matrix", cfg.matrix, "rows separated by ';', e.g. 0,1;1,1")->required();
  zs->add_option("--n", cfg.n, "number of counts");
  auto* zf = zeta->add_subcommand("closed-form", "closed form for the virtually unimodal family");
  zf->add_option("--nu", cfg.nu)->required();
  auto* zm = zeta->add_subcommand("mt-check", "recover Phi = 1/(zeta D) for a PL model (default order 12)");
  zm->add_option("--rho", cfg.rho)->required();

  auto* cubic = group("cubic", "the cubic family F_s");
  auto* cr = cubic->add_subcommand("report", "identities, endpoints, counts and pieces");
  cr->add_option("--s", cfg.s, "parameter, e.g. 1 or 6/5")->required();
  cr->add_option("--n", cfg.n, "count periods 1..n (<= 8)");
  auto* cs = cubic->add_subcommand("sweep", "CSV columns: s,critical_value,alpha,beta,N1..N6");
  cs->add_option("--from", cfg.from);
  cs->add_option("--to", cfg.to);
  cs->add_option("--steps", cfg.steps);
  auto* cc = cubic->add_subcommand("count", "solutions of F_s^n(x) = x");
  cc->add_option("--s", cfg.s)->required();
  cc->add_option("--n", cfg.n)->required();
  auto* cp = cubic->add_subcommand("repeller", "Fibonacci repeller pieces");
  cp->add_option("--s", cfg.s)->required();

  auto* fib = group("fib", "Fibonacci tent map");
  auto* ff = fib->add_subcommand("find-lambda", "bisect the slope");
  auto* fc = fib->add_subcommand("check", "structure report; CSV columns: k,nu,C,residual");
  fc->add_option("--lambda", cfg.lambda, "slope (default: bisected at --depth)");
  fc->add_option("--kmax", cfg.kmax);

  auto* ser = group("series", "series utilities");
  auto* sd = ser->add_subcommand("detect-period", "eventual periodicity of an integer sequence");
  sd->add_option("--coeffs", cfg.coeffs)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  order_given = app.count("--order") > 0;

  try {
    if (cfg.order < 8) throw UsageError("--order must be at least 8");
    if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
    Output o;
    if (*cv) o = comb_validate(cfg);
    else if (*cg) o = comb_generate(cfg);
    else if (*co) o = comb_orbit(cfg);
    else if (*kd) o = knead_det(cfg, false);
    else if (*km) o = knead_det(cfg, true);
    else if (*ku) o = knead_unimodal(cfg);
    else if (*zc) o = zeta_from_counts_cmd(cfg);
    else if (*zs) o = zeta_sft(cfg);
    else if (*zf) o = zeta_closed(cfg);
    else if (*zm) o = zeta_mt(cfg, order_given ? cfg.order : 12);
    else if (*cr) o = cubic_report(cfg);
    else if (*cs) o = cubic_sweep(cfg);
    else if (*cc) o = cubic_count(cfg);
    else if (*cp) o = cubic_repeller(cfg);
    else if (*ff) o = fib_find(cfg);
    else if (*fc) o = fib_check(cfg);
    else if (*sd) o = series_detect(cfg);
    if (cfg.format == "csv" && o.csv.empty()) throw UsageError("csv output is not available here");
    emit(o, cfg, out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainFailure& f) {
    Json j = f.details;
    j["ok"] = false;
    j["reason"] = f.reason;
    try {
      emit({j, {}}, cfg, out);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    return 1;
  } catch (const std::runtime_error& e) {  // DomainError, InvariantViolation
    Json j{{"ok", false}, {"reason", e.what()}};
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace kneadkit
