#include "lorhom/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lorhom/adversary.hpp"
#include "lorhom/certifier.hpp"
#include "lorhom/errors.hpp"
#include "lorhom/jacobi.hpp"
#include "lorhom/mesh.hpp"
#include "lorhom/plot_data.hpp"
#include "lorhom/spacetime.hpp"
#include "lorhom/swept_arcs.hpp"
#include "lorhom/timelike.hpp"

namespace lorhom {

namespace {

namespace fs = std::filesystem;

/// Reads task parameters with defaults, writing every default back so the
/// report carries the fully resolved config.
class Params {
 public:
  explicit Params(Json& j) : j_(j) {
    if (j_.is_null()) j_ = Json::object();
    if (!j_.is_object()) throw ConfigError("parameters must be an object");
  }

  template <class T>
  T get(const char* key, const T& fallback) {
    if (!j_.contains(key)) j_[key] = fallback;
    try {
      return j_.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(std::string("bad value for ") + key);
    }
  }

  bool has(const char* key) const { return j_.contains(key); }
  Params sub(const char* key) { return Params(j_[key]); }

 private:
  Json& j_;
};

class Checks {
 public:
  void add(const std::string& name, Outcome o, Json detail = Json::object()) {
    list_.push_back({{"name", name}, {"status", to_string(o)}, {"detail", std::move(detail)}});
    if (static_cast<int>(o) > static_cast<int>(worst_)) worst_ = o;
  }
  void expect(const std::string& name, bool ok, Json detail = Json::object()) {
    add(name, ok ? Outcome::Match : Outcome::Contradiction, std::move(detail));
  }
  Outcome worst() const { return worst_; }
  const Json& list() const { return list_; }

 private:
  Json list_ = Json::array();
  Outcome worst_ = Outcome::Match;
};

struct Context {
  std::string name;
  ConformalFactorSpec factor = ConformalFactorSpec::unit();
  Params params;
  Params expect;
  std::uint64_t seed;
  std::vector<std::string> plots;
  Json results = Json::object();
  Checks checks;
  std::map<std::string, std::string> csv;
};

using Pairs = std::vector<std::vector<int>>;

std::vector<std::pair<int, int>> read_pairs(Params& p, const char* key, const Pairs& fallback) {
  std::vector<std::pair<int, int>> out;
  for (const auto& v : p.get(key, fallback)) {
    if (v.size() != 2 || v[0] < 1 || v[1] <= v[0]) throw ConfigError("pairs must be [i, j] with 1 <= i < j");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

bool wants(const Context& c, const std::string& kind) {
  return std::find(c.plots.begin(), c.plots.end(), kind) != c.plots.end();
}

Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json split_json(const SplitLength& l) {
  return {{"base", l.base}, {"surplus", l.surplus}, {"total", l.total()}};
}

Json arc_json(const ArcExcess& a) {
  return {{"arc", a.arc},
          {"from", a.from},
          {"to", a.to},
          {"argmax_azimuth", a.argmax_azimuth},
          {"max_excess", a.max_excess},
          {"coarse_max_excess", a.coarse_max_excess},
          {"refinement_error", a.refinement_error},
          {"scan_error", a.scan_error},
          {"error_bar", a.error_bar},
          {"scanned", a.scanned}};
}

Json certificate_json(const ObstructionCertificate& c) {
  return {{"i", c.i},
          {"j", c.j},
          {"coarse_level", c.coarse_level},
          {"fine_level", c.fine_level},
          {"margin", c.margin},
          {"coarse_margin", c.coarse_margin},
          {"error_bar", c.error_bar},
          {"verdict", to_string(c.verdict)},
          {"arcs", Json::array({arc_json(c.arcs[0]), arc_json(c.arcs[1])})}};
}

Json class_json(const CausalClass& c) {
  return {{"verdict", to_string(c.verdict)},
          {"worst_ratio", c.worst_ratio},
          {"min_ratio", c.min_ratio},
          {"max_deviation", c.max_deviation},
          {"worst_segment", c.worst_segment},
          {"slack", c.slack}};
}

Json coverage_json(const ArcCoverageReport& r) {
  Json covered = Json::array();
  for (const auto& [a, b] : r.covered) covered.push_back({a, b});
  return {{"outcome", to_string(r.outcome)},
          {"short_arc", r.short_arc},
          {"long_arc", r.long_arc},
          {"lifted_min", r.lifted_min},
          {"lifted_max", r.lifted_max},
          {"max_step", r.max_step},
          {"tolerance", r.tolerance},
          {"component_cells", r.component_cells},
          {"covered", covered}};
}

Json verification_json(const CausalVerification& v) {
  return {{"rows", v.rows},
          {"violations", v.violations},
          {"first_violation", v.first_violation},
          {"max_row_excess", v.max_row_excess},
          {"max_row", v.max_row},
          {"tolerance", v.tolerance},
          {"inconsistency_alarm", v.inconsistency_alarm}};
}

ObstructionVerdict verdict_from(const std::string& s) {
  if (s == "obstructed") return ObstructionVerdict::Obstructed;
  if (s == "not-obstructed") return ObstructionVerdict::NotObstructed;
  if (s == "inconclusive") return ObstructionVerdict::Inconclusive;
  throw ConfigError("unknown verdict: " + s);
}

std::string fmt_pair(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// validate-factor

void run_validate_factor(Context& c) {
  const int P = c.params.get("polar_samples", 2048);
  const int A = c.params.get("azimuth_samples", 4096);
  const double tol = c.params.get("tolerance", 1e-9);
  const std::vector<std::string> none;
  const auto expected = c.expect.get(
      "failing", c.factor.variant() == FactorVariant::Unit ? std::vector<std::string>{"c2"} : none);
  const auto rep = validate_factor(c.factor, P, A, tol);
  Json conds = Json::array();
  std::vector<std::string> failing;
  for (const auto& k : rep.conditions) {
    conds.push_back({{"name", k.name},
                     {"passed", k.passed},
                     {"checked", k.checked},
                     {"worst_polar", k.worst_polar},
                     {"worst_azimuth", k.worst_azimuth},
                     {"worst_value", num(k.worst_value)}});
    if (!k.passed) failing.push_back(k.name);
  }
  c.results["conditions"] = conds;
  c.results["failing"] = failing;
  auto sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  c.checks.expect("failing conditions", sorted == failing,
                  {{"expected", sorted}, {"observed", failing}});
  if (wants(c, "factor-heatmap")) {
    std::ostringstream os;
    write_factor_heatmap(os, c.factor, c.params.get("heatmap_polar", 512),
                         c.params.get("heatmap_azimuth", 1024));
    c.csv["factor-heatmap"] = os.str();
  }
}

// lengths

void run_lengths(Context& c) {
  const int samples = c.params.get("samples", 2048);
  std::vector<int> all;
  for (int n = 1; n <= c.factor.max_index(); ++n) all.push_back(n);
  const auto meridians = c.params.get("meridians", all);
  const auto arcs = c.params.get("arcs", std::vector<std::vector<double>>{{0.2, 0.3}, {0.4, 1.2}, {0.09, 0.1}});
  const double mtol = c.expect.get("meridian_tolerance", 1e-9);
  const double ltol = c.expect.get("lift_tolerance", 1e-6);
  const bool exceed = c.expect.get("arcs_exceed_round", c.factor.variant() != FactorVariant::Unit);

  Json rows = Json::array();
  bool lengths_ok = true, lifts_ok = true;
  for (int n : meridians) {
    if (n < 1 || n > c.factor.max_index()) throw ConfigError("meridian index out of range");
    const auto lift = lift_meridian(n, c.factor, samples);
    const SplitLength l = length_split(c.factor, lift.space());
    const double dev = l.excess_over(kPi);
    const CausalClass cls = classify(lift);
    lengths_ok = lengths_ok && std::abs(dev) <= mtol;
    lifts_ok = lifts_ok && cls.verdict == CausalVerdict::Lightlike && cls.max_deviation <= ltol;
    rows.push_back({{"n", n},
                    {"azimuth", meridian_azimuth(n)},
                    {"length", split_json(l)},
                    {"excess_over_pi", dev},
                    {"lift", class_json(cls)}});
  }
  c.results["meridians"] = rows;
  c.checks.expect("meridian lengths equal pi", lengths_ok, {{"tolerance", mtol}});
  c.checks.expect("meridian lifts lightlike", lifts_ok, {{"tolerance", ltol}});

  Json arc_rows = Json::array();
  bool arcs_ok = true;
  for (const auto& a : arcs) {
    if (a.size() != 2 || !(a[0] < a[1])) throw ConfigError("arcs must be [from, to] with from < to");
    const SplitLength l = length_split(c.factor, equator_arc(a[0], a[1], samples));
    arcs_ok = arcs_ok && (exceed ? l.surplus > 0.0 : l.surplus == 0.0);
    arc_rows.push_back({{"from", a[0]}, {"to", a[1]}, {"round_length", a[1] - a[0]}, {"length", split_json(l)}});
  }
  c.results["arcs"] = arc_rows;
  c.checks.expect(exceed ? "equator arcs exceed round length" : "equator arcs equal round length",
                  arcs_ok);
}

// distance

void run_distance(Context& c) {
  const int level = c.params.get("level", 6);
  const auto pts = c.params.get(
      "pairs", std::vector<std::vector<std::vector<double>>>{
                   {{0.0, 0.0}, {kPi, 0.0}},
                   {{0.0, 0.0}, {kPi / 2, midpoint_azimuth(1)}},
                   {{kPi / 2, midpoint_azimuth(1)}, {kPi, 0.0}}});
  const auto mesh = build_mesh(c.factor, level);
  const bool lower = c.factor.variant() != FactorVariant::Modified;
  Json rows = Json::array();
  bool ok = true;
  for (const auto& pr : pts) {
    if (pr.size() != 2 || pr[0].size() != 2 || pr[1].size() != 2)
      throw ConfigError("distance pairs must be [[theta, phi], [theta, phi]]");
    const auto a = SpherePoint::from_angles(pr[0][0], pr[0][1]);
    const auto b = SpherePoint::from_angles(pr[1][0], pr[1][1]);
    const SplitLength d = mesh_distance_split(mesh, a, b);
    const double d0 = distance(a, b);
    if (lower) ok = ok && d.excess_over(d0) >= -1e-12;
    rows.push_back({{"from", pr[0]}, {"to", pr[1]}, {"round", d0}, {"mesh", split_json(d)}});
  }
  c.results["level"] = level;
  c.results["spacing"] = mesh.spacing();
  c.results["distances"] = rows;
  if (lower) c.checks.expect("mesh distance bounds round distance", ok, {{"slack", 1e-12}});
}

// certify-obstruction

void run_certify(Context& c) {
  const int level = c.params.get("level", 6);
  if (level < 1) throw ConfigError("level must be at least 1");
  const auto pairs = read_pairs(c.params, "pairs", Pairs{{1, 2}});
  for (const auto& [i, j] : pairs)
    if (j > c.factor.max_index()) throw ConfigError("pair index above N_max");
  const auto expected = verdict_from(c.expect.get<std::string>(
      "verdict", c.factor.variant() == FactorVariant::Unit ? "not-obstructed" : "obstructed"));

  const ExcessField coarse(c.factor, level - 1);
  const ExcessField fine(c.factor, level);
  std::vector<ObstructionCertificate> certs;
  Json cj = Json::array();
  for (const auto& [i, j] : pairs) {
    certs.push_back(obstruction_margin(i, j, coarse, fine));
    const auto& cert = certs.back();
    cj.push_back(certificate_json(cert));
    const Outcome o = cert.verdict == expected ? Outcome::Match
                      : cert.verdict == ObstructionVerdict::Inconclusive ? Outcome::Inconclusive
                                                                          : Outcome::Contradiction;
    c.checks.add("verdict " + fmt_pair(i, j), o,
                 {{"expected", to_string(expected)}, {"observed", to_string(cert.verdict)}});
  }
  c.results["certificates"] = cj;
  if (wants(c, "excess-profile")) {
    std::ostringstream os;
    write_excess_profile(os, coarse, fine);
    c.csv["excess-profile"] = os.str();
  }

  std::vector<std::vector<double>> row_s, row_e;
  if (c.params.has("homotopies")) {
    Params h = c.params.sub("homotopies");
    const int n_short = h.get("short", 10);
    const int n_long = h.get("long", 10);
    const double amp = h.get("amplitude", 0.02);
    const int s_short = h.get("s_intervals", 64);
    const int s_long = h.get("long_s_intervals", 512);
    const int t_int = h.get("t_intervals", 256);
    Json grids = Json::array();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      const auto& cert = certs[k];
      for (int g = 0; g < n_short + n_long; ++g) {
        const bool lng = g >= n_short;
        auto grid = rotation_homotopy(meridian_azimuth(i), meridian_azimuth(j),
                                      lng ? Winding::Long : Winding::Short, lng ? s_long : s_short,
                                      t_int);
        const std::uint64_t gseed = c.seed * 1000003ULL + static_cast<std::uint64_t>(k * 1000 + g);
        if (g != 0 && g != n_short) grid = perturb_homotopy(grid, gseed, amp);
        const auto cov = swept_equator_arcs(grid, meridian_azimuth(j), meridian_azimuth(i));
        const auto ver = verify_causal_homotopy(c.factor, grid, VerificationModel::Projection, &cert);
        const ArcOutcome want = lng ? ArcOutcome::LongArc : ArcOutcome::ShortArc;
        const ArcOutcome other = lng ? ArcOutcome::ShortArc : ArcOutcome::LongArc;
        const std::string label = fmt_pair(i, j) + (lng ? " long #" : " short #") +
                                  std::to_string(lng ? g - n_short : g);
        c.checks.add("swept arc " + label,
                     cov.outcome == want    ? Outcome::Match
                     : cov.outcome == other ? Outcome::Contradiction
                                            : Outcome::Inconclusive,
                     {{"expected", to_string(want)}, {"observed", to_string(cov.outcome)}});
        if (cert.verdict == ObstructionVerdict::Obstructed) {
          const double need = cert.margin - 2.0 * cert.error_bar;
          c.checks.expect("row bound " + label, ver.max_row_excess >= need && !ver.inconsistency_alarm,
                          {{"max_row_excess", ver.max_row_excess}, {"required", need}});
        }
        grids.push_back({{"pair", {i, j}},
                         {"winding", lng ? "long" : "short"},
                         {"perturbed", g != 0 && g != n_short},
                         {"seed", gseed},
                         {"rows", grid.rows()},
                         {"coverage", coverage_json(cov)},
                         {"verification", verification_json(ver)}});
        row_s.push_back(grid.s_values());
        row_e.push_back(ver.row_excess);
      }
    }
    c.results["homotopies"] = grids;
  }
  if (wants(c, "row-lengths")) {
    if (row_s.empty()) throw ConfigError("row-lengths plot needs a homotopies section");
    std::ostringstream os;
    write_row_lengths(os, row_s, row_e);
    c.csv["row-lengths"] = os.str();
  }

  if (c.params.has("adversary")) {
    Params a = c.params.sub("adversary");
    AdversaryOptions o;
    o.iterations = a.get("iterations", o.iterations);
    o.s_intervals = a.get("s_intervals", o.s_intervals);
    o.t_intervals = a.get("t_intervals", o.t_intervals);
    o.modes = a.get("modes", o.modes);
    o.restart_every = a.get("restart_every", o.restart_every);
    o.seed = c.seed;
    Json runs = Json::array();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      const auto r = attempt_causal_homotopy(c.factor, lift_meridian(i, c.factor),
                                             lift_meridian(j, c.factor), o);
      runs.push_back({{"pair", {i, j}},
                      {"residual", r.residual},
                      {"initial_residual", r.initial_residual},
                      {"iterations", r.iterations},
                      {"exhausted", r.exhausted},
                      {"continuity_bound", r.continuity_bound}});
      const auto& cert = certs[k];
      if (cert.verdict == ObstructionVerdict::Obstructed)
        c.checks.expect("adversary residual " + fmt_pair(i, j), r.residual >= 0.5 * cert.margin,
                        {{"residual", r.residual}, {"required", 0.5 * cert.margin}});
      else if (cert.verdict == ObstructionVerdict::NotObstructed)
        c.checks.expect("adversary residual " + fmt_pair(i, j), r.residual < 1e-6,
                        {{"residual", r.residual}, {"required_below", 1e-6}});
    }
    c.results["adversary"] = runs;
  }
}

// claim32 and timelike-build

TimelikePipeline pipeline_for(Context& c) {
  if (c.factor.variant() != FactorVariant::Base) throw ConfigError("task needs a base factor");
  const int nmax = c.params.get("max_index", 6);
  const auto rule = dip_rule_from_string(c.params.get<std::string>("rule", "detour-bound"));
  if (nmax < 2 || nmax > c.factor.max_index() + 8) throw ConfigError("max_index out of range");
  return build_timelike_pipeline(nmax, rule, c.factor.base_params());
}

void run_claim32(Context& c) {
  const auto pl = pipeline_for(c);
  const int level = c.params.get("level", 6);
  const int up_to = c.params.get("up_to", 4);
  const double scale = c.params.get("nu_scale", 1.0);
  if (level < 1 || !(scale > 0.0)) throw ConfigError("bad level or nu_scale");
  const bool want_flag = c.expect.get("flagged", scale != 1.0);

  TimelikeParamSet params = pl.params;
  ConformalFactorSpec modified = pl.modified;
  if (scale != 1.0) {
    for (double& v : params.nu) v = std::min(0.99, scale * v);
    BaseFactorParams bp = pl.base.base_params();
    std::vector<Dip> dips;
    for (int k = 0; k < params.max_index; ++k) dips.push_back({params.q[k], params.epsilon[k], params.nu[k]});
    modified = ConformalFactorSpec::modified(bp, std::move(dips));
  }
  const auto violations = params.violations();
  const ExcessField coarse(modified, level - 1);
  const ExcessField fine(modified, level);
  const auto entries = validate_claim32(params, coarse, fine, up_to);
  Json rows = Json::array();
  bool all_valid = true, any_negative = false, any_inconclusive = false;
  for (const auto& e : entries) {
    rows.push_back({{"n", e.n},
                    {"excess", e.excess},
                    {"coarse_excess", e.coarse_excess},
                    {"error_bar", e.error_bar},
                    {"validated", e.validated},
                    {"inconclusive", e.inconclusive},
                    {"negative", e.negative}});
    all_valid = all_valid && e.validated;
    any_negative = any_negative || e.negative;
    any_inconclusive = any_inconclusive || e.inconclusive;
  }
  c.results["params"] = to_json(params);
  c.results["invariant_violations"] = violations;
  c.results["entries"] = rows;
  const bool flagged = !violations.empty() || !all_valid;
  c.results["flagged"] = flagged;
  Outcome o = flagged == want_flag ? Outcome::Match : Outcome::Contradiction;
  if (!want_flag && o != Outcome::Match && !any_negative && any_inconclusive && violations.empty())
    o = Outcome::Inconclusive;
  c.checks.add("claim validation", o, {{"expected_flagged", want_flag}, {"flagged", flagged}});
}

void run_timelike_build(Context& c) {
  const auto pl = pipeline_for(c);
  const int samples = c.params.get("samples", 2048);
  const int ns_level = c.params.get("ns_level", 6);
  const int cert_level = c.params.get("certify_level", 0);
  const auto pairs = read_pairs(c.params, "pairs", Pairs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

  const auto violations = pl.params.violations();
  const auto sampled = sample_excess_violations(pl.base, pl.params);
  c.results["params"] = to_json(pl.params);
  c.results["modified_factor"] = to_json(pl.modified);
  c.results["invariant_violations"] = violations;
  c.results["sampling_violations"] = sampled;
  c.checks.expect("param invariants", violations.empty() && sampled.empty());

  Json curves = Json::array();
  bool causal_ok = true, timelike_ok = true;
  for (int n = 1; n <= pl.params.max_index; ++n) {
    const auto lift = lift_meridian(n, pl.modified, samples);
    const auto cls = classify(lift);
    std::size_t mid = 0;
    while (mid + 2 < lift.size() && lift.times()[mid + 1] <= kPi / 2) ++mid;
    const bool strict_mid = cls.ratios[mid] < 1.0 - kCausalTolerance;
    const auto deformed = deform_to_timelike(lift);
    const auto dcls = classify(deformed);
    const auto& sp = deformed.space();
    const bool ends = deformed.times().front() == 0.0 && deformed.times().back() == kPi &&
                      sp.point(0).position() == SpherePoint::north().position() &&
                      sp.point(sp.size() - 1).position() == SpherePoint::south().position();
    causal_ok = causal_ok &&
                (cls.verdict == CausalVerdict::Causal || cls.verdict == CausalVerdict::Timelike) &&
                strict_mid;
    timelike_ok = timelike_ok && dcls.verdict == CausalVerdict::Timelike && ends;
    curves.push_back({{"n", n},
                      {"lift", class_json(cls)},
                      {"ratio_at_half", cls.ratios[mid]},
                      {"deformed", class_json(dcls)},
                      {"endpoints_exact", ends}});
  }
  c.results["curves"] = curves;
  c.checks.expect("lifts causal and timelike at t = pi/2", causal_ok);
  c.checks.expect("deformed curves timelike", timelike_ok);

  if (ns_level > 0) {
    const auto mesh = build_mesh(pl.modified, ns_level);
    const auto d = mesh_distance_split(mesh, SpherePoint::north(), SpherePoint::south());
    c.results["north_south"] = {{"level", ns_level}, {"distance", split_json(d)}, {"excess_over_pi", d.excess_over(kPi)}};
    c.checks.expect("dips shorten N to S", d.excess_over(kPi) < 0.0);
  }
  if (cert_level > 0) {
    const ExcessField coarse(pl.modified, cert_level - 1);
    const ExcessField fine(pl.modified, cert_level);
    Json cj = Json::array();
    for (const auto& [i, j] : pairs) {
      if (j > pl.params.max_index) throw ConfigError("pair index above N_max");
      const auto cert = obstruction_margin(i, j, coarse, fine);
      cj.push_back(certificate_json(cert));
      c.checks.add("modified verdict " + fmt_pair(i, j),
                   cert.verdict == ObstructionVerdict::Obstructed     ? Outcome::Match
                   : cert.verdict == ObstructionVerdict::Inconclusive ? Outcome::Inconclusive
                                                                      : Outcome::Contradiction);
    }
    c.results["certificates"] = cj;
  }
}

// topological-contrast

void run_topological(Context& c) {
  const auto pr = c.params.get("pair", std::vector<int>{1, 3});
  if (pr.size() != 2 || pr[0] == pr[1] || std::min(pr[0], pr[1]) < 1 ||
      std::max(pr[0], pr[1]) > c.factor.max_index())
    throw ConfigError("pair must hold two distinct indices in 1..N_max");
  const int s_int = c.params.get("s_intervals", 64);
  const int samples = c.params.get("samples", 257);
  const bool want = c.expect.get("non_causal", c.factor.variant() != FactorVariant::Unit);
  const auto grid = topological_homotopy(lift_meridian(pr[0], c.factor, samples),
                                         lift_meridian(pr[1], c.factor, samples), s_int);
  bool pinned = true;
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    pinned = pinned && grid.at(i, 0).position() == SpherePoint::north().position() &&
             grid.at(i, grid.columns() - 1).position() == SpherePoint::south().position();
  }
  const auto proj = verify_causal_homotopy(c.factor, grid, VerificationModel::Projection);
  const auto st = verify_causal_homotopy(c.factor, grid, VerificationModel::Spacetime);
  c.results["rows"] = grid.rows();
  c.results["columns"] = grid.columns();
  c.results["endpoints_pinned"] = pinned;
  c.results["projection"] = verification_json(proj);
  c.results["spacetime"] = verification_json(st);
  c.checks.expect("valid fixed-endpoint homotopy", pinned);
  const bool observed = proj.violations > 0 || st.violations > 0;
  c.checks.expect("non-causal rows", observed == want, {{"expected", want}, {"observed", observed}});
  if (wants(c, "row-lengths")) {
    std::ostringstream os;
    write_row_lengths(os, {grid.s_values()}, {proj.row_excess});
    c.csv["row-lengths"] = os.str();
  }
}

// conjugate-cut

void run_conjugate_cut(Context& c) {
  const int n = c.params.get("meridian", 0);
  const int level = c.params.get("level", 6);
  const double max_length = c.params.get("max_length", 4.0);
  if (n < 0 || n > c.factor.max_index()) throw ConfigError("meridian index out of range");
  const double az = n == 0 ? 0.0 : meridian_azimuth(n);
  const bool want_pole = c.expect.get("conjugate_at_pole", true);
  const std::string want_cut = c.expect.get<std::string>(
      "cut", c.factor.variant() == FactorVariant::Modified ? "before-pole" : "at-pole");
  if (want_cut != "at-pole" && want_cut != "before-pole") throw ConfigError("cut must be at-pole or before-pole");

  const auto conj = conjugate_point(c.factor, SpherePoint::north(),
                                    Vec3(std::cos(az), std::sin(az), 0.0), max_length);
  c.results["conjugate"] = conj ? Json(*conj) : Json(nullptr);
  const bool at_pole = conj && std::abs(*conj - kPi) <= 1e-3;
  c.checks.expect("first conjugate point at S", at_pole == want_pole);

  const auto mesh = build_mesh(c.factor, level);
  const auto cut = cut_point(c.factor, az, mesh);
  c.results["cut"] = {{"azimuth", cut.azimuth},
                      {"distance", cut.cut_distance},
                      {"minimizing_to_end", cut.minimizing_to_end},
                      {"tolerance", cut.tolerance},
                      {"geodesic_residual", cut.geodesic_residual},
                      {"max_defect", cut.max_defect},
                      {"level", level}};
  const bool cut_at = std::abs(cut.cut_distance - kPi) <= cut.tolerance;
  const bool cut_before = cut.cut_distance < kPi - cut.tolerance;
  c.checks.expect("cut point " + want_cut, want_cut == "at-pole" ? cut_at : cut_before);
}

// limit-curves

void run_limit_curves(Context& c) {
  const int nmax = c.params.get("max_index", c.factor.max_index());
  const int samples = c.params.get("samples", 2048);
  if (nmax < 1 || nmax > c.factor.max_index()) throw ConfigError("max_index out of range");
  std::vector<SpacetimeCurve> seq;
  for (int n = 1; n <= nmax; ++n) seq.push_back(lift_meridian(n, c.factor, samples));
  const auto limit = lift_azimuth(0.0, c.factor, samples);
  const auto rep = limit_curve_check(seq, limit);
  Json rows = Json::array();
  bool close = true;
  for (int n = 1; n <= nmax; ++n) {
    const double d = rep.distances[n - 1];
    close = close && std::abs(d - meridian_azimuth(n)) <= 1e-6 * meridian_azimuth(n);
    rows.push_back({{"n", n}, {"distance", d}, {"azimuth", meridian_azimuth(n)}});
  }
  c.results["distances"] = rows;
  c.results["monotone"] = rep.monotone;
  c.results["limit"] = class_json(rep.limit);
  c.checks.expect("distances match 1/(n pi)", close);
  c.checks.expect("distances decrease", rep.monotone);
  c.checks.expect("limit lightlike", rep.limit.verdict == CausalVerdict::Lightlike);
}

using Runner = void (*)(Context&);

struct TaskInfo {
  const char* name;
  Runner run;
  std::vector<std::string> plots;
};

const std::vector<TaskInfo>& task_table() {
  static const std::vector<TaskInfo> t{
      {"validate-factor", run_validate_factor, {"factor-heatmap"}},
      {"lengths", run_lengths, {}},
      {"distance", run_distance, {}},
      {"certify-obstruction", run_certify, {"excess-profile", "row-lengths"}},
      {"claim32", run_claim32, {}},
      {"timelike-build", run_timelike_build, {}},
      {"topological-contrast", run_topological, {"row-lengths"}},
      {"conjugate-cut", run_conjugate_cut, {}},
      {"limit-curves", run_limit_curves, {}},
  };
  return t;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ConfigError("cannot write " + p.string());
  os << content;
  if (!os) throw ConfigError("cannot write " + p.string());
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Match: return "match";
    case Outcome::Inconclusive: return "inconclusive";
    case Outcome::Contradiction: return "contradiction";
    case Outcome::ConfigError: return "config-error";
  }
  return "config-error";
}

const std::vector<std::string>& scenario_tasks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& t : task_table()) v.push_back(t.name);
    return v;
  }();
  return names;
}

Json load_config(const fs::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config " + path.string());
  try {
    return Json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
}

ScenarioResult run_scenario(const Json& config, const std::string& task,
                            const ScenarioOverrides& overrides, const fs::path& out_dir) {
  if (!config.is_object()) throw ConfigError("config must be an object");
  if (!config.contains("task") || !config.at("task").is_string())
    throw ConfigError("config has no task");
  Json resolved = config;
  const std::string name_task = resolved.at("task").get<std::string>();
  if (!task.empty() && task != name_task)
    throw ConfigError("task " + task + " does not match config task " + name_task);
  const auto& table = task_table();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const TaskInfo& t) { return name_task == t.name; });
  if (it == table.end()) throw ConfigError("unknown task: " + name_task);

  if (!resolved.contains("name")) resolved["name"] = name_task;
  if (!resolved.at("name").is_string()) throw ConfigError("name must be a string");
  const std::string name = resolved.at("name").get<std::string>();
  if (name.empty() || name.find_first_of("/\\") != std::string::npos)
    throw ConfigError("name must be a plain file stem");
  if (!resolved.contains("factor")) resolved["factor"] = {{"variant", "base"}};
  if (overrides.seed) resolved["seed"] = *overrides.seed;
  if (!resolved.contains("seed")) resolved["seed"] = 1;
  if (!resolved.contains("parameters")) resolved["parameters"] = Json::object();
  if (!resolved.contains("expect")) resolved["expect"] = Json::object();
  if (!resolved.contains("plots")) resolved["plots"] = Json::array();
  if (overrides.mesh_level) {
    if (!resolved["parameters"].is_object()) throw ConfigError("parameters must be an object");
    resolved["parameters"]["level"] = *overrides.mesh_level;
  }

  std::vector<std::string> plots;
  std::uint64_t seed = 0;
  try {
    plots = resolved.at("plots").get<std::vector<std::string>>();
    seed = resolved.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("plots must be a list of names and seed a non-negative integer");
  }
  for (const auto& p : plots)
    if (std::find(it->plots.begin(), it->plots.end(), p) == it->plots.end())
      throw ConfigError("plot kind " + p + " is not available for task " + name_task);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw ConfigError("unreachable output directory " + out_dir.string());

  Context ctx{name,
              factor_from_json(resolved.at("factor")),
              Params(resolved["parameters"]),
              Params(resolved["expect"]),
              seed,
              plots,
              Json::object(),
              Checks{},
              {}};
  try {
    it->run(ctx);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("invalid parameters: ") + e.what());
  } catch (const ResourceError& e) {
    throw ConfigError(std::string("invalid parameters: ") + e.what());
  }

  ScenarioResult out;
  out.outcome = ctx.checks.worst();
  Json hashed = resolved;
  Json& report = out.report;
  report["name"] = name;
  report["task"] = name_task;
  report["config"] = resolved;
  report["input_hash"] = hash_hex(content_hash(hashed));
  report["factor"] = to_json(ctx.factor);
  report["results"] = ctx.results;
  report["checks"] = ctx.checks.list();
  report["outcome"] = to_string(out.outcome);
  report["exit_code"] = static_cast<int>(out.outcome);

  std::vector<std::string> files{name + ".json"};
  for (const auto& [kind, text] : ctx.csv) {
    files.push_back(name + "." + kind + ".csv");
    write_file(out_dir / files.back(), text);
  }
  report["files"] = files;
  write_file(out_dir / files.front(), report.dump(2) + "\n");
  out.files = files;
  return out;
}

}  // namespace lorhom
