#include "homtype/conditions.hpp"

#include <algorithm>
#include <cmath>

namespace homtype {

std::string to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::Doubling: return "doubling";
    case ConditionKind::WRD: return "wrd";
    case ConditionKind::WMD: return "wmd";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

void ConditionReport::finalize(double thr) {
  threshold = thr;
  window_inf = std::numeric_limits<double>::infinity();
  double sup = 0.0;
  for (const auto& [r, q] : ratios) {
    window_inf = std::min(window_inf, q);
    sup = std::max(sup, q);
  }
  if (condition == ConditionKind::Doubling) {
    l_mu_estimate = sup;
    upper_dimension = sup > 0.0 ? std::log2(sup) : 0.0;
  }
  if (ratios.size() < 4) {
    verdict = Verdict::Inconclusive;
    return;
  }
  verdict = window_inf >= thr ? Verdict::Pass : Verdict::Fail;
}

std::vector<LogReal> log_spaced_radii(const LogReal& lo, const LogReal& hi,
                                      int count) {
  if (!(lo > LogReal()) || !(hi > lo))
    throw WindowTooNarrow("need 0 < r_lo < r_hi");
  std::vector<LogReal> out;
  out.reserve(count);
  const double a = lo.ln_abs(), b = hi.ln_abs();
  for (int i = 0; i < count; ++i)
    out.push_back(LogReal::from_ln(a + (b - a) * i / (count - 1)));
  return out;
}

namespace {

double ratio_of(const LogReal& num, const LogReal& den) {
  if (den.is_zero()) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(num.ln_abs() - den.ln_abs());
}

// default grid on continuous domains: 32 points per decade, endpoints kept
std::vector<LogReal> decade_grid(const LogReal& lo, const LogReal& hi) {
  if (!(lo > LogReal()) || !(hi > lo))
    throw WindowTooNarrow("need 0 < r_lo < r_hi");
  const double step = std::log(10.0) / 32.0;
  std::vector<LogReal> out;
  for (double l = lo.ln_abs(); l < hi.ln_abs(); l += step)
    out.push_back(LogReal::from_ln(l));
  out.push_back(hi);
  return out;
}

// Breakpoints of r -> mu(B(x0,lambda r))/mu(B(x0,r)) on a finite space are the
// distances from x0 and those divided by lambda; the profile is constant in
// between, so log-midpoints of consecutive breakpoints scan it exactly.
std::vector<LogReal> profile_grid(const FinitePointSpace& space, PointId x0,
                                  double lambda,
                                  const std::pair<LogReal, LogReal>& window) {
  const auto& [lo, hi] = window;
  if (!(lo > LogReal()) || !(hi > lo))
    throw WindowTooNarrow("need 0 < r_lo < r_hi");
  std::vector<double> cuts{lo.ln_abs(), hi.ln_abs()};
  const double lnl = std::log(lambda);
  for (const LogReal& d : space.distances_from(x0)) {
    for (double c : {d.ln_abs(), d.ln_abs() - lnl}) {
      if (c > lo.ln_abs() && c < hi.ln_abs()) cuts.push_back(c);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<LogReal> out;
  out.reserve(cuts.size() + 1);
  out.push_back(lo);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    out.push_back(LogReal::from_ln(0.5 * (cuts[i] + cuts[i + 1])));
  out.push_back(hi);
  return out;
}

LogReal subset_ball_mass(const FinitePointSpace& space,
                         const std::vector<PointId>& subset, PointId x0,
                         const LogReal& r) {
  LogReal m;
  for (PointId y : subset)
    if (y == x0 || space.distance(x0, y) < r) m += space.mass(y);
  return m;
}

} // namespace

ConditionReport doubling_profile(const FinitePointSpace& space, PointId x,
                                 const std::vector<LogReal>& radii) {
  if (x >= space.size()) throw UnknownPoint("doubling base point");
  ConditionReport rep;
  rep.condition = ConditionKind::Doubling;
  rep.base_point = "point " + std::to_string(x);
  if (!radii.empty()) rep.window = {radii.front(), radii.back()};
  const LogReal two = LogReal::from_value(2.0);
  for (const LogReal& r : radii)
    rep.ratios.emplace_back(
        r, ratio_of(space.ball_measure(x, r * two), space.ball_measure(x, r)));
  rep.finalize(0.0);
  return rep;
}

ConditionReport doubling_profile(const IntervalDomain1D& ambient, double x,
                                 const std::vector<LogReal>& radii) {
  ConditionReport rep;
  rep.condition = ConditionKind::Doubling;
  rep.base_point = "x = " + std::to_string(x);
  if (!radii.empty()) rep.window = {radii.front(), radii.back()};
  for (const LogReal& r : radii) {
    const double rd = r.value_checked();
    rep.ratios.emplace_back(r, ambient.ball_measure(x, 2.0 * rd) /
                                   ambient.ball_measure(x, rd));
  }
  rep.finalize(0.0);
  return rep;
}

ConditionReport check_wrd(const FinitePointSpace& space, double lambda,
                          std::pair<LogReal, LogReal> window,
                          std::optional<PointId> base_point, double threshold) {
  if (!(lambda > 1.0)) throw Error("WRD requires lambda > 1");
  const PointId x0 = base_point.value_or(0);
  if (x0 >= space.size()) throw UnknownPoint("WRD base point");
  if (window.second > diameter(space))
    throw WindowTooNarrow("r_hi exceeds the diameter of the space");
  ConditionReport rep;
  rep.condition = ConditionKind::WRD;
  rep.lambda = lambda;
  rep.base_point = "point " + std::to_string(x0);
  rep.window = window;
  const LogReal lam = LogReal::from_value(lambda);
  for (const LogReal& r : profile_grid(space, x0, lambda, window))
    rep.ratios.emplace_back(
        r, ratio_of(space.ball_measure(x0, lam * r), space.ball_measure(x0, r)));
  rep.finalize(threshold);
  return rep;
}

ConditionReport check_wrd(const IntervalDomain1D& ambient, double lambda,
                          std::pair<LogReal, LogReal> window, double base_point,
                          double threshold) {
  if (!(lambda > 1.0)) throw Error("WRD requires lambda > 1");
  ConditionReport rep;
  rep.condition = ConditionKind::WRD;
  rep.lambda = lambda;
  rep.base_point = "x = " + std::to_string(base_point);
  rep.window = window;
  for (const LogReal& r : decade_grid(window.first, window.second)) {
    const double rd = r.value_checked();
    rep.ratios.emplace_back(r, ambient.ball_measure(base_point, lambda * rd) /
                                   ambient.ball_measure(base_point, rd));
  }
  rep.finalize(threshold);
  return rep;
}

ConditionReport check_wmd(const FinitePointSpace& space,
                          const std::vector<PointId>& subset, PointId base_point,
                          std::pair<LogReal, LogReal> window, double threshold) {
  if (subset.empty()) throw EmptySubset("WMD subset is empty");
  for (PointId y : subset)
    if (y >= space.size()) throw UnknownPoint("WMD subset point");
  ConditionReport rep;
  rep.condition = ConditionKind::WMD;
  rep.base_point = "point " + std::to_string(base_point);
  rep.window = window;
  for (const LogReal& r : profile_grid(space, base_point, 2.0, window))
    rep.ratios.emplace_back(r,
                            ratio_of(subset_ball_mass(space, subset, base_point, r),
                                     space.ball_measure(base_point, r)));
  rep.finalize(threshold);
  return rep;
}

ConditionReport check_wmd_at_radii(const IntervalDomain1D& ambient,
                                   const IntervalDomain1D& subset,
                                   double base_point,
                                   const std::vector<LogReal>& radii,
                                   double threshold) {
  subset.validate();
  if (subset.intervals.empty()) throw EmptySubset("WMD subset is empty");
  ConditionReport rep;
  rep.condition = ConditionKind::WMD;
  rep.base_point = "x = " + std::to_string(base_point);
  if (!radii.empty()) rep.window = {radii.front(), radii.back()};
  for (const LogReal& r : radii) {
    const double rd = r.value_checked();
    rep.ratios.emplace_back(r, subset.ball_intersection(base_point, rd) /
                                   ambient.ball_measure(base_point, rd));
  }
  rep.finalize(threshold);
  return rep;
}

ConditionReport check_wmd(const IntervalDomain1D& ambient,
                          const IntervalDomain1D& subset, double base_point,
                          std::pair<LogReal, LogReal> window, double threshold) {
  return check_wmd_at_radii(ambient, subset, base_point,
                            decade_grid(window.first, window.second), threshold);
}

WrdSweepResult wrd_basepoint_sweep(const FinitePointSpace& space,
                                   const std::vector<double>& lambda_grid,
                                   std::pair<LogReal, LogReal> window,
                                   PointId x0, double threshold) {
  WrdSweepResult out;
  const LogReal shift_factor = LogReal::from_value(2.0 * space.k0());
  std::vector<LogReal> lo_at(space.size()), max_dist(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    lo_at[x] = window.first;
    if (x != x0)
      lo_at[x] = max(window.first, shift_factor * space.distance(x, x0));
    max_dist[x] = space.distances_from(x).back();
  }
  for (double lambda : lambda_grid) {
    // balls saturate once lambda r reaches the farthest point, turning the
    // ratio into a truncation artifact; cap the window per point accordingly
    double worst = std::numeric_limits<double>::infinity();
    std::size_t skipped = 0;
    for (PointId x = 0; x < space.size(); ++x) {
      const LogReal hi =
          min(window.second, max_dist[x] / LogReal::from_value(lambda));
      if (!(lo_at[x] < hi)) {
        ++skipped;
        continue;
      }
      const auto rep = check_wrd(space, lambda, {lo_at[x], hi}, x, threshold);
      worst = std::min(worst, rep.window_inf);
    }
    out.per_lambda.emplace_back(lambda, worst);
    out.unresolvable = std::max(out.unresolvable, skipped);
    if (!out.lambda && worst >= threshold && skipped < space.size())
      out.lambda = lambda;
  }
  return out;
}

} // namespace homtype
