#include "homtype/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "homtype/norms.hpp"
#include "homtype/reduce.hpp"

namespace homtype {

namespace {

struct CenterIndex {
  std::vector<std::uint32_t> order;       // points sorted by distance
  std::vector<std::uint32_t> rank;        // point -> position in order
  std::vector<LogReal> prefix_mass;       // size n+1, running log-sum
  std::vector<LogReal> distinct;          // distinct nonzero distances
  std::vector<std::uint32_t> level_count; // points within distinct[k]
};

CenterIndex index_center(const FinitePointSpace& space, PointId c) {
  const std::size_t n = space.size();
  CenterIndex ci;
  ci.order.resize(n);
  std::iota(ci.order.begin(), ci.order.end(), 0u);
  std::vector<LogReal> dist(n);
  for (std::size_t y = 0; y < n; ++y) dist[y] = space.distance(c, y);
  std::stable_sort(ci.order.begin(), ci.order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return dist[a] < dist[b]; });
  ci.rank.resize(n);
  for (std::size_t i = 0; i < n; ++i) ci.rank[ci.order[i]] = static_cast<std::uint32_t>(i);
  ci.prefix_mass.assign(n + 1, LogReal());
  for (std::size_t i = 0; i < n; ++i)
    ci.prefix_mass[i + 1] = ci.prefix_mass[i] + space.mass(ci.order[i]);
  for (std::size_t i = 1; i < n; ++i) {
    const LogReal& d = dist[ci.order[i]];
    const bool tie = !ci.distinct.empty() &&
                     std::abs(ci.distinct.back().ln_abs() - d.ln_abs()) <= 1e-12;
    if (tie) {
      ci.level_count.back() = static_cast<std::uint32_t>(i + 1);
    } else {
      ci.distinct.push_back(d);
      ci.level_count.push_back(static_cast<std::uint32_t>(i + 1));
    }
  }
  return ci;
}

LogReal midpoint_radius(const LogReal& a, const LogReal& b) {
  return LogReal::from_ln(0.5 * (a.ln_abs() + b.ln_abs()));
}

} // namespace

BallFamily BallFamily::canonical(const FinitePointSpace& space) {
  const std::size_t n = space.size();
  BallFamily fam;
  fam.order_.resize(n);
  fam.rank_.resize(n);
  fam.prefix_mass_.resize(n);
  fam.levels_.resize(n);
  for (PointId c = 0; c < n; ++c) {
    CenterIndex ci = index_center(space, c);
    // one ball per distinct membership set: the singleton, then one ball per
    // distinct distance level; radii sit strictly between consecutive levels
    // (log-midpoints), the outermost at twice the largest distance
    if (ci.distinct.empty()) {
      fam.balls_.push_back({c, LogReal::from_value(1.0), 1});
    } else {
      fam.balls_.push_back(
          {c, LogReal::from_ln(ci.distinct.front().ln_abs() - LogReal::ln2()), 1});
      for (std::size_t k = 0; k < ci.distinct.size(); ++k) {
        const LogReal radius =
            k + 1 < ci.distinct.size()
                ? midpoint_radius(ci.distinct[k], ci.distinct[k + 1])
                : LogReal::from_ln(ci.distinct[k].ln_abs() + LogReal::ln2());
        fam.balls_.push_back({c, radius, ci.level_count[k]});
      }
    }
    fam.levels_[c] = ci.level_count;
    fam.order_[c] = std::move(ci.order);
    fam.rank_[c] = std::move(ci.rank);
    fam.prefix_mass_[c] = std::move(ci.prefix_mass);
  }
  return fam;
}

BallFamily BallFamily::from_balls(
    const FinitePointSpace& space,
    const std::vector<std::pair<PointId, LogReal>>& balls) {
  const std::size_t n = space.size();
  BallFamily fam;
  fam.order_.resize(n);
  fam.rank_.resize(n);
  fam.prefix_mass_.resize(n);
  fam.levels_.resize(n);
  std::vector<bool> indexed(n, false);
  for (const auto& [c, radius] : balls) {
    if (c >= n) throw UnknownPoint("ball center");
    if (!indexed[c]) {
      CenterIndex ci = index_center(space, c);
      fam.levels_[c] = ci.level_count;
      fam.order_[c] = std::move(ci.order);
      fam.rank_[c] = std::move(ci.rank);
      fam.prefix_mass_[c] = std::move(ci.prefix_mass);
      indexed[c] = true;
    }
    std::uint32_t count = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (space.distance(c, fam.order_[c][i]) < radius)
        count = static_cast<std::uint32_t>(i + 1);
      else
        break;
    }
    fam.balls_.push_back({c, radius, count});
  }
  return fam;
}

LogReal BallFamily::average(std::size_t b,
                            std::span<const LogReal> value_times_mass) const {
  // accumulate in the same running order as prefix_mass_ so that constant
  // values cancel the measure exactly
  const Ball& ball = balls_[b];
  const auto& ord = order_[ball.center];
  LogReal acc;
  for (std::uint32_t i = 0; i < ball.count; ++i) acc += value_times_mass[ord[i]];
  return acc / measure(b);
}

LogReal BallFamily::smallest_level_measure(PointId c, std::uint32_t min_count) const {
  for (std::uint32_t lv : levels_[c])
    if (lv >= min_count) return prefix_mass_[c][lv];
  return prefix_mass_[c].back(); // whole space
}

// ---------------------------------------------------------------------------

std::vector<double> maximal_function(const FinitePointSpace& space,
                                     std::span<const double> values,
                                     const BallFamily& family) {
  const std::size_t n = space.size();
  if (values.size() != n) throw LengthMismatch("maximal_function values");
  if (family.size() == 0) throw EmptyFamily("maximal_function");
  // per-ball averages via running per-center prefixes of |f| mu
  std::vector<LogReal> fm(n);
  for (std::size_t i = 0; i < n; ++i)
    fm[i] = abs(LogReal::from_value(values[i])) * space.mass(i);
  std::vector<double> avg(family.size());
  for (std::size_t b = 0; b < family.size(); ++b) {
    const LogReal a = family.average(b, fm);
    avg[b] = a.is_zero() ? 0.0 : std::exp(a.ln_abs());
  }
  std::vector<double> out(n, -1.0);
  for (std::size_t b = 0; b < family.size(); ++b)
    for (PointId x : family.members(b)) out[x] = std::max(out[x], avg[b]);
  for (std::size_t x = 0; x < n; ++x)
    if (out[x] < 0.0) throw UncoveredPoint("point " + std::to_string(x));
  return out;
}

double muckenhoupt_constant(const FinitePointSpace& space,
                            std::span<const double> weight, double p,
                            const BallFamily& family) {
  const std::size_t n = space.size();
  if (weight.size() != n) throw LengthMismatch("muckenhoupt weight");
  if (family.size() == 0) throw EmptyFamily("muckenhoupt_constant");
  if (!(p >= 1.0)) throw Error("A_p needs p >= 1");
  for (double w : weight)
    if (!(w > 0.0)) throw NonpositiveWeight("muckenhoupt weight");

  std::vector<LogReal> wm(n), wneg(n);
  for (std::size_t i = 0; i < n; ++i) {
    wm[i] = LogReal::from_value(weight[i]) * space.mass(i);
    if (p > 1.0)
      wneg[i] = pow(LogReal::from_value(weight[i]), 1.0 / (1.0 - p)) * space.mass(i);
  }
  double best = 0.0;
  for (std::size_t b = 0; b < family.size(); ++b) {
    const double avg_w = std::exp(family.average(b, wm).ln_abs());
    double quotient;
    if (p == 1.0) {
      double inf_w = std::numeric_limits<double>::infinity();
      for (PointId y : family.members(b)) inf_w = std::min(inf_w, weight[y]);
      quotient = avg_w / inf_w;
    } else {
      const double avg_neg = std::exp(family.average(b, wneg).ln_abs());
      quotient = avg_w * std::pow(avg_neg, p - 1.0);
    }
    best = std::max(best, quotient);
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

} // namespace

OperatorNormEstimate maximal_operator_norm(const FinitePointSpace& space,
                                           const NormSpec& spec, int trials,
                                           std::uint64_t seed) {
  const std::size_t n = space.size();
  const BallFamily family = BallFamily::canonical(space);
  OperatorNormEstimate est;

  auto push_trial = [&](const std::vector<double>& f) {
    const double nf = evaluate_norm(space, f, spec);
    if (!(nf > 0.0)) return;
    const double nmf = evaluate_norm(space, maximal_function(space, f, family), spec);
    est.lower = std::max(est.lower, nmf / nf);
  };

  for (std::size_t b = 0; b < family.size(); ++b) {
    std::vector<double> f(n, 0.0);
    for (PointId y : family.members(b)) f[y] = 1.0;
    push_trial(f);
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> f(n);
    for (double& v : f) v = 2.0 * rand_unit(rng) - 1.0;
    push_trial(f);
  }

  if (const auto* lp = std::get_if<NormSpec::Lp>(&spec.v); lp && !lp->weight) {
    if (std::isinf(lp->p)) {
      est.upper = 1.0;
    } else if (lp->p >= 1.0) {
      // Mf <= Kf pointwise for the symmetric kernel m(x,y); Schur with test
      // function 1 bounds the Lp operator norm of K by the max row sum.
      double sup_row = 0.0;
      for (PointId x = 0; x < n; ++x) {
        std::vector<LogReal> row(n);
        for (PointId y = 0; y < n; ++y) {
          LogReal best_inv; // max over centers of 1/mu(smallest ball with x,y)
          for (PointId c = 0; c < n; ++c) {
            const std::uint32_t need =
                std::max(family.rank(c, x), family.rank(c, y)) + 1;
            const LogReal inv =
                LogReal::from_value(1.0) / family.smallest_level_measure(c, need);
            best_inv = max(best_inv, inv);
          }
          row[y] = best_inv * space.mass(y);
        }
        sup_row = std::max(
            sup_row, std::exp(tree_sum(std::span<const LogReal>(row)).ln_abs()));
      }
      est.upper = sup_row;
    }
  }
  if (est.upper) est.upper = std::max(*est.upper, est.lower);
  return est;
}

std::vector<double> rubio_de_francia(const FinitePointSpace& space,
                                     std::span<const double> g,
                                     const NormSpec& spec, double m_norm,
                                     int k_max) {
  const std::size_t n = space.size();
  if (g.size() != n) throw LengthMismatch("rubio_de_francia input");
  if (k_max < 8) throw Error("rubio_de_francia needs k_max >= 8");
  if (!(m_norm >= 1.0 - 1e-12))
    throw InvalidOperatorNorm("operator norm below 1");
  const BallFamily family = BallFamily::canonical(space);

  std::vector<double> iter(g.begin(), g.end());
  for (double& v : iter) v = std::abs(v);
  std::vector<double> out = iter;
  double prev_norm = evaluate_norm(space, iter, spec);
  double denom = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    iter = maximal_function(space, iter, family);
    const double cur_norm = evaluate_norm(space, iter, spec);
    if (cur_norm > m_norm * prev_norm * (1.0 + 1e-9))
      throw InvalidOperatorNorm(
          "norm grew by " + std::to_string(cur_norm / prev_norm) +
          " at iterate " + std::to_string(k) + ", above the declared bound");
    prev_norm = cur_norm;
    denom *= 2.0 * m_norm;
    for (std::size_t i = 0; i < n; ++i) out[i] += iter[i] / denom;
  }
  return out;
}

} // namespace homtype
