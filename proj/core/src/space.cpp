#include "homtype/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "homtype/reduce.hpp"

namespace homtype {

namespace {

bool approx_equal(const LogReal& a, const LogReal& b, double rel = 1e-12) {
  if (a.sign() != b.sign()) return a.is_zero() && b.is_zero();
  if (a.is_zero()) return true;
  return std::abs(a.ln_abs() - b.ln_abs()) <= rel;
}

} // namespace

// ---------------------------------------------------------------------------
// FinitePointSpace

FinitePointSpace FinitePointSpace::dense(std::vector<LogReal> distances_row_major,
                                         std::vector<LogReal> masses, double k0,
                                         std::vector<std::string> labels) {
  FinitePointSpace s;
  s.masses_ = std::move(masses);
  s.distances_ = std::move(distances_row_major);
  s.k0_ = k0;
  s.labels_ = std::move(labels);
  s.labels_.resize(s.masses_.size());
  s.total_mass_ = tree_sum(std::span<const LogReal>(s.masses_));
  return s;
}

FinitePointSpace FinitePointSpace::line(std::vector<LogReal> positions,
                                        std::vector<LogReal> masses,
                                        std::vector<std::string> labels) {
  FinitePointSpace s;
  s.masses_ = std::move(masses);
  s.positions_ = std::move(positions);
  s.k0_ = 1.0;
  s.labels_ = std::move(labels);
  s.labels_.resize(s.masses_.size());
  s.total_mass_ = tree_sum(std::span<const LogReal>(s.masses_));
  s.build_line_index();
  return s;
}

void FinitePointSpace::build_line_index() {
  const std::size_t n = size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return positions_[a] < positions_[b];
  });
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (positions_[order_[i]] == positions_[order_[i + 1]])
      throw ZeroDistanceDistinctPoints("coincident coordinates in line space");
  rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rank_[order_[i]] = static_cast<std::uint32_t>(i);

  seg_leaves_ = n;
  seg_.assign(2 * n, LogReal());
  for (std::size_t i = 0; i < n; ++i) seg_[n + i] = masses_[order_[i]];
  for (std::size_t i = n; i-- > 1;) seg_[i] = seg_[2 * i] + seg_[2 * i + 1];
}

LogReal FinitePointSpace::range_mass(std::size_t lo, std::size_t hi) const {
  LogReal left, right;
  std::size_t l = lo + seg_leaves_, r = hi + seg_leaves_;
  while (l < r) {
    if (l & 1) left += seg_[l++];
    if (r & 1) right = seg_[--r] + right;
    l >>= 1;
    r >>= 1;
  }
  return left + right;
}

LogReal FinitePointSpace::distance(PointId i, PointId j) const {
  if (i >= size() || j >= size()) throw UnknownPoint("point index out of range");
  if (i == j) return LogReal();
  if (is_line_embedded()) return abs(positions_[i] - positions_[j]);
  return distances_[i * size() + j];
}

LogReal FinitePointSpace::ball_measure(PointId center, const LogReal& radius) const {
  if (center >= size()) throw UnknownPoint("ball center out of range");
  if (!(radius > LogReal())) throw Error("ball radius must be positive");
  const std::size_t n = size();
  if (!is_line_embedded()) {
    std::vector<LogReal> inside;
    inside.reserve(n);
    for (std::size_t y = 0; y < n; ++y)
      if (distance(center, y) < radius) inside.push_back(masses_[y]);
    return tree_sum(std::span<const LogReal>(inside));
  }
  // Boundary membership is decided by the same |pos_y - pos_c| < r arithmetic
  // distance() uses, so a point at distance exactly r is never misclassified
  // by rounded interval endpoints.
  const std::size_t rc = rank_[center];
  auto inside = [&](std::size_t k) {
    return abs(positions_[order_[k]] - positions_[center]) < radius;
  };
  std::size_t lo = 0, hi = rc; // smallest k in [0, rc] with inside(k)
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (inside(mid)) hi = mid; else lo = mid + 1;
  }
  const std::size_t first = lo;
  lo = rc; hi = n - 1; // largest k in [rc, n) with inside(k)
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (inside(mid)) lo = mid; else hi = mid - 1;
  }
  return range_mass(first, lo + 1);
}

std::vector<LogReal> FinitePointSpace::distances_from(PointId center) const {
  std::vector<LogReal> out;
  out.reserve(size());
  for (std::size_t y = 0; y < size(); ++y)
    if (y != center) out.push_back(distance(center, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const LogReal& a, const LogReal& b) {
                          return approx_equal(a, b);
                        }),
            out.end());
  return out;
}

std::optional<PointId> FinitePointSpace::find_point(const LogReal& value) const {
  if (is_line_embedded()) {
    for (std::size_t i = 0; i < size(); ++i)
      if (approx_equal(positions_[i], value)) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// builders

namespace {

double max_triple_ratio(const std::vector<LogReal>& d, std::size_t n, PointId i,
                        PointId j, PointId k) {
  const LogReal denom = d[i * n + j] + d[j * n + k];
  const LogReal num = d[i * n + k];
  if (num.is_zero()) return 0.0;
  return std::exp(num.ln_abs() - denom.ln_abs());
}

double infer_k0(const std::vector<LogReal>& d, std::size_t n) {
  double k0 = 1.0;
  if (n <= 512) {
    for (PointId i = 0; i < n; ++i)
      for (PointId k = i + 1; k < n; ++k)
        for (PointId j = 0; j < n; ++j) {
          if (j == i || j == k) continue;
          k0 = std::max(k0, max_triple_ratio(d, n, i, j, k));
        }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    for (int t = 0; t < 2'000'000; ++t) {
      PointId i = rng() % n, j = rng() % n, k = rng() % n;
      if (i == j || j == k || i == k) continue;
      k0 = std::max(k0, max_triple_ratio(d, n, i, j, k));
    }
  }
  return k0;
}

} // namespace

FinitePointSpace build_finite_space_log(std::vector<LogReal> distances,
                                        std::vector<LogReal> masses,
                                        std::optional<double> k0) {
  const std::size_t n = masses.size();
  if (distances.size() != n * n)
    throw LengthMismatch("distance table is not square of the mass count");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(masses[i] > LogReal()))
      throw NonpositiveMass("mass of point " + std::to_string(i));
    if (!distances[i * n + i].is_zero())
      throw Error("nonzero diagonal at point " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const LogReal& dij = distances[i * n + j];
      const LogReal& dji = distances[j * n + i];
      if (!approx_equal(dij, dji))
        throw AsymmetricDistance("rho(" + std::to_string(i) + "," +
                                 std::to_string(j) + ") != rho(" +
                                 std::to_string(j) + "," + std::to_string(i) + ")");
      if (dij.is_zero())
        throw ZeroDistanceDistinctPoints("rho(" + std::to_string(i) + "," +
                                         std::to_string(j) + ") = 0");
      distances[j * n + i] = dij;
    }
  }
  const double minimal = infer_k0(distances, n);
  if (k0 && minimal > *k0 * (1.0 + 1e-12))
    throw QuasiTriangleViolation("minimal admissible K0 " +
                                 std::to_string(minimal) + " exceeds given " +
                                 std::to_string(*k0));
  return FinitePointSpace::dense(std::move(distances), std::move(masses),
                                 k0 ? *k0 : minimal);
}

FinitePointSpace build_finite_space(const std::vector<std::vector<double>>& distances,
                                    const std::vector<double>& masses,
                                    std::optional<double> k0) {
  const std::size_t n = masses.size();
  if (distances.size() != n)
    throw LengthMismatch("distance table is not square of the mass count");
  std::vector<LogReal> d;
  d.reserve(n * n);
  for (const auto& row : distances) {
    if (row.size() != n)
      throw LengthMismatch("ragged distance table row");
    for (double v : row) {
      if (v < 0.0) throw Error("negative distance");
      d.push_back(LogReal::from_value(v));
    }
  }
  std::vector<LogReal> m;
  m.reserve(n);
  for (double v : masses) m.push_back(LogReal::from_value(v));
  return build_finite_space_log(std::move(d), std::move(m), k0);
}

FinitePointSpace double_exponential_space(int k_max) {
  if (k_max < 2) throw Error("double_exponential_space requires k_max >= 2");
  if (k_max > 1000) throw Error("k_max too large for log2 exponent range");
  std::vector<LogReal> pos, mass;
  std::vector<std::string> labels;
  pos.reserve(k_max);
  mass.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    pos.push_back(LogReal::from_log2(std::ldexp(1.0, k)));
    mass.push_back(LogReal::from_log2(static_cast<double>(k)));
    labels.push_back("2^(2^" + std::to_string(k) + ")");
  }
  return FinitePointSpace::line(std::move(pos), std::move(mass), std::move(labels));
}

FinitePointSpace geometric_space(int k_max) {
  if (k_max < 2) throw Error("geometric_space requires k_max >= 2");
  std::vector<LogReal> pos, mass;
  pos.reserve(k_max);
  mass.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    pos.push_back(LogReal::from_log2(static_cast<double>(k)));
    mass.push_back(LogReal::from_log2(static_cast<double>(k)));
  }
  return FinitePointSpace::line(std::move(pos), std::move(mass));
}

// ---------------------------------------------------------------------------
// scalar operations

LogReal mutual_min_measure(const FinitePointSpace& space, PointId x, PointId y) {
  if (x == y) throw SamePoint("U(x,x) is undefined");
  const LogReal r = space.distance(x, y);
  return min(space.ball_measure(x, r), space.ball_measure(y, r));
}

LogReal diameter(const FinitePointSpace& space) {
  const std::size_t n = space.size();
  if (n < 2) return LogReal();
  if (space.is_line_embedded()) {
    LogReal lo = space.position(0), hi = space.position(0);
    for (std::size_t i = 1; i < n; ++i) {
      lo = min(lo, space.position(i));
      hi = max(hi, space.position(i));
    }
    return hi - lo;
  }
  LogReal best;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = i + 1; j < n; ++j) best = max(best, space.distance(i, j));
  return best;
}

double integrate(const FinitePointSpace& space, std::span<const double> values) {
  if (values.size() != space.size())
    throw LengthMismatch("value count does not match point count");
  std::vector<LogReal> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    terms[i] = LogReal::from_value(values[i]) * space.mass(i);
  return tree_sum(std::span<const LogReal>(terms)).value_checked();
}

double holder_seminorm(const FinitePointSpace& space,
                       std::span<const double> values, double beta) {
  if (values.size() != space.size())
    throw LengthMismatch("value count does not match point count");
  if (!(beta > 0.0)) throw Error("holder exponent must be positive");
  double best_ln = -std::numeric_limits<double>::infinity();
  for (PointId i = 0; i < space.size(); ++i)
    for (PointId j = i + 1; j < space.size(); ++j) {
      const double diff = std::abs(values[i] - values[j]);
      if (diff == 0.0) continue;
      best_ln = std::max(best_ln,
                         std::log(diff) - beta * space.distance(i, j).ln_abs());
    }
  return best_ln == -std::numeric_limits<double>::infinity() ? 0.0
                                                             : std::exp(best_ln);
}

// ---------------------------------------------------------------------------
// IntervalDomain1D

void IntervalDomain1D::validate() const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    auto [a, b] = intervals[i];
    if (!(a < b)) throw Error("degenerate interval");
    if (i + 1 < intervals.size() && !(b <= intervals[i + 1].first))
      throw Error("intervals overlap or are unsorted");
  }
}

double IntervalDomain1D::total_length() const {
  double t = 0.0;
  for (auto [a, b] : intervals) t += b - a;
  return t;
}

LogReal IntervalDomain1D::diameter() const {
  if (whole_line) return LogReal::infinity();
  if (intervals.empty()) return LogReal();
  const double lo = intervals.front().first;
  const double hi = intervals.back().second;
  if (std::isinf(lo) || std::isinf(hi)) return LogReal::infinity();
  return LogReal::from_value(hi - lo);
}

double IntervalDomain1D::ball_intersection(double center, double radius) const {
  const double lo = center - radius, hi = center + radius;
  double t = 0.0;
  for (auto [a, b] : intervals) {
    const double c = std::max(a, lo), d = std::min(b, hi);
    if (c < d) t += d - c;
  }
  return t;
}

double IntervalDomain1D::ball_measure(double center, double radius) const {
  if (whole_line) return 2.0 * radius;
  return ball_intersection(center, radius);
}

bool IntervalDomain1D::contains(double x) const {
  for (auto [a, b] : intervals)
    if (a < x && x < b) return true;
  return false;
}

// ---------------------------------------------------------------------------
// StepFunction1D

void StepFunction1D::validate() const {
  if (values.size() != breakpoints.size() + 1)
    throw LengthMismatch("step function needs breakpoints+1 values");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw Error("step function breakpoints must be strictly increasing");
}

double StepFunction1D::operator()(double x) const {
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

double StepFunction1D::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double StepFunction1D::lp_norm(const IntervalDomain1D& domain, double p) const {
  double acc = 0.0, sup = 0.0;
  for (auto [a, b] : domain.intervals) {
    // split (a,b) at interior breakpoints
    double left = a;
    for (double bp : breakpoints) {
      if (bp <= a) continue;
      if (bp >= b) break;
      const double v = (*this)(0.5 * (left + bp));
      acc += std::pow(std::abs(v), p) * (bp - left);
      sup = std::max(sup, std::abs(v));
      left = bp;
    }
    const double v = (*this)(0.5 * (left + b));
    acc += std::pow(std::abs(v), p) * (b - left);
    sup = std::max(sup, std::abs(v));
  }
  if (std::isinf(p)) return sup;
  return std::pow(acc, 1.0 / p);
}

// ---------------------------------------------------------------------------
// WeightedSample and quadrature

void WeightedSample::validate() const {
  if (values.size() != masses.size())
    throw LengthMismatch("sample values/masses length mismatch");
  for (const auto& m : masses)
    if (!(m > LogReal())) throw NonpositiveMass("sample mass");
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

} // namespace

void graded_panels_1d(double a, double b, const QuadratureRule& rule,
                      std::vector<double>& nodes, std::vector<double>& weights) {
  const int order = std::max(2, rule.panel_order);
  const int per_side = std::max(1, rule.nodes_per_piece / (2 * order));
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);

  std::vector<double> bounds;
  bounds.reserve(2 * per_side + 1);
  const double half = 0.5 * (b - a);
  for (int i = 0; i <= per_side; ++i)
    bounds.push_back(a + half * std::pow(double(i) / per_side, rule.grading));
  for (int i = per_side - 1; i >= 0; --i)
    bounds.push_back(b - half * std::pow(double(i) / per_side, rule.grading));

  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const double lo = bounds[k], hi = bounds[k + 1];
    const double mid = 0.5 * (lo + hi), sc = 0.5 * (hi - lo);
    for (int j = 0; j < order; ++j) {
      nodes.push_back(mid + sc * gx[j]);
      weights.push_back(sc * gw[j]);
    }
  }
}

std::pair<FinitePointSpace, WeightedSample>
sample_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
          const QuadratureRule& rule) {
  domain.validate();
  f.validate();
  if (domain.intervals.empty()) throw EmptyDomain("no intervals to sample");
  for (auto [a, b] : domain.intervals)
    if (std::isinf(a) || std::isinf(b))
      throw EmptyDomain("cannot sample an unbounded interval");

  std::vector<double> nodes, weights;
  for (auto [a, b] : domain.intervals) {
    std::vector<double> cuts{a};
    if (rule.split_at_function_breakpoints)
      for (double bp : f.breakpoints)
        if (bp > a && bp < b) cuts.push_back(bp);
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      graded_panels_1d(cuts[i], cuts[i + 1], rule, nodes, weights);
  }

  std::vector<LogReal> pos, mass;
  pos.reserve(nodes.size());
  mass.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    pos.push_back(LogReal::from_value(nodes[i]));
    mass.push_back(LogReal::from_value(weights[i]));
  }
  WeightedSample sample;
  sample.values.reserve(nodes.size());
  for (double x : nodes) sample.values.push_back(f(x));
  sample.masses = mass;
  sample.infinite_measure = domain.whole_line;
  return {FinitePointSpace::line(std::move(pos), std::move(mass)), std::move(sample)};
}

} // namespace homtype
