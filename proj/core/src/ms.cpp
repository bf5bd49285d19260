#include "homtype/ms.hpp"

#include <algorithm>
#include <cmath>

#include "homtype/parallel.hpp"
#include "homtype/reduce.hpp"

namespace homtype {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_s(double s) {
  if (!(s > 0.0) || !(s < 1.0)) throw SOutOfRange("s must lie in (0,1)");
}

} // namespace

std::string to_string(ScanTrend t) {
  switch (t) {
    case ScanTrend::DecreasingToZero: return "decreasing_to_zero";
    case ScanTrend::BoundedBracket: return "bounded_bracket";
    case ScanTrend::Increasing: return "increasing";
    case ScanTrend::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<double> default_s_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 9; ++i) grid.push_back(std::pow(10.0, -1.0 - 0.5 * i));
  return grid;
}

MSScanResult assemble_scan(double q, const std::vector<double>& grid,
                           const std::vector<double>& values, double reference,
                           double bounded_ratio_cap) {
  if (grid.size() < 4) throw Error("scan grid needs at least 4 points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] > grid[i + 1])) throw Error("scan grid must decrease strictly");
  for (double s : grid) check_s(s);

  MSScanResult out;
  out.q = q;
  out.grid = grid;
  out.values = values;
  out.reference_norm = reference;

  const std::size_t n = values.size();
  const std::size_t tail_begin = n - (n + 1) / 2; // smallest-s half
  double lo = kInf, hi = 0.0;
  for (std::size_t i = tail_begin; i < n; ++i) {
    const double ratio = reference > 0.0 ? values[i] / reference : kInf;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  out.ratio_bracket = {lo, hi};

  auto drop = [&](std::size_t i) { return values[i + 1] <= 0.8 * values[i]; };
  auto rise = [&](std::size_t i) { return values[i + 1] >= 1.02 * values[i]; };
  if (drop(n - 4) && drop(n - 3) && drop(n - 2) &&
      values[n - 1] < 0.05 * values[0]) {
    out.trend = ScanTrend::DecreasingToZero;
  } else if (rise(n - 4) && rise(n - 3) && rise(n - 2) &&
             values[n - 1] > 1.2 * values[0]) {
    out.trend = ScanTrend::Increasing;
  } else if (lo > 0.0 && hi < kInf && hi <= bounded_ratio_cap * lo) {
    out.trend = ScanTrend::BoundedBracket;
  }

  auto aitken = [&](std::size_t last) -> std::optional<double> {
    const double a = values[last - 2], b = values[last - 1], c = values[last];
    const double denom = (c - b) - (b - a);
    if (denom == 0.0) return std::nullopt;
    return c - (c - b) * (c - b) / denom;
  };
  const auto e1 = aitken(n - 1), e2 = aitken(n - 2);
  if (e1 && e2) {
    Extrapolation ex;
    ex.limit = *e1;
    ex.spread = std::abs(*e1 - *e2) /
                std::max({std::abs(*e1), std::abs(*e2), 1e-300});
    ex.reliable = ex.spread < 0.05;
    out.extrapolation = ex;
  }
  return out;
}

// ---------------------------------------------------------------------------
// finite spaces

LogReal gagliardo_kernel(const FinitePointSpace& space,
                         std::span<const double> values, double q, double s,
                         PointId x, const RegionSpec& region) {
  check_s(s);
  if (!(q > 0.0)) throw Error("q must be positive");
  if (values.size() != space.size()) throw LengthMismatch("kernel values");
  if (space.size() < 2) throw DiagonalOnly("single-point space");
  if (x >= space.size()) throw UnknownPoint("kernel base point");

  std::vector<char> subset_mask;
  const LogReal* inside_r = nullptr;
  const LogReal* outside_r = nullptr;
  if (const auto* sub = std::get_if<RegionSubsetPoints>(&region)) {
    subset_mask.assign(space.size(), 0);
    for (PointId p : sub->points) {
      if (p >= space.size()) throw UnknownPoint("region subset point");
      subset_mask[p] = 1;
    }
  } else if (const auto* in = std::get_if<RegionInsideBall>(&region)) {
    inside_r = &in->radius;
  } else if (const auto* outb = std::get_if<RegionOutsideBall>(&region)) {
    outside_r = &outb->radius;
  } else if (std::holds_alternative<RegionSubset1D>(region)) {
    throw Error("interval-domain region on a finite space");
  }

  const double t = s * q;
  std::vector<LogReal> terms;
  terms.reserve(space.size());
  for (PointId y = 0; y < space.size(); ++y) {
    if (y == x) continue;
    const double diff = std::abs(values[x] - values[y]);
    if (diff == 0.0) continue;
    const LogReal rho = space.distance(x, y);
    if (inside_r && !(rho < *inside_r)) continue;
    if (outside_r && rho < *outside_r) continue;
    if (!subset_mask.empty() && !subset_mask[y]) continue;
    const LogReal u = mutual_min_measure(space, x, y);
    terms.push_back(pow(LogReal::from_value(diff), q) * space.mass(y) /
                    (u * pow(rho, t)));
  }
  return tree_sum(std::span<const LogReal>(terms));
}

std::vector<LogReal> gagliardo_kernel_all(const FinitePointSpace& space,
                                          std::span<const double> values,
                                          double q, double s,
                                          const RegionSpec& region) {
  std::vector<LogReal> g(space.size());
  parallel_for(space.size(), [&](std::size_t x) {
    g[x] = gagliardo_kernel(space, values, q, s, x, region);
  });
  if (const auto* sub = std::get_if<RegionSubsetPoints>(&region)) {
    // the outer norm is restricted to Omega as well (extension by zero)
    std::vector<char> mask(space.size(), 0);
    for (PointId p : sub->points) mask[p] = 1;
    for (PointId x = 0; x < space.size(); ++x)
      if (!mask[x]) g[x] = LogReal();
  }
  return g;
}

namespace {

double norm_of_kernel(const FinitePointSpace& space, std::vector<LogReal> g,
                      double q, const NormSpec& spec) {
  const NormSpec& inner = spec.is_quotient() ? spec.quotient_inner() : spec;
  for (auto& v : g) v = pow(v, 1.0 / q);
  if (const auto* lp = std::get_if<NormSpec::Lp>(&inner.v)) {
    return lp_norm_log(g, space.masses(), lp->p,
                       lp->weight ? &*lp->weight : nullptr)
        .value_checked();
  }
  std::vector<double> gd(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) gd[i] = g[i].value();
  return evaluate_norm(space, gd, inner);
}

} // namespace

double ms_value(const FinitePointSpace& space, std::span<const double> values,
                double q, const NormSpec& spec, double s,
                const RegionSpec& region) {
  return std::pow(s, 1.0 / q) *
         norm_of_kernel(space, gagliardo_kernel_all(space, values, q, s, region),
                        q, spec);
}

double sobolev_seminorm(const FinitePointSpace& space,
                        std::span<const double> values, double q,
                        const NormSpec& spec, double s, const RegionSpec& region) {
  return norm_of_kernel(space, gagliardo_kernel_all(space, values, q, s, region),
                        q, spec);
}

MSScanResult ms_scan(const FinitePointSpace& space, std::span<const double> values,
                     double q, const NormSpec& spec,
                     const std::vector<double>& s_grid, const RegionSpec& region) {
  std::vector<double> f(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i)
    f[i] = ms_value(space, values, q, spec, s_grid[i], region);
  return assemble_scan(q, s_grid, f, evaluate_norm(space, values, spec));
}

double tail_mass(const FinitePointSpace& space, PointId x, double q, double s) {
  check_s(s);
  if (!(q > 0.0)) throw Error("q must be positive");
  if (x >= space.size()) throw UnknownPoint("tail_mass base point");
  const LogReal radius = LogReal::from_ln(-std::log(s) / q);
  const double t = s * q;
  std::vector<LogReal> terms;
  for (PointId y = 0; y < space.size(); ++y) {
    if (y == x) continue;
    const LogReal rho = space.distance(x, y);
    if (rho < radius) continue;
    const LogReal u = mutual_min_measure(space, x, y);
    terms.push_back(space.mass(y) / (u * pow(rho, t)));
  }
  return s * tree_sum(std::span<const LogReal>(terms)).value_checked();
}

double tail_mass_whole_line(double q, double s) {
  check_s(s);
  if (!(q > 0.0)) throw Error("q must be positive");
  return std::pow(s, s) / q;
}

// ---------------------------------------------------------------------------
// 1-D machinery

namespace {

struct Piece {
  double a, b, v;
};

std::vector<Piece> partition_1d(const IntervalDomain1D& domain,
                                const StepFunction1D& f) {
  domain.validate();
  f.validate();
  std::vector<Piece> out;
  if (domain.whole_line) {
    double left = -kInf;
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
      out.push_back({left, f.breakpoints[i], f.values[i]});
      left = f.breakpoints[i];
    }
    out.push_back({left, kInf, f.values.back()});
    return out;
  }
  if (domain.intervals.empty()) throw EmptyDomain("empty interval domain");
  for (auto [a, b] : domain.intervals) {
    double left = a;
    for (double bp : f.breakpoints) {
      if (bp <= a) continue;
      if (bp >= b) break;
      out.push_back({left, bp, f(0.5 * (left + bp))});
      left = bp;
    }
    out.push_back({left, b, f(std::isinf(b) ? left + 1.0 : 0.5 * (left + b))});
  }
  return out;
}

std::vector<Piece> intersect_with(const std::vector<Piece>& pieces,
                                  const IntervalDomain1D& subset) {
  std::vector<Piece> out;
  for (const Piece& p : pieces)
    for (auto [a, b] : subset.intervals) {
      const double c = std::max(p.a, a), d = std::min(p.b, b);
      if (c < d) out.push_back({c, d, p.v});
    }
  std::sort(out.begin(), out.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });
  return out;
}

// (1/2) integral over (c,d) of |x-y|^(-1-t) dy for x outside the open piece,
// written through expm1/log1p so far narrow pieces keep full precision.
double half_piece_integral(double x, double c, double d, double t) {
  if (d <= x) {
    const double u = x - d;
    if (!(u > 0.0)) throw Error("kernel node collides with a piece boundary");
    if (std::isinf(c)) return std::pow(u, -t) / (2.0 * t);
    return std::pow(u, -t) * (-std::expm1(-t * std::log1p((d - c) / u))) /
           (2.0 * t);
  }
  if (c >= x) {
    const double u = c - x;
    if (!(u > 0.0)) throw Error("kernel node collides with a piece boundary");
    if (std::isinf(d)) return std::pow(u, -t) / (2.0 * t);
    return std::pow(u, -t) * (-std::expm1(-t * std::log1p((d - c) / u))) /
           (2.0 * t);
  }
  throw Error("kernel node inside a piece of different value");
}

double kernel_from_pieces(const std::vector<Piece>& pieces, double fx, double q,
                          double t, double x, const RegionSpec& region) {
  const LogReal* inside_r = std::get_if<RegionInsideBall>(&region)
                                ? &std::get_if<RegionInsideBall>(&region)->radius
                                : nullptr;
  const LogReal* outside_r = std::get_if<RegionOutsideBall>(&region)
                                 ? &std::get_if<RegionOutsideBall>(&region)->radius
                                 : nullptr;
  std::vector<double> terms;
  terms.reserve(2 * pieces.size());
  auto add_clipped = [&](double c, double d, double v) {
    if (!(c < d)) return;
    terms.push_back(std::pow(std::abs(fx - v), q) *
                    half_piece_integral(x, c, d, t));
  };
  for (const Piece& p : pieces) {
    if (p.v == fx) continue;
    if (inside_r) {
      const double r = inside_r->value_checked();
      add_clipped(std::max(p.a, x - r), std::min(p.b, x + r), p.v);
    } else if (outside_r) {
      const double r = outside_r->value_checked();
      add_clipped(p.a, std::min(p.b, x - r), p.v);
      add_clipped(std::max(p.a, x + r), p.b, p.v);
    } else {
      add_clipped(p.a, p.b, p.v);
    }
  }
  return tree_sum(std::span<const double>(terms));
}

} // namespace

double gagliardo_kernel_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                           double q, double s, double x, const RegionSpec& region) {
  check_s(s);
  if (!(q > 0.0)) throw Error("q must be positive");
  if (std::holds_alternative<RegionSubsetPoints>(region))
    throw Error("point-set region on a 1-D domain");
  std::vector<Piece> pieces = partition_1d(domain, f);
  if (const auto* sub = std::get_if<RegionSubset1D>(&region))
    pieces = intersect_with(pieces, sub->domain);
  return kernel_from_pieces(pieces, f(x), q, s * q, x, region);
}

// ---------------------------------------------------------------------------
// Weight1D

double Weight1D::operator()(double x) const {
  for (const Piece& p : pieces)
    if (x >= p.lo && x < p.hi)
      return p.a == 0.0 ? p.coef : p.coef * std::pow(std::abs(x - p.pole), -p.a);
  return pieces.empty() ? 1.0 : pieces.back().coef;
}

double Weight1D::integral(double lo, double hi) const {
  double acc = 0.0;
  for (const Piece& p : pieces) {
    const double c = std::max(lo, p.lo), d = std::min(hi, p.hi);
    if (!(c < d)) continue;
    if (p.a == 0.0) {
      acc += p.coef * (d - c);
    } else if (p.pole <= c) {
      if (p.a == 1.0)
        acc += p.coef * std::log((d - p.pole) / (c - p.pole));
      else
        acc += p.coef *
               (std::pow(d - p.pole, 1.0 - p.a) - std::pow(c - p.pole, 1.0 - p.a)) /
               (1.0 - p.a);
    } else if (p.pole >= d) {
      if (p.a == 1.0)
        acc += p.coef * std::log((p.pole - c) / (p.pole - d));
      else
        acc += p.coef *
               (std::pow(p.pole - c, 1.0 - p.a) - std::pow(p.pole - d, 1.0 - p.a)) /
               (1.0 - p.a);
    } else {
      throw Error("weight pole interior to an integration piece");
    }
  }
  return acc;
}

Weight1D Weight1D::one() { return {{{-kInf, kInf, 1.0, 0.0, 0.0}}}; }

Weight1D Weight1D::maximal_indicator_power(double e1, double e2, double delta) {
  if (!(e1 < e2) || !(delta > 0.0) || !(delta < 1.0))
    throw Error("maximal_indicator_power needs e1 < e2 and delta in (0,1)");
  const double c = std::pow(e2 - e1, delta);
  Weight1D w;
  w.pieces = {{-kInf, e1, c, e2, delta},
              {e1, e2, 1.0, 0.0, 0.0},
              {e2, kInf, c, e1, delta}};
  return w;
}

// ---------------------------------------------------------------------------
// outer 1-D norm

namespace {

struct OuterNodes {
  std::vector<double> x, w;
  double hull_lo = 0.0, hull_hi = 0.0, far_lo = 0.0, far_hi = 0.0;
  bool whole_line = false;
};

void octave_panels(double from, double to, int panels_per_octave, int order,
                   double origin, std::vector<double>& nodes,
                   std::vector<double>& weights) {
  // geometric octaves in the offset u = |x - origin|
  std::vector<double> gx, gw;
  QuadratureRule r;
  r.nodes_per_piece = panels_per_octave * order;
  r.panel_order = order;
  r.grading = 1.0;
  double u = from;
  while (u < to) {
    const double next = std::min(2.0 * u, to);
    graded_panels_1d(origin + u, origin + next, r, nodes, weights);
    u = next;
  }
}

OuterNodes outer_nodes_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                          double s, double q, const Ms1DOptions& opt) {
  OuterNodes out;
  QuadratureRule rule = opt.rule;
  // jump singularities of G^(1/q) behave like |x-b|^(-s); grade accordingly
  rule.grading = std::min(4.0, std::max(2.0, 1.0 / (1.0 - std::min(0.9, s * q))));
  if (!domain.whole_line) {
    for (auto [a, b] : domain.intervals) {
      std::vector<double> cuts{a};
      for (double bp : f.breakpoints)
        if (bp > a && bp < b) cuts.push_back(bp);
      cuts.push_back(b);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        graded_panels_1d(cuts[i], cuts[i + 1], rule, out.x, out.w);
    }
    return out;
  }
  out.whole_line = true;
  if (f.breakpoints.empty()) return out; // constant f, G vanishes
  out.hull_lo = f.breakpoints.front();
  out.hull_hi = f.breakpoints.back();
  double width = out.hull_hi - out.hull_lo;
  if (width == 0.0) width = 1.0;
  std::vector<double> cuts(f.breakpoints.begin(), f.breakpoints.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    graded_panels_1d(cuts[i], cuts[i + 1], rule, out.x, out.w);

  const int per_octave = std::max(1, rule.nodes_per_piece / 32);
  const double near = width / 16.0;
  out.far_hi = out.hull_hi + opt.far_factor * width;
  out.far_lo = out.hull_lo - opt.far_factor * width;
  // graded opening panel absorbs the boundary singularity, octaves take over
  graded_panels_1d(out.hull_hi, out.hull_hi + near, rule, out.x, out.w);
  octave_panels(near, opt.far_factor * width, per_octave, 8, out.hull_hi, out.x,
                out.w);
  graded_panels_1d(out.hull_lo - near, out.hull_lo, rule, out.x, out.w);
  {
    std::vector<double> xs, ws;
    octave_panels(near, opt.far_factor * width, per_octave, 8, 0.0, xs, ws);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.x.push_back(out.hull_lo - xs[i]);
      out.w.push_back(ws[i]);
    }
  }
  return out;
}

} // namespace

double ms_value_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                   double q, const NormSpec& spec, double s,
                   const RegionSpec& region, const Ms1DOptions& options) {
  check_s(s);
  if (!(q > 0.0)) throw Error("q must be positive");
  const NormSpec& inner = spec.is_quotient() ? spec.quotient_inner() : spec;

  std::vector<Piece> pieces = partition_1d(domain, f);
  if (const auto* sub = std::get_if<RegionSubset1D>(&region))
    pieces = intersect_with(pieces, sub->domain);

  const OuterNodes nodes = outer_nodes_1d(domain, f, s, q, options);
  if (nodes.x.empty()) return 0.0;

  const double t = s * q;
  std::vector<double> g(nodes.x.size());
  parallel_for(nodes.x.size(), [&](std::size_t i) {
    g[i] = std::pow(
        kernel_from_pieces(pieces, f(nodes.x[i]), q, t, nodes.x[i], region),
        1.0 / q);
  });

  std::vector<double> wvec;
  if (options.weight) {
    wvec.resize(nodes.x.size());
    for (std::size_t i = 0; i < nodes.x.size(); ++i)
      wvec[i] = (*options.weight)(nodes.x[i]);
  }

  const double s_factor = std::pow(s, 1.0 / q);
  if (const auto* lp = std::get_if<NormSpec::Lp>(&inner.v)) {
    if (lp->weight)
      throw Error("1-D norms take analytic weights through Ms1DOptions");
    const double p = lp->p;
    if (std::isinf(p)) {
      double sup = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i)
        sup = std::max(sup, g[i] * (wvec.empty() ? 1.0 : wvec[i]));
      return s_factor * sup;
    }
    std::vector<double> terms(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      terms[i] =
          std::pow(g[i], p) * nodes.w[i] * (wvec.empty() ? 1.0 : wvec[i]);
    double modular = tree_sum(std::span<const double>(terms));
    if (nodes.whole_line) {
      // beyond the far window G is a single power-law pole to relative
      // accuracy O(hull/far); integrate it in closed form
      double aq = 0.0;
      for (const Piece& pc : pieces)
        if (!std::isinf(pc.a) && !std::isinf(pc.b) && pc.v != 0.0)
          aq += std::pow(std::abs(pc.v), q) * (pc.b - pc.a);
      const double centroid = 0.5 * (nodes.hull_lo + nodes.hull_hi);
      auto far_tail = [&](double edge, const Weight1D::Piece* wp,
                          bool right) {
        const double beta =
            p * (1.0 + t) / q + (wp ? wp->a : 0.0);
        if (!(beta > 1.0))
          throw Error("outer Lp norm diverges in the far field");
        const double dist = right ? edge - centroid : centroid - edge;
        return std::pow(aq / 2.0, p / q) * (wp ? wp->coef : 1.0) *
               std::pow(dist, 1.0 - beta) / (beta - 1.0);
      };
      modular += far_tail(nodes.far_hi,
                          options.weight ? &options.weight->far_right() : nullptr,
                          true);
      modular += far_tail(nodes.far_lo,
                          options.weight ? &options.weight->far_left() : nullptr,
                          false);
    }
    return s_factor * std::pow(modular, 1.0 / p);
  }

  WeightedSample sample;
  sample.values = g;
  sample.masses.reserve(nodes.w.size());
  for (double wgt : nodes.w) sample.masses.push_back(LogReal::from_value(wgt));
  sample.infinite_measure = nodes.whole_line;
  if (const auto* lor = std::get_if<NormSpec::Lorentz>(&inner.v))
    return s_factor * lorentz_norm(sample, lor->r, lor->tau,
                                   wvec.empty() ? nullptr : &wvec);
  if (const auto* orl = std::get_if<NormSpec::Orlicz>(&inner.v))
    return s_factor *
           luxemburg_norm(sample, orl->phi, wvec.empty() ? nullptr : &wvec);
  throw Error("unsupported outer norm for 1-D evaluation");
}

double step_reference_norm(const IntervalDomain1D& domain, const StepFunction1D& f,
                           const NormSpec& spec, const Weight1D* weight) {
  domain.validate();
  f.validate();
  const bool quotient = spec.is_quotient();
  const NormSpec& inner = quotient ? spec.quotient_inner() : spec;
  const auto* lp = std::get_if<NormSpec::Lp>(&inner.v);
  if (!lp) throw Error("closed-form reference norms cover Lp specs only");
  if (lp->weight)
    throw Error("1-D norms take analytic weights through Ms1DOptions");
  const double p = lp->p;

  std::vector<Piece> pieces = partition_1d(domain, f);
  auto norm_at = [&](double shift) {
    if (std::isinf(p)) {
      double sup = 0.0;
      for (const Piece& pc : pieces) sup = std::max(sup, std::abs(pc.v + shift));
      return sup;
    }
    double acc = 0.0;
    for (const Piece& pc : pieces) {
      const double v = std::abs(pc.v + shift);
      if (v == 0.0) continue;
      if (std::isinf(pc.a) || std::isinf(pc.b)) {
        if (shift != 0.0 || pc.v != 0.0)
          throw Error("nonzero step value on an unbounded piece");
        continue;
      }
      const double wint =
          weight ? weight->integral(pc.a, pc.b) : (pc.b - pc.a);
      acc += std::pow(v, p) * wint;
    }
    return std::pow(acc, 1.0 / p);
  };
  if (!quotient) return norm_at(0.0);
  if (domain.whole_line) return norm_at(0.0); // infinite measure pins a = 0
  double m = f.max_abs();
  if (m == 0.0) return 0.0;
  // convex in the shift for p >= 1; coarse grid guards quasi-norms
  double lo = -m, hi = m;
  if (p < 1.0) {
    const int grid = 4096;
    double best = kInf;
    int best_i = 0;
    for (int i = 0; i <= grid; ++i) {
      const double a = -m + 2.0 * m * i / grid;
      const double val = norm_at(a);
      if (val < best) {
        best = val;
        best_i = i;
      }
    }
    lo = -m + 2.0 * m * std::max(0, best_i - 1) / grid;
    hi = -m + 2.0 * m * std::min(grid, best_i + 1) / grid;
  }
  constexpr double kPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kPhi * (b - a), d = a + kPhi * (b - a);
  double fc = norm_at(c), fd = norm_at(d);
  for (int i = 0; i < 300 && (b - a) > 1e-13 * std::max(1.0, m); ++i) {
    if (fc <= fd) {
      b = d; d = c; fd = fc; c = b - kPhi * (b - a); fc = norm_at(c);
    } else {
      a = c; c = d; fc = fd; d = a + kPhi * (b - a); fd = norm_at(d);
    }
  }
  return norm_at(0.5 * (a + b));
}

MSScanResult ms_scan_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                        double q, const NormSpec& spec,
                        const std::vector<double>& s_grid,
                        const RegionSpec& region, const Ms1DOptions& options) {
  std::vector<double> values(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i)
    values[i] = ms_value_1d(domain, f, q, spec, s_grid[i], region, options);
  return assemble_scan(q, s_grid, values,
                       step_reference_norm(domain, f, spec, options.weight));
}

// ---------------------------------------------------------------------------
// exact 1-D double integral (oracle)

namespace {

// g(u+w) - g(u) for g(u) = u^(1-s), stable when w << u
double power_increment(double u, double w, double s) {
  if (u == 0.0) return std::pow(w, 1.0 - s);
  return std::pow(u, 1.0 - s) * std::expm1((1.0 - s) * std::log1p(w / u));
}

// integral over (a,b) x (c,d), b <= c, of (y-x)^(-1-s), divided by s(1-s)
double pair_integral(double a, double b, double c, double d, double s) {
  const double gap = c - b;
  if (std::isinf(a) && std::isinf(d))
    throw Error("divergent pair of unbounded pieces");
  if (std::isinf(a)) return power_increment(gap, d - c, s) / (s * (1.0 - s));
  if (std::isinf(d)) return power_increment(gap, b - a, s) / (s * (1.0 - s));
  const double w = b - a, len = d - c;
  if (gap > 0.0 && len / gap < 1e-3) {
    // D(u1) - D(u2) cancels here; integrate -D'(u) over (u1, u2) instead
    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267,
                                 -0.5255324099163290, -0.1834346424956498,
                                 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745,
                                 0.3137066458778873, 0.3626837833783620,
                                 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    const double mid = gap + 0.5 * len, sc = 0.5 * len;
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double u = mid + sc * gx[i];
      acc += gw[i] * std::pow(u, -s) * (-std::expm1(-s * std::log1p(w / u)));
    }
    return acc * sc * (1.0 - s) / (s * (1.0 - s));
  }
  return (power_increment(gap, w, s) - power_increment(gap + len, w, s)) /
         (s * (1.0 - s));
}

} // namespace

double exact_ms_step_1d(const StepFunction1D& f, double s,
                        const IntervalDomain1D& domain) {
  if (s == 1.0) throw SEqualsOne("antiderivative degenerates at s = 1");
  check_s(s);
  std::vector<Piece> pieces = partition_1d(domain, f);
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });
  std::vector<double> terms;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const double diff = std::abs(pieces[i].v - pieces[j].v);
      if (diff == 0.0) continue;
      terms.push_back(diff * pair_integral(pieces[i].a, pieces[i].b,
                                           pieces[j].a, pieces[j].b, s));
    }
  return s * tree_sum(std::span<const double>(terms));
}

} // namespace homtype
