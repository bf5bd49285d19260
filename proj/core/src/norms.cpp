#include "homtype/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "homtype/reduce.hpp"

namespace homtype {

// ---------------------------------------------------------------------------
// OrliczFunctionSpec / PhiFunctionSpec

double OrliczFunctionSpec::inverse(double y) const {
  if (y <= 0.0) return 0.0;
  double hi = 1.0;
  for (int i = 0; i < 2100 && evaluator(hi) <= y; ++i) hi *= 2.0;
  double lo = hi * 0.5;
  while (lo > 1e-300 && evaluator(lo) > y) {
    hi = lo;
    lo *= 0.5;
  }
  if (evaluator(lo) > y) return 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (evaluator(mid) <= y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

OrliczFunctionSpec OrliczFunctionSpec::power(double p) {
  if (!(p > 0.0)) throw Error("Orlicz power preset needs p > 0");
  OrliczFunctionSpec spec;
  spec.evaluator = [p](double t) { return std::pow(t, p); };
  spec.lower_type = p;
  spec.upper_type = p;
  spec.type_constant = 1.0;
  spec.convex = p >= 1.0;
  spec.name = "power(" + std::to_string(p) + ")";
  return spec;
}

OrliczFunctionSpec OrliczFunctionSpec::exp_minus_one() {
  OrliczFunctionSpec spec;
  spec.evaluator = [](double t) { return std::expm1(t); };
  spec.lower_type = 1.0;
  spec.upper_type = std::numeric_limits<double>::infinity();
  spec.type_constant = 1.0;
  spec.convex = true;
  spec.name = "exp_minus_one";
  return spec;
}

PhiFunctionSpec PhiFunctionSpec::power(double lambda, double p) {
  PhiFunctionSpec spec;
  spec.evaluator = [lambda, p](const LogReal& radius, const LogReal&) {
    return std::exp(-lambda / p * radius.ln_abs());
  };
  spec.name = "power(lambda=" + std::to_string(lambda) + ",p=" + std::to_string(p) + ")";
  return spec;
}

PhiFunctionSpec PhiFunctionSpec::measure_power(double p) {
  PhiFunctionSpec spec;
  spec.evaluator = [p](const LogReal&, const LogReal& measure) {
    return std::exp(-measure.ln_abs() / p);
  };
  spec.name = "measure_power(p=" + std::to_string(p) + ")";
  return spec;
}

// ---------------------------------------------------------------------------
// NormSpec

NormSpec NormSpec::lp(double p, std::optional<std::vector<double>> weight) {
  if (!(p > 0.0)) throw Error("Lp needs p > 0");
  return {Lp{p, std::move(weight)}};
}
NormSpec NormSpec::sup() {
  return {Lp{std::numeric_limits<double>::infinity(), std::nullopt}};
}
NormSpec NormSpec::lorentz(double r, double tau,
                           std::optional<std::vector<double>> weight) {
  if (!(r > 0.0) || !(tau > 0.0)) throw Error("Lorentz needs r, tau > 0");
  return {Lorentz{r, tau, std::move(weight)}};
}
NormSpec NormSpec::orlicz(OrliczFunctionSpec phi,
                          std::optional<std::vector<double>> weight) {
  return {Orlicz{std::move(phi), std::move(weight)}};
}
NormSpec NormSpec::variable_lp(std::vector<double> exponents) {
  return {VariableLp{std::move(exponents)}};
}
NormSpec NormSpec::morrey(double p, PhiFunctionSpec phi,
                          std::shared_ptr<const BallFamily> family) {
  if (!(p > 0.0)) throw Error("Morrey needs p > 0");
  return {Morrey{p, std::move(phi), std::move(family)}};
}
NormSpec NormSpec::orlicz_morrey(OrliczFunctionSpec phi, PhiFunctionSpec varphi,
                                 std::shared_ptr<const BallFamily> family) {
  return {OrliczMorrey{std::move(phi), std::move(varphi), std::move(family)}};
}
NormSpec NormSpec::quotient(NormSpec inner) {
  if (inner.is_quotient()) throw Error("quotient of a quotient");
  return {Quotient{std::make_shared<const NormSpec>(std::move(inner))}};
}

bool NormSpec::is_convex() const {
  struct V {
    bool operator()(const Lp& s) const { return s.p >= 1.0; }
    bool operator()(const Lorentz& s) const { return s.r >= 1.0 && s.tau >= 1.0; }
    bool operator()(const Orlicz& s) const { return s.phi.convex; }
    bool operator()(const VariableLp& s) const {
      return std::all_of(s.exponents.begin(), s.exponents.end(),
                         [](double e) { return e >= 1.0; });
    }
    bool operator()(const Morrey& s) const { return s.p >= 1.0; }
    bool operator()(const OrliczMorrey& s) const { return s.phi.convex; }
    bool operator()(const Quotient& s) const { return s.inner->is_convex(); }
  };
  return std::visit(V{}, v);
}

// ---------------------------------------------------------------------------
// Lp

LogReal lp_norm_log(std::span<const LogReal> abs_values,
                    std::span<const LogReal> masses, double p,
                    const std::vector<double>* weight) {
  if (abs_values.size() != masses.size())
    throw LengthMismatch("lp_norm values/masses");
  if (weight && weight->size() != abs_values.size())
    throw LengthMismatch("lp_norm weight length");
  if (std::isinf(p)) {
    LogReal sup;
    for (const auto& a : abs_values) sup = max(sup, a);
    return sup;
  }
  std::vector<LogReal> terms(abs_values.size());
  for (std::size_t i = 0; i < abs_values.size(); ++i) {
    LogReal t = pow(abs_values[i], p) * masses[i];
    if (weight) {
      const double w = (*weight)[i];
      if (!(w > 0.0)) throw NonpositiveWeight("lp_norm weight");
      t = t * LogReal::from_value(w);
    }
    terms[i] = t;
  }
  return pow(tree_sum(std::span<const LogReal>(terms)), 1.0 / p);
}

double lp_norm(const WeightedSample& sample, double p,
               const std::vector<double>* weight) {
  std::vector<LogReal> av(sample.values.size());
  for (std::size_t i = 0; i < av.size(); ++i)
    av[i] = abs(LogReal::from_value(sample.values[i]));
  return lp_norm_log(av, sample.masses, p, weight).value_checked();
}

// ---------------------------------------------------------------------------
// rearrangement and Lorentz

namespace {

std::vector<double> effective_masses(const WeightedSample& sample,
                                     const std::vector<double>* weight) {
  if (weight && weight->size() != sample.size())
    throw LengthMismatch("weight length");
  std::vector<double> m(sample.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    m[i] = sample.masses[i].value_checked();
    if (weight) {
      if (!((*weight)[i] > 0.0)) throw NonpositiveWeight("weight");
      m[i] *= (*weight)[i];
    }
  }
  return m;
}

} // namespace

double DecreasingRearrangement::operator()(double t) const {
  if (levels.empty() || t < 0.0 || t >= cuts.back()) return 0.0;
  const auto it = std::upper_bound(cuts.begin(), cuts.end(), t);
  return levels[static_cast<std::size_t>(it - cuts.begin()) - 1];
}

DecreasingRearrangement decreasing_rearrangement(const WeightedSample& sample,
                                                 const std::vector<double>* weight) {
  sample.validate();
  const std::vector<double> m = effective_masses(sample, weight);
  std::vector<std::size_t> idx(sample.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const double va = std::abs(sample.values[a]), vb = std::abs(sample.values[b]);
    if (va != vb) return va > vb;
    return a < b;
  });
  DecreasingRearrangement out;
  out.cuts.push_back(0.0);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double v = std::abs(sample.values[idx[k]]);
    if (!out.levels.empty() && out.levels.back() == v) {
      out.cuts.back() += m[idx[k]]; // merge equal levels
    } else {
      out.levels.push_back(v);
      out.cuts.push_back(out.cuts.back() + m[idx[k]]);
    }
  }
  // drop the trailing zero level; f* vanishes past the support mass anyway
  if (!out.levels.empty() && out.levels.back() == 0.0) {
    out.levels.pop_back();
    out.cuts.pop_back();
  }
  return out;
}

double lorentz_norm(const WeightedSample& sample, double r, double tau,
                    const std::vector<double>* weight) {
  if (!(r > 0.0) || !(tau > 0.0)) throw Error("Lorentz needs r, tau > 0");
  const auto fs = decreasing_rearrangement(sample, weight);
  // integral over each step: v^tau * (r/tau) * (T_hi^(tau/r) - T_lo^(tau/r))
  const double e = tau / r;
  double acc = 0.0;
  for (std::size_t i = 0; i < fs.levels.size(); ++i)
    acc += std::pow(fs.levels[i], tau) *
           (std::pow(fs.cuts[i + 1], e) - std::pow(fs.cuts[i], e)) / e;
  return std::pow(acc, 1.0 / tau);
}

// ---------------------------------------------------------------------------
// Luxemburg-type functionals

namespace {

// inf{lambda : modular(lambda) <= bound} for a modular nonincreasing in
// lambda; continuous strictly decreasing where positive, so bisection is
// certified. Returns 0 for identically-zero inputs.
double luxemburg_infimum(const std::function<double(double)>& modular,
                         double bound, double scale) {
  if (scale == 0.0) return 0.0;
  double hi = scale;
  int guard = 0;
  while (modular(hi) > bound) {
    hi *= 2.0;
    if (++guard > 4000) throw NonconvergentBisection("no upper bracket");
  }
  double lo = hi;
  guard = 0;
  while (modular(lo * 0.5) <= bound) {
    lo *= 0.5;
    if (++guard > 4000) return 0.0; // modular stays below bound for all lambda
  }
  lo *= 0.5; // modular(lo) > bound >= modular(hi)
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double m = modular(mid);
    if (m <= bound && m >= bound * (1.0 - 1e-10)) return mid;
    (m <= bound ? hi : lo) = mid;
    if (hi - lo <= 1e-14 * hi) return hi;
  }
  return hi;
}

} // namespace

double luxemburg_norm(const WeightedSample& sample, const OrliczFunctionSpec& phi,
                      const std::vector<double>* weight) {
  sample.validate();
  const std::vector<double> m = effective_masses(sample, weight);
  double scale = 0.0;
  for (double v : sample.values) scale = std::max(scale, std::abs(v));
  auto modular = [&](double lambda) {
    std::vector<double> terms(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const double t = std::abs(sample.values[i]) / lambda;
      terms[i] = t == 0.0 ? 0.0 : phi(t) * m[i];
    }
    return tree_sum(std::span<const double>(terms));
  };
  return luxemburg_infimum(modular, 1.0, scale);
}

double variable_lp_norm(const WeightedSample& sample,
                        std::span<const double> exponents) {
  sample.validate();
  if (exponents.size() != sample.size())
    throw LengthMismatch("variable exponent length");
  for (double e : exponents)
    if (!(e > 0.0) || std::isinf(e)) throw Error("variable exponent out of (0,inf)");
  double scale = 0.0;
  for (double v : sample.values) scale = std::max(scale, std::abs(v));
  auto modular = [&](double lambda) {
    std::vector<double> terms(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const double t = std::abs(sample.values[i]) / lambda;
      terms[i] =
          t == 0.0 ? 0.0 : std::pow(t, exponents[i]) * sample.masses[i].value_checked();
    }
    return tree_sum(std::span<const double>(terms));
  };
  return luxemburg_infimum(modular, 1.0, scale);
}

// ---------------------------------------------------------------------------
// Morrey-type norms

double morrey_norm(const FinitePointSpace& space, std::span<const double> values,
                   double p, const PhiFunctionSpec& phi, const BallFamily& family) {
  if (family.size() == 0) throw EmptyFamily("morrey_norm");
  if (values.size() != space.size()) throw LengthMismatch("morrey values");
  std::vector<LogReal> fp_mass(space.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    fp_mass[i] = pow(abs(LogReal::from_value(values[i])), p) * space.mass(i);
  double best = 0.0;
  for (std::size_t b = 0; b < family.size(); ++b) {
    const LogReal avg = family.average(b, fp_mass);
    if (avg.is_zero()) continue;
    const double val = std::exp(avg.ln_abs() / p) /
                       phi(family.ball(b).radius, family.measure(b));
    best = std::max(best, val);
  }
  return best;
}

double orlicz_morrey_norm(const FinitePointSpace& space,
                          std::span<const double> values,
                          const OrliczFunctionSpec& phi,
                          const PhiFunctionSpec& varphi, const BallFamily& family) {
  if (family.size() == 0) throw EmptyFamily("orlicz_morrey_norm");
  if (values.size() != space.size()) throw LengthMismatch("orlicz_morrey values");
  double best = 0.0;
  for (std::size_t b = 0; b < family.size(); ++b) {
    const auto members = family.members(b);
    double scale = 0.0;
    for (auto y : members) scale = std::max(scale, std::abs(values[y]));
    if (scale == 0.0) continue;
    const double bound = varphi(family.ball(b).radius, family.measure(b));
    const double mu_b = family.measure(b).value_checked();
    auto modular = [&](double lambda) {
      std::vector<double> terms;
      terms.reserve(members.size());
      for (auto y : members) {
        const double t = std::abs(values[y]) / lambda;
        terms.push_back(t == 0.0 ? 0.0
                                 : phi(t) * space.mass(y).value_checked());
      }
      return tree_sum(std::span<const double>(terms)) / mu_b;
    };
    best = std::max(best, luxemburg_infimum(modular, bound, scale));
  }
  return best;
}

// ---------------------------------------------------------------------------
// quotient norm

namespace {

double golden_section(const std::function<double(double)>& h, double lo,
                      double hi) {
  constexpr double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = h(c), fd = h(d);
  for (int i = 0; i < 300 && (b - a) > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b));
       ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = h(d);
    }
  }
  return 0.5 * (a + b);
}

} // namespace

QuotientResult quotient_norm(const FinitePointSpace& space,
                             const WeightedSample& sample, const NormSpec& inner) {
  if (inner.is_quotient()) throw Error("quotient_norm inner must not be Quotient");
  // On samples standing in for infinite-measure spaces a nonzero shift has
  // infinite norm, so the infimum sits at a = 0.
  auto norm_at = [&](double a) {
    WeightedSample shifted = sample;
    for (double& v : shifted.values) v += a;
    return evaluate_norm(space, shifted, inner);
  };
  if (sample.infinite_measure) return {norm_at(0.0), 0.0};
  double m = 0.0;
  for (double v : sample.values) m = std::max(m, std::abs(v));
  if (m == 0.0) return {0.0, 0.0};
  double lo = -m, hi = m;
  if (!inner.is_convex()) {
    // coarse global scan; golden-section then refines the best cell
    const int kGrid = 10000;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= kGrid; ++i) {
      const double a = -m + 2.0 * m * i / kGrid;
      const double val = norm_at(a);
      if (val < best) {
        best = val;
        best_i = i;
      }
    }
    lo = -m + 2.0 * m * std::max(0, best_i - 1) / kGrid;
    hi = -m + 2.0 * m * std::min(kGrid, best_i + 1) / kGrid;
  }
  const double a_star = golden_section(norm_at, lo, hi);
  return {norm_at(a_star), a_star};
}

// ---------------------------------------------------------------------------
// Young conjugate

OrliczFunctionSpec young_conjugate(const OrliczFunctionSpec& phi) {
  auto src = phi.evaluator;
  auto conj = [src](double t) {
    if (t <= 0.0) return 0.0;
    auto objective = [&](double u) { return t * u - src(u); };
    double best = 0.0, best_u = 0.0;
    for (double lu = -40.0; lu <= 40.0; lu += 0.25) {
      const double u = std::exp(lu);
      const double o = objective(u);
      if (o > best) {
        best = o;
        best_u = u;
      }
    }
    if (best_u == 0.0) return 0.0;
    const double refined = golden_section(
        [&](double u) { return -objective(u); }, best_u / 1.3, best_u * 1.3);
    return std::max(best, objective(refined));
  };
  OrliczFunctionSpec out;
  out.evaluator = conj;
  out.lower_type =
      phi.upper_type > 1.0 ? phi.upper_type / (phi.upper_type - 1.0) : 1.0;
  out.upper_type =
      phi.lower_type > 1.0 ? phi.lower_type / (phi.lower_type - 1.0)
                           : std::numeric_limits<double>::infinity();
  out.type_constant = phi.type_constant;
  out.convex = true;
  out.name = "conjugate(" + phi.name + ")";
  return out;
}

// ---------------------------------------------------------------------------
// dispatcher

double evaluate_norm(const FinitePointSpace& space, const WeightedSample& sample,
                     const NormSpec& spec) {
  sample.validate();
  if (sample.size() != space.size())
    throw LengthMismatch("sample size vs space size");
  struct V {
    const FinitePointSpace& space;
    const WeightedSample& sample;
    double operator()(const NormSpec::Lp& s) const {
      return lp_norm(sample, s.p, s.weight ? &*s.weight : nullptr);
    }
    double operator()(const NormSpec::Lorentz& s) const {
      return lorentz_norm(sample, s.r, s.tau, s.weight ? &*s.weight : nullptr);
    }
    double operator()(const NormSpec::Orlicz& s) const {
      return luxemburg_norm(sample, s.phi, s.weight ? &*s.weight : nullptr);
    }
    double operator()(const NormSpec::VariableLp& s) const {
      return variable_lp_norm(sample, s.exponents);
    }
    double operator()(const NormSpec::Morrey& s) const {
      const BallFamily local =
          s.family ? BallFamily() : BallFamily::canonical(space);
      const BallFamily& fam = s.family ? *s.family : local;
      return morrey_norm(space, sample.values, s.p, s.phi, fam);
    }
    double operator()(const NormSpec::OrliczMorrey& s) const {
      const BallFamily local =
          s.family ? BallFamily() : BallFamily::canonical(space);
      const BallFamily& fam = s.family ? *s.family : local;
      return orlicz_morrey_norm(space, sample.values, s.phi, s.varphi, fam);
    }
    double operator()(const NormSpec::Quotient& s) const {
      return quotient_norm(space, sample, *s.inner).value;
    }
  };
  return std::visit(V{space, sample}, spec.v);
}

double evaluate_norm(const FinitePointSpace& space, std::span<const double> values,
                     const NormSpec& spec) {
  WeightedSample sample;
  sample.values.assign(values.begin(), values.end());
  sample.masses = space.masses();
  return evaluate_norm(space, sample, spec);
}

} // namespace homtype
