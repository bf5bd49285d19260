#ifndef HOMTYPE_NORMS_HPP
#define HOMTYPE_NORMS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "homtype/operators.hpp"
#include "homtype/space.hpp"

namespace homtype {

/// Young/Orlicz function together with its declared lower and upper types
/// (Phi(st) <= C s^r Phi(t) for s below/above 1).
struct OrliczFunctionSpec {
  std::function<double(double)> evaluator;
  double lower_type = 1.0;
  double upper_type = 1.0;
  double type_constant = 1.0;
  bool convex = false;
  std::string name = "custom";

  double operator()(double t) const { return evaluator(t); }
  /// Inverse of the (strictly increasing) function by bracketing + bisection.
  double inverse(double y) const;

  static OrliczFunctionSpec power(double p);        // Phi(t) = t^p
  static OrliczFunctionSpec exp_minus_one();        // Phi(t) = e^t - 1
};

/// phi(B) for Morrey-type norms, seen through the ball's radius and measure.
struct PhiFunctionSpec {
  std::function<double(const LogReal& radius, const LogReal& measure)> evaluator;
  std::string name = "custom";

  double operator()(const LogReal& radius, const LogReal& measure) const {
    return evaluator(radius, measure);
  }

  static PhiFunctionSpec power(double lambda, double p); // r^(-lambda/p)
  static PhiFunctionSpec measure_power(double p);        // mu(B)^(-1/p)
};

/// Tagged description of a ball quasi-Banach norm. p may be +infinity in Lp
/// (sup norm). A Morrey family left empty means the canonical enumeration of
/// the target space.
struct NormSpec {
  struct Lp {
    double p = 2.0;
    std::optional<std::vector<double>> weight;
  };
  struct Lorentz {
    double r = 2.0, tau = 2.0;
    std::optional<std::vector<double>> weight;
  };
  struct Orlicz {
    OrliczFunctionSpec phi;
    std::optional<std::vector<double>> weight;
  };
  struct VariableLp {
    std::vector<double> exponents;
  };
  struct Morrey {
    double p = 1.0;
    PhiFunctionSpec phi;
    std::shared_ptr<const BallFamily> family; // null -> canonical
  };
  struct OrliczMorrey {
    OrliczFunctionSpec phi;      // integrand
    PhiFunctionSpec varphi;      // per-ball modular bound
    std::shared_ptr<const BallFamily> family;
  };
  struct Quotient {
    std::shared_ptr<const NormSpec> inner;
  };

  std::variant<Lp, Lorentz, Orlicz, VariableLp, Morrey, OrliczMorrey, Quotient> v;

  bool is_quotient() const { return std::holds_alternative<Quotient>(v); }
  const NormSpec& quotient_inner() const { return *std::get<Quotient>(v).inner; }
  /// Triangle inequality certified for the parameters at hand.
  bool is_convex() const;

  static NormSpec lp(double p, std::optional<std::vector<double>> weight = {});
  static NormSpec sup();
  static NormSpec lorentz(double r, double tau,
                          std::optional<std::vector<double>> weight = {});
  static NormSpec orlicz(OrliczFunctionSpec phi,
                         std::optional<std::vector<double>> weight = {});
  static NormSpec variable_lp(std::vector<double> exponents);
  static NormSpec morrey(double p, PhiFunctionSpec phi,
                         std::shared_ptr<const BallFamily> family = nullptr);
  static NormSpec orlicz_morrey(OrliczFunctionSpec phi, PhiFunctionSpec varphi,
                                std::shared_ptr<const BallFamily> family = nullptr);
  static NormSpec quotient(NormSpec inner);
};

// --- individual evaluators ---------------------------------------------------

/// (sum |f|^p w mu)^(1/p) in log-stabilized arithmetic; p = inf is the sup.
double lp_norm(const WeightedSample& sample, double p,
               const std::vector<double>* weight = nullptr);
LogReal lp_norm_log(std::span<const LogReal> abs_values,
                    std::span<const LogReal> masses, double p,
                    const std::vector<double>* weight = nullptr);

/// Right-continuous nonincreasing rearrangement with respect to w dmu:
/// level[i] on [cuts[i], cuts[i+1]).
struct DecreasingRearrangement {
  std::vector<double> levels; // strictly decreasing
  std::vector<double> cuts;   // size levels.size()+1, cuts[0] = 0
  double operator()(double t) const;
  double total_mass() const { return cuts.empty() ? 0.0 : cuts.back(); }
};
DecreasingRearrangement decreasing_rearrangement(const WeightedSample& sample,
                                                 const std::vector<double>* weight = nullptr);

/// (integral_0^inf [t^(1/r) f*(t)]^tau dt/t)^(1/tau), exact on the steps.
double lorentz_norm(const WeightedSample& sample, double r, double tau,
                    const std::vector<double>* weight = nullptr);

/// Luxemburg functional: inf{lambda : integral Phi(|f|/lambda) w dmu <= 1}.
double luxemburg_norm(const WeightedSample& sample, const OrliczFunctionSpec& phi,
                      const std::vector<double>* weight = nullptr);

/// inf{lambda : integral (|f|/lambda)^{r(x)} dmu <= 1}.
double variable_lp_norm(const WeightedSample& sample,
                        std::span<const double> exponents);

/// sup over the family of (1/phi(B)) (avg_B |f|^p)^(1/p).
double morrey_norm(const FinitePointSpace& space, std::span<const double> values,
                   double p, const PhiFunctionSpec& phi, const BallFamily& family);

/// sup over the family of inf{lambda : avg_B Phi(|f|/lambda) <= varphi(B)}.
double orlicz_morrey_norm(const FinitePointSpace& space,
                          std::span<const double> values,
                          const OrliczFunctionSpec& phi,
                          const PhiFunctionSpec& varphi, const BallFamily& family);

/// inf over shifts a of the inner norm of f + a. Convex inner norms go
/// straight to golden-section; quasi-norms get a 10^4-point global grid
/// first, so the value is an upper bound certified at grid resolution.
/// Samples flagged infinite_measure pin a = 0.
struct QuotientResult {
  double value = 0.0;
  double minimizer = 0.0;
};
QuotientResult quotient_norm(const FinitePointSpace& space,
                             const WeightedSample& sample, const NormSpec& inner);

/// Young conjugate sup_u(tu - Phi(u)), maximized over a log-spaced u grid
/// with golden-section refinement.
OrliczFunctionSpec young_conjugate(const OrliczFunctionSpec& phi);

/// Dispatcher over the tagged union; Quotient wraps any non-quotient inner.
double evaluate_norm(const FinitePointSpace& space, const WeightedSample& sample,
                     const NormSpec& spec);
double evaluate_norm(const FinitePointSpace& space, std::span<const double> values,
                     const NormSpec& spec);

} // namespace homtype

#endif
