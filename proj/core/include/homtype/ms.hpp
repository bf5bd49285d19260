#ifndef HOMTYPE_MS_HPP
#define HOMTYPE_MS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "homtype/norms.hpp"
#include "homtype/space.hpp"

namespace homtype {

/// Restriction of the inner integral of the Gagliardo kernel.
struct RegionAll {};
struct RegionInsideBall { LogReal radius; };
struct RegionOutsideBall { LogReal radius; };
struct RegionSubsetPoints { std::vector<PointId> points; };
struct RegionSubset1D { IntervalDomain1D domain; };
using RegionSpec = std::variant<RegionAll, RegionInsideBall, RegionOutsideBall,
                                RegionSubsetPoints, RegionSubset1D>;

enum class ScanTrend { DecreasingToZero, BoundedBracket, Increasing, Inconclusive };
std::string to_string(ScanTrend t);

struct Extrapolation {
  double limit = 0.0;
  double spread = 0.0; // relative disagreement of the two Aitken estimates
  bool reliable = false;
};

/// F(s) over a decreasing s-grid with the computable surrogate of the
/// liminf/limsup sandwich: the (min,max) bracket of F/reference over the
/// smallest-s half of the grid.
struct MSScanResult {
  double q = 1.0;
  std::vector<double> grid;   // strictly decreasing s values
  std::vector<double> values; // F(s)
  double reference_norm = 0.0;
  std::pair<double, double> ratio_bracket{0.0, 0.0};
  ScanTrend trend = ScanTrend::Inconclusive;
  std::optional<Extrapolation> extrapolation;
};

/// Shared scan assembly: bracket over the tail half, trend classification,
/// Aitken extrapolation of the last points.
MSScanResult assemble_scan(double q, const std::vector<double>& grid,
                           const std::vector<double>& values, double reference,
                           double bounded_ratio_cap = 50.0);

/// {10^-1, 10^-1.5, ..., 10^-5}
std::vector<double> default_s_grid();

// --- finite spaces -----------------------------------------------------------

/// G_s(f)(x) = sum_{y != x} |f(x)-f(y)|^q mu({y}) / (U(x,y) rho(x,y)^{sq}),
/// log-stabilized; the diagonal is skipped (its contribution is zero).
LogReal gagliardo_kernel(const FinitePointSpace& space,
                         std::span<const double> values, double q, double s,
                         PointId x, const RegionSpec& region = RegionAll{});

/// G_s at every point, parallel over x.
std::vector<LogReal> gagliardo_kernel_all(const FinitePointSpace& space,
                                          std::span<const double> values,
                                          double q, double s,
                                          const RegionSpec& region = RegionAll{});

/// F(s) = s^(1/q) * || G_s^(1/q) ||_spec. A Quotient spec contributes its
/// inner norm here (the quotient applies to the reference norm only).
double ms_value(const FinitePointSpace& space, std::span<const double> values,
                double q, const NormSpec& spec, double s,
                const RegionSpec& region = RegionAll{});

/// || G_s^(1/q) ||_spec without the s^(1/q) factor (the fractional Sobolev
/// seminorm at smoothness s).
double sobolev_seminorm(const FinitePointSpace& space,
                        std::span<const double> values, double q,
                        const NormSpec& spec, double s,
                        const RegionSpec& region = RegionAll{});

MSScanResult ms_scan(const FinitePointSpace& space, std::span<const double> values,
                     double q, const NormSpec& spec,
                     const std::vector<double>& s_grid,
                     const RegionSpec& region = RegionAll{});

/// s * integral over the complement of B(x, s^(-1/q)) of dmu / (U rho^{sq}).
double tail_mass(const FinitePointSpace& space, PointId x, double q, double s);
/// Closed form of the same quantity on the whole line: s^s / q.
double tail_mass_whole_line(double q, double s);

// --- one-dimensional domains -------------------------------------------------

/// Piecewise power weight w(x) = coef |x - pole|^(-a) per region; closed-form
/// integrals and a known far-field law keep whole-line norms exact.
struct Weight1D {
  struct Piece {
    double lo, hi;
    double coef = 1.0;
    double pole = 0.0;
    double a = 0.0;
  };
  std::vector<Piece> pieces; // sorted, covering the line

  double operator()(double x) const;
  double integral(double lo, double hi) const;
  const Piece& far_right() const { return pieces.back(); }
  const Piece& far_left() const { return pieces.front(); }

  static Weight1D one();
  /// (M 1_(e1,e2))^delta on R, an A_1 weight with closed form.
  static Weight1D maximal_indicator_power(double e1, double e2, double delta);
};

struct Ms1DOptions {
  QuadratureRule rule;
  const Weight1D* weight = nullptr; // applies to Lp/Lorentz/Orlicz specs
  double far_factor = 1e4;          // far-field quadrature reach, in hull widths
};

/// Inner integral at x over the region, assembled from closed-form piece
/// antiderivatives with U(x,y) = 2|x-y| (the ambient space is R; a bounded
/// `domain` acts as the restriction Omega of both integrals).
double gagliardo_kernel_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                           double q, double s, double x,
                           const RegionSpec& region = RegionAll{});

/// F(s) through the discretize-then-norm pipeline: graded quadrature nodes
/// for the outer norm, log-panel coverage of the whole-line far field, and an
/// analytic power-law tail supplement beyond it for Lp specs.
double ms_value_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                   double q, const NormSpec& spec, double s,
                   const RegionSpec& region = RegionAll{},
                   const Ms1DOptions& options = {});

MSScanResult ms_scan_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
                        double q, const NormSpec& spec,
                        const std::vector<double>& s_grid,
                        const RegionSpec& region = RegionAll{},
                        const Ms1DOptions& options = {});

/// Closed-form reference norm of a step function for Lp specs (weighted via
/// Weight1D), with the quotient infimum resolved exactly where required.
double step_reference_norm(const IntervalDomain1D& domain, const StepFunction1D& f,
                           const NormSpec& spec, const Weight1D* weight = nullptr);

/// Exact s * double integral of |f(x)-f(y)| / (2 |x-y|^(1+s)) over
/// domain x domain via piece-pair antiderivatives; the independent oracle for
/// ms_value_1d with q = 1 and spec = L1.
double exact_ms_step_1d(const StepFunction1D& f, double s,
                        const IntervalDomain1D& domain);

} // namespace homtype

#endif
