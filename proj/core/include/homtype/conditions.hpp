#ifndef HOMTYPE_CONDITIONS_HPP
#define HOMTYPE_CONDITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "homtype/space.hpp"

namespace homtype {

enum class ConditionKind { Doubling, WRD, WMD };
enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(ConditionKind k);
std::string to_string(Verdict v);

/// Per-radius ratio profile of one measure condition over a finite window.
/// The asymptotic liminf of the definitions is replaced by the infimum over
/// the declared window; the verdict is a window verdict, nothing stronger.
struct ConditionReport {
  ConditionKind condition;
  std::vector<std::pair<LogReal, double>> ratios; // (radius, ratio)
  double window_inf = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::Inconclusive;

  double lambda = 0.0;          // WRD dilation factor (0 when unused)
  double l_mu_estimate = 0.0;   // doubling: max ratio over the window
  double upper_dimension = 0.0; // log2(l_mu_estimate)
  std::string base_point;
  std::pair<LogReal, LogReal> window;

  void finalize(double thr); // fills window_inf and the verdict
};

inline constexpr double kDefaultWrdThreshold = 1.0 + 1e-6;
inline constexpr double kDefaultWmdThreshold = 1e-3;

std::vector<LogReal> log_spaced_radii(const LogReal& lo, const LogReal& hi,
                                      int count);

/// mu(B(x,2r))/mu(B(x,r)) profile; l_mu_estimate is the max ratio and the
/// upper dimension is log2 of it.
ConditionReport doubling_profile(const FinitePointSpace& space, PointId x,
                                 const std::vector<LogReal>& radii);
ConditionReport doubling_profile(const IntervalDomain1D& ambient, double x,
                                 const std::vector<LogReal>& radii);

/// mu(B(x0,lambda r))/mu(B(x0,r)) over the window. Finite spaces are sampled
/// at log-midpoints between consecutive profile breakpoints (the distances
/// from x0 and those divided by lambda), which makes window_inf exact for the
/// piecewise-constant profile; continuous domains use a 32/decade log grid.
ConditionReport check_wrd(const FinitePointSpace& space, double lambda,
                          std::pair<LogReal, LogReal> window,
                          std::optional<PointId> base_point = std::nullopt,
                          double threshold = kDefaultWrdThreshold);
ConditionReport check_wrd(const IntervalDomain1D& ambient, double lambda,
                          std::pair<LogReal, LogReal> window, double base_point = 0.0,
                          double threshold = kDefaultWrdThreshold);

/// mu(B(x0,r) n Omega)/mu(B(x0,r)) over the window (or explicit radii).
ConditionReport check_wmd(const FinitePointSpace& space,
                          const std::vector<PointId>& subset, PointId base_point,
                          std::pair<LogReal, LogReal> window,
                          double threshold = kDefaultWmdThreshold);
ConditionReport check_wmd(const IntervalDomain1D& ambient,
                          const IntervalDomain1D& subset, double base_point,
                          std::pair<LogReal, LogReal> window,
                          double threshold = kDefaultWmdThreshold);
ConditionReport check_wmd_at_radii(const IntervalDomain1D& ambient,
                                   const IntervalDomain1D& subset,
                                   double base_point,
                                   const std::vector<LogReal>& radii,
                                   double threshold = kDefaultWmdThreshold);

/// Searches a lambda grid for one dilation factor under which every point of
/// the space passes the WRD window check (the base-point robustness that a
/// single passing point implies). Moving the base point from x0 to x shifts
/// the usable radius range, so each point is checked on the window
/// [max(r_lo, 2 K0 rho(x, x0)), r_hi]; points whose shifted window is empty
/// cannot be resolved at this truncation and are reported, not failed.
struct WrdSweepResult {
  std::optional<double> lambda; // first grid value passing at every point
  std::vector<std::pair<double, double>> per_lambda; // (lambda, min window_inf)
  std::size_t unresolvable = 0; // points with an empty shifted window
};
WrdSweepResult wrd_basepoint_sweep(const FinitePointSpace& space,
                                   const std::vector<double>& lambda_grid,
                                   std::pair<LogReal, LogReal> window,
                                   PointId x0 = 0,
                                   double threshold = kDefaultWrdThreshold);

} // namespace homtype

#endif
