#ifndef HOMTYPE_SPACE_HPP
#define HOMTYPE_SPACE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homtype/log_real.hpp"

namespace homtype {

using PointId = std::size_t;

/// Finite quasi-metric measure space: points with pairwise distances rho and
/// point masses mu({x}), both extended-range. Immutable after construction;
/// all queries are const and thread-safe.
///
/// Two storage modes share one interface. Dense mode keeps the full pairwise
/// table (general metrics, ingested from files). Line mode stores one
/// coordinate per point with rho(x,y) = |pos_x - pos_y|; ball measures then
/// resolve through a log-domain segment tree in O(log n), which is what makes
/// 10^5-point geometric spaces affordable.
class FinitePointSpace {
public:
  static FinitePointSpace dense(std::vector<LogReal> distances_row_major,
                                std::vector<LogReal> masses, double k0,
                                std::vector<std::string> labels = {});
  static FinitePointSpace line(std::vector<LogReal> positions,
                               std::vector<LogReal> masses,
                               std::vector<std::string> labels = {});

  std::size_t size() const { return masses_.size(); }
  double k0() const { return k0_; }
  bool is_line_embedded() const { return !positions_.empty(); }

  LogReal distance(PointId i, PointId j) const;
  const LogReal& mass(PointId i) const { return masses_[i]; }
  const std::vector<LogReal>& masses() const { return masses_; }
  LogReal total_mass() const { return total_mass_; }
  const std::string& label(PointId i) const { return labels_[i]; }

  /// Coordinate of point i (line mode only).
  const LogReal& position(PointId i) const { return positions_[i]; }

  /// mu of the open ball {y : rho(center,y) < radius}.
  LogReal ball_measure(PointId center, const LogReal& radius) const;

  /// Sorted distinct nonzero distances from `center` to the other points.
  std::vector<LogReal> distances_from(PointId center) const;

  /// Point whose coordinate/label matches `value` within 1e-12 relative.
  std::optional<PointId> find_point(const LogReal& value) const;

private:
  FinitePointSpace() = default;
  void build_line_index();

  std::vector<LogReal> distances_; // dense mode, row-major n*n
  std::vector<LogReal> positions_; // line mode, arbitrary order
  std::vector<LogReal> masses_;
  std::vector<std::string> labels_;
  LogReal total_mass_;
  double k0_ = 1.0;

  // line mode: points sorted by coordinate and a segment tree of log-domain
  // mass sums (range queries stay addition-only, no cancelling subtraction)
  std::vector<std::uint32_t> order_;   // sorted index -> point id
  std::vector<std::uint32_t> rank_;    // point id -> sorted index
  std::vector<LogReal> seg_;           // segment tree over masses in order_
  std::size_t seg_leaves_ = 0;
  LogReal range_mass(std::size_t lo, std::size_t hi) const; // [lo,hi) in order_
};

/// Validates symmetry, positivity and the quasi-triangle inequality; infers
/// the minimal admissible K0 when none is given (all triples up to n = 512,
/// random triples beyond).
FinitePointSpace build_finite_space(const std::vector<std::vector<double>>& distances,
                                    const std::vector<double>& masses,
                                    std::optional<double> k0 = std::nullopt);
FinitePointSpace build_finite_space_log(std::vector<LogReal> distances_row_major,
                                        std::vector<LogReal> masses,
                                        std::optional<double> k0 = std::nullopt);

/// Points {2^(2^k)}_{k=1..k_max} on the line with mu({2^(2^k)}) = 2^k.
FinitePointSpace double_exponential_space(int k_max);

/// Points {2^k}_{k=1..k_max} on the line with mu({2^k}) = 2^k.
FinitePointSpace geometric_space(int k_max);

LogReal mutual_min_measure(const FinitePointSpace& space, PointId x, PointId y);
LogReal diameter(const FinitePointSpace& space);

/// Sum values(x) * mu({x}) with a fixed-order tree reduction; throws
/// OverflowError instead of saturating when the total leaves double range.
double integrate(const FinitePointSpace& space, std::span<const double> values);

/// sup over distinct pairs of |f(x)-f(y)| / rho(x,y)^beta.
double holder_seminorm(const FinitePointSpace& space,
                       std::span<const double> values, double beta);

/// Union of disjoint open intervals on the line with Lebesgue measure.
/// whole_line marks the ambient space as all of R, with complements handled
/// in closed form. Endpoints may be +-inf only for subset (WMD) use.
struct IntervalDomain1D {
  std::vector<std::pair<double, double>> intervals; // sorted, disjoint
  bool whole_line = false;

  void validate() const;
  double total_length() const;
  LogReal diameter() const;
  /// Lebesgue measure of the open ball (center-r, center+r) intersected with
  /// the ambient space (all of R when whole_line, the union otherwise).
  double ball_measure(double center, double radius) const;
  /// Lebesgue measure of (center-r, center+r) intersected with the union.
  double ball_intersection(double center, double radius) const;
  bool contains(double x) const;
};

/// Piecewise-constant function: values[i] on (breakpoints[i-1], breakpoints[i]),
/// with values.front() left of all breakpoints and values.back() right of all.
struct StepFunction1D {
  std::vector<double> breakpoints; // sorted
  std::vector<double> values;      // size = breakpoints.size() + 1

  void validate() const;
  double operator()(double x) const;
  double max_abs() const;
  /// closed-form (integral |f|^p dx over domain)^(1/p)
  double lp_norm(const IntervalDomain1D& domain, double p) const;
};

/// Universal input of the norm evaluators: sampled |values| with positive
/// masses. infinite_measure marks samples standing in for a space of infinite
/// measure (whole-line discretizations), which pins quotient shifts to 0.
struct WeightedSample {
  std::vector<double> values;
  std::vector<LogReal> masses;
  bool infinite_measure = false;

  void validate() const;
  std::size_t size() const { return values.size(); }
};

struct QuadratureRule {
  int nodes_per_piece = 64;  // target Gauss-Legendre nodes per piece
  double grading = 2.0;      // panel clustering exponent toward breakpoints
  int panel_order = 4;       // GL order within each panel
  bool split_at_function_breakpoints = true;
};

/// Discretizes (domain, f) into quadrature nodes with weights as masses. The
/// returned space carries Euclidean distances so every finite-space evaluator
/// applies unchanged.
std::pair<FinitePointSpace, WeightedSample>
sample_1d(const IntervalDomain1D& domain, const StepFunction1D& f,
          const QuadratureRule& rule);

/// Nodes/weights of the graded composite rule on (a,b) without building a
/// space (used by the MS far-field machinery).
void graded_panels_1d(double a, double b, const QuadratureRule& rule,
                      std::vector<double>& nodes, std::vector<double>& weights);

} // namespace homtype

#endif
