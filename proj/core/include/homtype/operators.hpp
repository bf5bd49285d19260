#ifndef HOMTYPE_OPERATORS_HPP
#define HOMTYPE_OPERATORS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "homtype/space.hpp"

namespace homtype {

struct NormSpec; // norms.hpp

/// One open ball of the canonical enumeration: the first `count` points of
/// the center's distance-sorted order.
struct Ball {
  PointId center;
  LogReal radius;
  std::uint32_t count;
};

/// Every distinct open ball of a finite space, realized once per (center,
/// membership set). Per-center prefix accumulations make ball averages O(1);
/// prefixes are built by running log-sum-exp, so no cancelling subtraction
/// enters any measure.
class BallFamily {
public:
  static BallFamily canonical(const FinitePointSpace& space);
  static BallFamily from_balls(const FinitePointSpace& space,
                               const std::vector<std::pair<PointId, LogReal>>& balls);

  std::size_t size() const { return balls_.size(); }
  const std::vector<Ball>& balls() const { return balls_; }
  const Ball& ball(std::size_t b) const { return balls_[b]; }

  LogReal measure(std::size_t b) const {
    return prefix_mass_[balls_[b].center][balls_[b].count];
  }
  bool contains(std::size_t b, PointId x) const {
    return rank_[balls_[b].center][x] < balls_[b].count;
  }
  std::span<const std::uint32_t> members(std::size_t b) const {
    const auto& ord = order_[balls_[b].center];
    return {ord.data(), balls_[b].count};
  }

  /// mu-average over ball b of per-point LogReal values (given with the mass
  /// already multiplied in by value_times_mass).
  LogReal average(std::size_t b, std::span<const LogReal> value_times_mass) const;

  const std::vector<std::uint32_t>& center_order(PointId c) const { return order_[c]; }
  const std::vector<LogReal>& center_prefix_mass(PointId c) const {
    return prefix_mass_[c];
  }
  std::uint32_t rank(PointId center, PointId x) const { return rank_[center][x]; }
  /// Measure of the smallest family ball centered at c containing its first
  /// k points in distance order (k rounded up to the next enumerated level).
  LogReal smallest_level_measure(PointId c, std::uint32_t min_count) const;

private:
  std::vector<Ball> balls_;
  std::vector<std::vector<std::uint32_t>> order_;  // per center
  std::vector<std::vector<std::uint32_t>> rank_;   // per center: point -> pos
  std::vector<std::vector<LogReal>> prefix_mass_;  // per center, size n+1
  std::vector<std::vector<std::uint32_t>> levels_; // per center: ball counts
};

/// Hardy-Littlewood maximal function: for each x the max over family balls
/// containing x of the mu-average of |f|.
std::vector<double> maximal_function(const FinitePointSpace& space,
                                     std::span<const double> values,
                                     const BallFamily& family);

/// A_1 quotient (p = 1) or A_p product (p > 1), maximized over the family.
double muckenhoupt_constant(const FinitePointSpace& space,
                            std::span<const double> weight, double p,
                            const BallFamily& family);

/// Operator-norm estimate of the maximal operator on the given space norm.
/// lower is a running max of norm(Mf)/norm(f) over ball indicators plus
/// `trials` seeded random functions; upper is a Schur bound through the
/// dominating kernel m(x,y) = 1/min{mu(B) : B in family, x,y in B}, available
/// for unweighted Lp with p >= 1 (and sup norm) only.
struct OperatorNormEstimate {
  double lower = 0.0;
  std::optional<double> upper;
};
OperatorNormEstimate maximal_operator_norm(const FinitePointSpace& space,
                                           const NormSpec& spec, int trials,
                                           std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Truncated Rubio de Francia series sum_{k<=k_max} M^k g / (2 m_norm)^k with
/// M^0 g = |g|. m_norm must dominate the true operator norm; the iteration
/// itself certifies this by checking norm(M^{k+1}g) <= m_norm norm(M^k g).
std::vector<double> rubio_de_francia(const FinitePointSpace& space,
                                     std::span<const double> g,
                                     const NormSpec& spec, double m_norm,
                                     int k_max);

} // namespace homtype

#endif
