#ifndef HOMTYPE_REDUCE_HPP
#define HOMTYPE_REDUCE_HPP

#include <span>
#include <vector>

#include "homtype/log_real.hpp"

namespace homtype {

/// Fixed-order pairwise tree sum. The bracketing depends only on the element
/// count, so results are bit-identical across runs and thread counts.
template <typename T>
T tree_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() == 1) return v[0];
  std::vector<T> level(v.begin(), v.end());
  while (level.size() > 1) {
    std::size_t half = level.size() / 2;
    for (std::size_t i = 0; i < half; ++i)
      level[i] = level[2 * i] + level[2 * i + 1];
    if (level.size() % 2 == 1) {
      level[half] = level.back();
      level.resize(half + 1);
    } else {
      level.resize(half);
    }
  }
  return level[0];
}

inline double tree_sum(std::span<const double> v) { return tree_sum<double>(v); }
inline LogReal tree_sum(std::span<const LogReal> v) { return tree_sum<LogReal>(v); }

} // namespace homtype

#endif
