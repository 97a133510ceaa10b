#pragma once

#include <cstdint>
#include <vector>

#include "latroute/graph.hpp"

namespace latroute {

// Bucket coordinates of a path's criteria point, one entry per criterion.
using LatticeIndex = std::vector<std::int32_t>;

/// Log-scale discretization of criteria space. Coordinate k covers
/// [c_min_k, gamma * c_max_k] in buckets that grow geometrically by a factor
/// of (1 + epsilon); dims_k is the bucket count of that axis.
struct LatticeSpec {
  double epsilon = 0;
  std::vector<double> c_min;
  int gamma = 0;
  std::vector<std::int32_t> dims;
};

/// Sizes the lattice for walks of at most gamma hops given per-criterion
/// minimum and maximum edge weights. Throws Error on non-positive epsilon,
/// gamma, or bounds.
LatticeSpec make_lattice_spec(double epsilon, const std::vector<double>& c_min,
                              const std::vector<double>& c_max, int gamma);

/// Maps a criteria vector to its bucket:
///   coords_k = floor((ln l_k - ln c_min_k) / ln(1+epsilon) + 1e-12)
/// clamped into [0, dims_k - 1]. The additive nudge keeps values that are
/// exact powers of (1+epsilon) from landing one bucket low; the clamp
/// absorbs rounding past either end. Two vectors in the same bucket differ
/// per coordinate by at most a factor of (1+epsilon).
///
/// Throws Error when some l_k falls below c_min_k by more than relative
/// 1e-9: no walk can produce such a sum.
LatticeIndex bucket_index(const CriteriaVector& criteria,
                          const LatticeSpec& spec);

/// Total bucket count, the product of dims. Throws Error when the product
/// overflows 64 bits (pick a larger epsilon).
std::uint64_t lattice_size(const LatticeSpec& spec);

/// Mixed-radix flattening of a bucket index, in [0, lattice_size).
std::uint64_t flat_index(const LatticeSpec& spec, const LatticeIndex& index);

/// The epsilon whose worst-case factor (1+epsilon)^(beta*d*gamma) equals
/// exactly 1+delta.
double epsilon_for_target(double delta, double beta, int d, int gamma);

}  // namespace latroute
