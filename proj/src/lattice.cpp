#include "latroute/lattice.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "latroute/errors.hpp"

namespace latroute {

namespace {

// Nudge before flooring so exact powers of (1+epsilon) land in the bucket
// they mathematically belong to.
constexpr double kFloorNudge = 1e-12;

// Relative slack below c_min still attributed to rounding.
constexpr double kLowerTolerance = 1e-9;

}  // namespace

LatticeSpec make_lattice_spec(double epsilon, const std::vector<double>& c_min,
                              const std::vector<double>& c_max, int gamma) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw Error("lattice: epsilon must be positive and finite");
  }
  if (gamma < 1) {
    throw Error("lattice: gamma must be at least 1");
  }
  if (c_min.empty() || c_min.size() != c_max.size()) {
    throw Error("lattice: c_min/c_max must be non-empty and equally sized");
  }

  LatticeSpec spec;
  spec.epsilon = epsilon;
  spec.c_min = c_min;
  spec.gamma = gamma;
  spec.dims.reserve(c_min.size());
  const double log_base = std::log1p(epsilon);
  for (std::size_t k = 0; k < c_min.size(); ++k) {
    if (!(c_min[k] > 0) || !(c_max[k] >= c_min[k])) {
      throw Error("lattice: need 0 < c_min <= c_max in every criterion");
    }
    const double span = std::log(static_cast<double>(gamma) * c_max[k] /
                                 c_min[k]);
    const double cells = std::floor(span / log_base + kFloorNudge) + 1.0;
    if (!(cells >= 1) ||
        cells > static_cast<double>(std::numeric_limits<std::int32_t>::max())) {
      throw Error("lattice: axis " + std::to_string(k) +
                  " needs too many buckets; increase epsilon");
    }
    spec.dims.push_back(static_cast<std::int32_t>(cells));
  }
  return spec;
}

LatticeIndex bucket_index(const CriteriaVector& criteria,
                          const LatticeSpec& spec) {
  if (criteria.size() != spec.c_min.size()) {
    throw Error("bucket_index: criteria dimension mismatch");
  }
  LatticeIndex coords(criteria.size());
  const double log_base = std::log1p(spec.epsilon);
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const double ratio = criteria[k] / spec.c_min[k];
    if (!(ratio >= 1.0 - kLowerTolerance)) {
      throw Error("bucket_index: criterion " + std::to_string(k + 1) +
                  " below the lattice lower bound (no walk can sum to " +
                  std::to_string(criteria[k]) + ")");
    }
    double c = std::floor((std::log(criteria[k]) - std::log(spec.c_min[k])) /
                              log_base +
                          kFloorNudge);
    if (c < 0) {
      c = 0;
    }
    const double top = static_cast<double>(spec.dims[k] - 1);
    if (c > top) {
      c = top;
    }
    coords[k] = static_cast<std::int32_t>(c);
  }
  return coords;
}

std::uint64_t lattice_size(const LatticeSpec& spec) {
  std::uint64_t size = 1;
  for (const std::int32_t dim : spec.dims) {
    const auto d = static_cast<std::uint64_t>(dim);
    if (size > std::numeric_limits<std::uint64_t>::max() / d) {
      throw Error("lattice size overflows 64 bits; increase epsilon");
    }
    size *= d;
  }
  return size;
}

std::uint64_t flat_index(const LatticeSpec& spec, const LatticeIndex& index) {
  std::uint64_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    flat = flat * static_cast<std::uint64_t>(spec.dims[k]) +
           static_cast<std::uint64_t>(index[k]);
  }
  return flat;
}

double epsilon_for_target(double delta, double beta, int d, int gamma) {
  if (!(delta > 0) || !(beta > 0) || d < 1 || gamma < 1) {
    throw Error("epsilon_for_target: all inputs must be positive");
  }
  const double exponent = beta * static_cast<double>(d) *
                          static_cast<double>(gamma);
  return std::expm1(std::log1p(delta) / exponent);
}

}  // namespace latroute
