#pragma once

#include <cstdint>
#include <random>

#include "lagext/linalg.hpp"

namespace lagext {

/// Deterministic source of small rationals: numerators in {-2..2},
/// denominators in {1,2,3}. Only raw mt19937_64 output is used (no
/// std::*_distribution), so sequences are identical on every platform.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();
  Rational next_nonzero();
  Vector vector(std::size_t n);
  Vector nonzero_vector(std::size_t n);
  /// Uniform-ish index in [0, bound).
  std::size_t index(std::size_t bound);

private:
  std::mt19937_64 engine_;
};

} // namespace lagext
