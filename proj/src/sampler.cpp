#include "lagext/sampler.hpp"

namespace lagext {

Rational RationalSampler::next() {
  const auto num = static_cast<long>(engine_() % 5) - 2;
  const auto den = static_cast<long>(engine_() % 3) + 1;
  return Rational(num, den);
}

Rational RationalSampler::next_nonzero() {
  while (true) {
    Rational r = next();
    if (!r.is_zero()) return r;
  }
}

Vector RationalSampler::vector(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = next();
  return v;
}

Vector RationalSampler::nonzero_vector(std::size_t n) {
  if (n == 0) return {};
  while (true) {
    Vector v = vector(n);
    if (!is_zero(v)) return v;
  }
}

std::size_t RationalSampler::index(std::size_t bound) {
  return bound == 0 ? 0 : static_cast<std::size_t>(engine_() % bound);
}

} // namespace lagext
