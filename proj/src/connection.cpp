#include "lagext/connection.hpp"

#include <algorithm>

#include "lagext/error.hpp"
#include "lagext/sampler.hpp"

namespace lagext {

FlatConnection::FlatConnection(LieAlgebra base)
    : base_(std::move(base)), gamma_(base_.dim() * base_.dim() * base_.dim()) {}

FlatConnection::FlatConnection(LieAlgebra base, std::vector<Rational> gamma, Params params)
    : base_(std::move(base)), gamma_(std::move(gamma)), params_(std::move(params)) {
  const std::size_t n = base_.dim();
  if (gamma_.size() != n * n * n) throw Error("connection tensor has the wrong size");
}

Vector FlatConnection::product(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!gamma(i, j, k).is_zero()) r[k] += xy * gamma(i, j, k);
    }
  }
  return r;
}

RatMatrix FlatConnection::left(const Vector& x) const {
  const std::size_t n = dim();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = product(x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

RatMatrix FlatConnection::right(const Vector& x) const {
  const std::size_t n = dim();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = product(unit_vector(n, j), x);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

// ---------------------------------------------------------------------------

LieAlgebra induced_bracket(const FlatConnection& c) {
  const std::size_t n = c.dim();
  std::vector<Rational> br(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        br[(i * n + j) * n + k] = c.gamma(i, j, k) - c.gamma(j, i, k);
  return LieAlgebra(c.base().name() + "[induced]", n, std::move(br));
}

ConnectionReport check_flat_torsion_free(const FlatConnection& c) {
  ConnectionReport rep;
  const std::size_t n = c.dim();
  const LieAlgebra& g = c.base();

  std::vector<RatMatrix> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = c.left(unit_vector(n, i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector t = left[i].column(j) - left[j].column(i) - g.bracket_basis(i, j);
      if (!is_zero(t)) rep.torsion.push_back({i, j, std::move(t)});
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatMatrix r = left[i] * left[j] - left[j] * left[i] - c.left(g.bracket_basis(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        Vector col = r.column(k);
        if (!is_zero(col)) rep.curvature.push_back({i, j, k, std::move(col)});
      }
    }

  // KV formulation, from the product alone.
  rep.kv1_holds = induced_bracket(c) == g;
  const auto e = [n](std::size_t i) { return unit_vector(n, i); };
  const auto assoc = [&c](const Vector& x, const Vector& y, const Vector& z) {
    return c.product(c.product(x, y), z) - c.product(x, c.product(y, z));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = assoc(e(i), e(j), e(k)) - assoc(e(j), e(i), e(k));
        if (!is_zero(d)) rep.kv2.push_back({i, j, k, std::move(d)});
      }
  return rep;
}

// ---------------------------------------------------------------------------

bool CompletenessEvidence::all_nilpotent() const {
  const auto yes = [](bool b) { return b; };
  return std::all_of(left_nilpotent.begin(), left_nilpotent.end(), yes) &&
         std::all_of(right_nilpotent.begin(), right_nilpotent.end(), yes) &&
         std::all_of(sample_left_nilpotent.begin(), sample_left_nilpotent.end(), yes);
}

CompletenessEvidence is_geodesically_complete(const FlatConnection& c, std::uint64_t seed) {
  if (!check_flat_torsion_free(c).ok())
    throw PreconditionError("completeness test needs a flat torsion-free connection");
  const std::size_t n = c.dim();
  CompletenessEvidence ev;
  ev.complete = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    const RatMatrix r = c.right(ei);
    ev.right_traces.push_back(trace(r));
    if (!ev.right_traces.back().is_zero()) ev.complete = false;
    ev.left_nilpotent.push_back(is_nilpotent(c.left(ei)));
    ev.right_nilpotent.push_back(is_nilpotent(r));
  }
  RationalSampler sampler(seed);
  for (std::size_t s = 0; s < kNilpotencyProbes; ++s) {
    Vector x = sampler.nonzero_vector(n);
    ev.sample_left_nilpotent.push_back(is_nilpotent(c.left(x)));
    ev.samples.push_back(std::move(x));
  }
  return ev;
}

// ---------------------------------------------------------------------------

RatMatrix DualRep::at(const Vector& x) const {
  const std::size_t n = dim();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) m = m + x[i] * rho[i];
  return m;
}

DualRep dual_matrices(const FlatConnection& c) {
  DualRep r{c.base(), {}, false};
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    r.rho.push_back(Rational(-1) * c.left(unit_vector(n, i)).transpose());
  r.representation_law = true;
  for (std::size_t i = 0; i < n && r.representation_law; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.at(c.base().bracket_basis(i, j)) != r.rho[i] * r.rho[j] - r.rho[j] * r.rho[i]) {
        r.representation_law = false;
        break;
      }
  return r;
}

DualRep dual_representation(const FlatConnection& c) {
  if (!check_flat_torsion_free(c).flat())
    throw PreconditionError("dual representation needs a flat connection");
  DualRep r = dual_matrices(c);
  if (!r.representation_law)
    throw IntegrityError("flat connection produced a dual map that is not a representation");
  return r;
}

} // namespace lagext
