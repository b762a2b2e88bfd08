#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lagext/rational.hpp"

namespace lagext {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
/// v += s * w
void axpy(Vector& v, const Rational& s, std::span<const Rational> w);

/// Dense row-major matrix of rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] Vector column(std::size_t c) const;

  [[nodiscard]] RatMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend Vector operator*(const RatMatrix& a, std::span<const Rational> v);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Columns are scanned left to right and the
/// pivot row is the lowest-index remaining row with a nonzero entry.
struct Echelon {
  RatMatrix reduced;              // full shape; zero rows last
  std::vector<std::size_t> pivots; // pivot column of row r, ascending
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Linear subspace of K^ambient_dim, kept in reduced echelon form.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  /// Span of arbitrary (possibly dependent) vectors.
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  static Subspace whole(std::size_t n);
  /// span(e_i : i in indices)
  static Subspace coordinate(std::size_t n, std::initializer_list<std::size_t> indices);
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Subtracts basis multiples so the result vanishes on every pivot column.
  [[nodiscard]] Vector reduce(Vector v) const;
  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  [[nodiscard]] Vector coordinates(const Vector& v) const;
  /// Coordinates outside the pivot set, ascending.
  [[nodiscard]] std::vector<std::size_t> non_pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// {v : M v = 0}, dimension cols - rank(M).
Subspace kernel_basis(const RatMatrix& m);
/// Column space of M.
Subspace image(const RatMatrix& m);

/// Some x with M x = b, or nullopt when inconsistent. Free variables are
/// set to zero, so the result is the pivot-supported solution.
std::optional<Vector> solve_linear(const RatMatrix& m, std::span<const Rational> b);

/// Representatives of a basis of W/V, each reduced against V and lying in W.
/// Throws PreconditionError unless V is a subspace of W.
std::vector<Vector> quotient_basis(const Subspace& w, const Subspace& v);

/// Throws PreconditionError when singular.
RatMatrix inverse(const RatMatrix& m);

/// M^k == 0 for k = rows (square matrices only).
bool is_nilpotent(const RatMatrix& m);
Rational trace(const RatMatrix& m);

} // namespace lagext
