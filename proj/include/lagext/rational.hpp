#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lagext {

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}

  /// Throws Error when den == 0.
  Rational(long num, long den);

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign, decimal digits).
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  /// "p" or "p/q".
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  /// Throws Error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (throws on 0^-k).
  [[nodiscard]] Rational pow(long exponent) const;

private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace lagext
