#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilspec/rational.hpp"

namespace nilspec {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  /// x^k
  static Poly monomial(unsigned k, const Rat& c = 1);
  /// prod (x - r)
  static Poly from_roots(std::span<const Rat> roots);
  /// Coefficients given highest degree first, as typed on a command line.
  static Poly from_highest_first(std::span<const Rat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;
  int sign_at(const Rat& x) const;
  /// Sign of p(x) as x -> +inf (or -inf when `negative_infinity`).
  int sign_at_infinity(bool negative_infinity) const;

  Poly derivative() const;
  /// x^deg p(1/x): coefficient sequence reversed.
  Poly reverse() const;
  Poly monic() const;
  /// p(-x)
  Poly negate_variable() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * Rat(-1); }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable, highest degree first, e.g. `x^2 - 5x + 6`.
  std::string to_string(char var = 'x') const;
  /// Comma list, highest degree first, e.g. `1,-5,6`.
  std::string to_coefficient_list() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), monic.
Poly square_free_part(const Poly& p);

/// Exact quotient; throws std::domain_error when `den` does not divide `num`.
Poly exact_divide(const Poly& num, const Poly& den);

}  // namespace nilspec
