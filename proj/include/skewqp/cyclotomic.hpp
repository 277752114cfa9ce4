#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace skewqp {

using Rational = mpq_class;
using Integer = mpz_class;

int euler_totient(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first.  The result is monic of degree euler_totient(n).
std::vector<Integer> cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_n), stored as the canonical
/// residue modulo the n-th cyclotomic polynomial.  Coefficients are exact
/// arbitrary-precision rationals; two elements compare equal iff their
/// reduced coefficient vectors are identical.  Every element carries its
/// order n, and arithmetic between different orders throws
/// std::invalid_argument rather than embedding one field in the other.
///
/// Immutable value semantics: all operators return fresh values.
class Cyclotomic {
public:
  explicit Cyclotomic(int order);                   // zero of Q(zeta_order)
  Cyclotomic(int order, const Rational& constant);  // rational constant

  static Cyclotomic zero(int order) { return Cyclotomic(order); }
  static Cyclotomic one(int order) { return Cyclotomic(order, 1); }
  /// zeta_n^k, k taken modulo n.
  static Cyclotomic zeta_pow(int order, long k);
  /// Reduce an arbitrary polynomial in zeta (constant term first).
  static Cyclotomic from_poly(int order, std::vector<Rational> poly);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True iff the element lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  const Rational& rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);
  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inv() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Human-readable form, e.g. "1 - 2/3*z^2" with z = zeta_n.
  std::string str() const;

private:
  void check_order(const Cyclotomic& rhs) const;

  int order_ = 1;
  std::vector<Rational> coeffs_;  // length euler_totient(order_)
};

}  // namespace skewqp
