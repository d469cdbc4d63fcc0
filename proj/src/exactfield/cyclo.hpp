#ifndef WINGER_EXACTFIELD_CYCLO_HPP
#define WINGER_EXACTFIELD_CYCLO_HPP

#include <compare>
#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exactfield/rational.hpp"

namespace winger::field {

/// Euler's totient.
int totient(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Computed once per conductor by exact division of x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n.
const std::vector<mpz_class> &cyclotomic_polynomial(int n);

/**
 * Element of the cyclotomic field Q(zeta_n), stored in the power basis
 * 1, zeta, ..., zeta^(phi(n)-1) modulo the n-th cyclotomic polynomial.
 *
 * The representation is canonical, so equality is coefficient equality.
 * Conductor 1 is Q itself and mixes with any conductor: the result of a
 * binary operation with one conductor-1 operand carries the other operand's
 * conductor. Operands of two different conductors > 1 raise MismatchError.
 */
class CycloNum
{
public:
  /// Zero of Q.
  CycloNum();
  CycloNum(const Rational &r); // NOLINT(google-explicit-constructor)
  CycloNum(std::int64_t v); // NOLINT(google-explicit-constructor)

  /// Reduces the polynomial sum raw[k] * zeta^k modulo Phi_n.
  static CycloNum make(int n, std::span<const Rational> raw);
  static CycloNum make(int n, std::initializer_list<Rational> raw);
  /// zeta_n^k for any integer k.
  static CycloNum zeta(int n, int k = 1);
  /// Rational r viewed in Q(zeta_n).
  static CycloNum rational(int n, const Rational &r);
  /// Parses the output of to_string() back into Q(zeta_n).
  static CycloNum parse(int n, std::string_view text);

  int conductor() const { return n_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The value as a rational; throws DomainError if it is not rational.
  Rational to_rational() const;

  /// Same number expressed with conductor n (only from conductor 1 or n).
  CycloNum promote(int n) const;

  CycloNum inverse() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  CycloNum galois(int k) const;
  /// Complex conjugation, zeta -> zeta^-1.
  CycloNum conj() const;

  /// Polynomial in "z" with highest power first, e.g. "1/2*z^3-1".
  std::string to_string() const;

  CycloNum &operator+=(const CycloNum &o);
  CycloNum &operator-=(const CycloNum &o);
  CycloNum &operator*=(const CycloNum &o);
  CycloNum &operator/=(const CycloNum &o) { return *this *= o.inverse(); }

  friend CycloNum operator+(CycloNum a, const CycloNum &b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum &b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum &b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum &b) { return a /= b; }
  CycloNum operator-() const;

  friend bool operator==(const CycloNum &a, const CycloNum &b);
  /// Arbitrary but fixed total order, for use as a map key.
  friend std::strong_ordering operator<=>(const CycloNum &a, const CycloNum &b);

private:
  CycloNum(int n, std::vector<Rational> coeffs);
  void reduce_from(std::vector<Rational> raw);

  int n_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const CycloNum &a);

// Named constants of Q(zeta_5).

/// zeta - zeta^2 - zeta^3 + zeta^4, the positive square root of 5 under the
/// embedding zeta -> exp(2 pi i / 5).
CycloNum sqrt5();
/// (1 + sqrt5) / 2 = -(zeta^2 + zeta^3).
CycloNum golden_ratio();

/// Decimal approximation produced by cyclo_embed.
struct ComplexApprox
{
  std::string real;
  std::string imag;
  std::complex<double> value;
};

/// Numeric value under zeta -> exp(2 pi i / n), with `digits` correct digits
/// after the decimal point. Diagnostic output only.
ComplexApprox cyclo_embed(const CycloNum &a, int digits);

} // namespace winger::field

#endif // WINGER_EXACTFIELD_CYCLO_HPP
