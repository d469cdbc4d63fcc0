#ifndef WINGER_INVARIANTS_POLY3_HPP
#define WINGER_INVARIANTS_POLY3_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "exactfield/cyclo.hpp"
#include "linalg/matrix.hpp"

namespace winger::inv {

using field::CycloNum;
using field::Rational;
using linalg::MatrixF;

using Exponent = std::array<int, 3>;

/// Polynomial in z0, z1, z2 over a cyclotomic field. Zero coefficients are
/// never stored.
class Poly3
{
public:
  Poly3() = default;
  Poly3(const CycloNum &c); // NOLINT(google-explicit-constructor)

  static Poly3 variable(int i);
  static Poly3 monomial(const Exponent &e, const CycloNum &c = CycloNum(1));
  /// a z0 + b z1 + c z2.
  static Poly3 linear(const CycloNum &a, const CycloNum &b, const CycloNum &c);

  const std::map<Exponent, CycloNum> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  CycloNum coefficient(const Exponent &e) const;
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  CycloNum evaluate(const CycloNum &x0, const CycloNum &x1, const CycloNum &x2) const;
  Poly3 derivative(int i) const;
  Poly3 pow(int k) const;

  Poly3 &operator+=(const Poly3 &o);
  Poly3 &operator-=(const Poly3 &o);
  Poly3 &operator*=(const CycloNum &s);
  friend Poly3 operator+(Poly3 a, const Poly3 &b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3 &b) { return a -= b; }
  friend Poly3 operator*(Poly3 a, const CycloNum &s) { return a *= s; }
  friend Poly3 operator*(const CycloNum &s, Poly3 a) { return a *= s; }
  friend Poly3 operator*(const Poly3 &a, const Poly3 &b);
  Poly3 operator-() const;
  friend bool operator==(const Poly3 &, const Poly3 &) = default;

  /// Terms in lexicographic order of (e0, e1, e2), highest first, e.g.
  /// "[1/2]*z0*z1 + [1]*z2^2".
  std::string to_string() const;

private:
  void add_term(const Exponent &e, const CycloNum &c);
  std::map<Exponent, CycloNum> terms_;
};

std::ostream &operator<<(std::ostream &os, const Poly3 &p);

/// Exponents of the degree-d monomials, lexicographically highest first.
std::vector<Exponent> monomials(int d);
/// Number of degree-d monomials in three variables.
std::size_t monomial_count(int d);

/// Memoized images of monomials under the substitution z -> M z.
class Substitution
{
public:
  explicit Substitution(const MatrixF &m);
  const Poly3 &image(const Exponent &e);
  Poly3 apply(const Poly3 &f);

private:
  std::array<Poly3, 3> forms_;
  std::map<Exponent, Poly3> cache_;
};

/// f(M z): each variable z_i is replaced by the linear form sum_j M(i,j) z_j.
Poly3 act_on_poly(const MatrixF &m, const Poly3 &f);

} // namespace winger::inv

#endif // WINGER_INVARIANTS_POLY3_HPP
