#ifndef WINGER_INVARIANTS_MOLIEN_HPP
#define WINGER_INVARIANTS_MOLIEN_HPP

#include <string>
#include <vector>

#include "invariants/poly3.hpp"

namespace winger::inv {

/// Truncated power series c_0 + c_1 T + ... + c_N T^N with rational
/// coefficients.
class PowSeries
{
public:
  PowSeries() = default;
  explicit PowSeries(std::vector<Rational> coeffs);

  /// num / den expanded to degree n; den(0) must be nonzero.
  static PowSeries quotient(const std::vector<Rational> &num, const std::vector<Rational> &den, int n);

  int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  const Rational &operator[](std::size_t k) const { return coeffs_[k]; }

  friend bool operator==(const PowSeries &, const PowSeries &) = default;
  std::string to_string() const;

private:
  std::vector<Rational> coeffs_;
};

/// 1 / det(I - T M) expanded to degree n, for a square matrix M.
std::vector<CycloNum> reciprocal_char_series(const MatrixF &m, int n);

/// (1/|G|) sum_g 1/det(I - T g), to degree n. Throws CheckError when a
/// coefficient is not a nonnegative integer.
PowSeries molien_series(const std::vector<MatrixF> &group, int n = 30);

/// (1 + T^15) / ((1 - T^2)(1 - T^6)(1 - T^10)) to degree n.
PowSeries icosahedral_hilbert_series(int n = 30);

/**
 * Reynolds projection f -> (1/|G|) sum_g f(g z) over a finite matrix group.
 *
 * The monomial matrices of the group form a subgroup H whose action maps
 * monomials to monomials; the projection is computed as the H-average
 * followed by an average over right coset representatives of H, which costs
 * [G:H] dense substitutions instead of |G|.
 */
class Reynolds
{
public:
  explicit Reynolds(std::vector<MatrixF> group);

  std::size_t group_order() const { return group_.size(); }
  std::size_t monomial_subgroup_order() const { return monomial_.size(); }
  std::size_t coset_count() const { return cosets_.size(); }

  Poly3 project(const Poly3 &f);
  /// Echelon basis of the degree-d invariants; each element has leading
  /// coefficient 1 on its highest monomial.
  std::vector<Poly3> basis(int d);

private:
  Poly3 monomial_average(const Poly3 &f) const;

  std::vector<MatrixF> group_;
  std::vector<std::size_t> monomial_;
  std::vector<std::size_t> cosets_;
  std::vector<Substitution> substitutions_;
};

std::vector<Poly3> reynolds_basis(const std::vector<MatrixF> &group, int d);

/// Coordinates of a homogeneous degree-d polynomial in the monomial order of
/// monomials(d).
std::vector<CycloNum> coordinates(const Poly3 &f, int d);

/// Dimension of the span of homogeneous degree-d polynomials.
std::size_t span_dimension(const std::vector<Poly3> &polys, int d);

} // namespace winger::inv

#endif // WINGER_INVARIANTS_MOLIEN_HPP
