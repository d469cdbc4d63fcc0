#ifndef WINGER_GEOMETRY_DISCRIMINANT_HPP
#define WINGER_GEOMETRY_DISCRIMINANT_HPP

#include <string>
#include <utility>
#include <vector>

#include "geometry/pencil.hpp"

namespace winger::geometry {

struct DiscriminantReport
{
  /// Resultant of the three partials of Q^3 + lambda F as a polynomial in
  /// lambda, lowest coefficient first.
  std::vector<Rational> coefficients;
  /// Bound from homogeneity: 3 (d - 1)^2 for a pencil of degree d.
  int expected_degree = 0;
  /// Rational roots found among the candidates, with multiplicity.
  std::vector<std::pair<Rational, int>> roots;
  /// What remains after dividing out the roots is a nonzero constant.
  bool roots_exhaust = false;
  int evaluation_points = 0;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Whether lambda = infinity is a root, i.e. the degree drops.
  bool infinity_is_root() const { return degree() < expected_degree; }
  std::string to_string() const;
};

/// Macaulay resultant of the partial derivatives, obtained as det(M) / det(E)
/// of the Macaulay matrix and its extraneous minor, each interpolated from
/// exact integer determinants at lambda = 0, 1, 2, ... . The roots are
/// tested against `candidates`. Throws DomainError when the pencil has
/// irrational coefficients and CheckError when the interpolation fails its
/// consistency checks.
DiscriminantReport pencil_discriminant(const Pencil &pencil, const std::vector<Rational> &candidates,
                                       unsigned threads = 0);

/// Fraction-free determinant of a square integer matrix.
mpz_class integer_det(std::vector<std::vector<mpz_class>> m);

} // namespace winger::geometry

#endif // WINGER_GEOMETRY_DISCRIMINANT_HPP
