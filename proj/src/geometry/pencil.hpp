#ifndef WINGER_GEOMETRY_PENCIL_HPP
#define WINGER_GEOMETRY_PENCIL_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "invariants/poly3.hpp"
#include "linalg/matrix.hpp"

namespace winger::geometry {

using field::CycloNum;
using field::Rational;
using inv::Poly3;
using linalg::MatrixF;
using linalg::Vector;

/// Linear form c0 z0 + c1 z1 + c2 z2, normalized so the first nonzero
/// coefficient is 1; `scale` times the normalized form is the form as given.
struct LineForm
{
  std::array<CycloNum, 3> coeffs;
  CycloNum scale;

  static LineForm from(const CycloNum &a, const CycloNum &b, const CycloNum &c);
  Poly3 poly() const;
  Vector row() const { return {coeffs[0], coeffs[1], coeffs[2]}; }
  CycloNum evaluate(const Vector &p) const;
  std::string to_string() const;
};

/// z2 and eta^i z0 + eta^(4i) z1 + z2 for i = 1..5, with eta = zeta_5.
std::vector<LineForm> six_lines();

/// z0 z1 + z2^2.
Poly3 conic_q();
/// z2 * prod_{i=1..5} (eta^i z0 + eta^(4i) z1 + z2).
Poly3 sextic_f();
/// Gram matrix of the conic: Q(z) = z^T A z.
MatrixF gram_matrix();

/// Point of the projective plane, normalized so the last nonzero coordinate
/// is 1.
class ProjPoint
{
public:
  ProjPoint(const CycloNum &x0, const CycloNum &x1, const CycloNum &x2);
  explicit ProjPoint(const Vector &v);

  const std::array<CycloNum, 3> &coords() const { return x_; }
  const CycloNum &operator[](std::size_t i) const { return x_[i]; }
  Vector vec() const { return {x_[0], x_[1], x_[2]}; }
  /// Index of the coordinate equal to 1.
  std::size_t chart() const;
  CycloNum evaluate(const Poly3 &f) const { return f.evaluate(x_[0], x_[1], x_[2]); }

  /// "[x0 : x1 : x2]" with exact coordinates.
  std::string to_string() const;

  friend bool operator==(const ProjPoint &, const ProjPoint &) = default;
  friend std::strong_ordering operator<=>(const ProjPoint &, const ProjPoint &) = default;

private:
  std::array<CycloNum, 3> x_;
};

/// Image of a point under the linear map of M.
ProjPoint transform(const MatrixF &m, const ProjPoint &p);

/// Pencil parameter; nullopt stands for infinity.
using Lambda = std::optional<CycloNum>;

std::string to_string(const Lambda &l);

struct SingularLambda
{
  enum class Kind {
    Finite,   // exactly one member is singular at the point
    Infinity, // only F is singular there
    None,     // no member is singular there
    Every     // both gradients vanish: every member is singular there
  };
  Kind kind = Kind::None;
  CycloNum value;

  bool is(const Lambda &l) const;
  std::string to_string() const;
};

/// The pencil Q^3 + lambda F spanned by a conic and a sextic.
class Pencil
{
public:
  Pencil(Poly3 q, Poly3 f);
  /// Spanned by conic_q() and sextic_f().
  static Pencil winger();

  const Poly3 &q() const { return q_; }
  const Poly3 &f() const { return f_; }

  /// Q^3 + lambda F, or F at infinity.
  Poly3 member(const Lambda &lambda) const;
  /// Solves grad(Q^3)(p) + lambda grad(F)(p) = 0.
  SingularLambda singular_lambda(const ProjPoint &p) const;
  /// Whether the member is singular at p with a nondegenerate quadratic part
  /// in the affine chart of p.
  bool node_check(const Lambda &lambda, const ProjPoint &p) const;

private:
  Poly3 q_, f_, q3_;
  std::array<Poly3, 3> grad_q3_, grad_f_;
};

Poly3 pencil_member(const Lambda &lambda);
SingularLambda singular_lambda(const ProjPoint &p);
bool node_check(const Lambda &lambda, const ProjPoint &p);

} // namespace winger::geometry

#endif // WINGER_GEOMETRY_PENCIL_HPP
