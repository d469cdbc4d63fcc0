#include "geometry/pencil.hpp"

#include "exactfield/errors.hpp"

namespace winger::geometry {

namespace {

CycloNum eta(int k)
{
  return CycloNum::zeta(5, k);
}

} // namespace

LineForm LineForm::from(const CycloNum &a, const CycloNum &b, const CycloNum &c)
{
  const std::array<CycloNum, 3> raw{a, b, c};
  for (const auto &x : raw) {
    if (x.is_zero())
      continue;
    LineForm l;
    l.scale = x;
    const CycloNum inv = x.inverse();
    for (std::size_t i = 0; i < 3; ++i)
      l.coeffs[i] = raw[i] * inv;
    return l;
  }
  throw DomainError("zero linear form");
}

Poly3 LineForm::poly() const
{
  return Poly3::linear(coeffs[0], coeffs[1], coeffs[2]);
}

CycloNum LineForm::evaluate(const Vector &p) const
{
  return coeffs[0] * p[0] + coeffs[1] * p[1] + coeffs[2] * p[2];
}

std::string LineForm::to_string() const
{
  return poly().to_string();
}

std::vector<LineForm> six_lines()
{
  std::vector<LineForm> out{LineForm::from(0, 0, 1)};
  for (int i = 1; i <= 5; ++i)
    out.push_back(LineForm::from(eta(i), eta(4 * i), 1));
  return out;
}

Poly3 conic_q()
{
  return Poly3::variable(0) * Poly3::variable(1) + Poly3::variable(2).pow(2);
}

Poly3 sextic_f()
{
  Poly3 f(CycloNum(1));
  for (const auto &l : six_lines())
    f = f * l.poly() * l.scale;
  return f;
}

MatrixF gram_matrix()
{
  const CycloNum half(Rational(1, 2));
  return MatrixF{{0, half, 0}, {half, 0, 0}, {0, 0, 1}};
}

ProjPoint::ProjPoint(const CycloNum &x0, const CycloNum &x1, const CycloNum &x2)
: x_{x0, x1, x2}
{
  for (std::size_t k = 3; k-- > 0;) {
    if (x_[k].is_zero())
      continue;
    const CycloNum inv = x_[k].inverse();
    for (auto &c : x_)
      c *= inv;
    return;
  }
  throw DomainError("the zero vector is not a projective point");
}

ProjPoint::ProjPoint(const Vector &v)
: ProjPoint(v.at(0), v.at(1), v.at(2))
{
  if (v.size() != 3)
    throw DomainError("projective points have three coordinates");
}

std::size_t ProjPoint::chart() const
{
  for (std::size_t k = 3; k-- > 0;)
    if (!x_[k].is_zero())
      return k;
  throw InternalError("normalized point without a nonzero coordinate");
}

std::string ProjPoint::to_string() const
{
  return "[" + x_[0].to_string() + " : " + x_[1].to_string() + " : " + x_[2].to_string() + "]";
}

ProjPoint transform(const MatrixF &m, const ProjPoint &p)
{
  return ProjPoint(m * p.vec());
}

std::string to_string(const Lambda &l)
{
  return l ? l->to_string() : "infinity";
}

bool SingularLambda::is(const Lambda &l) const
{
  if (!l)
    return kind == Kind::Infinity;
  return kind == Kind::Finite && value == *l;
}

std::string SingularLambda::to_string() const
{
  switch (kind) {
  case Kind::Finite:
    return value.to_string();
  case Kind::Infinity:
    return "infinity";
  case Kind::Every:
    return "every";
  case Kind::None:
    break;
  }
  return "none";
}

Pencil::Pencil(Poly3 q, Poly3 f)
: q_(std::move(q)), f_(std::move(f)), q3_(q_.pow(3))
{
  for (int i = 0; i < 3; ++i) {
    grad_q3_[static_cast<std::size_t>(i)] = q3_.derivative(i);
    grad_f_[static_cast<std::size_t>(i)] = f_.derivative(i);
  }
}

Pencil Pencil::winger()
{
  return Pencil(conic_q(), sextic_f());
}

Poly3 Pencil::member(const Lambda &lambda) const
{
  if (!lambda)
    return f_;
  return q3_ + f_ * *lambda;
}

SingularLambda Pencil::singular_lambda(const ProjPoint &p) const
{
  std::array<CycloNum, 3> gq, gf;
  for (std::size_t i = 0; i < 3; ++i) {
    gq[i] = p.evaluate(grad_q3_[i]);
    gf[i] = p.evaluate(grad_f_[i]);
  }
  const bool f_zero = gf[0].is_zero() && gf[1].is_zero() && gf[2].is_zero();
  const bool q_zero = gq[0].is_zero() && gq[1].is_zero() && gq[2].is_zero();
  SingularLambda out;
  if (f_zero) {
    out.kind = q_zero ? SingularLambda::Kind::Every : SingularLambda::Kind::Infinity;
    return out;
  }
  std::size_t k = gf[0].is_zero() ? (gf[1].is_zero() ? 2 : 1) : 0;
  CycloNum lambda = -gq[k] / gf[k];
  for (std::size_t i = 0; i < 3; ++i)
    if (gq[i] + lambda * gf[i] != CycloNum())
      return out;
  out.kind = SingularLambda::Kind::Finite;
  out.value = lambda;
  return out;
}

bool Pencil::node_check(const Lambda &lambda, const ProjPoint &p) const
{
  const Poly3 m = member(lambda);
  if (!p.evaluate(m).is_zero())
    return false;
  std::array<Poly3, 3> grad;
  for (int i = 0; i < 3; ++i) {
    grad[static_cast<std::size_t>(i)] = m.derivative(i);
    if (!p.evaluate(grad[static_cast<std::size_t>(i)]).is_zero())
      return false;
  }
  // Hessian restricted to the affine chart of p
  const std::size_t k = p.chart();
  std::array<std::size_t, 2> idx{};
  for (std::size_t i = 0, n = 0; i < 3; ++i)
    if (i != k)
      idx[n++] = i;
  auto h = [&](std::size_t a, std::size_t b) {
    return p.evaluate(grad[a].derivative(static_cast<int>(b)));
  };
  const CycloNum d = h(idx[0], idx[0]) * h(idx[1], idx[1]) - h(idx[0], idx[1]) * h(idx[1], idx[0]);
  return !d.is_zero();
}

Poly3 pencil_member(const Lambda &lambda)
{
  return Pencil::winger().member(lambda);
}

SingularLambda singular_lambda(const ProjPoint &p)
{
  return Pencil::winger().singular_lambda(p);
}

bool node_check(const Lambda &lambda, const ProjPoint &p)
{
  return Pencil::winger().node_check(lambda, p);
}

} // namespace winger::geometry
