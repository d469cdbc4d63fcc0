#include "invariants/poly3.hpp"

#include <ostream>

#include "exactfield/errors.hpp"

namespace winger::inv {

Poly3::Poly3(const CycloNum &c)
{
  add_term({0, 0, 0}, c);
}

Poly3 Poly3::variable(int i)
{
  if (i < 0 || i > 2)
    throw DomainError("variable index out of range");
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

Poly3 Poly3::monomial(const Exponent &e, const CycloNum &c)
{
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw DomainError("negative exponent");
  Poly3 p;
  p.add_term(e, c);
  return p;
}

Poly3 Poly3::linear(const CycloNum &a, const CycloNum &b, const CycloNum &c)
{
  Poly3 p;
  p.add_term({1, 0, 0}, a);
  p.add_term({0, 1, 0}, b);
  p.add_term({0, 0, 1}, c);
  return p;
}

void Poly3::add_term(const Exponent &e, const CycloNum &c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

CycloNum Poly3::coefficient(const Exponent &e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum() : it->second;
}

int Poly3::degree() const
{
  int d = -1;
  for (const auto &[e, c] : terms_)
    d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool Poly3::is_homogeneous() const
{
  int d = degree();
  for (const auto &[e, c] : terms_)
    if (e[0] + e[1] + e[2] != d)
      return false;
  return true;
}

CycloNum Poly3::evaluate(const CycloNum &x0, const CycloNum &x1, const CycloNum &x2) const
{
  const std::array<CycloNum, 3> x{x0, x1, x2};
  std::array<std::vector<CycloNum>, 3> powers;
  CycloNum sum;
  for (const auto &[e, c] : terms_) {
    CycloNum t = c;
    for (std::size_t i = 0; i < 3; ++i) {
      auto &pw = powers[i];
      if (pw.empty())
        pw.emplace_back(1);
      while (pw.size() <= static_cast<std::size_t>(e[i]))
        pw.push_back(pw.back() * x[i]);
      t *= pw[static_cast<std::size_t>(e[i])];
    }
    sum += t;
  }
  return sum;
}

Poly3 Poly3::derivative(int i) const
{
  if (i < 0 || i > 2)
    throw DomainError("variable index out of range");
  const auto k = static_cast<std::size_t>(i);
  Poly3 out;
  for (const auto &[e, c] : terms_) {
    if (e[k] == 0)
      continue;
    Exponent f = e;
    --f[k];
    out.add_term(f, c * CycloNum(e[k]));
  }
  return out;
}

Poly3 Poly3::pow(int k) const
{
  if (k < 0)
    throw DomainError("negative power of a polynomial");
  Poly3 acc(CycloNum(1)), base = *this;
  while (k) {
    if (k & 1)
      acc = acc * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return acc;
}

Poly3 &Poly3::operator+=(const Poly3 &o)
{
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Poly3 &Poly3::operator-=(const Poly3 &o)
{
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Poly3 &Poly3::operator*=(const CycloNum &s)
{
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= s;
  return *this;
}

Poly3 operator*(const Poly3 &a, const Poly3 &b)
{
  Poly3 out;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

Poly3 Poly3::operator-() const
{
  Poly3 out = *this;
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

std::string Poly3::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    if (!s.empty())
      s += " + ";
    s += "[" + c.to_string() + "]";
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0)
        continue;
      s += "*z" + std::to_string(i);
      if (e[i] > 1)
        s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

std::ostream &operator<<(std::ostream &os, const Poly3 &p)
{
  return os << p.to_string();
}

std::vector<Exponent> monomials(int d)
{
  std::vector<Exponent> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      out.push_back({a, b, d - a - b});
  return out;
}

std::size_t monomial_count(int d)
{
  return d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

Substitution::Substitution(const MatrixF &m)
{
  if (m.rows() != 3 || m.cols() != 3)
    throw DomainError("substitution needs a 3x3 matrix");
  for (std::size_t i = 0; i < 3; ++i)
    forms_[i] = Poly3::linear(m(i, 0), m(i, 1), m(i, 2));
}

const Poly3 &Substitution::image(const Exponent &e)
{
  auto it = cache_.find(e);
  if (it != cache_.end())
    return it->second;
  Poly3 img;
  if (e == Exponent{0, 0, 0}) {
    img = Poly3(CycloNum(1));
  } else {
    std::size_t k = e[0] ? 0 : (e[1] ? 1 : 2);
    Exponent f = e;
    --f[k];
    img = image(f) * forms_[k];
  }
  return cache_.emplace(e, std::move(img)).first->second;
}

Poly3 Substitution::apply(const Poly3 &f)
{
  Poly3 out;
  for (const auto &[e, c] : f.terms())
    out += image(e) * c;
  return out;
}

Poly3 act_on_poly(const MatrixF &m, const Poly3 &f)
{
  Substitution s(m);
  return s.apply(f);
}

} // namespace winger::inv
