#include "invariants/molien.hpp"

#include <map>

#include "exactfield/errors.hpp"

namespace winger::inv {

PowSeries::PowSeries(std::vector<Rational> coeffs)
: coeffs_(std::move(coeffs))
{
}

PowSeries PowSeries::quotient(const std::vector<Rational> &num, const std::vector<Rational> &den, int n)
{
  if (den.empty() || den.front().is_zero())
    throw DivisionByZero();
  if (n < 0)
    throw DomainError("negative series precision");
  const Rational inv0 = den.front().inverse();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    Rational acc = k < num.size() ? num[k] : Rational(0);
    for (std::size_t j = 1; j < den.size() && j <= k; ++j)
      acc -= den[j] * c[k - j];
    c[k] = acc * inv0;
  }
  return PowSeries(std::move(c));
}

std::string PowSeries::to_string() const
{
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero())
      continue;
    if (!s.empty())
      s += " + ";
    s += coeffs_[k].to_string();
    if (k > 0)
      s += "*T" + (k > 1 ? "^" + std::to_string(k) : std::string());
  }
  return (s.empty() ? "0" : s) + " + O(T^" + std::to_string(coeffs_.size()) + ")";
}

std::vector<CycloNum> reciprocal_char_series(const MatrixF &m, int n)
{
  const auto cp = linalg::charpoly(m).coeffs();
  const std::size_t dim = cp.size() - 1;
  // det(I - T M) has the charpoly coefficients in reverse order
  std::vector<CycloNum> den(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k)
    den[k] = cp[dim - k];
  std::vector<CycloNum> s(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    CycloNum acc = k == 0 ? CycloNum(1) : CycloNum();
    for (std::size_t j = 1; j <= dim && j <= k; ++j)
      acc -= den[j] * s[k - j];
    s[k] = acc;
  }
  return s;
}

PowSeries molien_series(const std::vector<MatrixF> &group, int n)
{
  if (group.empty())
    throw DomainError("Molien series of an empty set of matrices");
  if (n < 0)
    throw DomainError("negative series precision");
  std::vector<CycloNum> sum(static_cast<std::size_t>(n) + 1);
  for (const auto &g : group) {
    auto s = reciprocal_char_series(g, n);
    for (std::size_t k = 0; k < sum.size(); ++k)
      sum[k] += s[k];
  }
  const CycloNum scale(Rational(1, static_cast<std::int64_t>(group.size())));
  std::vector<Rational> out;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    CycloNum c = sum[k] * scale;
    if (!c.is_rational() || !c.to_rational().is_integer() || c.to_rational().sign() < 0)
      throw CheckError("Molien coefficient at T^" + std::to_string(k) + " is " + c.to_string() +
                       ", not a nonnegative integer");
    out.push_back(c.to_rational());
  }
  return PowSeries(std::move(out));
}

PowSeries icosahedral_hilbert_series(int n)
{
  std::vector<Rational> num(16), den(19);
  num[0] = 1;
  num[15] = 1;
  // (1 - T^2)(1 - T^6)(1 - T^10)
  for (int a : {0, 2})
    for (int b : {0, 6})
      for (int c : {0, 10}) {
        int sign = (a ? -1 : 1) * (b ? -1 : 1) * (c ? -1 : 1);
        den[static_cast<std::size_t>(a + b + c)] += Rational(sign);
      }
  return PowSeries::quotient(num, den, n);
}

namespace {

bool is_monomial_matrix(const MatrixF &m)
{
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      nonzero += !m(i, j).is_zero();
    if (nonzero != 1)
      return false;
  }
  return true;
}

} // namespace

Reynolds::Reynolds(std::vector<MatrixF> group)
: group_(std::move(group))
{
  if (group_.empty())
    throw DomainError("Reynolds operator of an empty group");
  std::map<MatrixF, std::size_t> index;
  for (std::size_t i = 0; i < group_.size(); ++i) {
    if (group_[i].rows() != 3 || group_[i].cols() != 3)
      throw DomainError("Reynolds operator needs 3x3 matrices");
    if (!index.emplace(group_[i], i).second)
      throw DomainError("repeated group element");
    if (is_monomial_matrix(group_[i]))
      monomial_.push_back(i);
  }
  for (std::size_t a : monomial_)
    for (std::size_t b : monomial_)
      if (!index.count(group_[a] * group_[b]))
        throw DomainError("matrices do not form a group");
  std::vector<bool> covered(group_.size(), false);
  for (std::size_t t = 0; t < group_.size(); ++t) {
    if (covered[t])
      continue;
    cosets_.push_back(t);
    for (std::size_t h : monomial_) {
      auto it = index.find(group_[h] * group_[t]);
      if (it == index.end() || covered[it->second])
        throw DomainError("matrices do not form a group");
      covered[it->second] = true;
    }
  }
  if (cosets_.size() * monomial_.size() != group_.size())
    throw DomainError("matrices do not form a group");
  for (std::size_t t : cosets_)
    substitutions_.emplace_back(group_[t]);
}

Poly3 Reynolds::monomial_average(const Poly3 &f) const
{
  Poly3 sum;
  for (std::size_t hi : monomial_) {
    const MatrixF &h = group_[hi];
    std::array<std::size_t, 3> target{};
    std::array<CycloNum, 3> scale;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (!h(i, j).is_zero()) {
          target[i] = j;
          scale[i] = h(i, j);
        }
    for (const auto &[e, c] : f.terms()) {
      Exponent img{0, 0, 0};
      CycloNum coeff = c;
      for (std::size_t i = 0; i < 3; ++i) {
        img[target[i]] += e[i];
        for (int k = 0; k < e[i]; ++k)
          coeff *= scale[i];
      }
      sum += Poly3::monomial(img, coeff);
    }
  }
  return sum * CycloNum(Rational(1, static_cast<std::int64_t>(monomial_.size())));
}

Poly3 Reynolds::project(const Poly3 &f)
{
  const Poly3 avg = monomial_average(f);
  Poly3 sum;
  for (auto &s : substitutions_)
    sum += s.apply(avg);
  return sum * CycloNum(Rational(1, static_cast<std::int64_t>(cosets_.size())));
}

namespace {

std::vector<Poly3> echelon_basis(const std::vector<Poly3> &polys, int d)
{
  const auto mons = monomials(d);
  if (polys.empty())
    return {};
  MatrixF m(polys.size(), mons.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    auto v = coordinates(polys[r], d);
    for (std::size_t c = 0; c < v.size(); ++c)
      m(r, c) = v[c];
  }
  std::vector<std::size_t> pivots;
  MatrixF e = linalg::rref(m, &pivots);
  std::vector<Poly3> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Poly3 p;
    for (std::size_t c = 0; c < mons.size(); ++c)
      p += Poly3::monomial(mons[c], e(r, c));
    out.push_back(std::move(p));
  }
  return out;
}

} // namespace

std::vector<Poly3> Reynolds::basis(int d)
{
  if (d < 0)
    throw DomainError("negative degree");
  std::vector<Poly3> averaged;
  for (const auto &e : monomials(d))
    averaged.push_back(monomial_average(Poly3::monomial(e)));
  // the full projection factors through the H-average, so its image is the
  // projection of the H-invariants
  std::vector<Poly3> projected;
  for (const auto &b : echelon_basis(averaged, d)) {
    Poly3 sum;
    for (auto &s : substitutions_)
      sum += s.apply(b);
    projected.push_back(std::move(sum));
  }
  return echelon_basis(projected, d);
}

std::vector<Poly3> reynolds_basis(const std::vector<MatrixF> &group, int d)
{
  Reynolds r(group);
  return r.basis(d);
}

std::vector<CycloNum> coordinates(const Poly3 &f, int d)
{
  const auto mons = monomials(d);
  std::vector<CycloNum> v;
  std::size_t found = 0;
  for (const auto &e : mons) {
    v.push_back(f.coefficient(e));
    found += !v.back().is_zero();
  }
  if (found != f.term_count())
    throw DomainError("polynomial is not homogeneous of degree " + std::to_string(d));
  return v;
}

std::size_t span_dimension(const std::vector<Poly3> &polys, int d)
{
  return echelon_basis(polys, d).size();
}

} // namespace winger::inv
