#include "linalg/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "exactfield/errors.hpp"

namespace winger::linalg {

MatrixF::MatrixF(std::size_t rows, std::size_t cols)
: rows_(rows), cols_(cols), entries_(rows * cols)
{}

MatrixF::MatrixF(std::size_t rows, std::size_t cols, std::vector<CycloNum> entries)
: rows_(rows), cols_(cols), entries_(std::move(entries))
{
  if (entries_.size() != rows * cols)
    throw MismatchError("matrix entry count does not match its shape");
  conductor();
}

MatrixF::MatrixF(std::initializer_list<std::initializer_list<CycloNum>> rows)
: rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw MismatchError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  conductor();
}

MatrixF MatrixF::identity(std::size_t n)
{
  MatrixF m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = CycloNum(1);
  return m;
}

MatrixF MatrixF::diagonal(const Vector &diag)
{
  MatrixF m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

int MatrixF::conductor() const
{
  int n = 1;
  for (const auto &e : entries_) {
    int c = e.conductor();
    if (c == 1 || c == n)
      continue;
    if (n != 1)
      throw MismatchError("matrix entries have different conductors");
    n = c;
  }
  return n;
}

bool MatrixF::is_zero() const
{
  return std::all_of(entries_.begin(), entries_.end(), [](const CycloNum &e) { return e.is_zero(); });
}

MatrixF MatrixF::transpose() const
{
  MatrixF t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

CycloNum MatrixF::trace() const
{
  if (!square())
    throw DomainError("trace of a non-square matrix");
  CycloNum t;
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

Vector MatrixF::row(std::size_t i) const
{
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector MatrixF::column(std::size_t j) const
{
  Vector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c.push_back((*this)(i, j));
  return c;
}

MatrixF &MatrixF::operator+=(const MatrixF &o)
{
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MismatchError("matrix shapes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += o.entries_[k];
  return *this;
}

MatrixF &MatrixF::operator-=(const MatrixF &o)
{
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw MismatchError("matrix shapes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= o.entries_[k];
  return *this;
}

MatrixF &MatrixF::operator*=(const CycloNum &s)
{
  for (auto &e : entries_)
    e *= s;
  return *this;
}

MatrixF operator*(const MatrixF &a, const MatrixF &b)
{
  if (a.cols_ != b.rows_)
    throw MismatchError("matrix product shapes do not chain");
  MatrixF p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero())
          p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const MatrixF &a, const Vector &v)
{
  if (a.cols_ != v.size())
    throw MismatchError("matrix-vector shapes do not chain");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero())
        r[i] += a(i, j) * v[j];
  return r;
}

Vector row_times(const Vector &v, const MatrixF &m)
{
  if (m.rows() != v.size())
    throw MismatchError("vector-matrix shapes do not chain");
  Vector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[i].is_zero() && !m(i, j).is_zero())
        r[j] += v[i] * m(i, j);
  return r;
}

std::strong_ordering operator<=>(const MatrixF &a, const MatrixF &b)
{
  if (auto c = a.rows_ <=> b.rows_; c != 0)
    return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0)
    return c;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (auto c = a.entries_[k] <=> b.entries_[k]; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const MatrixF &m)
{
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

UniPoly::UniPoly(std::vector<CycloNum> coeffs)
: coeffs_(std::move(coeffs))
{
  trim();
}

void UniPoly::trim()
{
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

UniPoly UniPoly::from_roots(const Vector &roots)
{
  UniPoly p({CycloNum(1)});
  for (const auto &r : roots)
    p = p * UniPoly({-r, CycloNum(1)});
  return p;
}

CycloNum UniPoly::coefficient(std::size_t k) const
{
  return k < coeffs_.size() ? coeffs_[k] : CycloNum();
}

CycloNum UniPoly::evaluate(const CycloNum &x) const
{
  CycloNum acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    acc = acc * x + coeffs_[k];
  return acc;
}

MatrixF UniPoly::evaluate(const MatrixF &m) const
{
  if (!m.square())
    throw DomainError("polynomial evaluated at a non-square matrix");
  MatrixF acc(m.rows(), m.cols());
  const MatrixF id = MatrixF::identity(m.rows());
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    acc = acc * m + id * coeffs_[k];
  return acc;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<CycloNum> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(r));
}

UniPoly operator+(const UniPoly &a, const UniPoly &b)
{
  std::vector<CycloNum> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = a.coefficient(i) + b.coefficient(i);
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string() const
{
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero())
      continue;
    os << (first ? "" : " + ") << "(" << coeffs_[k] << ")";
    if (k > 0)
      os << "*T" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

CycloNum det(const MatrixF &m)
{
  if (!m.square())
    throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return CycloNum(1);
  MatrixF a = m;
  bool negate = false;
  CycloNum prev_inv(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero())
        ++p;
      if (p == n)
        return CycloNum();
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) * prev_inv;
      a(i, k) = CycloNum();
    }
    prev_inv = a(k, k).inverse();
  }
  CycloNum d = a(n - 1, n - 1);
  return negate ? -d : d;
}

MatrixF rref(const MatrixF &m, std::vector<std::size_t> *pivots)
{
  MatrixF a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero())
      ++p;
    if (p == a.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(r, j), a(p, j));
    CycloNum inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j)
      a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero())
        continue;
      CycloNum f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero())
          a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots)
    *pivots = std::move(piv);
  return a;
}

std::size_t rank(const MatrixF &m)
{
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<Vector> kernel(const MatrixF &m)
{
  std::vector<std::size_t> piv;
  MatrixF e = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv)
    is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = CycloNum(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -e(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

UniPoly charpoly(const MatrixF &m)
{
  if (!m.square())
    throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<CycloNum> c(n + 1);
  c[n] = CycloNum(1);
  const MatrixF id = MatrixF::identity(n);
  MatrixF acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc + id * c[n - k + 1];
    c[n - k] = -(m * acc).trace() * CycloNum(Rational(1, static_cast<std::int64_t>(k)));
  }
  return UniPoly(std::move(c));
}

} // namespace winger::linalg
