#ifndef WINGER_LINALG_MATRIX_HPP
#define WINGER_LINALG_MATRIX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "exactfield/cyclo.hpp"

namespace winger::linalg {

using field::CycloNum;
using field::Rational;

using Vector = std::vector<CycloNum>;

/// Dense row-major matrix over a cyclotomic field.
class MatrixF
{
public:
  MatrixF() = default;
  /// Zero matrix.
  MatrixF(std::size_t rows, std::size_t cols);
  MatrixF(std::size_t rows, std::size_t cols, std::vector<CycloNum> entries);
  MatrixF(std::initializer_list<std::initializer_list<CycloNum>> rows);

  static MatrixF identity(std::size_t n);
  static MatrixF diagonal(const Vector &diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<CycloNum> &entries() const { return entries_; }

  CycloNum &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const CycloNum &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Largest conductor among the entries (entries of conductor 1 are rational).
  int conductor() const;
  bool is_zero() const;

  MatrixF transpose() const;
  CycloNum trace() const;
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  MatrixF &operator+=(const MatrixF &o);
  MatrixF &operator-=(const MatrixF &o);
  MatrixF &operator*=(const CycloNum &s);

  friend MatrixF operator+(MatrixF a, const MatrixF &b) { return a += b; }
  friend MatrixF operator-(MatrixF a, const MatrixF &b) { return a -= b; }
  friend MatrixF operator*(MatrixF a, const CycloNum &s) { return a *= s; }
  friend MatrixF operator*(const CycloNum &s, MatrixF a) { return a *= s; }
  friend MatrixF operator*(const MatrixF &a, const MatrixF &b);
  friend Vector operator*(const MatrixF &a, const Vector &v);

  friend bool operator==(const MatrixF &a, const MatrixF &b) = default;
  friend std::strong_ordering operator<=>(const MatrixF &a, const MatrixF &b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> entries_;
};

std::ostream &operator<<(std::ostream &os, const MatrixF &m);

/// Row vector times matrix.
Vector row_times(const Vector &v, const MatrixF &m);

/// Univariate polynomial over a cyclotomic field, lowest degree first.
class UniPoly
{
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<CycloNum> coeffs);

  /// Product of (T - r) over the given roots.
  static UniPoly from_roots(const Vector &roots);

  const std::vector<CycloNum> &coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  CycloNum coefficient(std::size_t k) const;

  CycloNum evaluate(const CycloNum &x) const;
  /// Horner evaluation at a square matrix.
  MatrixF evaluate(const MatrixF &m) const;

  friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
  friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
  friend bool operator==(const UniPoly &a, const UniPoly &b) = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<CycloNum> coeffs_;
};

/// Determinant by fraction-free (Bareiss) elimination.
CycloNum det(const MatrixF &m);

/// Reduced row echelon form; `pivots` receives the pivot columns.
MatrixF rref(const MatrixF &m, std::vector<std::size_t> *pivots = nullptr);

std::size_t rank(const MatrixF &m);

/// Basis of the right null space, one column vector per free column of the
/// echelon form. Empty iff m is injective.
std::vector<Vector> kernel(const MatrixF &m);

/// det(T*I - m), via Faddeev-LeVerrier.
UniPoly charpoly(const MatrixF &m);

} // namespace winger::linalg

#endif // WINGER_LINALG_MATRIX_HPP
