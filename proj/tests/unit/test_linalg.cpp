#include <random>

#include "doctest.h"

#include "exactfield/errors.hpp"
#include "linalg/matrix.hpp"

using namespace winger;
using namespace winger::linalg;

namespace {

CycloNum eta(int k) { return CycloNum::zeta(5, k); }

MatrixF random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c, int zero_percent = 0)
{
  std::uniform_int_distribution<int> num(-5, 5), pct(0, 99), pw(0, 4);
  MatrixF m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) >= zero_percent)
        m(i, j) = CycloNum(num(rng)) + CycloNum(num(rng)) * eta(pw(rng));
  return m;
}

// Cofactor expansion; the oracle for Bareiss.
CycloNum cofactor_det(const MatrixF &m)
{
  const std::size_t n = m.rows();
  if (n == 1)
    return m(0, 0);
  CycloNum d;
  for (std::size_t j = 0; j < n; ++j) {
    MatrixF minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j)
          minor(i - 1, kk++) = m(i, k);
    CycloNum term = m(0, j) * cofactor_det(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

} // namespace

TEST_CASE("det")
{
  CHECK(det(MatrixF::identity(3)) == CycloNum(1));
  CHECK(det(MatrixF::diagonal({eta(1), eta(4), CycloNum(1)})) == CycloNum(1));
  MatrixF gram{{0, Rational(1, 2), 0}, {Rational(1, 2), 0, 0}, {0, 0, 1}};
  CHECK(det(gram) == CycloNum(Rational(-1, 4)));
  CHECK(det(gram) == cofactor_det(gram));
  CHECK_THROWS_AS(det(MatrixF(2, 3)), DomainError);
  // needs a row swap
  MatrixF swap{{0, 1}, {1, 0}};
  CHECK(det(swap) == CycloNum(-1));
}

TEST_CASE("det agrees with cofactor expansion and is multiplicative")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    MatrixF a = random_matrix(rng, n, n, 30), b = random_matrix(rng, n, n, 30);
    CHECK(det(a) == cofactor_det(a));
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("kernel")
{
  CHECK(kernel(MatrixF(3, 3)).size() == 3);
  MatrixF d = MatrixF::diagonal({eta(1), eta(4), CycloNum(1)}) - MatrixF::identity(3);
  auto k = kernel(d);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{CycloNum(), CycloNum(), CycloNum(1)});
  CHECK(kernel(MatrixF::identity(4)).empty());
}

TEST_CASE("rank-nullity and kernel vectors are annihilated")
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + static_cast<std::size_t>(trial % 5), c = 1 + static_cast<std::size_t>((trial * 7) % 6);
    MatrixF a = random_matrix(rng, r, c, 50);
    if (trial % 3 == 0 && r > 1) // force a dependent row
      for (std::size_t j = 0; j < c; ++j)
        a(r - 1, j) = a(0, j) * eta(2);
    auto k = kernel(a);
    CHECK(k.size() + rank(a) == c);
    for (const auto &v : k) {
      Vector img = a * v;
      for (const auto &x : img)
        CHECK(x.is_zero());
    }
  }
}

TEST_CASE("charpoly")
{
  CHECK(charpoly(MatrixF::identity(3)) == UniPoly::from_roots({1, 1, 1}));
  MatrixF d = MatrixF::diagonal({eta(1), eta(4), CycloNum(1)});
  CHECK(charpoly(d) == UniPoly::from_roots({eta(1), eta(4), CycloNum(1)}));
  CHECK_THROWS_AS(charpoly(MatrixF(1, 2)), DomainError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixF a = random_matrix(rng, 3, 3);
    UniPoly p = charpoly(a);
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(0) == -det(a));
    CHECK(p.coefficient(2) == -a.trace());
    CHECK(p.evaluate(a).is_zero()); // Cayley-Hamilton
  }
}

TEST_CASE("transpose and products")
{
  std::mt19937 rng(17);
  MatrixF a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 4);
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK_THROWS_AS(a * a, MismatchError);
  Vector v{1, eta(1), eta(2)};
  CHECK(row_times(v, b) == b.transpose() * v);
}
