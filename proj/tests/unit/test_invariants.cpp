#include <map>
#include <random>

#include "doctest.h"

#include "exactfield/errors.hpp"
#include "invariants/molien.hpp"

using namespace winger;
using namespace winger::inv;

namespace {

CycloNum eta(int k) { return CycloNum::zeta(5, k); }

Poly3 z(int i) { return Poly3::variable(i); }

// Product of the six lines z2 and eta^i z0 + eta^-i z1 + z2, built here
// independently of the geometry code.
Poly3 sextic()
{
  Poly3 f = z(2);
  for (int i = 1; i <= 5; ++i)
    f = f * Poly3::linear(eta(i), eta(4 * i), 1);
  return f;
}

Poly3 conic() { return z(0) * z(1) + z(2) * z(2); }

std::vector<MatrixF> matrix_closure(const std::vector<MatrixF> &gens)
{
  std::vector<MatrixF> elems{MatrixF::identity(3)};
  std::map<MatrixF, int> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto &g : gens) {
      MatrixF p = elems[i] * g;
      if (seen.emplace(p, 0).second)
        elems.push_back(p);
    }
  return elems;
}

MatrixF rotation() { return MatrixF::diagonal({eta(1), eta(4), 1}); }
MatrixF flip() { return MatrixF{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}; }

// Dimension of the common fixed space of the generators on degree-d forms,
// by stacking (g - 1) on monomial coordinates.
std::size_t fixed_dimension(const std::vector<MatrixF> &gens, int d)
{
  const auto mons = monomials(d);
  const std::size_t n = mons.size();
  MatrixF stacked(gens.size() * n, n);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t c = 0; c < n; ++c) {
      auto v = coordinates(act_on_poly(gens[k], Poly3::monomial(mons[c])) - Poly3::monomial(mons[c]), d);
      for (std::size_t r = 0; r < n; ++r)
        stacked(k * n + r, c) = v[r];
    }
  return linalg::kernel(stacked).size();
}

} // namespace

TEST_CASE("Poly3 basics")
{
  Poly3 q = conic();
  CHECK(q.degree() == 2);
  CHECK(q.is_homogeneous());
  CHECK(q.to_string() == "[1]*z0*z1 + [1]*z2^2");
  CHECK(q.derivative(2) == Poly3::monomial({0, 0, 1}, 2));
  CHECK(q.pow(3).term_count() == 4);
  CHECK(q.pow(0) == Poly3(CycloNum(1)));
  CHECK((q - q).is_zero());
  CHECK(Poly3().to_string() == "0");
  CHECK(!(q + Poly3(CycloNum(1))).is_homogeneous());
  CHECK(q.evaluate(1, 0, 0).is_zero());
  CHECK(q.evaluate(0, 0, 1) == CycloNum(1));
  CHECK(monomial_count(6) == 28);
  CHECK(monomials(6).size() == 28);
  CHECK(monomials(2).front() == Exponent{2, 0, 0});
  CHECK_THROWS_AS(Poly3::variable(3), DomainError);

  Poly3 f = sextic();
  CHECK(f.degree() == 6);
  CHECK(f.is_homogeneous());
  for (const auto &[e, c] : f.terms())
    CHECK(c.is_rational());
}

TEST_CASE("act_on_poly")
{
  Poly3 f = sextic(), q = conic();
  CHECK(act_on_poly(MatrixF::identity(3), f) == f);
  CHECK(act_on_poly(rotation(), f) == f);
  CHECK(act_on_poly(rotation(), q) == q);
  CHECK(act_on_poly(flip(), f) == f);
  CHECK(act_on_poly(flip(), q) == q);
  CHECK(act_on_poly(MatrixF::diagonal({2, 1, 1}), z(0)) == Poly3::monomial({1, 0, 0}, 2));

  // f(ABz) = (A acting after B)
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    MatrixF a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = CycloNum(pick(rng)) * eta(pick(rng) + 3);
        b(i, j) = CycloNum(pick(rng));
      }
    Poly3 g = q * z(0) + z(1).pow(3);
    CHECK(act_on_poly(b, act_on_poly(a, g)) == act_on_poly(a * b, g));
    CHECK(act_on_poly(a, g).is_homogeneous());
  }
}

TEST_CASE("power series division")
{
  auto h = icosahedral_hilbert_series(30);
  CHECK(h.precision() == 30);
  // oracle: count 2a + 6b + 10c = d and = d - 15
  auto count = [](int d) {
    int n = 0;
    for (int a = 0; 2 * a <= d; ++a)
      for (int b = 0; 2 * a + 6 * b <= d; ++b)
        n += (d - 2 * a - 6 * b) % 10 == 0;
    return n;
  };
  for (int d = 0; d <= 30; ++d)
    CHECK(h[static_cast<std::size_t>(d)] == Rational(count(d) + (d >= 15 ? count(d - 15) : 0)));
  CHECK(h[2] == Rational(1));
  CHECK(h[6] == Rational(2));
  CHECK(h[15] == Rational(1));
  CHECK(PowSeries::quotient({1}, {1, -1}, 4) == PowSeries({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(PowSeries::quotient({1}, {0, 1}, 4), DivisionByZero);
}

TEST_CASE("molien series of small monomial groups")
{
  auto c5 = matrix_closure({rotation()});
  REQUIRE(c5.size() == 5);
  auto m = molien_series(c5, 12);
  for (int d = 0; d <= 12; ++d) {
    // invariant monomials: exponents of z0 and z1 agree mod 5
    int n = 0;
    for (const auto &e : monomials(d))
      n += (e[0] - e[1]) % 5 == 0;
    CHECK(m[static_cast<std::size_t>(d)] == Rational(n));
  }
  auto d10 = matrix_closure({rotation(), flip()});
  REQUIRE(d10.size() == 10);
  auto md = molien_series(d10, 8);
  for (int d = 0; d <= 8; ++d)
    CHECK(md[static_cast<std::size_t>(d)] == Rational(static_cast<std::int64_t>(fixed_dimension({rotation(), flip()}, d))));

  // not a group: the average is not integral
  CHECK_THROWS_AS(molien_series({MatrixF::identity(3), rotation()}, 4), CheckError);
}

TEST_CASE("Reynolds projection")
{
  auto d10 = matrix_closure({rotation(), flip()});
  Reynolds r(d10);
  CHECK(r.monomial_subgroup_order() == 10);
  CHECK(r.coset_count() == 1);
  auto md = molien_series(d10, 8);
  for (int d = 0; d <= 8; ++d)
    CHECK(r.basis(d).size() == static_cast<std::size_t>(md[static_cast<std::size_t>(d)].numerator().get_si()));
  auto b2 = r.basis(2);
  CHECK(b2 == std::vector<Poly3>{z(0) * z(1), z(2) * z(2)});

  // a group with a non-monomial element: conjugate D10 by a shear
  MatrixF s{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  MatrixF si{{1, -1, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<MatrixF> conj;
  for (const auto &g : d10)
    conj.push_back(s * g * si);
  Reynolds rc(conj);
  CHECK(rc.monomial_subgroup_order() < 10);
  for (int d = 0; d <= 6; ++d)
    CHECK(rc.basis(d).size() == r.basis(d).size());

  // idempotent, and fixed pointwise
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> pick(-4, 4);
  for (int trial = 0; trial < 4; ++trial) {
    Poly3 f;
    for (const auto &e : monomials(4))
      f += Poly3::monomial(e, pick(rng));
    Poly3 p = rc.project(f);
    CHECK(rc.project(p) == p);
    for (const auto &g : conj)
      CHECK(act_on_poly(g, p) == p);
  }

  CHECK_THROWS_AS(Reynolds({MatrixF::identity(3), rotation()}), DomainError);
}
