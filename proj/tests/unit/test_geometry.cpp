#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "exactfield/errors.hpp"
#include "geometry/discriminant.hpp"
#include "geometry/group.hpp"
#include "invariants/molien.hpp"

using namespace winger;
using namespace winger::geometry;

namespace {

CycloNum eta(int k) { return CycloNum::zeta(5, k); }

const IcosaGroup &group()
{
  static const IcosaGroup g = reconstruct_group();
  return g;
}

const IrregularOrbits &orbits()
{
  static const IrregularOrbits o = irregular_orbits(group());
  return o;
}

bool proportional(const Vector &u, const Vector &v)
{
  return (u[1] * v[2] - u[2] * v[1]).is_zero() && (u[2] * v[0] - u[0] * v[2]).is_zero() &&
         (u[0] * v[1] - u[1] * v[0]).is_zero();
}

bool contains(const std::vector<ProjPoint> &o, const ProjPoint &p)
{
  return std::find(o.begin(), o.end(), p) != o.end();
}

} // namespace

TEST_CASE("six lines")
{
  auto lines = six_lines();
  REQUIRE(lines.size() == 6);
  for (const auto &l : lines) {
    auto first = std::find_if(l.coeffs.begin(), l.coeffs.end(), [](const CycloNum &c) { return !c.is_zero(); });
    CHECK(first->is_one());
  }
  CHECK(lines[0].row() == Vector{0, 0, 1});
  CHECK(lines[5].row() == Vector{1, 1, 1});
  // no three concurrent
  int triples = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c) {
        MatrixF m{{lines[a].coeffs[0], lines[a].coeffs[1], lines[a].coeffs[2]},
                  {lines[b].coeffs[0], lines[b].coeffs[1], lines[b].coeffs[2]},
                  {lines[c].coeffs[0], lines[c].coeffs[1], lines[c].coeffs[2]}};
        CHECK(!linalg::det(m).is_zero());
        ++triples;
      }
  CHECK(triples == 20);

  Poly3 f = sextic_f();
  CHECK(f.degree() == 6);
  CHECK(f.is_homogeneous());
  for (const auto &[e, c] : f.terms())
    CHECK(c.is_rational());
  // each factor is 1 at [0:0:1]
  CHECK(f.evaluate(0, 0, 1) == CycloNum(1));
  // direct evaluation of the factored form at an arbitrary point
  CycloNum x0(2), x1(-3), x2(Rational(1, 7));
  CycloNum direct = x2;
  for (int i = 1; i <= 5; ++i)
    direct *= eta(i) * x0 + eta(4 * i) * x1 + x2;
  CHECK(f.evaluate(x0, x1, x2) == direct);
  CHECK_THROWS_AS(LineForm::from(0, 0, 0), DomainError);
}

TEST_CASE("line-permutation search")
{
  auto search = search_line_symmetries(six_lines(), 2);
  CHECK(search.permutations_tried == 720);
  REQUIRE(search.matrices.size() == 60);
  CHECK(search.matrices.front() == MatrixF::identity(3));
  CHECK(std::count(search.matrices.begin(), search.matrices.end(), MatrixF::diagonal({eta(1), eta(4), 1})) == 1);
  auto lines = six_lines();
  const MatrixF a = gram_matrix();
  for (std::size_t k = 0; k < search.matrices.size(); ++k) {
    const MatrixF &m = search.matrices[k];
    CHECK(m.transpose() * a * m == a);
    CHECK(linalg::det(m) == CycloNum(1));
    for (int i = 0; i < 6; ++i)
      CHECK(proportional(linalg::row_times(lines[static_cast<std::size_t>(search.line_perms[k](i))].row(), m),
                         lines[static_cast<std::size_t>(i)].row()));
  }
  // sequential and threaded searches agree
  CHECK(search_line_symmetries(six_lines(), 1).matrices == search.matrices);
}

TEST_CASE("reconstructed group")
{
  const auto &g = group();
  CHECK(g.order() == 60);
  CHECK(g.class_sizes() == std::vector<std::size_t>{1, 15, 20, 12, 12});
  CHECK((g.character_label == "I" || g.character_label == "I'"));

  const CycloNum phi = field::golden_ratio();
  int plus = 0, minus = 0;
  for (std::size_t i = 0; i < 60; ++i) {
    const MatrixF &m = g.elements[i];
    CHECK(linalg::charpoly(m).evaluate(m).is_zero());
    CHECK(inv::act_on_poly(m, conic_q()) == conic_q());
    if (g.orders[i] == 5) {
      plus += m.trace() == phi;
      minus += m.trace() == CycloNum(1) - phi;
    }
    if (g.orders[i] == 2)
      CHECK(linalg::charpoly(m) == linalg::UniPoly::from_roots({1, -1, -1}));
    if (g.orders[i] == 3)
      CHECK(linalg::kernel(m - MatrixF::identity(3)).size() == 1);
  }
  CHECK(plus == 12);
  CHECK(minus == 12);
  CHECK(std::count(g.orders.begin(), g.orders.end(), 3) == 20);

  // the isomorphism to A5 respects orders
  for (std::size_t i = 0; i < 60; ++i)
    CHECK(g.to_a5[i].order() == g.orders[i]);
}

TEST_CASE("analyze_group rejects bad input")
{
  auto m = group().elements;
  auto fewer = m;
  fewer.pop_back();
  CHECK_THROWS_AS(analyze_group(fewer), CheckError);
  auto bad = m;
  bad[7](0, 1) += CycloNum(1);
  CHECK_THROWS_AS(analyze_group(bad), CheckError);
}

TEST_CASE("irregular orbits")
{
  const auto &o = orbits();
  const Poly3 q = conic_q();
  CHECK(o.six.size() == 6);
  CHECK(o.ten.size() == 10);
  CHECK(o.fifteen.size() == 15);
  CHECK(o.twelve.size() == 12);
  CHECK(contains(o.six, ProjPoint(0, 0, 1)));
  CHECK(ProjPoint(0, 0, 1).evaluate(q) == CycloNum(1));
  CHECK(contains(o.twelve, ProjPoint(1, 0, 0)));

  std::set<ProjPoint> all;
  for (const auto *orb : {&o.six, &o.ten, &o.fifteen, &o.twelve})
    for (const auto &p : *orb)
      all.insert(p);
  CHECK(all.size() == 43);
  for (const auto *orb : {&o.six, &o.ten, &o.fifteen})
    for (const auto &p : *orb)
      CHECK(!p.evaluate(q).is_zero());

  // the 12-orbit is the base locus: two points on each line, each point on one
  auto lines = six_lines();
  std::vector<int> per_line(6, 0);
  for (const auto &p : o.twelve) {
    CHECK(p.evaluate(q).is_zero());
    CHECK(p.evaluate(sextic_f()).is_zero());
    int hits = 0;
    for (std::size_t l = 0; l < 6; ++l)
      if (lines[l].evaluate(p.vec()).is_zero()) {
        ++hits;
        ++per_line[l];
      }
    CHECK(hits == 1);
  }
  CHECK(per_line == std::vector<int>(6, 2));

  // fixed points of involutions lie on two lines
  for (const auto &p : o.fifteen) {
    int hits = 0;
    for (const auto &l : lines)
      hits += l.evaluate(p.vec()).is_zero();
    CHECK(hits == 2);
  }
  CHECK_THROWS_AS(ProjPoint(0, 0, 0), DomainError);
  CHECK(ProjPoint(2, 4, 2) == ProjPoint(1, 2, 1));
}

TEST_CASE("pencil members")
{
  CHECK(pencil_member(CycloNum(0)) == conic_q().pow(3));
  CHECK(pencil_member(std::nullopt) == sextic_f());
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    Poly3 m = pencil_member(CycloNum(Rational(num(rng), den(rng))));
    for (const auto &p : orbits().twelve)
      CHECK(p.evaluate(m).is_zero());
  }
  Poly3 m = pencil_member(CycloNum(Rational(7, 3)));
  for (const auto &g : group().elements)
    CHECK(inv::act_on_poly(g, m) == m);
}

TEST_CASE("singular members")
{
  const ProjPoint p(0, 0, 1);
  const Poly3 q3 = conic_q().pow(3), f = sextic_f();
  for (int i = 0; i < 2; ++i) {
    CHECK(p.evaluate(q3.derivative(i)).is_zero());
    CHECK(p.evaluate(f.derivative(i)).is_zero());
  }
  CHECK(p.evaluate(q3.derivative(2)) == CycloNum(6));
  CHECK(p.evaluate(f.derivative(2)) == CycloNum(6));

  const auto &o = orbits();
  for (const auto &x : o.six) {
    CHECK(singular_lambda(x).is(CycloNum(-1)));
    CHECK(node_check(CycloNum(-1), x));
  }
  for (const auto &x : o.ten) {
    CHECK(singular_lambda(x).is(CycloNum(Rational(27, 5))));
    CHECK(node_check(CycloNum(Rational(27, 5)), x));
  }
  for (const auto &x : o.fifteen) {
    CHECK(singular_lambda(x).is(std::nullopt));
    CHECK(singular_lambda(x).to_string() == "infinity");
    CHECK(node_check(std::nullopt, x));
  }
  for (const auto &x : o.twelve) {
    CHECK(singular_lambda(x).is(CycloNum(0)));
    CHECK(!node_check(CycloNum(0), x));
  }
  CHECK(!node_check(CycloNum(-1), o.ten.front()));
  CHECK(singular_lambda(ProjPoint(1, 2, 3)).kind == SingularLambda::Kind::None);

  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 11);
  for (int trial = 0; trial < 10; ++trial) {
    CycloNum l(Rational(num(rng), den(rng)));
    if (l == CycloNum(0) || l == CycloNum(-1) || l == CycloNum(Rational(27, 5)))
      continue;
    for (const auto *orb : {&o.six, &o.ten, &o.fifteen, &o.twelve})
      for (const auto &x : *orb)
        CHECK(!singular_lambda(x).is(l));
  }
}

TEST_CASE("invariants of the reconstructed group")
{
  const auto &g = group().elements;
  auto m = inv::molien_series(g, 30);
  CHECK(m == inv::icosahedral_hilbert_series(30));

  inv::Reynolds r(g);
  CHECK(r.monomial_subgroup_order() == 10);
  CHECK(r.coset_count() == 6);
  for (int d = 0; d <= 15; ++d) {
    if (d == 13 || d == 14)
      continue;
    CHECK(r.basis(d).size() == static_cast<std::size_t>(m[static_cast<std::size_t>(d)].numerator().get_si()));
  }
  auto b2 = r.basis(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == conic_q());
  auto b6 = r.basis(6);
  REQUIRE(b6.size() == 2);
  std::vector<Poly3> with{b6[0], b6[1], conic_q().pow(3), sextic_f()};
  CHECK(inv::span_dimension(with, 6) == 2);
  for (const auto &p : r.basis(10))
    for (const auto &x : g)
      CHECK(inv::act_on_poly(x, p) == p);
}

TEST_CASE("discriminant of the pencil")
{
  auto r = pencil_discriminant(Pencil::winger(), {Rational(0), Rational(-1), Rational(27, 5), Rational(1)});
  CHECK(r.expected_degree == 75);
  CHECK(r.roots_exhaust);
  CHECK(r.infinity_is_root());
  std::map<std::string, int> mult;
  for (const auto &[root, m] : r.roots)
    mult[root.to_string()] = m;
  CHECK(mult.size() == 3);
  CHECK(mult.count("0") == 1);
  // one simple factor per ordinary node
  CHECK(mult["-1"] == 6);
  CHECK(mult["27/5"] == 10);
  CHECK(r.expected_degree - r.degree() == 15);
  CHECK(r.coefficients.back() == Rational(1));

  // a pencil singular along a whole conic for every member
  CHECK_THROWS_AS(pencil_discriminant(Pencil(conic_q(), conic_q().pow(3)), {}), CheckError);
  CHECK_THROWS_AS(pencil_discriminant(Pencil(conic_q(), conic_q()), {}), DomainError);
}
