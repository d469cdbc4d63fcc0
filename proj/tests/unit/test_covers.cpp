#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "covers/binary.hpp"
#include "covers/covers.hpp"
#include "exactfield/errors.hpp"
#include "geometry/discriminant.hpp"

using namespace winger;
using namespace winger::covers;

namespace {

// 60 (1 - 1/n), summed as rationals
field::Rational ramification(const std::vector<int> &orders)
{
  field::Rational s;
  for (int o : orders)
    s += field::Rational(60) * (field::Rational(1) - field::Rational(1, o));
  return s;
}

} // namespace

TEST_CASE("alpha values")
{
  CHECK(alpha_value(1) == 0);
  CHECK(alpha_value(2) == 30);
  CHECK(alpha_value(3) == 40);
  CHECK(alpha_value(5) == 48);
  for (int bad : {0, 4, 6, 10, 60, -2})
    CHECK_THROWS_AS(alpha_value(bad), DomainError);
}

TEST_CASE("signature solutions")
{
  auto sols = signature_solutions();
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == OrbSignature{0, {5, 2, 2, 2}});
  CHECK(sols[0].to_string() == "(0;5,2,2,2)");
  CHECK(sols[0].orders.size() == 4);

  // brute force over multisets of size <= 5 and g <= 1
  std::set<std::pair<int, std::multiset<int>>> brute;
  const std::vector<int> stabs{2, 3, 5};
  for (int g = 0; g <= 1; ++g)
    for (int size = 0; size <= 5; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size), 0);
      while (true) {
        std::vector<int> orders;
        for (int i : idx)
          orders.push_back(stabs[static_cast<std::size_t>(i)]);
        if (field::Rational(120 * g) + ramification(orders) == field::Rational(138))
          brute.insert({g, std::multiset<int>(orders.begin(), orders.end())});
        int k = size - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == 2)
          --k;
        if (k < 0)
          break;
        int v = ++idx[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < size; ++j)
          idx[static_cast<std::size_t>(j)] = v;
      }
    }
  REQUIRE(brute.size() == 1);
  CHECK(brute.begin()->first == 0);
  CHECK(brute.begin()->second == std::multiset<int>{5, 2, 2, 2});

  // other genera: quotient data of the same shape
  auto sphere = signature_solutions(0);
  CHECK(std::find(sphere.begin(), sphere.end(), OrbSignature{0, {5, 3, 2}}) != sphere.end());
  for (const auto &s : signature_solutions(11))
    CHECK(field::Rational(120 * s.genus) + ramification(s.orders) == field::Rational(140));
}

TEST_CASE("regular cover genus")
{
  CHECK(regular_cover_genus(60, {5, 2, 2, 2}, 0) == 10);
  CHECK(regular_cover_genus(3, std::vector<int>(12, 3), 0) == 10);
  CHECK(regular_cover_genus(10, {5, 2, 2}, 0) == 0);
  CHECK(regular_cover_genus(60, {5, 2, 5}, 0) == 4);
  // spherical triangle groups and the Klein quartic
  CHECK(regular_cover_genus(60, {2, 3, 5}, 0) == 0);
  CHECK(regular_cover_genus(24, {2, 3, 4}, 0) == 0);
  CHECK(regular_cover_genus(12, {2, 3, 3}, 0) == 0);
  CHECK(regular_cover_genus(168, {2, 3, 7}, 0) == 3);
  // hyperelliptic: 2k branch points give genus k - 1
  for (int k = 1; k <= 8; ++k)
    CHECK(regular_cover_genus(2, std::vector<int>(static_cast<std::size_t>(2 * k), 2), 0) == k - 1);
  // unramified covers of a genus-b curve
  for (int b = 1; b <= 4; ++b)
    for (int n = 1; n <= 6; ++n)
      CHECK(regular_cover_genus(n, {}, b) == n * (b - 1) + 1);
  CHECK_THROWS_AS(regular_cover_genus(10, {3}, 0), DomainError);
  CHECK_THROWS_AS(regular_cover_genus(2, {2}, 0), CheckError);
  CHECK_THROWS_AS(regular_cover_genus(6, {2, 3}, 0), CheckError);
}

TEST_CASE("degenerations of all tuple classes")
{
  for (auto c : {hurwitz::Convention::Rtl, hurwitz::Convention::Ltr}) {
    auto e = hurwitz::enumerate_tuple_classes(c);
    REQUIRE(e.classes.size() == 20);
    std::map<int, int> by_n;
    for (const auto &tc : e.classes) {
      auto r = degeneration_report(c, tc.representative);
      CHECK(r.arithmetic_genus == 10);
      CHECK(r.e * 2 * r.n == 60);
      CHECK(r.n == tc.r);
      CHECK(r.v * r.subgroup_order == 60);
      ++by_n[r.n];
      if (r.n == 2)
        CHECK(r == DegenerationReport{2, 15, 6, 0, 10, 10});
      else if (r.n == 3)
        CHECK(r == DegenerationReport{3, 10, 1, 0, 60, 10});
      else
        CHECK(r == DegenerationReport{5, 6, 1, 4, 60, 10});
      // six lines meeting pairwise
      if (r.n == 2)
        CHECK(r.e == r.v * (r.v - 1) / 2);
    }
    CHECK(by_n == std::map<int, int>{{2, 4}, {3, 6}, {5, 10}});
  }
  hurwitz::GenTuple bad{perm::Perm::parse("(12345)", 5), perm::Perm::parse("(12)(34)", 5), perm::Perm::parse("(12)(34)", 5),
                        perm::Perm::parse("(12)(34)", 5)};
  CHECK_THROWS_AS(degeneration_report(hurwitz::Convention::Rtl, bad), DomainError);
}

TEST_CASE("homology lattice character")
{
  auto h = homology_character_check();
  CHECK(h.passed);
  CHECK(h.lattice_character.to_string() == "(10, -2, 1, 0, 0)");
  CHECK(chars::to_string(h.decomposition) == "I + I' + V");
  CHECK(h.doubled == chars::Decomposition{{"I", 2}, {"I'", 2}, {"V", 2}});
  CHECK(h.equals_sym_cube);
}

TEST_CASE("binary icosahedral group")
{
  auto units = icosian_units();
  CHECK(units.size() == 120);
  CHECK(std::set<Quaternion>(units.begin(), units.end()).size() == 120);

  auto r = binary_icosahedral_checks();
  CHECK(r.passed);
  CHECK(r.order == 120);
  CHECK(r.center_order == 2);
  CHECK(r.commutator_order == 120);
  CHECK(r.abelianization_order == 1);
  CHECK(r.quotient_class_sizes == std::vector<std::size_t>{1, 12, 12, 15, 20});

  // element orders by repeated multiplication
  std::map<int, int> orders;
  for (const auto &q : units) {
    Quaternion p = q;
    int k = 1;
    while (!(p == Quaternion::one()) && k <= 120) {
      p = p * q;
      ++k;
    }
    ++orders[k];
  }
  CHECK(orders == std::map<int, int>{{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}});

  // random triple products stay in the set and associate
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, 119);
  std::set<Quaternion> all(units.begin(), units.end());
  for (int trial = 0; trial < 100; ++trial) {
    const auto &a = units[pick(rng)], &b = units[pick(rng)], &c = units[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
    CHECK(all.count(a * b * c) == 1);
    CHECK((a * b).conj() == b.conj() * a.conj());
  }
}

TEST_CASE("integer determinant")
{
  using M = std::vector<std::vector<mpz_class>>;
  CHECK(geometry::integer_det(M{}) == 1);
  CHECK(geometry::integer_det(M{{0, 1}, {1, 0}}) == -1);
  CHECK(geometry::integer_det(M{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(geometry::integer_det(M{{1, 2}}), DomainError);

  // against the Leibniz expansion
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> val(-9, 9), zero(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    M m(n, std::vector<mpz_class>(n));
    for (auto &row : m)
      for (auto &x : row)
        x = zero(rng) == 0 ? 0 : val(rng);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    mpz_class leibniz = 0;
    do {
      mpz_class term = perm::Perm(p).is_even() ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i)
        term *= m[i][static_cast<std::size_t>(p[i])];
      leibniz += term;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(geometry::integer_det(m) == leibniz);
  }
}
