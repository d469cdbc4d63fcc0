#include <algorithm>
#include <set>

#include "doctest.h"

#include "characters/characters.hpp"
#include "exactfield/errors.hpp"
#include "hurwitz/hurwitz.hpp"

using namespace winger;
using namespace winger::hurwitz;

namespace {

Perm p5(const char *s) { return Perm::parse(s, 5); }

const Enumeration &classes_rtl()
{
  static const Enumeration e = enumerate_tuple_classes(Convention::Rtl);
  return e;
}

GenTuple square(Convention c, int k, const GenTuple &t, bool inverse = false)
{
  return hurwitz_move(c, k, hurwitz_move(c, k, t, inverse), inverse);
}

} // namespace

TEST_CASE("order sets")
{
  auto s = order_sets();
  // cycle-type counts: C(5,2)C(3,2)/2, 2*C(5,3), 4!
  CHECK(s.order2 == 5 * 2 * 3 / 2);
  CHECK(s.order3 == 2 * 10);
  CHECK(s.order5 == 24);
  CHECK(s.order5 * s.order2 == 360);
}

TEST_CASE("conventions")
{
  Perm a = p5("(12345)"), b = p5("(12)(34)");
  CHECK(mul(Convention::Rtl, a, b) == perm::compose(a, b));
  CHECK(mul(Convention::Ltr, a, b) == perm::compose(b, a));
  CHECK(parse_convention("ltr") == Convention::Ltr);
  CHECK_THROWS_AS(parse_convention("up"), DomainError);
  CHECK(std::string(convention_name(Convention::Rtl)) == "rtl");
}

TEST_CASE("pair orbits")
{
  for (auto c : {Convention::Rtl, Convention::Ltr}) {
    auto orbits = pair_orbits(c);
    REQUIRE(orbits.size() == 6);
    std::multiset<int> rs;
    for (const auto &o : orbits) {
      CHECK(o.size == 60);
      CHECK(o.free);
      rs.insert(o.r);
    }
    CHECK(rs == std::multiset<int>{2, 2, 3, 3, 5, 5});
    std::set<std::size_t> hit;
    for (const auto &[pair, r] : pair_representatives()) {
      std::size_t k = pair_orbit_of(orbits, c, pair);
      CHECK(orbits[k].r == r);
      hit.insert(k);
    }
    CHECK(hit.size() == 6);
  }
}

TEST_CASE("involution factorizations")
{
  for (auto c : {Convention::Rtl, Convention::Ltr})
    for (const auto &h : a5().elements()) {
      int r = h.order();
      if (r == 1) {
        CHECK_THROWS_AS(involution_factorizations(c, h), DomainError);
        continue;
      }
      auto f = involution_factorizations(c, h);
      CHECK(f.size() == static_cast<std::size_t>(r));
      if (r == 2) {
        for (const auto &[h1, h2] : f)
          CHECK(mul(c, h1, h2) == mul(c, h2, h1));
        continue;
      }
      // one free <h>-orbit under simultaneous conjugation
      std::set<std::pair<Perm, Perm>> orb;
      for (int k = 0; k < r; ++k) {
        Perm x = perm::power(h, k);
        orb.insert({conj(c, f[0].first, x), conj(c, f[0].second, x)});
      }
      CHECK(orb == std::set<std::pair<Perm, Perm>>(f.begin(), f.end()));
    }
  CHECK_THROWS_AS(involution_factorizations(Convention::Rtl, p5("(12)")), DomainError);
}

TEST_CASE("tuple classes")
{
  const auto &e = classes_rtl();
  REQUIRE(e.classes.size() == 20);
  CHECK(e.raw_tuples == 1200);

  // Frobenius count of product-one tuples in the classes of (12345) or
  // (12354) and three involutions: |C1||C2|^3/|G| sum chi(g1) chi(g2)^3 / chi(1)^2
  const auto &t = chars::a5_table();
  const auto &d = chars::class_data(chars::GroupTag::A5);
  field::CycloNum total;
  for (std::size_t g1 : {3u, 4u}) {
    field::CycloNum s;
    for (const auto &chi : t.rows)
      s += chi[g1] * chi[1] * chi[1] * chi[1] / (chi[0] * chi[0]);
    total += s * field::CycloNum(field::Rational(static_cast<std::int64_t>(d.sizes[g1] * 15 * 15 * 15), 60));
  }
  CHECK(total == field::CycloNum(static_cast<std::int64_t>(e.candidates)));
  CHECK(e.candidates == 1200);

  int by_r[6] = {0, 0, 0, 0, 0, 0};
  int by_g1[5] = {0, 0, 0, 0, 0};
  for (const auto &tc : e.classes) {
    CHECK(is_generating_tuple(Convention::Rtl, tc.representative));
    CHECK(canonical(Convention::Rtl, tc.representative) == tc.representative);
    ++by_r[tc.r];
    ++by_g1[tc.g1_class];
  }
  CHECK(by_r[2] == 4);
  CHECK(by_r[3] == 6);
  CHECK(by_r[5] == 10);
  CHECK(by_g1[3] == 10);
  CHECK(by_g1[4] == 10);

  for (std::uint64_t seed : {1u, 99u}) {
    auto shuffled = enumerate_tuple_classes(Convention::Rtl, seed);
    REQUIRE(shuffled.classes.size() == 20);
    for (std::size_t i = 0; i < 20; ++i)
      CHECK(shuffled.classes[i].representative == e.classes[i].representative);
  }

  auto ltr = enumerate_tuple_classes(Convention::Ltr);
  CHECK(ltr.classes.size() == 20);
  CHECK(ltr.raw_tuples == 1200);
}

TEST_CASE("reference tuples")
{
  const auto &e = classes_rtl();
  std::set<GenTuple> reps;
  for (const auto &[t, r] : reference_tuples()) {
    CHECK(is_generating_tuple(Convention::Rtl, t));
    CHECK(mul(Convention::Rtl, t[0], t[1]).order() == r);
    GenTuple c = canonical(Convention::Rtl, t);
    auto it = std::find_if(e.classes.begin(), e.classes.end(), [&](const TupleClass &tc) { return tc.representative == c; });
    REQUIRE(it != e.classes.end());
    CHECK(it->g1_class == 3);
    reps.insert(c);
    // the other convention needs the elementwise inverse
    CHECK(is_generating_tuple(Convention::Ltr, inverted(t)));
  }
  CHECK(reps.size() == 10);
  int literal_ltr = 0;
  for (const auto &[t, r] : reference_tuples())
    literal_ltr += is_generating_tuple(Convention::Ltr, t);
  CHECK(literal_ltr < 10);
}

TEST_CASE("braid moves")
{
  const auto &e = classes_rtl();
  for (auto c : {Convention::Rtl, Convention::Ltr})
    for (const auto &tc : e.classes) {
      GenTuple t = c == Convention::Rtl ? tc.representative : inverted(tc.representative);
      REQUIRE(is_generating_tuple(c, t));
      for (int k = 1; k <= 3; ++k) {
        GenTuple u = hurwitz_move(c, k, t);
        CHECK(tuple_product(c, u).is_identity());
        std::multiset<int> orders_t, orders_u;
        for (std::size_t i = 0; i < 4; ++i) {
          orders_t.insert(t[i].order());
          orders_u.insert(u[i].order());
        }
        CHECK(orders_t == orders_u);
        CHECK(hurwitz_move(c, k, u, true) == t);
        CHECK(hurwitz_move(c, k, hurwitz_move(c, k, t, true)) == t);
        // pure moves keep every coordinate's class
        GenTuple v = square(c, k, t);
        for (std::size_t i = 0; i < 4; ++i)
          CHECK(chars::class_data(chars::GroupTag::A5).class_of_perm(v[i]) ==
                chars::class_data(chars::GroupTag::A5).class_of_perm(t[i]));
      }
      const Perm g = mul(c, t[0], t[1]);
      // transport = conjugation by a1a2 after sigma_1^-2
      CHECK(transport_move(c, t) == conj(c, square(c, 1, t, true), g));
      // sigma_1^2 then conjugation by (a1a2)^-1 undoes it
      CHECK(transport_move(c, conj(c, square(c, 1, t), g.inverse())) == t);
      // type change = conjugation by a2^-1 after sigma_2^2
      CHECK(type_changing_move(c, t) == conj(c, square(c, 2, t), t[1].inverse()));
    }
  CHECK_THROWS_AS(hurwitz_move(Convention::Rtl, 4, e.classes[0].representative), DomainError);
}

TEST_CASE("type-changing examples")
{
  for (const auto &ex : type_changing_examples()) {
    CHECK(is_generating_tuple(Convention::Rtl, ex.input));
    GenTuple out = type_changing_move(Convention::Rtl, ex.input);
    CHECK(out[0] == ex.expected_first);
    CHECK(out[1] == ex.expected_second);
    CHECK(mul(Convention::Rtl, out[0], out[1]) == ex.expected_product);
    CHECK(ex.expected_product.order() != mul(Convention::Rtl, ex.input[0], ex.input[1]).order());

    GenTuple o2 = type_changing_move(Convention::Ltr, inverted(ex.input));
    CHECK(o2[0] == ex.expected_first.inverse());
    CHECK(o2[1] == ex.expected_second.inverse());
  }
}

TEST_CASE("braid orbits")
{
  const auto &e = classes_rtl();
  for (auto gens : {GeneratorSet::Pure, GeneratorSet::Weighted}) {
    auto orbits = braid_orbits(Convention::Rtl, e.classes, gens);
    REQUIRE(orbits.size() == 2);
    for (const auto &o : orbits) {
      CHECK(o.size() == 10);
      std::set<std::size_t> g1;
      std::set<int> rs;
      for (std::size_t i : o) {
        g1.insert(e.classes[i].g1_class);
        rs.insert(e.classes[i].r);
      }
      CHECK(g1.size() == 1);
      CHECK(rs == std::set<int>{2, 3, 5});
    }
  }
  auto ltr = enumerate_tuple_classes(Convention::Ltr);
  CHECK(braid_orbits(Convention::Ltr, ltr.classes, GeneratorSet::Pure).size() == 2);
}
