#include "doctest.h"

#include "characters/characters.hpp"
#include "exactfield/errors.hpp"

using namespace winger;
using namespace winger::chars;
using field::Rational;

namespace {

ClassFunction a5(std::vector<CycloNum> v) { return {GroupTag::A5, std::move(v)}; }

// Complete homogeneous symmetric polynomial of degree 3 in three eigenvalues:
// the trace of Sym^3 computed without power maps.
CycloNum h3(const std::vector<CycloNum> &e)
{
  CycloNum s;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      for (std::size_t k = j; k < 3; ++k)
        s += e[i] * e[j] * e[k];
  return s;
}

CycloNum z15(int k) { return CycloNum::zeta(15, k); }

} // namespace

TEST_CASE("class data")
{
  const auto &d = class_data(GroupTag::A5);
  CHECK(d.sizes == std::vector<std::size_t>{1, 15, 20, 12, 12});
  CHECK(class_data(GroupTag::S5).sizes == std::vector<std::size_t>{1, 10, 15, 20, 20, 30, 24});
  // g^2 and g^3 of (12345) fall in the class of (12354)
  auto sq = power_map(GroupTag::A5, 2), cu = power_map(GroupTag::A5, 3);
  CHECK(sq[3] == 4);
  CHECK(cu[3] == 4);
  CHECK(sq[4] == 3);
  CHECK(sq[1] == 0);
  CHECK(cu[2] == 0);
}

TEST_CASE("A5 character table")
{
  const auto &t = a5_table();
  const CycloNum phi = field::golden_ratio();
  CHECK(t["I"] == a5({3, -1, 0, phi, CycloNum(1) - phi}));
  CHECK(t["I'"] == a5({3, -1, 0, CycloNum(1) - phi, phi}));
  CHECK(t["V"] == a5({4, 0, 1, -1, -1}));
  CHECK(t["W"] == a5({5, 1, -1, 0, 0}));
  CHECK_THROWS_AS(t["X"], DomainError);

  CycloNum deg2;
  for (const auto &row : t.rows)
    deg2 += row[0] * row[0];
  CHECK(deg2 == CycloNum(60));

  // column orthogonality
  const auto &d = class_data(GroupTag::A5);
  for (std::size_t g = 0; g < 5; ++g)
    for (std::size_t h = 0; h < 5; ++h) {
      CycloNum s;
      for (const auto &row : t.rows)
        s += row[g] * row[h].conj();
      CHECK(s == CycloNum(g == h ? static_cast<std::int64_t>(60 / d.sizes[g]) : 0));
    }
}

TEST_CASE("inner_product")
{
  const auto &t = a5_table();
  CHECK(inner_product(t["I"], t["I"]) == CycloNum(1));
  CHECK(inner_product(t["I"], t["I'"]) == CycloNum(0));
  CHECK(inner_product(t["1"], t["1"]) == CycloNum(1));
  CHECK_THROWS_AS(inner_product(t["1"], trivial_character(GroupTag::S5)), MismatchError);
  CHECK(inner_product(s5_six_dimensional(), s5_six_dimensional()) == CycloNum(1));
  CHECK(inner_product(s5_sign(), trivial_character(GroupTag::S5)) == CycloNum(0));
}

TEST_CASE("sym_cube")
{
  const auto &t = a5_table();
  ClassFunction expected = a5({10, -2, 1, 0, 0});
  CHECK(sym_cube(t["I"]) == expected);
  CHECK(sym_cube(t["I'"]) == expected);
  CHECK(sym_cube(t["1"]) == t["1"]);

  // eigenvalue oracle for I: 1, -1, -1 / 1, w, w^2 / 1, z, z^4 / 1, z^2, z^3
  std::vector<std::vector<CycloNum>> eig{{1, 1, 1},
                                         {1, -1, -1},
                                         {1, z15(5), z15(10)},
                                         {1, z15(3), z15(12)},
                                         {1, z15(6), z15(9)}};
  for (std::size_t c = 0; c < 5; ++c) {
    CHECK(field::cyclo_embed(eig[c][0] + eig[c][1] + eig[c][2], 20).real == field::cyclo_embed(t["I"][c], 20).real);
    CHECK(h3(eig[c]) == expected[c]);
  }

  auto d = decompose(sym_cube(t["I"]));
  CHECK(d == Decomposition{{"I", 1}, {"I'", 1}, {"V", 1}});
  CHECK(to_string(d) == "I + I' + V");
  // no invariant cubic
  CHECK(inner_product(sym_cube(t["I"]), t["1"]) == CycloNum(0));
}

TEST_CASE("decompose")
{
  const auto &t = a5_table();
  CHECK(decompose(t["1"]) == Decomposition{{"1", 1}});
  ClassFunction e = restrict_to_a5(s5_six_dimensional());
  CHECK(e == a5({6, -2, 0, 1, 1}));
  CHECK(decompose(e) == Decomposition{{"I", 1}, {"I'", 1}});
  CHECK(decompose(CycloNum(2) * t["V"] + t["W"]) == Decomposition{{"V", 2}, {"W", 1}});
  CHECK_THROWS_AS(decompose(a5({1, 0, 0, 0, 0})), DomainError);
  CHECK_THROWS_AS(decompose(t["V"] - t["W"]), DomainError);
  CHECK_THROWS_AS(decompose(s5_sign()), MismatchError);
}

TEST_CASE("induced_character")
{
  auto s3 = perm::closure({Perm::parse("(123)", 5), Perm::parse("(12)(45)", 5)});
  std::vector<CycloNum> sign;
  for (const auto &h : s3.elements())
    sign.emplace_back(h.order() == 2 ? -1 : 1);
  ClassFunction ind = induced_character(s3, sign);
  CHECK(ind == a5({10, -2, 1, 0, 0}));
  CHECK(decompose(ind) == decompose(sym_cube(a5_table()["I"])));

  // oracle: trace of the signed permutation module on the 10 cosets
  const auto &d = class_data(GroupTag::A5);
  auto act = perm::coset_action(d.group, s3);
  for (std::size_t c = 0; c < 5; ++c) {
    const Perm &g = d.representatives[c];
    std::int64_t tr = 0;
    for (std::size_t k = 0; k < act.cosets.size(); ++k) {
      const Perm &x = d.group[act.cosets[k].front()];
      Perm y = perm::compose(x.inverse(), perm::compose(g, x));
      if (auto idx = s3.index_of(y))
        tr += sign[*idx] == CycloNum(1) ? 1 : -1;
    }
    CHECK(ind[c] == CycloNum(tr));
  }

  auto a5g = perm::alternating_group(5);
  CHECK(induced_character(a5g, std::vector<CycloNum>(60, CycloNum(1))) == a5_table()["1"]);

  std::vector<CycloNum> bad(6, CycloNum(1));
  bad[*s3.index_of(Perm::parse("(12)(45)", 5))] = CycloNum(-1);
  CHECK_THROWS_AS(induced_character(s3, bad), DomainError);
  CHECK_THROWS_AS(induced_character(perm::closure({Perm::parse("(12)", 5)}), {1, 1}), DomainError);
}
