#include "covers/covers.hpp"

#include <algorithm>
#include <functional>

#include "exactfield/errors.hpp"

namespace winger::covers {

int alpha_value(int stabilizer_order)
{
  switch (stabilizer_order) {
  case 1:
  case 2:
  case 3:
  case 5:
    return 60 - 60 / stabilizer_order;
  default:
    throw DomainError("stabilizers of points under A5 are cyclic of order 1, 2, 3 or 5, not " +
                      std::to_string(stabilizer_order));
  }
}

std::string OrbSignature::to_string() const
{
  std::string s = "(" + std::to_string(genus) + ";";
  for (std::size_t i = 0; i < orders.size(); ++i)
    s += (i ? "," : "") + std::to_string(orders[i]);
  return s + ")";
}

std::vector<OrbSignature> signature_solutions(int curve_genus)
{
  // 2g(C) - 2 = 60(2g - 2) + sum alpha
  const int target = 2 * curve_genus - 2 + 120;
  const std::vector<int> stabs{5, 3, 2};
  std::vector<OrbSignature> out;
  for (int g = 0; 120 * g <= target; ++g) {
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> search = [&](std::size_t from, int remaining) {
      if (remaining == 0) {
        out.push_back({g, chosen});
        return;
      }
      for (std::size_t i = from; i < stabs.size(); ++i) {
        int a = alpha_value(stabs[i]);
        if (a > remaining)
          continue;
        chosen.push_back(stabs[i]);
        search(i, remaining - a);
        chosen.pop_back();
      }
    };
    search(0, target - 120 * g);
  }
  return out;
}

int regular_cover_genus(int group_order, const std::vector<int> &branch_orders, int base_genus)
{
  if (group_order < 1 || base_genus < 0)
    throw DomainError("cover degree must be positive and base genus nonnegative");
  long twice = static_cast<long>(group_order) * (2 * base_genus - 2);
  for (int o : branch_orders) {
    if (o < 2 || group_order % o != 0)
      throw DomainError("branch order " + std::to_string(o) + " does not divide " + std::to_string(group_order));
    twice += group_order - group_order / o;
  }
  if (twice % 2 != 0 || twice < -2)
    throw CheckError("Riemann-Hurwitz gives 2g - 2 = " + std::to_string(twice) + ", not a genus");
  return static_cast<int>(twice / 2 + 1);
}

std::string DegenerationReport::to_string() const
{
  return "n=" + std::to_string(n) + " e=" + std::to_string(e) + " v=" + std::to_string(v) +
         " genus=" + std::to_string(component_genus) + " p_a=" + std::to_string(arithmetic_genus);
}

DegenerationReport degeneration_report(Convention c, const GenTuple &t)
{
  if (!hurwitz::is_generating_tuple(c, t))
    throw DomainError("not a generating (5,2,2,2) tuple: " + hurwitz::to_string(t));
  const perm::Perm h = hurwitz::mul(c, t[2], t[3]);
  DegenerationReport r;
  r.n = h.order();
  if (r.n != 2 && r.n != 3 && r.n != 5)
    throw DomainError("g3 g4 has order " + std::to_string(r.n));
  r.e = 30 / r.n;
  r.subgroup_order = static_cast<int>(perm::closure({t[0], t[1], h}).order());
  r.v = 60 / r.subgroup_order;
  r.component_genus = regular_cover_genus(r.subgroup_order, {t[0].order(), t[1].order(), r.n}, 0);
  r.arithmetic_genus = r.v * r.component_genus + 1 - r.v + r.e;
  return r;
}

HomologyCheck homology_character_check()
{
  using chars::CycloNum;
  auto s3 = perm::closure({perm::Perm::parse("(123)", 5), perm::Perm::parse("(12)(45)", 5)});
  std::vector<CycloNum> sign;
  for (const auto &h : s3.elements())
    sign.emplace_back(h.is_identity() || h.order() == 3 ? 1 : -1);
  HomologyCheck out{chars::induced_character(s3, sign), {}, {}, false, false};
  out.decomposition = chars::decompose(out.lattice_character);
  out.doubled = chars::decompose(out.lattice_character + out.lattice_character.conj());
  const auto &t = chars::a5_table();
  out.equals_sym_cube = out.lattice_character == chars::sym_cube(t["I"]);
  out.passed = out.decomposition == chars::Decomposition{{"I", 1}, {"I'", 1}, {"V", 1}} &&
               out.doubled == chars::Decomposition{{"I", 2}, {"I'", 2}, {"V", 2}} && out.equals_sym_cube;
  return out;
}

} // namespace winger::covers
