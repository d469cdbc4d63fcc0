#include "hurwitz/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "characters/characters.hpp"
#include "exactfield/errors.hpp"

namespace winger::hurwitz {

namespace {

Perm p5(const char *s)
{
  return Perm::parse(s, 5);
}

std::size_t generated_order(std::initializer_list<Perm> gens)
{
  const Perm e = Perm::identity(gens.begin()->degree());
  std::vector<Perm> elems{e};
  std::unordered_set<Perm, perm::PermHash> seen{e};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto &g : gens) {
      Perm p = perm::compose(elems[i], g);
      if (seen.insert(p).second)
        elems.push_back(std::move(p));
    }
  return elems.size();
}

} // namespace

const char *convention_name(Convention c)
{
  return c == Convention::Rtl ? "rtl" : "ltr";
}

Convention parse_convention(const std::string &s)
{
  if (s == "rtl")
    return Convention::Rtl;
  if (s == "ltr")
    return Convention::Ltr;
  throw DomainError("unknown composition convention '" + s + "'");
}

Perm mul(Convention c, const Perm &a, const Perm &b)
{
  return c == Convention::Rtl ? perm::compose(a, b) : perm::compose(b, a);
}

Perm conj(Convention c, const Perm &g, const Perm &x)
{
  return mul(c, mul(c, x, g), x.inverse());
}

std::string to_string(const GenTuple &t)
{
  return "(" + t[0].to_compact_string() + ", " + t[1].to_compact_string() + ", " + t[2].to_compact_string() + ", " +
         t[3].to_compact_string() + ")";
}

Perm tuple_product(Convention c, const GenTuple &t)
{
  return mul(c, t[0], mul(c, t[1], mul(c, t[2], t[3])));
}

bool is_generating_tuple(Convention c, const GenTuple &t)
{
  static constexpr int orders[4] = {5, 2, 2, 2};
  for (std::size_t i = 0; i < 4; ++i)
    if (t[i].degree() != 5 || t[i].order() != orders[i] || !t[i].is_even())
      return false;
  return tuple_product(c, t).is_identity() && generated_order({t[0], t[1], t[2], t[3]}) == 60;
}

GenTuple conj(Convention c, const GenTuple &t, const Perm &x)
{
  return {conj(c, t[0], x), conj(c, t[1], x), conj(c, t[2], x), conj(c, t[3], x)};
}

GenTuple inverted(const GenTuple &t)
{
  return {t[0].inverse(), t[1].inverse(), t[2].inverse(), t[3].inverse()};
}

const GroupTable &a5()
{
  static const GroupTable g = perm::alternating_group(5);
  return g;
}

std::vector<Perm> elements_of_order(int r)
{
  auto v = perm::elements_of_order(a5(), r);
  std::sort(v.begin(), v.end());
  return v;
}

OrderSets order_sets()
{
  return {elements_of_order(2).size(), elements_of_order(3).size(), elements_of_order(5).size()};
}

std::vector<PairOrbit> pair_orbits(Convention c)
{
  std::set<std::pair<Perm, Perm>> seen;
  std::vector<PairOrbit> out;
  for (const auto &g1 : elements_of_order(5))
    for (const auto &g2 : elements_of_order(2)) {
      if (seen.count({g1, g2}))
        continue;
      std::set<std::pair<Perm, Perm>> orb;
      std::size_t stabilizer = 0;
      for (const auto &x : a5().elements()) {
        std::pair<Perm, Perm> q{conj(c, g1, x), conj(c, g2, x)};
        stabilizer += q.first == g1 && q.second == g2;
        orb.insert(std::move(q));
      }
      seen.insert(orb.begin(), orb.end());
      PairOrbit o;
      o.representative = *orb.begin();
      o.size = orb.size();
      o.r = mul(c, g1, g2).order();
      o.free = stabilizer == 1;
      out.push_back(std::move(o));
    }
  return out;
}

std::size_t pair_orbit_of(const std::vector<PairOrbit> &orbits, Convention c, const std::pair<Perm, Perm> &p)
{
  std::pair<Perm, Perm> least = p;
  for (const auto &x : a5().elements())
    least = std::min(least, std::pair<Perm, Perm>{conj(c, p.first, x), conj(c, p.second, x)});
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].representative == least)
      return i;
  throw DomainError("pair lies in none of the given orbits");
}

std::vector<std::pair<Perm, Perm>> involution_factorizations(Convention c, const Perm &h)
{
  const int r = h.order();
  if (!a5().contains(h) || (r != 2 && r != 3 && r != 5))
    throw DomainError("factorizations are defined for elements of A5 of order 2, 3 or 5");
  std::vector<std::pair<Perm, Perm>> out;
  const auto inv = elements_of_order(2);
  for (const auto &h1 : inv)
    for (const auto &h2 : inv)
      if (mul(c, h1, h2) == h)
        out.emplace_back(h1, h2);
  return out;
}

GenTuple canonical(Convention c, const GenTuple &t)
{
  GenTuple least = t;
  for (const auto &x : a5().elements())
    least = std::min(least, conj(c, t, x));
  return least;
}

Enumeration enumerate_tuple_classes(Convention c, std::uint64_t shuffle_seed)
{
  auto fives = elements_of_order(5);
  auto twos = elements_of_order(2);
  if (shuffle_seed) {
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(fives.begin(), fives.end(), rng);
    std::shuffle(twos.begin(), twos.end(), rng);
  }
  const auto &a5c = chars::class_data(chars::GroupTag::A5);
  Enumeration out;
  std::map<GenTuple, TupleClass> classes;
  for (const auto &g1 : fives)
    for (const auto &g2 : twos)
      for (const auto &g3 : twos)
        for (const auto &g4 : twos) {
          GenTuple t{g1, g2, g3, g4};
          if (!tuple_product(c, t).is_identity())
            continue;
          ++out.candidates;
          if (!is_generating_tuple(c, t))
            continue;
          ++out.raw_tuples;
          GenTuple rep = canonical(c, t);
          if (classes.count(rep))
            continue;
          TupleClass tc;
          tc.representative = rep;
          tc.r = mul(c, rep[0], rep[1]).order();
          tc.g1_class = a5c.class_of_perm(rep[0]);
          classes.emplace(rep, std::move(tc));
        }
  for (auto &[rep, tc] : classes)
    out.classes.push_back(std::move(tc));
  return out;
}

GenTuple hurwitz_move(Convention c, int k, const GenTuple &t, bool inverse)
{
  if (k < 1 || k > 3)
    throw DomainError("braid generator index must be 1, 2 or 3");
  const auto i = static_cast<std::size_t>(k - 1);
  GenTuple out = t;
  if (!inverse) {
    out[i] = conj(c, t[i + 1], t[i]);
    out[i + 1] = t[i];
  } else {
    out[i] = t[i + 1];
    out[i + 1] = conj(c, t[i], t[i + 1].inverse());
  }
  return out;
}

const char *generator_set_name(GeneratorSet g)
{
  return g == GeneratorSet::Pure ? "pure" : "weighted";
}

std::vector<std::vector<std::size_t>> braid_orbits(Convention c, const std::vector<TupleClass> &classes, GeneratorSet gens)
{
  std::map<GenTuple, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i)
    index.emplace(classes[i].representative, i);

  // generator words as (k, power)
  std::vector<std::pair<int, int>> words;
  if (gens == GeneratorSet::Pure)
    words = {{1, 2}, {2, 2}, {3, 2}};
  else
    words = {{2, 1}, {3, 1}, {1, 2}};

  auto apply = [&](const GenTuple &t, int k, int power, bool inverse) {
    GenTuple u = t;
    for (int j = 0; j < power; ++j)
      u = hurwitz_move(c, k, u, inverse);
    return u;
  };

  std::vector<int> orbit_of(classes.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < classes.size(); ++s) {
    if (orbit_of[s] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members{s};
    orbit_of[s] = id;
    for (std::size_t q = 0; q < members.size(); ++q) {
      const GenTuple &t = classes[members[q]].representative;
      for (const auto &[k, power] : words)
        for (bool inverse : {false, true}) {
          auto it = index.find(canonical(c, apply(t, k, power, inverse)));
          if (it == index.end())
            throw InternalError("braid move left the set of tuple classes");
          if (orbit_of[it->second] < 0) {
            orbit_of[it->second] = id;
            members.push_back(it->second);
          }
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

GenTuple transport_move(Convention c, const GenTuple &t)
{
  const Perm g = mul(c, t[0], t[1]);
  return {t[0], t[1], conj(c, t[2], g), conj(c, t[3], g)};
}

GenTuple type_changing_move(Convention c, const GenTuple &t)
{
  const Perm a2i = t[1].inverse();
  return {conj(c, t[0], a2i), conj(c, t[1], t[2]), t[2], conj(c, t[3], a2i)};
}

std::vector<std::pair<std::pair<Perm, Perm>, int>> pair_representatives()
{
  return {{{p5("(12345)"), p5("(12)(35)")}, 2}, {{p5("(12354)"), p5("(12)(34)")}, 2},
          {{p5("(12345)"), p5("(12)(34)")}, 3}, {{p5("(12354)"), p5("(12)(45)")}, 3},
          {{p5("(12345)"), p5("(13)(25)")}, 5}, {{p5("(12354)"), p5("(13)(25)")}, 5}};
}

std::vector<std::pair<GenTuple, int>> reference_tuples()
{
  static const char *rows[10][4] = {
      {"(12345)", "(12)(35)", "(15)(34)", "(14)(35)"}, {"(12345)", "(12)(35)", "(14)(35)", "(15)(34)"},
      {"(12345)", "(12)(34)", "(15)(24)", "(24)(35)"}, {"(12345)", "(12)(34)", "(13)(24)", "(15)(24)"},
      {"(12345)", "(12)(34)", "(24)(35)", "(13)(24)"}, {"(12345)", "(13)(25)", "(14)(25)", "(15)(23)"},
      {"(12345)", "(13)(25)", "(12)(34)", "(24)(35)"}, {"(12345)", "(13)(25)", "(13)(45)", "(12)(34)"},
      {"(12345)", "(13)(25)", "(15)(23)", "(13)(45)"}, {"(12345)", "(13)(25)", "(24)(35)", "(14)(25)"}};
  static constexpr int r[10] = {2, 2, 3, 3, 3, 5, 5, 5, 5, 5};
  std::vector<std::pair<GenTuple, int>> out;
  for (std::size_t i = 0; i < 10; ++i)
    out.push_back({{p5(rows[i][0]), p5(rows[i][1]), p5(rows[i][2]), p5(rows[i][3])}, r[i]});
  return out;
}

std::vector<MoveExample> type_changing_examples()
{
  return {{{p5("(12345)"), p5("(12)(35)"), p5("(15)(34)"), p5("(14)(35)")}, p5("(15432)"), p5("(14)(25)"), p5("(13245)")},
          {{p5("(12345)"), p5("(13)(25)"), p5("(12)(34)"), p5("(24)(35)")}, p5("(14235)"), p5("(15)(24)"), p5("(354)")}};
}

} // namespace winger::hurwitz
