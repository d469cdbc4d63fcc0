#include "perm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <ostream>

#include "exactfield/errors.hpp"

namespace winger::perm {

Perm::Perm(std::vector<int> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("image sequence is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int degree)
{
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::parse(std::string_view text, int degree)
{
  std::vector<int> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  auto fail = [&](const std::string &why) {
    throw DomainError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(')
      fail("expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos)
      fail("unbalanced parenthesis");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::vector<int> cycle;
    bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    if (separated) {
      std::size_t i = 0;
      while (i < body.size()) {
        if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
          if (body[i] != ' ' && body[i] != ',' && body[i] != '\t')
            fail("unexpected character");
          ++i;
          continue;
        }
        int v = 0;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
          v = v * 10 + (body[i++] - '0');
        cycle.push_back(v);
      }
    } else {
      for (char d : body) {
        if (!std::isdigit(static_cast<unsigned char>(d)))
          fail("unexpected character");
        cycle.push_back(d - '0');
      }
    }
    for (int v : cycle) {
      if (v < 1 || v > degree)
        fail("point out of range");
      if (used[static_cast<std::size_t>(v - 1)])
        fail("point repeated");
      used[static_cast<std::size_t>(v - 1)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      im[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()] - 1;
  }
  return Perm(std::move(im));
}

Perm Perm::inverse() const
{
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(inv));
}

int Perm::order() const
{
  int ord = 1;
  for (const auto &c : cycles())
    ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

bool Perm::is_even() const
{
  std::size_t transpositions = 0;
  for (const auto &c : cycles())
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

int Perm::fixed_points() const
{
  int n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    n += images_[i] == static_cast<int>(i);
  return n;
}

std::vector<std::vector<int>> Perm::cycles() const
{
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i))
      continue;
    std::vector<int> c;
    int j = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
      j = images_[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const
{
  std::string s;
  for (const auto &c : cycles()) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k)
      s += (k ? " " : "") + std::to_string(c[k] + 1);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::string Perm::to_compact_string() const
{
  if (degree() > 9)
    return to_string();
  std::string s;
  for (const auto &c : cycles()) {
    s += "(";
    for (int v : c)
      s += static_cast<char>('1' + v);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::ostream &operator<<(std::ostream &os, const Perm &p)
{
  return os << p.to_string();
}

std::size_t PermHash::operator()(const Perm &p) const noexcept
{
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

Perm compose(const Perm &g, const Perm &h)
{
  if (g.degree() != h.degree())
    throw MismatchError("composing permutations of different degree");
  std::vector<int> im(static_cast<std::size_t>(g.degree()));
  for (int x = 0; x < g.degree(); ++x)
    im[static_cast<std::size_t>(x)] = g(h(x));
  return Perm(std::move(im));
}

Perm conjugate(const Perm &g, const Perm &x)
{
  return compose(x, compose(g, x.inverse()));
}

Perm power(const Perm &g, int k)
{
  Perm base = k < 0 ? g.inverse() : g;
  Perm acc = Perm::identity(g.degree());
  for (int i = 0; i < (k < 0 ? -k : k); ++i)
    acc = compose(acc, base);
  return acc;
}

GroupTable::GroupTable(std::vector<Perm> elements)
: elements_(std::move(elements))
{
  if (elements_.empty())
    throw DomainError("a group has at least one element");
  const int deg = elements_.front().degree();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree() != deg)
      throw MismatchError("group elements of different degree");
    if (!index_.emplace(elements_[i], i).second)
      throw DomainError("repeated group element");
  }
  if (!contains(Perm::identity(deg)))
    throw DomainError("element list lacks the identity");
  for (const auto &a : elements_) {
    if (!contains(a.inverse()))
      throw DomainError("element list not closed under inversion");
    for (const auto &b : elements_)
      if (!contains(compose(a, b)))
        throw DomainError("element list not closed under composition");
  }
}

std::optional<std::size_t> GroupTable::index_of(const Perm &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

GroupTable closure(std::span<const Perm> gens)
{
  if (gens.empty())
    throw DomainError("closure needs at least one generator");
  const int deg = gens.front().degree();
  std::vector<Perm> elems{Perm::identity(deg)};
  std::unordered_map<Perm, std::size_t, PermHash> seen{{elems.front(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &s : gens) {
      Perm p = compose(elems[i], s);
      if (seen.emplace(p, elems.size()).second)
        elems.push_back(std::move(p));
    }
  }
  return GroupTable(std::move(elems));
}

GroupTable closure(std::initializer_list<Perm> gens)
{
  return closure(std::span<const Perm>(gens.begin(), gens.size()));
}

GroupTable symmetric_group(int n)
{
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Perm> elems;
  do {
    elems.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return GroupTable(std::move(elems));
}

GroupTable alternating_group(int n)
{
  std::vector<Perm> elems;
  const GroupTable sym = symmetric_group(n);
  for (const auto &p : sym.elements())
    if (p.is_even())
      elems.push_back(p);
  return GroupTable(std::move(elems));
}

bool is_subgroup(const GroupTable &h, const GroupTable &g)
{
  return h.degree() == g.degree() &&
         std::all_of(h.elements().begin(), h.elements().end(), [&](const Perm &p) { return g.contains(p); });
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable &g)
{
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (cls[i] >= 0)
      continue;
    std::vector<std::size_t> members;
    for (const auto &x : g.elements()) {
      std::size_t j = *g.index_of(conjugate(g[i], x));
      if (cls[j] < 0) {
        cls[j] = static_cast<int>(out.size());
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

CosetAction coset_action(const GroupTable &g, const GroupTable &h)
{
  if (!is_subgroup(h, g))
    throw DomainError("coset action requires a subgroup");
  CosetAction act;
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] >= 0)
      continue;
    std::vector<std::size_t> members;
    for (const auto &y : h.elements()) {
      std::size_t j = *g.index_of(compose(g[i], y));
      coset_of[j] = static_cast<int>(act.cosets.size());
      members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    act.cosets.push_back(std::move(members));
  }
  act.images.reserve(g.order());
  for (const auto &a : g.elements()) {
    std::vector<int> im(act.cosets.size());
    for (std::size_t c = 0; c < act.cosets.size(); ++c) {
      std::size_t rep = act.cosets[c].front();
      im[c] = coset_of[*g.index_of(compose(a, g[rep]))];
    }
    act.images.emplace_back(std::move(im));
  }
  return act;
}

std::vector<Perm> elements_of_order(const GroupTable &g, int order)
{
  std::vector<Perm> out;
  for (const auto &p : g.elements())
    if (p.order() == order)
      out.push_back(p);
  return out;
}

} // namespace winger::perm
