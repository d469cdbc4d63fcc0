#include "covers/binary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exactfield/errors.hpp"
#include "perm/perm.hpp"

namespace winger::covers {

Quaternion Quaternion::one()
{
  return {{CycloNum(1), CycloNum(), CycloNum(), CycloNum()}};
}

Quaternion Quaternion::conj() const
{
  return {{c[0], -c[1], -c[2], -c[3]}};
}

CycloNum Quaternion::norm() const
{
  return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
}

std::string Quaternion::to_string() const
{
  return "(" + c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string() + ", " + c[3].to_string() + ")";
}

Quaternion operator*(const Quaternion &x, const Quaternion &y)
{
  const auto &[a1, b1, c1, d1] = x.c;
  const auto &[a2, b2, c2, d2] = y.c;
  return {{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
           a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
}

Quaternion operator-(const Quaternion &x)
{
  return {{-x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}

std::vector<Quaternion> icosian_units()
{
  const CycloNum half(field::Rational(1, 2));
  const CycloNum phi = field::golden_ratio();
  std::vector<Quaternion> out;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Quaternion q;
      q.c[static_cast<std::size_t>(i)] = CycloNum(s);
      out.push_back(q);
    }
  for (int signs = 0; signs < 16; ++signs) {
    Quaternion q;
    for (std::size_t i = 0; i < 4; ++i)
      q.c[i] = (signs >> i & 1) ? -half : half;
    out.push_back(q);
  }
  const std::array<CycloNum, 4> base{CycloNum(), half, (phi - CycloNum(1)) * half, phi * half};
  std::array<int, 4> pos{0, 1, 2, 3};
  do {
    if (!perm::Perm(std::vector<int>(pos.begin(), pos.end())).is_even())
      continue;
    for (int signs = 0; signs < 8; ++signs) {
      Quaternion q;
      for (std::size_t i = 0; i < 4; ++i) {
        CycloNum v = base[i];
        if (i > 0 && (signs >> (i - 1) & 1))
          v = -v;
        q.c[static_cast<std::size_t>(pos[i])] = v;
      }
      out.push_back(q);
    }
  } while (std::next_permutation(pos.begin(), pos.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string BinaryIcosahedralReport::to_string() const
{
  std::string s = "order " + std::to_string(order) + ", center " + std::to_string(center_order) +
                  ", commutator subgroup " + std::to_string(commutator_order) + ", abelianization " +
                  std::to_string(abelianization_order) + ", quotient classes {";
  for (std::size_t i = 0; i < quotient_class_sizes.size(); ++i)
    s += (i ? "," : "") + std::to_string(quotient_class_sizes[i]);
  return s + "}";
}

BinaryIcosahedralReport binary_icosahedral_checks()
{
  const auto units = icosian_units();
  const std::size_t n = units.size();
  std::map<Quaternion, int> index;
  for (std::size_t i = 0; i < n; ++i)
    index.emplace(units[i], static_cast<int>(i));

  BinaryIcosahedralReport r;
  r.order = index.size();
  r.unit_norms = std::all_of(units.begin(), units.end(), [](const Quaternion &q) { return q.norm().is_one(); });

  // left regular representation
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(units[i] * units[j]);
      if (it == index.end())
        throw CheckError("product " + units[i].to_string() + " * " + units[j].to_string() + " leaves the set");
      table[i][j] = it->second;
    }
  r.closed = true;
  std::vector<perm::Perm> regular;
  for (const auto &row : table)
    regular.emplace_back(row);
  const perm::GroupTable g(regular);

  for (std::size_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < n && central; ++j)
      central = table[i][j] == table[j][i];
    r.center_order += central;
  }

  std::set<int> commutators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int ii = index.at(units[i].conj()), jj = index.at(units[j].conj());
      commutators.insert(table[static_cast<std::size_t>(table[static_cast<std::size_t>(table[i][j])][static_cast<std::size_t>(ii)])]
                              [static_cast<std::size_t>(jj)]);
    }
  std::vector<perm::Perm> gens;
  for (int c : commutators)
    gens.push_back(regular[static_cast<std::size_t>(c)]);
  r.commutator_order = perm::closure(gens).order();
  r.abelianization_order = r.order / r.commutator_order;

  // classes of the quotient by {+-1}: unions of a class and its negative
  const auto classes = perm::conjugacy_classes(g);
  std::vector<int> class_of(n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto i : classes[c])
      class_of[i] = static_cast<int>(c);
  std::set<std::set<int>> merged;
  for (std::size_t i = 0; i < n; ++i)
    merged.insert({class_of[i], class_of[static_cast<std::size_t>(index.at(-units[i]))]});
  for (const auto &m : merged) {
    std::size_t size = 0;
    for (int c : m)
      size += classes[static_cast<std::size_t>(c)].size();
    r.quotient_class_sizes.push_back(size / 2);
  }
  std::sort(r.quotient_class_sizes.begin(), r.quotient_class_sizes.end());

  r.passed = r.order == 120 && r.unit_norms && r.closed && r.center_order == 2 && r.abelianization_order == 1 &&
             r.quotient_class_sizes == std::vector<std::size_t>{1, 12, 12, 15, 20};
  return r;
}

} // namespace winger::covers
