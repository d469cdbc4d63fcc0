#ifndef WINGER_CHARACTERS_CHARACTERS_HPP
#define WINGER_CHARACTERS_CHARACTERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "exactfield/cyclo.hpp"
#include "perm/perm.hpp"

namespace winger::chars {

using field::CycloNum;
using perm::GroupTable;
using perm::Perm;

enum class GroupTag { A5, S5 };

const char *tag_name(GroupTag tag);

/**
 * Conjugacy-class data of A5 or S5 in the fixed column order
 *   A5: (1), (12)(34), (123), (12345), (12354)
 *   S5: (1), (12), (12)(34), (123), (123)(45), (1234), (12345)
 */
struct ClassData
{
  GroupTag tag;
  GroupTable group;
  std::vector<Perm> representatives;
  std::vector<std::size_t> sizes;
  /// class_of[i] is the class of group element i.
  std::vector<std::size_t> class_of;

  std::size_t class_count() const { return representatives.size(); }
  std::size_t class_of_perm(const Perm &p) const;
};

const ClassData &class_data(GroupTag tag);

/// power_map[c] is the class of g^k for g in class c.
std::vector<std::size_t> power_map(GroupTag tag, int k);

class ClassFunction
{
public:
  ClassFunction(GroupTag tag, std::vector<CycloNum> values);

  GroupTag tag() const { return tag_; }
  const std::vector<CycloNum> &values() const { return values_; }
  const CycloNum &operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const { return values_.size(); }

  /// Value at an arbitrary group element.
  const CycloNum &at(const Perm &g) const;
  ClassFunction conj() const;
  std::string to_string() const;

  ClassFunction &operator+=(const ClassFunction &o);
  ClassFunction &operator-=(const ClassFunction &o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction &b) { return a -= b; }
  friend ClassFunction operator*(const CycloNum &s, ClassFunction a);
  friend bool operator==(const ClassFunction &, const ClassFunction &) = default;

private:
  GroupTag tag_;
  std::vector<CycloNum> values_;
};

ClassFunction trivial_character(GroupTag tag);
/// Number of fixed points of the natural action on {1..degree}.
ClassFunction permutation_character(GroupTag tag);
/// Permutation character of the action on the left cosets of h.
ClassFunction coset_character(GroupTag tag, const GroupTable &h);

struct CharacterTable
{
  std::vector<std::string> labels;
  std::vector<ClassFunction> rows;

  const ClassFunction &operator[](const std::string &label) const;
};

/// Irreducible characters of A5 labelled "1", "I", "I'", "V", "W". Throws
/// InternalError when the assembled rows are not orthonormal.
const CharacterTable &a5_table();

/// (1/|G|) sum over classes of size * chi * conj(psi).
CycloNum inner_product(const ClassFunction &chi, const ClassFunction &psi);

struct PowerMaps
{
  std::vector<std::size_t> square;
  std::vector<std::size_t> cube;
};

PowerMaps power_maps(GroupTag tag);

/// chi_{Sym^3}(g) = (chi(g)^3 + 3 chi(g^2) chi(g) + 2 chi(g^3)) / 6.
ClassFunction sym_cube(const ClassFunction &chi, const PowerMaps &maps);
ClassFunction sym_cube(const ClassFunction &chi);

using Decomposition = std::vector<std::pair<std::string, long>>;

/// Multiplicities of the A5 irreducibles with nonzero coefficient, in table
/// order. Throws DomainError unless every multiplicity is a nonnegative
/// integer.
Decomposition decompose(const ClassFunction &chi);
std::string to_string(const Decomposition &d);

/// Induction from a subgroup h of A5 of the class function given by its values
/// on h's elements (values[i] belongs to h[i]). Throws DomainError when h is
/// not a subgroup of A5 or the values are not constant on h-classes.
ClassFunction induced_character(const GroupTable &h, const std::vector<CycloNum> &values);

/// Restriction of an S5 class function to A5.
ClassFunction restrict_to_a5(const ClassFunction &chi);

/// The six-dimensional S5 character E = (6, 0, -2, 0, 0, 0, 1).
ClassFunction s5_six_dimensional();
ClassFunction s5_sign();

} // namespace winger::chars

#endif // WINGER_CHARACTERS_CHARACTERS_HPP
