#ifndef WINGER_PERM_PERM_HPP
#define WINGER_PERM_PERM_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace winger::perm {

/**
 * Permutation of {0, ..., degree-1}; printed and parsed 1-based in cycle
 * notation.
 *
 * Composition convention: compose(g, h)(x) = g(h(x)), i.e. the right factor
 * acts first. A product g1 g2 ... gk means compose(g1, compose(g2, ...)).
 */
class Perm
{
public:
  Perm() = default;
  /// images[i] is the image of point i (0-based); must be a bijection.
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  /// Cycle notation: "(1 2 3 4 5)", "(1,2)(3,5)", or compact "(12345)" when
  /// every point is a single digit. "()" and "" are the identity.
  static Perm parse(std::string_view cycles, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int> &images() const { return images_; }

  Perm inverse() const;
  int order() const;
  bool is_identity() const;
  bool is_even() const;
  int fixed_points() const;
  /// Cycle decomposition, 0-based, cycles of length >= 2 starting at their
  /// smallest point.
  std::vector<std::vector<int>> cycles() const;

  /// "(1 2 3 4 5)"; "()" for the identity.
  std::string to_string() const;
  /// "(12345)" with unspaced digits; spaced form above degree 9.
  std::string to_compact_string() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend std::strong_ordering operator<=>(const Perm &a, const Perm &b) { return a.images_ <=> b.images_; }

private:
  std::vector<int> images_;
};

std::ostream &operator<<(std::ostream &os, const Perm &p);

struct PermHash
{
  std::size_t operator()(const Perm &p) const noexcept;
};

/// (g o h)(x) = g(h(x)).
Perm compose(const Perm &g, const Perm &h);
/// x g x^-1.
Perm conjugate(const Perm &g, const Perm &x);
/// g^k for any integer k.
Perm power(const Perm &g, int k);

/// Explicit finite permutation group.
class GroupTable
{
public:
  GroupTable() = default;
  /// Validates that the elements are distinct, of one degree, contain the
  /// identity and are closed under composition and inversion.
  explicit GroupTable(std::vector<Perm> elements);

  std::size_t order() const { return elements_.size(); }
  int degree() const { return elements_.empty() ? 0 : elements_.front().degree(); }
  const std::vector<Perm> &elements() const { return elements_; }
  const Perm &operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm &p) const;
  bool contains(const Perm &p) const { return index_of(p).has_value(); }

private:
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Breadth-first closure of the generators under composition.
GroupTable closure(std::span<const Perm> gens);
GroupTable closure(std::initializer_list<Perm> gens);

GroupTable symmetric_group(int n);
GroupTable alternating_group(int n);

/// True when every element of h lies in g.
bool is_subgroup(const GroupTable &h, const GroupTable &g);

/// Conjugacy classes as lists of element indices, ordered by the index of
/// their first element.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable &g);

/// Permutation representation of G on the left cosets of H.
struct CosetAction
{
  /// cosets[c] lists the G-indices of the elements of the c-th coset.
  std::vector<std::vector<std::size_t>> cosets;
  /// images[i] is the permutation of cosets induced by G element i.
  std::vector<Perm> images;
};

/// Left multiplication on the left cosets gH. Throws DomainError when H is
/// not a subgroup of G.
CosetAction coset_action(const GroupTable &g, const GroupTable &h);

/// Elements of the given order.
std::vector<Perm> elements_of_order(const GroupTable &g, int order);

} // namespace winger::perm

#endif // WINGER_PERM_PERM_HPP
