#ifndef WINGER_COVERS_COVERS_HPP
#define WINGER_COVERS_COVERS_HPP

#include <string>
#include <vector>

#include "characters/characters.hpp"
#include "hurwitz/hurwitz.hpp"

namespace winger::covers {

using hurwitz::Convention;
using hurwitz::GenTuple;

/// 60 - 60/n: the contribution of an orbit with stabilizer of order n to the
/// ramification of the quotient by A5. Throws DomainError unless n is 1, 2,
/// 3 or 5.
int alpha_value(int stabilizer_order);

struct OrbSignature
{
  int genus = 0;
  /// Stabilizer orders, largest first.
  std::vector<int> orders;

  std::string to_string() const;
  friend bool operator==(const OrbSignature &, const OrbSignature &) = default;
};

/// All (g; n1, ..., nk) with 120 g + sum alpha(n_i) = 2 * 10 - 2 + 120, i.e.
/// quotients of a genus-10 curve with faithful A5-action.
std::vector<OrbSignature> signature_solutions(int curve_genus = 10);

/// Genus g of a Galois cover of degree N of a genus-b curve with the given
/// branch orders: 2g - 2 = N(2b - 2) + sum N(1 - 1/o). Throws DomainError
/// when some order does not divide N and CheckError when g is not a
/// nonnegative integer.
int regular_cover_genus(int group_order, const std::vector<int> &branch_orders, int base_genus);

struct DegenerationReport
{
  /// Order of g3 g4.
  int n = 0;
  /// Nodes.
  int e = 0;
  /// Components.
  int v = 0;
  /// Genus of each component.
  int component_genus = 0;
  int subgroup_order = 0;
  /// Arithmetic genus, sum of genera + 1 - v + e.
  int arithmetic_genus = 0;

  std::string to_string() const;
  friend bool operator==(const DegenerationReport &, const DegenerationReport &) = default;
};

/// Coalesces the last two branch points of a (5,2,2,2) tuple. Throws
/// DomainError for a tuple that is not generating or whose g3 g4 has order
/// outside {2, 3, 5}.
DegenerationReport degeneration_report(Convention c, const GenTuple &t);

struct HomologyCheck
{
  chars::ClassFunction lattice_character;
  chars::Decomposition decomposition;
  chars::Decomposition doubled;
  bool equals_sym_cube = false;
  bool passed = false;
};

/// Signed permutation character induced from the sign of S3 = <(123),(12)(45)>
/// and its decompositions.
HomologyCheck homology_character_check();

} // namespace winger::covers

#endif // WINGER_COVERS_COVERS_HPP
