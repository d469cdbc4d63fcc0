#ifndef WINGER_GEOMETRY_GROUP_HPP
#define WINGER_GEOMETRY_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "characters/characters.hpp"
#include "geometry/pencil.hpp"
#include "perm/perm.hpp"

namespace winger::geometry {

using perm::Perm;

struct LineSearch
{
  /// Normalized solutions, in lexicographic order of the line permutation.
  std::vector<MatrixF> matrices;
  /// The line permutation realized by each solution (0-based).
  std::vector<Perm> line_perms;
  std::size_t permutations_tried = 0;
};

/**
 * For every bijection s of the six lines, solves for M with
 * line[s(i)] * M proportional to line[i] (row vectors), i.e. the substitution
 * z -> M z carries the line set to itself. Solutions are rescaled so that
 * M^T A M = A and det M = 1; throws CheckError when the required scalar is
 * not in the field.
 */
LineSearch search_line_symmetries(const std::vector<LineForm> &lines, int threads = 0);
LineSearch search_line_symmetries();

/// A finite group of 3x3 matrices isomorphic to A5, with its structure.
struct IcosaGroup
{
  std::vector<MatrixF> elements;
  /// table[i][j] is the index of elements[i] * elements[j].
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;
  std::vector<int> orders;
  /// Conjugacy classes in the A5 column order (1), (12)(34), (123),
  /// (12345), (12354) under the isomorphism below.
  std::vector<std::vector<std::size_t>> classes;
  /// Isomorphism to A5 from the conjugation action on the five Klein
  /// four-subgroups, numbered by their smallest element index.
  std::vector<Perm> to_a5;
  /// Trace as a class function.
  chars::ClassFunction trace_character{chars::trivial_character(chars::GroupTag::A5)};
  /// "I" or "I'", whichever irreducible the trace character equals.
  std::string character_label;

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const MatrixF &m) const;
  std::vector<std::size_t> class_sizes() const;

  std::map<MatrixF, std::size_t> index;
};

/// Validates closure and builds the structure data. Throws CheckError when
/// the matrices do not form a group isomorphic to A5 whose trace is
/// I or I'.
IcosaGroup analyze_group(std::vector<MatrixF> matrices);

/// search_line_symmetries() followed by analyze_group().
IcosaGroup reconstruct_group();

/// Group orbit of a point, sorted.
std::vector<ProjPoint> orbit(const std::vector<MatrixF> &group, const ProjPoint &p);

/// Fixed point of a matrix: the eigenvector for the given eigenvalue, which
/// must span a line.
ProjPoint eigen_point(const MatrixF &m, const CycloNum &eigenvalue);

struct IrregularOrbits
{
  /// Orbits of the fixed points of order-5, order-3 and order-2 elements.
  std::vector<ProjPoint> six, ten, fifteen;
  /// Orbit of the eta-eigenvector of diag(eta, eta^4, 1), on the conic.
  std::vector<ProjPoint> twelve;
};

/// Throws CheckError on an unexpected orbit size.
IrregularOrbits irregular_orbits(const IcosaGroup &g);

} // namespace winger::geometry

#endif // WINGER_GEOMETRY_GROUP_HPP
