#ifndef WINGER_HURWITZ_HURWITZ_HPP
#define WINGER_HURWITZ_HURWITZ_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perm/perm.hpp"

namespace winger::hurwitz {

using perm::GroupTable;
using perm::Perm;

/// How a written product ab is evaluated: Rtl means a(b(x)) (the right
/// factor acts first, as perm::compose), Ltr means b(a(x)).
enum class Convention { Rtl, Ltr };

const char *convention_name(Convention c);
/// Parses "rtl" or "ltr"; throws DomainError otherwise.
Convention parse_convention(const std::string &s);

Perm mul(Convention c, const Perm &a, const Perm &b);
/// x g x^-1 in the given convention.
Perm conj(Convention c, const Perm &g, const Perm &x);

using GenTuple = std::array<Perm, 4>;

std::string to_string(const GenTuple &t);
Perm tuple_product(Convention c, const GenTuple &t);
/// Orders (5,2,2,2), product identity, and the entries generate A5.
bool is_generating_tuple(Convention c, const GenTuple &t);
/// Simultaneous conjugation by x.
GenTuple conj(Convention c, const GenTuple &t, const Perm &x);
/// Elementwise inverse. Turns a tuple valid in one convention into one valid
/// in the other.
GenTuple inverted(const GenTuple &t);

const GroupTable &a5();
/// Elements of A5 of order r.
std::vector<Perm> elements_of_order(int r);

struct OrderSets
{
  std::size_t order2 = 0, order3 = 0, order5 = 0;
};

OrderSets order_sets();

struct PairOrbit
{
  std::pair<Perm, Perm> representative;
  std::size_t size = 0;
  /// Order of g1 g2, constant on the orbit.
  int r = 0;
  /// Every pair in the orbit has a trivial stabilizer.
  bool free = false;
};

/// Orbits of A5 acting by simultaneous conjugation on A5(5) x A5(2).
std::vector<PairOrbit> pair_orbits(Convention c);

/// Index of the orbit containing the pair; throws DomainError if none.
std::size_t pair_orbit_of(const std::vector<PairOrbit> &orbits, Convention c, const std::pair<Perm, Perm> &p);

/// Pairs (h1, h2) of involutions with h1 h2 = h. Throws DomainError unless h
/// has order 2, 3 or 5.
std::vector<std::pair<Perm, Perm>> involution_factorizations(Convention c, const Perm &h);

struct TupleClass
{
  /// Least element of the conjugation orbit.
  GenTuple representative;
  /// Order of g1 g2.
  int r = 0;
  /// A5 class of g1: 3 for (12345), 4 for (12354) (column order of the
  /// character table).
  std::size_t g1_class = 0;
};

/// Least tuple in the simultaneous-conjugation orbit.
GenTuple canonical(Convention c, const GenTuple &t);

struct Enumeration
{
  std::vector<TupleClass> classes;
  /// Raw tuples in A5(5) x A5(2)^3 that pass the filter.
  std::size_t raw_tuples = 0;
  std::size_t candidates = 0;
};

/// Brute force over A5(5) x A5(2)^3. A nonzero seed shuffles the iteration
/// order; the result does not depend on it.
Enumeration enumerate_tuple_classes(Convention c, std::uint64_t shuffle_seed = 0);

/// Braid move sigma_k (k = 1..3): (a_k, a_k+1) -> (a_k a_k+1 a_k^-1, a_k);
/// the inverse move is (a_k, a_k+1) -> (a_k+1, a_k+1^-1 a_k a_k+1).
GenTuple hurwitz_move(Convention c, int k, const GenTuple &t, bool inverse = false);

enum class GeneratorSet {
  Pure,    // sigma_1^2, sigma_2^2, sigma_3^2
  Weighted // sigma_2, sigma_3, sigma_1^2
};

const char *generator_set_name(GeneratorSet g);

/// Partition of the classes (indices into `classes`) into orbits under the
/// generator set.
std::vector<std::vector<std::size_t>> braid_orbits(Convention c, const std::vector<TupleClass> &classes, GeneratorSet gens);

/// (a1, a2, (a1a2) a3 (a1a2)^-1, (a1a2) a4 (a1a2)^-1).
GenTuple transport_move(Convention c, const GenTuple &t);
/// (a2^-1 a1 a2, a3 a2 a3^-1, a3, a2^-1 a4 a2).
GenTuple type_changing_move(Convention c, const GenTuple &t);

/// Six representatives of the pair orbits on
/// A5(5) x A5(2), each with the order of g1 g2.
std::vector<std::pair<std::pair<Perm, Perm>, int>> pair_representatives();
/// Ten reference tuples with g1 = (12345), with their order of g1 g2.
std::vector<std::pair<GenTuple, int>> reference_tuples();

struct MoveExample
{
  GenTuple input;
  Perm expected_first, expected_second, expected_product;
};

/// The two worked examples of the type-changing move.
std::vector<MoveExample> type_changing_examples();

} // namespace winger::hurwitz

#endif // WINGER_HURWITZ_HURWITZ_HPP
