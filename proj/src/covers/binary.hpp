#ifndef WINGER_COVERS_BINARY_HPP
#define WINGER_COVERS_BINARY_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "exactfield/cyclo.hpp"

namespace winger::covers {

using field::CycloNum;

/// a + b i + c j + d k over a cyclotomic field.
struct Quaternion
{
  std::array<CycloNum, 4> c;

  static Quaternion one();
  Quaternion conj() const;
  CycloNum norm() const;
  std::string to_string() const;

  friend Quaternion operator*(const Quaternion &x, const Quaternion &y);
  friend Quaternion operator-(const Quaternion &x);
  friend bool operator==(const Quaternion &, const Quaternion &) = default;
  friend std::strong_ordering operator<=>(const Quaternion &, const Quaternion &) = default;
};

/// The 24 Hurwitz units and the 96 even coordinate permutations of
/// (0, +-1, +-phi^-1, +-phi) / 2, over Q(sqrt 5) inside Q(zeta_5).
std::vector<Quaternion> icosian_units();

struct BinaryIcosahedralReport
{
  std::size_t order = 0;
  bool unit_norms = false;
  bool closed = false;
  std::size_t center_order = 0;
  std::size_t commutator_order = 0;
  std::size_t abelianization_order = 0;
  /// Class sizes of the quotient by the center, ascending.
  std::vector<std::size_t> quotient_class_sizes;
  bool passed = false;

  std::string to_string() const;
};

/// Builds the units and checks closure, the center, perfectness and the
/// class sizes of the quotient by the center. Throws CheckError if the
/// units do not close under multiplication.
BinaryIcosahedralReport binary_icosahedral_checks();

} // namespace winger::covers

#endif // WINGER_COVERS_BINARY_HPP
