#ifndef WINGER_REPORT_REPORT_HPP
#define WINGER_REPORT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/hurwitz.hpp"

namespace winger::report {

enum class Status { Pass, Fail, Skipped };

const char *status_name(Status s);

struct Claim
{
  std::string id;
  std::string description;
  Status status = Status::Fail;
  /// Exact values backing the verdict; never empty for a pass.
  std::string witness;
  long long millis = 0;
};

/// Human-readable table printed ahead of the claims.
struct Table
{
  std::string title;
  std::vector<std::string> lines;
};

struct Report
{
  std::string version;
  std::string convention;
  std::vector<Claim> claims;
  std::vector<Table> tables;

  std::size_t failed_count() const;
  const Claim *find(const std::string &id) const;
  /// {"version", "convention", "claims": [{id, description, status, witness, millis}]}
  std::string to_json() const;
  std::string to_text() const;
};

enum class Suite { Characters, Invariants, Pencil, Tuples, Orbits, Covers, Degenerations, Homology, Binary, All };

const char *suite_name(Suite s);
/// Throws DomainError for an unknown name.
Suite parse_suite(const std::string &name);
const std::vector<std::string> &suite_names();

/// Adds 1 to entry (row-major, 0..8) of one of the 60 reconstructed matrices.
struct MatrixCorruption
{
  std::size_t element = 0;
  std::size_t entry = 0;
};

struct Options
{
  hurwitz::Convention convention = hurwitz::Convention::Rtl;
  bool deep = false;
  bool timing = false;
  /// Digits of the decimal embeddings shown in tables.
  int digits = 12;
  /// Adds 1 to the coefficient of the k-th degree-6 monomial of F (0..27,
  /// highest lexicographic exponent first).
  std::optional<std::size_t> corrupt_f;
  std::optional<MatrixCorruption> corrupt_matrix;
  /// Worker threads for the parallel searches; 0 picks the hardware count.
  unsigned threads = 0;
};

/// Claim ids of the acceptance criteria 1..13, in order.
const std::vector<std::string> &criterion_ids();

const char *version();

/// Runs the claims of a suite. An Error raised inside a claim marks it
/// failed; any other exception propagates. Throws DomainError for
/// out-of-range corruption indices or digits.
Report run_suite(Suite suite, const Options &opts);

} // namespace winger::report

#endif // WINGER_REPORT_REPORT_HPP
