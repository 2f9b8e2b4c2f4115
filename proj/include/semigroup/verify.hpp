#pragma once

// Cross-checking harness: closed forms against the brute-force engine over
// parameter grids, plus seeded property runs for the structural facts the
// closed forms rest on.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semigroup/closed_forms.hpp"
#include "semigroup/integer.hpp"

namespace semigroup {

struct IntRange {
  long lo = 0;
  long hi = 0;  // inclusive
};

struct GridSpec {
  IntRange a{2, 60};
  IntRange b{2, 5};
  IntRange d{1, 5};
  IntRange k{1, 4};
  bool check_apery = true;
  bool check_pf = false;
  bool check_monotone = false;
  bool include_hypothesis_violations = false;
  // Cases whose modulus exceeds this are skipped, not run.
  std::size_t oracle_cutoff = 100'000;
  // Added to every closed-form Frobenius value; non-zero only to exercise the
  // mismatch path end to end.
  long inject_offset = 0;
};

/// Throws InvalidInput if a bound is below its module minimum or a range is empty.
void validate(const GridSpec& grid);

struct Mismatch {
  FamilyParams params;
  std::string quantity;
  std::string closed_value;
  std::string oracle_value;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::map<std::string, std::size_t> skipped;  // reason -> count
  std::vector<Mismatch> mismatches;            // sorted, failures
  // Cases outside a >= k - 1; informative only, never failures.
  std::size_t probe_cases = 0;
  std::vector<Mismatch> divergences;
  double elapsed_seconds = 0;

  bool ok() const { return mismatches.empty(); }
};

/// Runs every admissible case of the grid. `jobs` workers share the case list;
/// the report does not depend on `jobs`.
VerifyReport cross_check(const GridSpec& grid, unsigned jobs = 1);

/// Checks one parameter set against the oracle; used by cross_check and to
/// re-run a reported mismatch in isolation.
std::vector<Mismatch> check_case(const FamilyParams& p, const GridSpec& grid);

/// Exhaustive O_B^H(M): least sum of b^i x_i over all x with
/// sum x_i (b^i-1)/(b-1) = M. Values for M = 0..last.
std::vector<std::int64_t> weighted_change_table(long b, std::size_t k, std::size_t last);

/// Seeded property run over the three structural properties:
///   - B(b,k) is orderly (One-Point certificate vs exhaustive comparison)
///   - colex order on greedy presentations is monotone in weight
///   - N_dr(m) = O_B^H(m a + r) a + (m a + r) d is non-decreasing in m, and
///     N_dr(0) agrees with n_dr
/// Each budget unit samples one parameter set and runs all three.
VerifyReport property_suite(std::uint64_t seed, std::size_t budget);

}  // namespace semigroup
