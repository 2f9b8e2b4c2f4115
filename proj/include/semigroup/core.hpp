#pragma once

// Family-agnostic numerical semigroup engine.
//
// Everything is derived from the Apery set of the least generator a: the
// list N_0..N_{a-1} where N_r is the smallest element of the semigroup that
// is congruent to r modulo a. Membership, gaps, the Frobenius number, the
// genus and the pseudo-Frobenius numbers all follow from that list.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "semigroup/integer.hpp"

namespace semigroup {

inline constexpr std::size_t kDefaultResidueCap = 10'000'000;

/// Limits that keep the brute-force engine at desk scale.
struct OracleOptions {
  std::size_t residue_cap = kDefaultResidueCap;
  std::size_t gap_cap = 100'000'000;  // longest gap list `gaps` will materialize
};

/// Sorted, duplicate-free generators with gcd 1.
class GeneratorList {
 public:
  /// Sorts and dedupes; throws InvalidInput on an empty list, a non-positive
  /// element or gcd != 1.
  explicit GeneratorList(std::vector<Integer> elements);

  /// Parses "5,11,23".
  static GeneratorList parse(std::string_view csv);

  const std::vector<Integer>& elements() const { return elements_; }
  const Integer& least() const { return elements_.front(); }
  std::size_t size() const { return elements_.size(); }

  friend bool operator==(const GeneratorList&, const GeneratorList&) = default;

 private:
  std::vector<Integer> elements_;
};

class AperySet {
 public:
  /// Validates the shape: minima.size() == modulus, minima[0] == 0 and
  /// minima[r] == r (mod modulus). Throws ConsistencyError otherwise.
  AperySet(std::size_t modulus, std::vector<Integer> minima);

  std::size_t modulus() const { return modulus_; }
  const std::vector<Integer>& minima() const { return minima_; }
  const Integer& operator[](std::size_t r) const { return minima_[r]; }

  friend bool operator==(const AperySet&, const AperySet&) = default;

 private:
  std::size_t modulus_;
  std::vector<Integer> minima_;
};

enum class Engine { oracle, closed_form };

std::string_view to_string(Engine engine);

struct SemigroupReport {
  Integer frobenius;
  Integer genus;
  std::vector<Integer> pf;  // ascending
  std::size_t type = 0;
  Engine engine = Engine::oracle;

  friend bool operator==(const SemigroupReport&, const SemigroupReport&) = default;
};

/// Shortest paths over Z_a with an edge r -> r + g (mod a) of weight g for each
/// generator g other than a.
AperySet apery_set(const GeneratorList& gens, const OracleOptions& options = {});

Integer frobenius_from_apery(const AperySet& ape);
Integer genus_from_apery(const AperySet& ape);

/// n is in the semigroup iff n >= N_{n mod a}. Negative n is never a member.
bool contains(const AperySet& ape, const Integer& n);

/// All positive non-members, ascending.
std::vector<Integer> gaps(const AperySet& ape, const OracleOptions& options = {});

/// {w - a : w maximal in the Apery set under w <= w' iff w' - w is a member}.
/// Quadratic in the modulus.
std::vector<Integer> pseudo_frobenius_from_apery(const AperySet& ape,
                                                 const OracleOptions& options = {});

SemigroupReport report_from_apery(const AperySet& ape, Engine engine,
                                  const OracleOptions& options = {});

/// apery_set followed by report_from_apery.
SemigroupReport oracle_report(const GeneratorList& gens, const OracleOptions& options = {});

}  // namespace semigroup
