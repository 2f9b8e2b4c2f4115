#pragma once

// Closed-form Frobenius number, genus, Apery set and pseudo-Frobenius set for
// the generator family
//
//   A(a,b,d,k) = (a, b a + d, b^2 a + (b^2-1)/(b-1) d, ..., b^k a + (b^k-1)/(b-1) d)
//
// with gcd(a,d) = 1. The formulas hold when a >= k - 1; every public entry
// point below rejects parameters outside that range. The `unchecked` variants
// evaluate the same expressions without the range check so that the verify
// harness can chart what happens there.

#include <cstddef>
#include <string>
#include <vector>

#include "semigroup/core.hpp"
#include "semigroup/integer.hpp"

namespace semigroup {

struct FamilyParams {
  Integer a;
  Integer b;
  Integer d;
  std::size_t k = 1;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

std::string describe(const FamilyParams& p);

/// Throws InvalidInput unless a >= 2, b >= 2, d >= 1, k >= 1 and gcd(a,d) = 1.
void validate(const FamilyParams& p);

/// validate() plus the a >= k - 1 requirement of the closed forms.
void validate_closed(const FamilyParams& p);

bool within_closed_range(const FamilyParams& p);

GeneratorList build_generators(const FamilyParams& p);

/// N_{dr}: the least element of the semigroup congruent to d*r mod a.
Integer n_dr(const FamilyParams& p, const Integer& r);

/// Closed-form Apery set of a; slot (d*r mod a) holds n_dr(p, r).
AperySet apery_closed(const FamilyParams& p, const OracleOptions& options = {});

Integer frobenius_closed(const FamilyParams& p);

enum class SeriesMethod { recurrence, iterate };

/// The digit-sum series sum_{r=1}^{a-1} (sum_i x_i)_r is evaluated either by
/// the block recurrence (any a) or by iterating presentations (desk scale).
Integer genus_closed(const FamilyParams& p, SeriesMethod method = SeriesMethod::recurrence);

/// Repunit specialization a = (b^n-1)/(b-1), k = n-1.
FamilyParams repunit_general_params(const Integer& b, std::size_t n, const Integer& d);

Integer repunit_general_frobenius(const Integer& b, std::size_t n, const Integer& d);
Integer repunit_general_genus(const Integer& b, std::size_t n, const Integer& d);

struct PseudoFrobenius {
  std::vector<Integer> pf;  // ascending
  std::size_t type = 0;
};

/// {F - (n-2) d, ..., F - d, F} for the repunit specialization; type n - 1.
PseudoFrobenius pf_closed(const Integer& b, std::size_t n, const Integer& d);

/// Report from closed forms. PF comes from the repunit specialization when the
/// parameters are one; otherwise from the closed Apery set, which needs a to fit
/// under the residue cap.
SemigroupReport closed_report(const FamilyParams& p, const OracleOptions& options = {});

/// True when p is the repunit specialization for some n >= 2; sets n.
bool is_repunit_specialization(const FamilyParams& p, std::size_t* n = nullptr);

namespace unchecked {

Integer frobenius_formula(const FamilyParams& p);
Integer genus_formula(const FamilyParams& p);

}  // namespace unchecked

}  // namespace semigroup
