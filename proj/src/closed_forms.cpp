#include "semigroup/closed_forms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "semigroup/changemaking.hpp"
#include "semigroup/errors.hpp"

namespace semigroup {

namespace {

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (floor_mod(num, den) != 0) throw ConsistencyError(std::string(what) + " is not integral");
  return num / den;
}

void validate_repunit(const Integer& b, std::size_t n, const Integer& d) {
  if (n < 2) throw InvalidInput("n must be at least 2, got " + std::to_string(n));
  validate(repunit_general_params(b, n, d));
}

}  // namespace

std::string describe(const FamilyParams& p) {
  return "(a=" + to_string(p.a) + ", b=" + to_string(p.b) + ", d=" + to_string(p.d) +
         ", k=" + std::to_string(p.k) + ")";
}

void validate(const FamilyParams& p) {
  if (p.a < 2) throw InvalidInput("a must be at least 2 in " + describe(p));
  if (p.b < 2) throw InvalidInput("b must be at least 2 in " + describe(p));
  if (p.d < 1) throw InvalidInput("d must be at least 1 in " + describe(p));
  if (p.k < 1) throw InvalidInput("k must be at least 1 in " + describe(p));
  if (gcd(p.a, p.d) != 1) throw InvalidInput("gcd(a, d) must be 1 in " + describe(p));
}

bool within_closed_range(const FamilyParams& p) {
  return p.a + 1 >= static_cast<unsigned long>(p.k);
}

void validate_closed(const FamilyParams& p) {
  validate(p);
  if (!within_closed_range(p)) {
    throw InvalidInput("closed forms need a >= k - 1, got " + describe(p));
  }
}

GeneratorList build_generators(const FamilyParams& p) {
  validate(p);
  std::vector<Integer> gens{p.a};
  Integer power = 1;   // b^i
  Integer coin = 0;    // (b^i - 1)/(b - 1)
  for (std::size_t i = 1; i <= p.k; ++i) {
    power *= p.b;
    coin = coin * p.b + 1;
    gens.push_back(power * p.a + coin * p.d);
  }
  return GeneratorList(std::move(gens));
}

Integer n_dr(const FamilyParams& p, const Integer& r) {
  validate_closed(p);
  if (sgn(r) < 0 || r >= p.a) {
    throw InvalidInput("residue " + to_string(r) + " outside 0..a-1 for " + describe(p));
  }
  return digit_sum(p.b, p.k, r) * p.a + r * ((p.b - 1) * p.a + p.d);
}

AperySet apery_closed(const FamilyParams& p, const OracleOptions& options) {
  validate_closed(p);
  auto a = to_index(p.a, options.residue_cap);
  if (!a) {
    throw OracleInfeasible("modulus " + to_string(p.a) + " exceeds the residue cap of " +
                           std::to_string(options.residue_cap));
  }
  const Integer step = floor_mod(p.d, p.a);
  const Integer slope = (p.b - 1) * p.a + p.d;
  std::vector<Integer> minima(*a);
  Integer slot = 0;
  for (std::size_t r = 0; r < *a; ++r) {
    Integer rr(static_cast<unsigned long>(r));
    minima[slot.get_ui()] = digit_sum(p.b, p.k, rr) * p.a + rr * slope;
    slot += step;
    if (slot >= p.a) slot -= p.a;
  }
  return AperySet(*a, std::move(minima));
}

namespace unchecked {

Integer frobenius_formula(const FamilyParams& p) {
  const Integer top = digit_sum(p.b, p.k, p.a - 1);
  return ((p.b - 1) * p.a - p.b + p.d + top) * p.a - p.d;
}

Integer genus_formula(const FamilyParams& p) {
  const Integer series = digit_sum_prefix(p.b, p.k, p.a - 1);
  const Integer tail = exact_div((p.a - 1) * ((p.b - 1) * p.a + p.d - 1), 2, "genus offset");
  return series + tail;
}

}  // namespace unchecked

Integer frobenius_closed(const FamilyParams& p) {
  validate_closed(p);
  return unchecked::frobenius_formula(p);
}

Integer genus_closed(const FamilyParams& p, SeriesMethod method) {
  validate_closed(p);
  if (method == SeriesMethod::recurrence) return unchecked::genus_formula(p);
  Integer series = 0;
  for (Integer r = 1; r < p.a; ++r) series += digit_sum(p.b, p.k, r);
  return series + exact_div((p.a - 1) * ((p.b - 1) * p.a + p.d - 1), 2, "genus offset");
}

FamilyParams repunit_general_params(const Integer& b, std::size_t n, const Integer& d) {
  if (b < 2) throw InvalidInput("b must be at least 2, got " + to_string(b));
  if (n < 2) throw InvalidInput("n must be at least 2, got " + std::to_string(n));
  return FamilyParams{repunit(b, n), b, d, n - 1};
}

Integer repunit_general_frobenius(const Integer& b, std::size_t n, const Integer& d) {
  validate_repunit(b, n, d);
  const Integer bn = pow(b, n);
  return (bn + d - 1) * repunit(b, n) - d;
}

Integer repunit_general_genus(const Integer& b, std::size_t n, const Integer& d) {
  validate_repunit(b, n, d);
  const Integer bn = pow(b, n);
  // (b^n - b)(b^n + d - 1) / (2(b-1)) + b^n (n-1) / 2 over the denominator 2(b-1)
  const Integer num = (bn - b) * (bn + d - 1) +
                      bn * static_cast<unsigned long>(n - 1) * (b - 1);
  return exact_div(num, 2 * (b - 1), "repunit genus");
}

PseudoFrobenius pf_closed(const Integer& b, std::size_t n, const Integer& d) {
  const Integer f = repunit_general_frobenius(b, n, d);
  PseudoFrobenius out;
  out.type = n - 1;
  for (std::size_t t = n - 1; t-- > 0;) out.pf.push_back(f - static_cast<unsigned long>(t) * d);
  return out;
}

bool is_repunit_specialization(const FamilyParams& p, std::size_t* n) {
  if (p.b < 2 || p.k < 1) return false;
  if (p.a != repunit(p.b, p.k + 1)) return false;
  if (n) *n = p.k + 1;
  return true;
}

SemigroupReport closed_report(const FamilyParams& p, const OracleOptions& options) {
  validate_closed(p);
  SemigroupReport report;
  report.engine = Engine::closed_form;
  report.frobenius = frobenius_closed(p);
  report.genus = genus_closed(p);
  std::size_t n = 0;
  if (is_repunit_specialization(p, &n)) {
    auto pf = pf_closed(p.b, n, p.d);
    report.pf = std::move(pf.pf);
    report.type = pf.type;
  } else {
    report.pf = pseudo_frobenius_from_apery(apery_closed(p, options), options);
    report.type = report.pf.size();
  }
  return report;
}

}  // namespace semigroup
