#include "semigroup/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>
#include <utility>

#include "semigroup/changemaking.hpp"
#include "semigroup/core.hpp"
#include "semigroup/errors.hpp"

namespace semigroup {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kSkipGcd = "gcd(a, d) != 1";
constexpr const char* kSkipRange = "a < k - 1";
constexpr const char* kSkipOracle = "oracle infeasible";

void check_range(const IntRange& r, const char* name, long minimum) {
  if (r.lo < minimum) {
    throw InvalidInput(std::string(name) + " range must start at " + std::to_string(minimum) +
                       " or above");
  }
  if (r.hi < r.lo) throw InvalidInput(std::string(name) + " range is empty");
}

Mismatch make_mismatch(const FamilyParams& p, std::string quantity, const Integer& closed,
                       const Integer& oracle) {
  return {p, std::move(quantity), to_string(closed), to_string(oracle)};
}

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

bool mismatch_less(const Mismatch& x, const Mismatch& y) {
  auto key = [](const Mismatch& m) {
    return std::tie(m.params.b, m.params.k, m.params.d, m.params.a, m.quantity);
  };
  return key(x) < key(y);
}

// N_dr(m) for m = 0..max_m and every residue; reports the first decrease.
std::vector<Mismatch> monotone_check(const FamilyParams& p, long max_m) {
  std::vector<Mismatch> out;
  const long a = p.a.get_si();
  const long b = p.b.get_si();
  const long d = p.d.get_si();
  const auto cost = weighted_change_table(b, p.k, static_cast<std::size_t>((max_m + 1) * a));
  for (long r = 0; r < a; ++r) {
    Integer previous;
    for (long m = 0; m <= max_m; ++m) {
      const long amount = m * a + r;
      Integer value = Integer(static_cast<long>(cost[amount])) * a + Integer(amount) * d;
      if (m == 0) {
        Integer closed = n_dr(p, r);
        if (closed != value) out.push_back(make_mismatch(p, "n_dr(r=" + std::to_string(r) + ")",
                                                         closed, value));
      } else if (value < previous) {
        out.push_back(make_mismatch(p, "ndr-monotone(r=" + std::to_string(r) +
                                           ",m=" + std::to_string(m) + ")",
                                    value, previous));
        break;
      }
      previous = value;
    }
  }
  return out;
}

// One-Point certificate and exhaustive comparison up to 2 c_k^2 must both say orderly.
std::vector<Mismatch> orderly_check(const FamilyParams& p) {
  std::vector<Mismatch> out;
  const auto coins = CoinSystem::repunit_base(p.b, p.k);
  const auto certified = is_orderly(coins);
  if (!certified.orderly) {
    out.push_back(make_mismatch(p, "orderly", 0, 1));
    return out;
  }
  const Integer top = coins.denominations().back();
  const std::size_t last = Integer(2 * top * top).get_ui();
  std::vector<std::uint32_t> opt(last + 1, std::numeric_limits<std::uint32_t>::max());
  opt[0] = 0;
  std::vector<std::size_t> c;
  for (const auto& x : coins.denominations()) c.push_back(x.get_ui());
  for (std::size_t m = 1; m <= last; ++m) {
    for (auto x : c) {
      if (x > m) break;
      opt[m] = std::min(opt[m], opt[m - x] + 1);
    }
    std::size_t greedy = 0;
    for (std::size_t rest = m, i = c.size(); i-- > 0;) {
      greedy += rest / c[i];
      rest %= c[i];
    }
    if (opt[m] != greedy) {
      out.push_back(make_mismatch(p, "orderly-exhaustive(M=" + std::to_string(m) + ")",
                                  static_cast<unsigned long>(greedy), opt[m]));
      break;
    }
  }
  return out;
}

// Weight must not decrease along presentations of 0..last sorted in colex order.
std::vector<Mismatch> colex_check(const FamilyParams& p, long last) {
  std::vector<GreedyPresentation> pres;
  pres.reserve(static_cast<std::size_t>(last + 1));
  for (long r = 0; r <= last; ++r) pres.push_back(greedy_presentation(p.b, p.k, r));
  std::sort(pres.begin(), pres.end(), [](const auto& x, const auto& y) {
    return colex_compare(x.digits(), y.digits()) == std::strong_ordering::less;
  });
  std::vector<Mismatch> out;
  for (std::size_t i = 1; i < pres.size(); ++i) {
    Integer w0 = weight(pres[i - 1]);
    Integer w1 = weight(pres[i]);
    if (w0 > w1) {
      out.push_back(make_mismatch(p, "colex-weight(r=" + to_string(pres[i].amount()) + ")", w1,
                                  w0));
      break;
    }
  }
  return out;
}

struct CaseResult {
  bool skipped = false;
  std::string skip_reason;
  bool probe = false;
  std::vector<Mismatch> mismatches;
};

CaseResult run_case(const FamilyParams& p, const GridSpec& grid) {
  CaseResult result;
  if (gcd(p.a, p.d) != 1) {
    result.skipped = true;
    result.skip_reason = kSkipGcd;
    return result;
  }
  if (p.a > static_cast<unsigned long>(grid.oracle_cutoff)) {
    result.skipped = true;
    result.skip_reason = kSkipOracle;
    return result;
  }
  if (!within_closed_range(p)) {
    if (!grid.include_hypothesis_violations) {
      result.skipped = true;
      result.skip_reason = kSkipRange;
      return result;
    }
    result.probe = true;
    const auto ape = apery_set(build_generators(p));
    Integer f = unchecked::frobenius_formula(p);
    Integer g = unchecked::genus_formula(p);
    Integer of = frobenius_from_apery(ape);
    Integer og = genus_from_apery(ape);
    if (f != of) result.mismatches.push_back(make_mismatch(p, "frobenius", f, of));
    if (g != og) result.mismatches.push_back(make_mismatch(p, "genus", g, og));
    return result;
  }
  try {
    result.mismatches = check_case(p, grid);
  } catch (const OracleInfeasible&) {
    result.skipped = true;
    result.skip_reason = kSkipOracle;
  }
  return result;
}

}  // namespace

void validate(const GridSpec& grid) {
  check_range(grid.a, "a", 2);
  check_range(grid.b, "b", 2);
  check_range(grid.d, "d", 1);
  check_range(grid.k, "k", 1);
}

std::vector<Mismatch> check_case(const FamilyParams& p, const GridSpec& grid) {
  std::vector<Mismatch> out;
  OracleOptions options;
  options.residue_cap = grid.oracle_cutoff;
  const auto ape = apery_set(build_generators(p), options);

  const Integer f = frobenius_closed(p) + grid.inject_offset;
  const Integer of = frobenius_from_apery(ape);
  if (f != of) out.push_back(make_mismatch(p, "frobenius", f, of));

  const Integer g = genus_closed(p);
  const Integer og = genus_from_apery(ape);
  if (g != og) out.push_back(make_mismatch(p, "genus", g, og));

  if (grid.check_apery) {
    const auto closed = apery_closed(p, options);
    if (closed.minima() != ape.minima()) {
      for (std::size_t r = 0; r < ape.modulus(); ++r) {
        if (closed[r] != ape[r]) {
          out.push_back(make_mismatch(p, "apery[" + std::to_string(r) + "]", closed[r], ape[r]));
          break;
        }
      }
    }
  }
  if (grid.check_pf) {
    const auto closed = closed_report(p, options);
    const auto oracle = pseudo_frobenius_from_apery(ape, options);
    if (closed.pf != oracle) out.push_back({p, "pf", join(closed.pf), join(oracle)});
  }
  if (grid.check_monotone) {
    auto more = monotone_check(p, 5);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

VerifyReport cross_check(const GridSpec& grid, unsigned jobs) {
  validate(grid);
  const auto start = Clock::now();

  std::vector<FamilyParams> cases;
  for (long b = grid.b.lo; b <= grid.b.hi; ++b) {
    for (long k = grid.k.lo; k <= grid.k.hi; ++k) {
      for (long d = grid.d.lo; d <= grid.d.hi; ++d) {
        for (long a = grid.a.lo; a <= grid.a.hi; ++a) {
          cases.push_back({a, b, d, static_cast<std::size_t>(k)});
        }
      }
    }
  }

  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      results[i] = run_case(cases[i], grid);
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  VerifyReport report;
  for (auto& r : results) {
    if (r.skipped) {
      ++report.skipped[r.skip_reason];
    } else if (r.probe) {
      ++report.probe_cases;
      report.divergences.insert(report.divergences.end(), r.mismatches.begin(),
                                r.mismatches.end());
    } else {
      ++report.cases_run;
      if (r.mismatches.empty()) {
        ++report.cases_passed;
      } else {
        report.mismatches.insert(report.mismatches.end(), r.mismatches.begin(),
                                 r.mismatches.end());
      }
    }
  }
  std::stable_sort(report.mismatches.begin(), report.mismatches.end(), mismatch_less);
  std::stable_sort(report.divergences.begin(), report.divergences.end(), mismatch_less);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::vector<std::int64_t> weighted_change_table(long b, std::size_t k, std::size_t last) {
  if (b < 2 || k < 1) throw InvalidInput("weighted change table needs b >= 2 and k >= 1");
  std::vector<std::pair<std::size_t, std::int64_t>> coins;  // (value, cost b^i)
  std::size_t value = 1;
  std::int64_t cost = b;
  for (std::size_t i = 1; i <= k && value <= last; ++i) {
    coins.emplace_back(value, cost);
    value = value * static_cast<std::size_t>(b) + 1;
    cost *= b;
  }
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> table(last + 1, kInf);
  table[0] = 0;
  for (std::size_t m = 1; m <= last; ++m) {
    for (const auto& [v, c] : coins) {
      if (v > m) break;
      if (table[m - v] != kInf) table[m] = std::min(table[m], table[m - v] + c);
    }
  }
  return table;
}

VerifyReport property_suite(std::uint64_t seed, std::size_t budget) {
  if (budget < 1) throw InvalidInput("property budget must be at least 1");
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  VerifyReport report;
  for (std::size_t unit = 0; unit < budget; ++unit) {
    const long b = pick(2, 5);
    const long k = pick(1, 5);
    const long a = pick(std::max(2L, k - 1), 40);
    long d = pick(1, 10);
    while (std::gcd(a, d) != 1) d = pick(1, 10);
    const FamilyParams p{a, b, d, static_cast<std::size_t>(k)};
    const long colex_last = pick(0, 2000);

    for (auto checks : {orderly_check(p), colex_check(p, colex_last), monotone_check(p, 5)}) {
      ++report.cases_run;
      if (checks.empty()) {
        ++report.cases_passed;
      } else {
        report.mismatches.insert(report.mismatches.end(), checks.begin(), checks.end());
      }
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace semigroup
