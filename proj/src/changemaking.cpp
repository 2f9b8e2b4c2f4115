#include "semigroup/changemaking.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "semigroup/errors.hpp"

namespace semigroup {

namespace {

Integer greedy_count_prefix(const std::vector<Integer>& coins, std::size_t count,
                            Integer amount) {
  Integer total = 0;
  for (std::size_t i = count; i-- > 0;) {
    if (amount < coins[i]) continue;
    Integer q = amount / coins[i];
    total += q;
    amount -= q * coins[i];
  }
  return total;
}

// opt[m] for every m in 0..last.
std::vector<std::uint32_t> opt_table(const std::vector<Integer>& coins, std::size_t last) {
  std::vector<std::size_t> usable;
  for (const auto& c : coins) {
    auto v = to_index(c, last);
    if (!v) break;
    usable.push_back(*v);
  }
  std::vector<std::uint32_t> table(last + 1, std::numeric_limits<std::uint32_t>::max());
  table[0] = 0;
  for (std::size_t m = 1; m <= last; ++m) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (auto c : usable) {
      if (c > m) break;
      best = std::min(best, table[m - c] + 1);
    }
    table[m] = best;
  }
  return table;
}

std::size_t checked_table(const Integer& last, std::size_t table_cap) {
  auto n = to_index(last, table_cap == 0 ? 0 : table_cap - 1);
  if (!n) {
    throw OracleInfeasible("amount " + to_string(last) + " needs more than " +
                           std::to_string(table_cap) + " table cells");
  }
  return *n;
}

std::vector<Integer> repunit_coins(const Integer& b, std::size_t k) {
  if (b < 2) throw InvalidInput("base must be at least 2, got " + to_string(b));
  if (k < 1) throw InvalidInput("length must be at least 1");
  std::vector<Integer> coins;
  coins.reserve(k);
  Integer c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    coins.push_back(c);
    c = c * b + 1;
  }
  return coins;
}

}  // namespace

CoinSystem::CoinSystem(std::vector<Integer> denominations)
    : denominations_(std::move(denominations)) {
  if (denominations_.empty() || denominations_.front() != 1) {
    throw InvalidInput("coin system must start with the unit coin 1");
  }
  for (std::size_t i = 1; i < denominations_.size(); ++i) {
    if (denominations_[i] <= denominations_[i - 1]) {
      throw InvalidInput("denominations must be strictly increasing");
    }
  }
}

CoinSystem CoinSystem::repunit_base(const Integer& b, std::size_t k) {
  return CoinSystem(repunit_coins(b, k));
}

CoinSystem CoinSystem::prefix(std::size_t count) const {
  count = std::clamp<std::size_t>(count, 1, denominations_.size());
  return CoinSystem({denominations_.begin(), denominations_.begin() + count});
}

Integer opt_count(const CoinSystem& coins, const Integer& amount, std::size_t table_cap) {
  if (sgn(amount) < 0) throw InvalidInput("amount must be non-negative");
  const std::size_t last = checked_table(amount, table_cap);
  return Integer(static_cast<unsigned long>(opt_table(coins.denominations(), last)[last]));
}

Integer greedy_count(const CoinSystem& coins, const Integer& amount) {
  if (sgn(amount) < 0) throw InvalidInput("amount must be non-negative");
  return greedy_count_prefix(coins.denominations(), coins.size(), amount);
}

OrderlyResult is_orderly(const CoinSystem& coins, std::size_t table_cap) {
  const auto& c = coins.denominations();
  const std::size_t n = c.size();
  std::optional<Integer> first_failure;
  for (std::size_t j = 1; j < n; ++j) {
    // (c_0..c_{j-1}) is orderly; test the extension by c_j at s * c_{j-1}.
    const Integer& prev = c[j - 1];
    Integer s = floor_div(c[j] + prev - 1, prev);
    Integer test = s * prev;
    // test < c_j + c_{j-1} < 2 c_j, so an optimal solution uses c_j at most once,
    // and the rest is optimal (hence greedy) over the orderly prefix.
    Integer opt = greedy_count_prefix(c, j, test);
    if (test >= c[j]) {
      Integer with_top = 1 + greedy_count_prefix(c, j, test - c[j]);
      if (with_top < opt) opt = with_top;
    }
    Integer grd = greedy_count_prefix(c, j + 1, test);
    if (opt < grd) {
      if (j + 1 == n) return {false, test};
      first_failure = test;
      break;
    }
  }
  if (!first_failure) return {true, std::nullopt};

  // A proper prefix is non-orderly; fall back to exhaustion below c_n + c_{n-1}.
  const Integer last = c[n - 1] + c[n - 2];
  const auto table = opt_table(c, checked_table(last, table_cap));
  for (std::size_t m = 1; m < table.size(); ++m) {
    Integer amount(static_cast<unsigned long>(m));
    if (Integer(static_cast<unsigned long>(table[m])) < greedy_count_prefix(c, n, amount)) {
      return {false, amount};
    }
  }
  return {true, std::nullopt};
}

GreedyPresentation::GreedyPresentation(Integer b, std::vector<Integer> digits)
    : base_(std::move(b)), digits_(std::move(digits)) {
  if (base_ < 2) throw InvalidInput("base must be at least 2, got " + to_string(base_));
  if (digits_.empty()) throw InvalidInput("presentation needs at least one digit");
  for (const auto& x : digits_) {
    if (sgn(x) < 0) throw InvalidInput("digits must be non-negative");
  }
}

Integer GreedyPresentation::amount() const {
  Integer total = 0;
  Integer coin = 1;
  for (const auto& x : digits_) {
    total += x * coin;
    coin = coin * base_ + 1;
  }
  return total;
}

bool GreedyPresentation::satisfies_greedy_conditions() const {
  const std::size_t k = digits_.size();
  const Integer top = repunit(base_, k);
  if (digits_[k - 1] != floor_div(amount(), top)) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (digits_[i] > base_) return false;
    // x_i = b forces every lower digit to zero (1-based i >= 2).
    if (i >= 1 && digits_[i] == base_) {
      for (std::size_t j = 0; j < i; ++j) {
        if (digits_[j] != 0) return false;
      }
    }
  }
  return true;
}

GreedyPresentation greedy_presentation(const Integer& b, std::size_t k, const Integer& amount) {
  if (sgn(amount) < 0) throw InvalidInput("amount must be non-negative");
  const auto coins = repunit_coins(b, k);
  std::vector<Integer> digits(k);
  Integer rest = amount;
  for (std::size_t i = k; i-- > 0;) {
    digits[i] = rest / coins[i];
    rest -= digits[i] * coins[i];
  }
  return GreedyPresentation(b, std::move(digits));
}

Integer digit_sum(const Integer& b, std::size_t k, const Integer& amount) {
  const auto presentation = greedy_presentation(b, k, amount);
  Integer total = 0;
  for (const auto& x : presentation.digits()) total += x;
  return total;
}

Integer digit_sum_prefix(const Integer& b, std::size_t k, const Integer& last) {
  if (sgn(last) < 0) return 0;
  const auto coins = repunit_coins(b, k);
  // full[j] = sum of digit sums over one whole block 0..coins[j+1]-1 using the
  // first j+1 coins; such a block is b copies of the level below plus one extra
  // amount whose top digit is b.
  std::vector<Integer> full(k);
  full[0] = 0;  // unused for level 0 blocks, filled below
  if (k >= 2) {
    full[0] = b * (b + 1) / 2;
    for (std::size_t j = 1; j + 1 < k; ++j) {
      full[j] = coins[j] * b * (b - 1) / 2 + b * full[j - 1] + b;
    }
  }
  Integer total = 0;
  Integer count = last + 1;  // amounts 0..last at the current level
  for (std::size_t level = k; level-- > 1;) {
    // Amounts below count split into q whole blocks of coins[level] and a partial one.
    Integer q = count / coins[level];
    Integer rem = count - q * coins[level];
    total += coins[level] * q * (q - 1) / 2 + q * full[level - 1] + rem * q;
    count = rem;
  }
  // Level 0: the unit coin alone, digit sum of r is r.
  total += count * (count - 1) / 2;
  return total;
}

Integer weight(const GreedyPresentation& presentation) {
  Integer total = 0;
  Integer power = 1;
  for (const auto& x : presentation.digits()) {
    power *= presentation.base();
    total += power * x;
  }
  return total;
}

std::strong_ordering colex_compare(std::span<const Integer> x, std::span<const Integer> y) {
  if (x.size() != y.size()) throw InvalidInput("colex comparison needs equal lengths");
  for (std::size_t i = x.size(); i-- > 0;) {
    int c = cmp(x[i], y[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace semigroup
