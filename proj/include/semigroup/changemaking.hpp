#pragma once

// Change-making machinery: optimal and greedy coin counts, orderliness, and
// greedy presentations over the base-b repunit coin system
// B(b,k) = (1, b+1, b^2+b+1, ..., (b^k-1)/(b-1)).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semigroup/integer.hpp"

namespace semigroup {

inline constexpr std::size_t kDefaultTableCap = 100'000'000;

class CoinSystem {
 public:
  /// Requires a strictly increasing list starting at 1.
  explicit CoinSystem(std::vector<Integer> denominations);

  /// B(b,k); throws InvalidInput for b < 2 or k < 1.
  static CoinSystem repunit_base(const Integer& b, std::size_t k);

  const std::vector<Integer>& denominations() const { return denominations_; }
  std::size_t size() const { return denominations_.size(); }

  /// The first `count` denominations.
  CoinSystem prefix(std::size_t count) const;

 private:
  std::vector<Integer> denominations_;
};

/// Fewest coins summing to `amount`, by dynamic programming over 0..amount.
/// Throws OracleInfeasible when amount + 1 exceeds `table_cap`.
Integer opt_count(const CoinSystem& coins, const Integer& amount,
                  std::size_t table_cap = kDefaultTableCap);

/// Coin count of the largest-first representation.
Integer greedy_count(const CoinSystem& coins, const Integer& amount);

struct OrderlyResult {
  bool orderly = false;
  std::optional<Integer> counterexample;  // an amount where greedy is not optimal
};

/// Decides whether greedy is optimal for every amount.
///
/// Each prefix is certified with the One-Point test: when (1, ..., c_j) is
/// orderly and s = ceil(c_{j+1} / c_j), the extension by c_{j+1} is orderly
/// iff greedy is optimal at s * c_j. If a proper prefix fails the test the
/// extension argument no longer applies, so the whole system is then settled
/// by exhaustive comparison below c_n + c_{n-1}, where any smallest
/// counterexample must lie.
OrderlyResult is_orderly(const CoinSystem& coins, std::size_t table_cap = kDefaultTableCap);

/// Digits (x_1, ..., x_k) of an amount over B(b,k), highest denomination first.
class GreedyPresentation {
 public:
  GreedyPresentation(Integer b, std::vector<Integer> digits);

  const Integer& base() const { return base_; }
  std::size_t length() const { return digits_.size(); }
  const std::vector<Integer>& digits() const { return digits_; }

  /// Sum of x_i * (b^i - 1)/(b - 1).
  Integer amount() const;

  /// True when the digits are those the greedy construction yields for amount().
  bool satisfies_greedy_conditions() const;

  friend bool operator==(const GreedyPresentation&, const GreedyPresentation&) = default;

 private:
  Integer base_;
  std::vector<Integer> digits_;
};

GreedyPresentation greedy_presentation(const Integer& b, std::size_t k, const Integer& amount);

Integer digit_sum(const Integer& b, std::size_t k, const Integer& amount);

/// Sum over r = 0..last of digit_sum(b, k, r), by block recurrence in O(k^2)
/// big-integer operations. Returns 0 for negative `last`.
Integer digit_sum_prefix(const Integer& b, std::size_t k, const Integer& last);

/// w = sum of b^i * x_i.
Integer weight(const GreedyPresentation& presentation);

/// Colexicographic order: the largest index where the digits differ decides.
/// Throws InvalidInput on a length mismatch.
std::strong_ordering colex_compare(std::span<const Integer> x, std::span<const Integer> y);

}  // namespace semigroup
