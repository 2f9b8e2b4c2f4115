#include "semigroup/changemaking.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "semigroup/errors.hpp"

namespace semigroup {
namespace {

CoinSystem coins(std::initializer_list<long> values) {
  std::vector<Integer> v;
  for (long x : values) v.emplace_back(x);
  return CoinSystem(v);
}

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Exhaustive search over every multiset of coins, independent of the DP.
long brute_opt(const std::vector<long>& c, long amount) {
  long best = amount;  // all unit coins
  std::function<void(std::size_t, long, long)> go = [&](std::size_t i, long rest, long used) {
    if (used >= best) return;
    if (rest == 0) {
      best = used;
      return;
    }
    if (i == 0) {
      best = std::min(best, used + rest);
      return;
    }
    for (long n = rest / c[i]; n >= 0; --n) go(i - 1, rest - n * c[i], used + n);
  };
  go(c.size() - 1, amount, 0);
  return best;
}

long native_greedy(const std::vector<long>& c, long amount) {
  long n = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    n += amount / c[i];
    amount %= c[i];
  }
  return n;
}

std::vector<long> repunits(long b, std::size_t k) {
  std::vector<long> out;
  long c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(c);
    c = c * b + 1;
  }
  return out;
}

TEST(CoinSystem, Validation) {
  EXPECT_THROW(coins({2, 3}), InvalidInput);
  EXPECT_THROW(coins({1, 3, 3}), InvalidInput);
  EXPECT_THROW(coins({1, 4, 3}), InvalidInput);
  EXPECT_EQ(CoinSystem::repunit_base(3, 4).denominations(), ints({1, 4, 13, 40}));
  EXPECT_THROW(CoinSystem::repunit_base(1, 3), InvalidInput);
}

TEST(OptCount, WorkedExamples) {
  EXPECT_EQ(opt_count(coins({1, 3, 4}), 6), 2);
  EXPECT_EQ(opt_count(coins({1, 3, 4}), 0), 0);
  EXPECT_EQ(opt_count(coins({1, 3, 7}), 6), 2);
}

TEST(OptCount, TableCap) {
  EXPECT_THROW(opt_count(coins({1, 3}), 100, 100), OracleInfeasible);
  EXPECT_EQ(opt_count(coins({1, 3}), 99, 100), 33);
}

TEST(GreedyCount, WorkedExamples) {
  EXPECT_EQ(greedy_count(coins({1, 3, 4}), 6), 3);
  EXPECT_EQ(greedy_count(coins({1, 3, 7}), 6), 2);
  EXPECT_EQ(greedy_count(coins({1, 3, 4}), 0), 0);
}

TEST(OptCount, MatchesExhaustiveSearchAndBoundsGreedy) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> c{1};
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    while (c.size() <= len) {
      long next = c.back() + std::uniform_int_distribution<long>(1, 9)(rng);
      c.push_back(next);
    }
    std::vector<Integer> big(c.begin(), c.end());
    CoinSystem system(big);
    for (long m = 0; m <= 60; ++m) {
      Integer opt = opt_count(system, m);
      EXPECT_EQ(opt, brute_opt(c, m));
      EXPECT_LE(opt, greedy_count(system, m));
    }
  }
}

TEST(IsOrderly, WorkedExamples) {
  auto r = is_orderly(coins({1, 3, 4}));
  EXPECT_FALSE(r.orderly);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(*r.counterexample, 6);
  EXPECT_TRUE(is_orderly(coins({1})).orderly);
  EXPECT_TRUE(is_orderly(coins({1, 4, 13, 40})).orderly);
}

TEST(IsOrderly, CanonicalSystemWithNonCanonicalPrefix) {
  // (1,2,4,5) fails at 8 but adding 8 repairs it; exhaustive search agrees.
  EXPECT_FALSE(is_orderly(coins({1, 2, 4, 5})).orderly);
  EXPECT_TRUE(is_orderly(coins({1, 2, 4, 5, 8})).orderly);
  auto r = is_orderly(coins({1, 2, 4, 5, 9}));
  for (long m = 0; m <= 200; ++m) {
    if (brute_opt({1, 2, 4, 5, 9}, m) < native_greedy({1, 2, 4, 5, 9}, m)) {
      EXPECT_FALSE(r.orderly);
      ASSERT_TRUE(r.counterexample);
      EXPECT_EQ(*r.counterexample, m);  // smallest failing amount
      break;
    }
  }
}

// Every 1 < c2 < c3 < c4 <= 16 system, against exhaustive comparison to 2 c_max^2.
TEST(IsOrderly, AgreesWithExhaustiveComparison) {
  for (long c2 = 2; c2 <= 14; ++c2) {
    for (long c3 = c2 + 1; c3 <= 15; ++c3) {
      for (long c4 = c3 + 1; c4 <= 16; ++c4) {
        std::vector<long> c{1, c2, c3, c4};
        CoinSystem system({1, c2, c3, c4});
        const auto opt_all = [&] {
          std::vector<long> table(2 * c4 * c4 + 1, 0);
          for (long m = 1; m < static_cast<long>(table.size()); ++m) {
            long best = m;
            for (long x : c) {
              if (x <= m) best = std::min(best, table[m - x] + 1);
            }
            table[m] = best;
          }
          return table;
        }();
        bool exhaustive = true;
        long first = -1;
        for (long m = 1; m < static_cast<long>(opt_all.size()); ++m) {
          if (opt_all[m] < native_greedy(c, m)) {
            exhaustive = false;
            first = m;
            break;
          }
        }
        auto r = is_orderly(system);
        ASSERT_EQ(r.orderly, exhaustive) << c2 << ',' << c3 << ',' << c4;
        if (!r.orderly) {
          ASSERT_TRUE(r.counterexample);
          long cx = r.counterexample->get_si();
          EXPECT_LT(opt_all[cx], native_greedy(c, cx));
          EXPECT_GE(cx, first);
        }
      }
    }
  }
}

TEST(IsOrderly, RepunitBasesAreOrderly) {
  for (long b = 2; b <= 10; ++b) {
    for (std::size_t k = 1; k <= 8; ++k) {
      EXPECT_TRUE(is_orderly(CoinSystem::repunit_base(b, k)).orderly) << b << ',' << k;
    }
  }
}

TEST(GreedyPresentation, WorkedExamples) {
  EXPECT_EQ(greedy_presentation(2, 3, 6).digits(), ints({0, 2, 0}));
  EXPECT_EQ(greedy_presentation(2, 3, 0).digits(), ints({0, 0, 0}));
  EXPECT_EQ(greedy_presentation(3, 2, 6).digits(), ints({2, 1}));
  EXPECT_EQ(opt_count(CoinSystem::repunit_base(3, 2), 6), 3);
}

TEST(GreedyPresentation, TopDigitIsUnbounded) {
  auto p = greedy_presentation(2, 2, 100);  // over (1, 3)
  EXPECT_EQ(p.digits(), ints({1, 33}));
  EXPECT_TRUE(p.satisfies_greedy_conditions());
}

TEST(GreedyPresentation, ConditionsRejectNonGreedyDigits) {
  EXPECT_FALSE(GreedyPresentation(2, ints({3, 0, 0})).satisfies_greedy_conditions());
  EXPECT_FALSE(GreedyPresentation(2, ints({1, 2, 0})).satisfies_greedy_conditions());
  EXPECT_FALSE(GreedyPresentation(2, ints({0, 3, 0})).satisfies_greedy_conditions());
  EXPECT_TRUE(GreedyPresentation(2, ints({0, 2, 0})).satisfies_greedy_conditions());
  EXPECT_THROW(GreedyPresentation(2, ints({-1})), InvalidInput);
}

TEST(GreedyPresentation, PropertiesOverSmallBases) {
  for (long b = 2; b <= 5; ++b) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto c = repunits(b, k);
      CoinSystem system(std::vector<Integer>(c.begin(), c.end()));
      for (long m = 0; m <= 400; ++m) {
        auto p = greedy_presentation(b, k, m);
        ASSERT_EQ(p.amount(), m);
        ASSERT_TRUE(p.satisfies_greedy_conditions()) << b << ',' << k << ',' << m;
        long bk = 1;
        for (std::size_t i = 0; i < k; ++i) bk *= b;
        ASSERT_EQ(p.digits().back(), (b - 1) * m / (bk - 1));
        ASSERT_EQ(digit_sum(b, k, m), opt_count(system, m));
      }
    }
  }
}

TEST(DigitSum, WorkedExamples) {
  EXPECT_EQ(digit_sum(2, 2, 4), 2);
  EXPECT_EQ(digit_sum(5, 3, 0), 0);
  EXPECT_EQ(digit_sum(3, 2, 6), 3);
}

TEST(DigitSumPrefix, MatchesIteration) {
  for (long b = 2; b <= 6; ++b) {
    for (std::size_t k = 1; k <= 6; ++k) {
      Integer running = 0;
      for (long last = 0; last <= 700; ++last) {
        running += digit_sum(b, k, last);
        ASSERT_EQ(digit_sum_prefix(b, k, last), running) << b << ',' << k << ',' << last;
      }
    }
  }
  EXPECT_EQ(digit_sum_prefix(3, 4, -1), 0);
}

TEST(Weight, WorkedExamples) {
  EXPECT_EQ(weight(GreedyPresentation(2, ints({0, 2, 0}))), 8);
  EXPECT_EQ(weight(GreedyPresentation(7, ints({0, 0, 0, 0}))), 0);
  EXPECT_EQ(weight(GreedyPresentation(3, ints({2, 1}))), 15);
}

TEST(ColexCompare, WorkedExamples) {
  EXPECT_EQ(colex_compare(ints({2, 0}), ints({0, 1})), std::strong_ordering::less);
  EXPECT_EQ(colex_compare(ints({1, 1}), ints({1, 1})), std::strong_ordering::equal);
  EXPECT_EQ(colex_compare(ints({0, 2, 1}), ints({0, 2, 0})), std::strong_ordering::greater);
  EXPECT_THROW(colex_compare(ints({1}), ints({1, 0})), InvalidInput);
}

// Pairwise over a window: colex order never reverses weight.
TEST(ColexCompare, WeightMonotonePairwise) {
  for (long b = 2; b <= 4; ++b) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<GreedyPresentation> pres;
      for (long r = 0; r <= 300; ++r) pres.push_back(greedy_presentation(b, k, r));
      for (const auto& x : pres) {
        for (const auto& y : pres) {
          if (colex_compare(x.digits(), y.digits()) != std::strong_ordering::greater) {
            ASSERT_LE(weight(x), weight(y));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace semigroup
