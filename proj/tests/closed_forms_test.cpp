#include "semigroup/closed_forms.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "semigroup/errors.hpp"
#include "semigroup/verify.hpp"
#include "support/sieve_oracle.hpp"

namespace semigroup {
namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

FamilyParams fp(long a, long b, long d, std::size_t k) { return {a, b, d, k}; }

TEST(BuildGenerators, WorkedExamples) {
  EXPECT_EQ(build_generators(fp(5, 2, 1, 2)).elements(), ints({5, 11, 23}));
  EXPECT_EQ(build_generators(fp(7, 2, 1, 1)).elements(), ints({7, 15}));
  EXPECT_EQ(build_generators(fp(7, 3, 2, 2)).elements(), ints({7, 23, 71}));
}

TEST(BuildGenerators, NoHypothesisOnA) {
  // a < k - 1 is allowed here; only the closed forms need a >= k - 1.
  EXPECT_EQ(build_generators(fp(2, 2, 1, 5)).elements(), ints({2, 5, 11, 23, 47, 95}));
}

TEST(BuildGenerators, InvalidParams) {
  EXPECT_THROW(build_generators(fp(4, 2, 2, 2)), InvalidInput);
  EXPECT_THROW(build_generators(fp(5, 1, 1, 2)), InvalidInput);
  EXPECT_THROW(build_generators(fp(1, 2, 1, 2)), InvalidInput);
  EXPECT_THROW(build_generators(fp(5, 2, 0, 2)), InvalidInput);
  EXPECT_THROW(build_generators(fp(5, 2, 1, 0)), InvalidInput);
}

TEST(Ndr, WorkedExamples) {
  EXPECT_EQ(n_dr(fp(5, 2, 1, 2), 4), 34);
  EXPECT_EQ(n_dr(fp(9, 4, 5, 3), 0), 0);
  EXPECT_EQ(n_dr(fp(7, 3, 2, 2), 6), 117);
  // 117 sits in class (2 * 6) mod 7 = 5 of the sieve's Apery set.
  EXPECT_EQ(sieve::apery(sieve::build({7, 23, 71}))[5], 117);
}

TEST(Ndr, Errors) {
  EXPECT_THROW(n_dr(fp(2, 2, 1, 4), 1), InvalidInput);  // a < k - 1
  EXPECT_THROW(n_dr(fp(5, 2, 1, 2), 5), InvalidInput);
  EXPECT_THROW(n_dr(fp(5, 2, 1, 2), -1), InvalidInput);
}

TEST(AperyClosed, WorkedExamples) {
  EXPECT_EQ(apery_closed(fp(5, 2, 1, 2)).minima(), ints({0, 11, 22, 23, 34}));
  EXPECT_EQ(apery_closed(fp(2, 2, 1, 1)).minima(), ints({0, 5}));
  EXPECT_EQ(apery_closed(fp(7, 3, 2, 2)), apery_set(build_generators(fp(7, 3, 2, 2))));
}

TEST(AperyClosed, DLargerThanA) {
  auto p = fp(5, 3, 13, 2);
  EXPECT_EQ(apery_closed(p), apery_set(build_generators(p)));
}

TEST(FrobeniusClosed, WorkedExamples) {
  EXPECT_EQ(frobenius_closed(fp(5, 2, 1, 2)), 29);
  EXPECT_EQ(frobenius_closed(fp(7, 3, 2, 2)), 110);
  EXPECT_EQ(frobenius_closed(fp(3, 2, 1, 1)), 11);
  EXPECT_THROW(frobenius_closed(fp(2, 2, 1, 4)), InvalidInput);
  EXPECT_THROW(frobenius_closed(fp(6, 2, 3, 2)), InvalidInput);
}

TEST(GenusClosed, WorkedExamples) {
  EXPECT_EQ(genus_closed(fp(5, 2, 1, 2)), 16);
  EXPECT_EQ(genus_closed(fp(7, 3, 2, 2)), 57);
  EXPECT_EQ(genus_closed(fp(3, 2, 1, 1)), 6);
}

TEST(GenusClosed, SeriesMethodsAgree) {
  for (long b = 2; b <= 6; ++b) {
    for (std::size_t k = 1; k <= 6; ++k) {
      for (long a = std::max<long>(2, static_cast<long>(k) - 1); a <= 150; a += 7) {
        auto p = fp(a, b, 1, k);
        ASSERT_EQ(genus_closed(p, SeriesMethod::recurrence), genus_closed(p, SeriesMethod::iterate))
            << describe(p);
      }
    }
  }
}

TEST(ClosedForms, AgreeWithSieveOracle) {
  for (long b = 2; b <= 4; ++b) {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (long d = 1; d <= 3; ++d) {
        for (long a = std::max<long>(2, static_cast<long>(k) - 1); a <= 20; ++a) {
          if (std::gcd(a, d) != 1) continue;
          auto p = fp(a, b, d, k);
          std::vector<std::int64_t> gens;
          const auto list = build_generators(p);
          for (const auto& g : list.elements()) gens.push_back(g.get_si());
          auto s = sieve::build(gens);
          ASSERT_EQ(frobenius_closed(p), sieve::frobenius(s)) << describe(p);
          ASSERT_EQ(genus_closed(p), static_cast<unsigned long>(sieve::gaps(s).size()));
          auto ape = sieve::apery(s);
          auto closed = apery_closed(p);
          for (std::size_t r = 0; r < ape.size(); ++r) ASSERT_EQ(closed[r], ape[r]);
        }
      }
    }
  }
}

TEST(RepunitGeneral, WorkedExamples) {
  EXPECT_EQ(repunit_general_frobenius(3, 2, 1), 35);
  EXPECT_EQ(repunit_general_frobenius(2, 3, 1), 55);
  EXPECT_EQ(repunit_general_frobenius(2, 2, 1), 11);
  EXPECT_EQ(repunit_general_genus(3, 2, 1), 18);
  EXPECT_EQ(repunit_general_genus(2, 3, 1), 32);
  EXPECT_EQ(repunit_general_genus(2, 2, 1), 6);
}

TEST(RepunitGeneral, Errors) {
  EXPECT_THROW(repunit_general_frobenius(2, 3, 7), InvalidInput);  // a = 7
  EXPECT_THROW(repunit_general_genus(3, 1, 1), InvalidInput);
  EXPECT_THROW(pf_closed(1, 3, 1), InvalidInput);
}

TEST(RepunitGeneral, MatchesGeneralFamilyForms) {
  for (long b = 2; b <= 5; ++b) {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (long d = 1; d <= 4; ++d) {
        auto p = repunit_general_params(b, n, d);
        if (gcd(p.a, p.d) != 1) continue;
        EXPECT_EQ(repunit_general_frobenius(b, n, d), frobenius_closed(p));
        EXPECT_EQ(repunit_general_genus(b, n, d), genus_closed(p));
      }
    }
  }
}

TEST(RepunitGeneral, HugeParametersStayExact) {
  // a = (7^40 - 1)/6 has 33 digits; both routes must agree without the oracle.
  auto p = repunit_general_params(7, 40, 3);
  ASSERT_EQ(gcd(p.a, p.d), 1);
  EXPECT_EQ(repunit_general_frobenius(7, 40, 3), frobenius_closed(p));
  EXPECT_EQ(repunit_general_genus(7, 40, 3), genus_closed(p));
}

TEST(PfClosed, WorkedExamples) {
  auto pf = pf_closed(2, 3, 1);
  EXPECT_EQ(pf.pf, ints({54, 55}));
  EXPECT_EQ(pf.type, 2u);
  pf = pf_closed(3, 2, 1);
  EXPECT_EQ(pf.pf, ints({35}));
  EXPECT_EQ(pf.type, 1u);
  // F = 239 frozen from the sieve on (15, 31, 63, 127).
  auto s = sieve::build({15, 31, 63, 127});
  ASSERT_EQ(sieve::frobenius(s), 239);
  ASSERT_EQ(sieve::pseudo_frobenius(s), (std::vector<std::int64_t>{237, 238, 239}));
  pf = pf_closed(2, 4, 1);
  EXPECT_EQ(pf.pf, ints({237, 238, 239}));
  EXPECT_EQ(pf.type, 3u);
}

TEST(PfClosed, ShapeAndMembership) {
  for (long b = 2; b <= 4; ++b) {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (long d = 1; d <= 4; ++d) {
        auto p = repunit_general_params(b, n, d);
        if (gcd(p.a, p.d) != 1) continue;
        auto pf = pf_closed(b, n, d);
        ASSERT_EQ(pf.pf.size(), n - 1);
        EXPECT_EQ(pf.pf.back(), repunit_general_frobenius(b, n, d));
        auto ape = apery_set(build_generators(p));
        EXPECT_EQ(pf.pf, pseudo_frobenius_from_apery(ape));
        for (std::size_t t = 1; t + 2 <= n; ++t) {
          EXPECT_FALSE(contains(ape, Integer(static_cast<unsigned long>(t)) * d));
        }
      }
    }
  }
}

TEST(ClosedReport, UsesRepunitPfOrClosedApery) {
  auto r = closed_report(fp(7, 2, 1, 2));
  EXPECT_EQ(r.engine, Engine::closed_form);
  EXPECT_EQ(r.pf, ints({54, 55}));
  EXPECT_TRUE(is_repunit_specialization(fp(7, 2, 1, 2)));
  EXPECT_FALSE(is_repunit_specialization(fp(5, 2, 1, 2)));
  r = closed_report(fp(5, 2, 1, 2));
  EXPECT_EQ(r.pf, ints({17, 29}));
  EXPECT_EQ(r.type, 2u);
}

// N_dr(m) is non-decreasing in m, with O_B^H evaluated exhaustively.
TEST(NdrMonotone, ExhaustiveWeightedChange) {
  for (long b = 2; b <= 4; ++b) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (long a : {3L, 5L, 8L, 13L}) {
        if (a + 1 < static_cast<long>(k)) continue;
        const long d = (a % 3 == 0) ? 2 : 3;
        auto cost = weighted_change_table(b, k, static_cast<std::size_t>(6 * a));
        for (long r = 0; r < a; ++r) {
          Integer prev = -1;
          for (long m = 0; m <= 5; ++m) {
            long amount = m * a + r;
            Integer value = Integer(static_cast<long>(cost[amount])) * a + Integer(amount) * d;
            EXPECT_GE(value, prev);
            if (m == 0) EXPECT_EQ(value, n_dr(fp(a, b, d, k), r));
            prev = value;
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace semigroup
