#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "modpascal/regular.hpp"
#include "modpascal/triangle.hpp"

using namespace modpascal;

TEST(DRecurrence, Examples) {
  EXPECT_EQ(d_recurrence(8), 4);
  EXPECT_EQ(-diag_sum_brute(2) + 2 * diag_sum_brute(4), 4);
  EXPECT_EQ(d_recurrence(0), 1);
  EXPECT_THROW(d_recurrence(-1), std::domain_error);

  std::mt19937_64 rng(11);
  DiagonalRecurrence rec;
  for (int i = 0; i < 200; ++i) {
    const Nat n = rng() >> 4;
    EXPECT_EQ(rec(Nat(2 * n + 1)), rec(Nat(2 * n)));
  }
}

TEST(DRecurrence, MissingBaseValueIsReported) {
  DiagonalRecurrence no_zero({2, 4});
  EXPECT_THROW(no_zero(Nat(0)), RecurrenceConsistencyError);
  EXPECT_THROW(no_zero(Nat(1)), RecurrenceConsistencyError);
  EXPECT_EQ(no_zero(Nat(8)), 4);
  // d(0) alone is enough for the recursion to bottom out.
  DiagonalRecurrence only_zero({0});
  EXPECT_EQ(only_zero(Nat(3615)), 68);
}

TEST(DRecurrence, MemoStaysLogarithmic) {
  DiagonalRecurrence rec;
  const Nat n = pow2(2000) - 12345;
  EXPECT_EQ(rec(n), d_fast(n));
  EXPECT_LT(rec.memo_size(), 10000U);
}

TEST(LinRep, FrozenMatrices) {
  const LinRep rep = derive_linrep();
  EXPECT_EQ(rep.initial, (Vec2{{1, 1}}));
  EXPECT_EQ(rep.m0, (Mat2{{{{0, 1}, {-1, 2}}}}));
  EXPECT_EQ(rep.m1, (Mat2{{{{3, -1}, {4, -1}}}}));
  EXPECT_EQ(rep.readout, 0U);
}

TEST(LinRep, StateIsDiagonalPair) {
  const LinRep rep = derive_linrep();
  EXPECT_EQ(linrep_state(rep, 1), (Vec2{{2, 3}}));
  EXPECT_EQ(diag_sum_brute(2), 2);
  EXPECT_EQ(diag_sum_brute(4), 3);
  for (Index n = 0; n <= 1000; ++n) {
    const Vec2 v = linrep_state(rep, n);
    ASSERT_EQ(v[0], diag_sum_brute(2 * n)) << n;
    ASSERT_EQ(v[1], diag_sum_brute(4 * n)) << n;
  }
}

TEST(LinRep, Examples) {
  const LinRep rep = derive_linrep();
  EXPECT_EQ(linrep_eval(rep, 8), 4);
  EXPECT_EQ(linrep_eval(rep, 0), 1);
  EXPECT_EQ(linrep_eval(rep, 3615), 68);
  EXPECT_THROW(linrep_eval(rep, -2), std::domain_error);
  for (Index n = 0; n <= 10000; ++n) ASSERT_EQ(linrep_eval(rep, n), d_fast(n)) << n;
}

TEST(LinRep, ThreeWayAgreementAndPositiveReadout) {
  const LinRep rep = derive_linrep();
  DiagonalRecurrence rec;
  for (std::uint64_t n = 0; n <= (1U << 16); ++n) {
    const Nat fast = d_fast(n);
    const Nat via_matrix = linrep_eval(rep, n);
    ASSERT_GE(via_matrix, 1) << n;
    ASSERT_EQ(via_matrix, fast) << n;
    ASSERT_EQ(rec(Nat(n)), fast) << n;
  }
}

TEST(LinRep, WideInputs) {
  const LinRep rep = derive_linrep();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Nat n = 0;
    for (int w = 0; w < 8; ++w) n = (n << 64) + rng();
    ASSERT_EQ(linrep_eval(rep, n), d_fast(n));
    ASSERT_EQ(d_recurrence(n), d_fast(n));
  }
}

TEST(VerifyRemark, SmallCases) {
  const VerifyReport one = verify_remark(1);
  ASSERT_EQ(one.identities.size(), 4U);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.identities[0].checked, 1U);  // d(1) = d(0)
  EXPECT_EQ(one.identities[1].checked, 0U);

  // identity 2 at n = 1: d(6) = 3 d(2) - d(4) = 3
  EXPECT_EQ(3 * diag_sum_brute(2) - diag_sum_brute(4), 3);
  EXPECT_EQ(diag_sum_brute(6), 3);
}

TEST(VerifyRemark, TenThousand) {
  const VerifyReport r = verify_remark(10000);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.identities.size(), 4U);
  EXPECT_EQ(r.identities[0].checked, 5000U);  // 2n+1 <= 10000
  EXPECT_EQ(r.identities[1].checked, 2500U);  // 4n+2 <= 10000
  EXPECT_EQ(r.identities[2].checked, 1251U);  // 8n   <= 10000
  EXPECT_EQ(r.identities[3].checked, 1250U);  // 8n+4 <= 10000
  for (const auto& id : r.identities) EXPECT_FALSE(id.first_failure.has_value());
}

TEST(VerifyRemark, TwoToTheSixteen) {
  EXPECT_TRUE(verify_remark(1U << 16).ok());
}
