#include <gtest/gtest.h>

#include <set>

#include "isod4/vect4.hpp"

using namespace isod4;

namespace {
// realizable iff some integers n, m give n*tau + m*gamma
bool realizable_oracle(std::int64_t a, std::int64_t b) {
  for (std::int64_t m = -40; m <= 40; ++m)
    for (std::int64_t n = -40; n <= 40; ++n)
      if (2 * n + m == a && -2 * m == b)
        return true;
  return false;
}
} // namespace

TEST(Vect4, Generators) {
  EXPECT_EQ(tau(), (SphereBundleClass{2, 0}));
  EXPECT_EQ(gamma(), (SphereBundleClass{1, -2}));
  EXPECT_TRUE(is_realizable(tau()));
  EXPECT_TRUE(is_realizable(gamma()));
  EXPECT_FALSE(is_realizable({1, 0}));
  EXPECT_TRUE(is_realizable(trivial_bundle()));
}

TEST(Vect4, RealizabilityMatchesLatticeOracle) {
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b)
      EXPECT_EQ(is_realizable({a, b}), realizable_oracle(a, b)) << a << "," << b;
}

TEST(Vect4, DecomposeRoundTrips) {
  for (std::int64_t n = -10; n <= 10; ++n)
    for (std::int64_t m = -10; m <= 10; ++m) {
      const SphereBundleClass x = n * tau() + m * gamma();
      const auto [nt, ng] = decompose(x);
      EXPECT_EQ(nt, n);
      EXPECT_EQ(ng, m);
    }
  EXPECT_THROW(decompose({1, 0}), std::domain_error);
}

TEST(Vect4, Stabilize) {
  EXPECT_EQ(stabilize(tau()).p1, 0);
  EXPECT_EQ(stabilize(gamma()).p1, -2);
  EXPECT_THROW(stabilize({0, 1}), std::domain_error);
  EXPECT_THROW(stabilize({1, 0}), std::domain_error);
}

TEST(Vect4, ExactSequenceWindow) {
  const ExactSequenceCheck c = verify_exact_sequence(20);
  EXPECT_TRUE(c.kernel_is_tau_multiples);
  EXPECT_TRUE(c.image_is_even_integers);
  EXPECT_TRUE(c.closed_under_group_ops);
  EXPECT_TRUE(c.index_four);
  EXPECT_TRUE(c.f_injective);
  EXPECT_TRUE(c.passed());
  // |a| <= 20 even gives 21 multiples of tau
  EXPECT_EQ(c.kernel.size(), 21u);
  for (const auto &k : c.kernel)
    EXPECT_EQ(k.b, 0);
  EXPECT_THROW(verify_exact_sequence(3), std::invalid_argument);
}

TEST(Vect4, ModIsNonNegative) {
  EXPECT_EQ(mod(-1, 4), 3);
  EXPECT_EQ(mod(-8, 4), 0);
  EXPECT_EQ(obstruction({0, 2}), 2);
}
