#include <gtest/gtest.h>

#include "isod4/pontsolve.hpp"

using namespace isod4;

namespace {

const Cohomology &coh() {
  static const RootSystem rs = build_d4(4);
  static const Cohomology c(rs);
  return c;
}

// transcribed by hand, k = k1 = k2
const std::array<const char *, 12> kTable{
    "kt1 + kt2 + k3t3 + k4t4",   "k3t1 + kt2 + kt3 + k4t4",   "k3t1 + k4t2 + kt3 + kt4",
    "kt1 + k3t2 + kt3 + k4t4",   "k3t1 + kt2 + k4t3 + kt4",   "kt1 + k3t2 + k4t3 + kt4",
    "kt1 - kt2 + k3t3 - k4t4",   "k3t1 + kt2 - kt3 - k4t4",   "k3t1 - k4t2 + kt3 - kt4",
    "kt1 + k3t2 - kt3 - k4t4",   "k3t1 + kt2 - k4t3 - kt4",   "kt1 + k3t2 - k4t3 - kt4",
};

// a7..a12 after k3 = -k
const std::array<const char *, 6> kReduced{
    "kt1 - kt2 - kt3 - k4t4",  "-kt1 + kt2 - kt3 - k4t4", "-kt1 - k4t2 + kt3 - kt4",
    "kt1 - kt2 - kt3 - k4t4",  "-kt1 + kt2 - k4t3 - kt4", "kt1 - kt2 - k4t3 - kt4",
};

} // namespace

TEST(OrbitClasses, ReproduceTableAtEqualK) {
  const auto classes = orbit_classes(coh(), UnknownVector::generic());
  for (std::size_t i = 0; i < 12; ++i)
    EXPECT_EQ(impose_leaf_sphere(classes[i]).str(kReducedNames), kTable[i]) << "a" << i + 1;
}

TEST(OrbitClasses, ReproduceReducedTable) {
  const auto classes = orbit_classes(coh(), UnknownVector::generic());
  for (std::size_t i = 6; i < 12; ++i)
    EXPECT_EQ(impose_sum_zero(impose_leaf_sphere(classes[i])).str(kReducedNames), kReduced[i - 6])
        << "a" << i + 1;
}

TEST(OrbitClasses, ReferenceTablesAgreeWithTranscription) {
  for (std::size_t i = 0; i < 12; ++i)
    EXPECT_EQ(reference_orbit_table()[i].str(kReducedNames), kTable[i]);
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_EQ(reference_reduced_table()[i].str(kReducedNames), kReduced[i]);
}

// The class of E_ai depends only on a_i when the seed is fixed by the
// stabilizer of a1. That subspace is spanned by t1 - t2.
TEST(OrbitClasses, StabilizerInvariantSeedsAreWordIndependent) {
  const RootSystem rs = build_d4(4);
  const WeylGroup w = weyl_group(rs);
  std::vector<LinearForm> eqs;
  for (const auto &u : w.elements())
    if (u.apply(rs.root(1)) == rs.root(1)) {
      const UnknownVector d =
          UnknownVector::generic().transformed(coh().pullback_on_t(u.word)) - UnknownVector::generic();
      for (const auto &f : d.coef)
        eqs.push_back(f);
    }
  Matrix m(eqs.size(), 4);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (std::size_t c = 0; c < 4; ++c)
      m(r, c) = eqs[r][c];
  auto inv = nullspace(m);
  ASSERT_EQ(inv.size(), 1u);
  const Rational lead = inv[0][0];
  ASSERT_FALSE(lead.is_zero());
  for (auto &x : inv[0])
    x /= lead;
  EXPECT_EQ(inv[0], (std::vector<Rational>{1, -1, 0, 0}));

  UnknownVector seed;
  seed.coef = {unknown(0), Rational(-1) * unknown(0), LinearForm{}, LinearForm{}};
  const auto classes = orbit_classes(coh(), seed);
  for (const auto &u : w.elements())
    for (int i = 1; i <= 12; ++i)
      if (u.apply(rs.root(1)) == rs.root(i)) {
        const Word rev(u.word.rbegin(), u.word.rend());
        EXPECT_EQ(seed.transformed(coh().pullback_on_t(rev)), classes[static_cast<std::size_t>(i - 1)]);
      }
}

TEST(OrbitClasses, SolutionIsNotStabilizerInvariant) {
  // s9 fixes a1 but moves k(t1 + t2 - t3 - t4)
  EXPECT_EQ(reflection(build_d4(4), 9).apply(build_d4(4).root(1)), build_d4(4).root(1));
  UnknownVector sol;
  sol.coef = {unknown(0), unknown(0), Rational(-1) * unknown(0), Rational(-1) * unknown(0)};
  EXPECT_NE(sol.transformed(coh().action_on_t(9)), sol);
}

TEST(OrbitClasses, SumOfA7ToA12) {
  const auto classes = orbit_classes(coh(), UnknownVector::generic());
  std::array<UnknownVector, 6> tail;
  for (std::size_t i = 0; i < 6; ++i)
    tail[i] = impose_sum_zero(impose_leaf_sphere(classes[i + 6]));
  const UnknownVector s = sum(tail);
  // -(k + k4)(t2 + 2t3 + 3t4)
  UnknownVector expect;
  const LinearForm kk4 = Rational(-1) * (unknown(0) + unknown(3));
  expect.coef = {LinearForm{}, kk4, Rational(2) * kk4, Rational(3) * kk4};
  EXPECT_EQ(s, expect);
}

TEST(Constraints, LeafSphere) {
  EXPECT_EQ(leaf_sphere_constraint(coh()).lhs, (LinearForm{1, -1, 0, 0}));
}

TEST(Constraints, SumZeroForcesK3) {
  const auto classes = orbit_classes(coh(), UnknownVector::generic());
  std::array<UnknownVector, 12> red;
  for (std::size_t i = 0; i < 12; ++i)
    red[i] = impose_leaf_sphere(classes[i]);
  const auto eqs = sum_zero_constraint(red);
  ASSERT_EQ(eqs.size(), 4u);
  EXPECT_EQ(eqs[0].lhs, (LinearForm{6, 0, 6, 0}));
  EXPECT_EQ(eqs[0].str(kReducedNames), "6k + 6k3 = 0");
}

TEST(Solve, FullSystemIsOneDimensional) {
  const Solution sol = solve(coh());
  ASSERT_EQ(sol.dimension(), 1u);
  EXPECT_EQ(sol.basis[0], (std::vector<Rational>{1, 1, -1, -1}));
}

TEST(Solve, DiagnosticDimensions) {
  EXPECT_EQ(solve(coh(), {true, true, false}).dimension(), 2u);
  EXPECT_EQ(solve(coh(), {false, false, false}).dimension(), 4u);
  const Solution two = solve(coh(), {true, true, false});
  // (k, k, -k, k4): k1 = k2 and k3 = -k1 on every basis vector
  for (const auto &v : two.basis) {
    EXPECT_EQ(v[0], v[1]);
    EXPECT_EQ(v[2], -v[0]);
  }
}

TEST(Solve, SolutionSatisfiesEveryConstraint) {
  const Solution sol = solve(coh());
  for (const auto &e : sol.equations) {
    Rational s = 0;
    for (std::size_t i = 0; i < 4; ++i)
      s += e.lhs[i] * sol.basis[0][i];
    EXPECT_TRUE(s.is_zero()) << e.str();
  }
}

TEST(BundleClasses, EulerAndPontryaginClasses) {
  const BundleClasses b = lemma8_classes(coh(), solve(coh()));
  EXPECT_EQ(b.euler.str(), "2ω1 - ω2");
  EXPECT_EQ(b.p1.str(), "2k(ω2 - ω9)");
  EXPECT_EQ(b.content, Rational(2));
  EXPECT_TRUE(b.k_integral);
  EXPECT_EQ(b.p1.at(1).coords, (Vec4{0, 2, 0, -2}));
}

TEST(BundleClasses, RequiresOneDimensionalSolution) {
  EXPECT_THROW(lemma8_classes(coh(), solve(coh(), {true, true, false})), std::domain_error);
}

TEST(UnknownVector, TransformThenInverseIsIdentity) {
  const UnknownVector g = UnknownVector::generic();
  for (int i : kSimpleLabels) {
    const SignedPerm s = coh().action_on_t(i);
    EXPECT_EQ(g.transformed(s).transformed(s.inverse()), g);
  }
}
