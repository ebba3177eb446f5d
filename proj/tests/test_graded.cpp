#include <random>

#include <gtest/gtest.h>

#include "support/random_curves.hpp"
#include "syzcurve/graded.hpp"
#include "syzcurve/invariants.hpp"
#include "syzcurve/parser.hpp"

using namespace syzcurve;

namespace {

const RationalField QQ;

JacobianModule<RationalField> Q(const char* s) { return JacobianModule<RationalField>(parse_poly(s)); }

JacobianModule<PrimeField> Fp(const char* s) {
  return JacobianModule<PrimeField>(convert(parse_poly(s), PrimeField(primes_from_seed(1).first)));
}

}  // namespace

TEST(JacobianMatrixTest, SpecExamples) {
  auto mod = Q("x*y*z");
  auto m0 = mod.jacobian_matrix(0);
  EXPECT_EQ(m0.cols(), 3u);
  EXPECT_EQ(m0.rows(), 6u);
  EXPECT_EQ(rank(m0), 3u);
  auto m1 = mod.jacobian_matrix(1);
  EXPECT_EQ(m1.cols(), 9u);
  EXPECT_EQ(m1.rows(), 10u);
  EXPECT_EQ(kernel_basis(m1).size(), 2u);
  EXPECT_EQ(mod.ar_dim(1), 2u);
}

TEST(SyzygyBasisTest, SpecExamples) {
  auto tri = Q("x*y*z");
  EXPECT_EQ(tri.syzygy_basis(1).size(), 2u);

  auto cusp = Q("x^3-y^2*z");
  const auto& b = cusp.syzygy_basis(1);
  ASSERT_EQ(b.size(), 1u);
  // Proportional to (0, y, -2z).
  const auto& s = b[0];
  EXPECT_TRUE(s.a().is_zero());
  auto y = variable(QQ, 1), z = variable(QQ, 2);
  const mpq_class scale = s.b().coefficient({0, 1, 0});
  ASSERT_NE(scale, 0);
  EXPECT_EQ(s.b(), y.scaled(scale));
  EXPECT_EQ(s.c(), z.scaled(-2 * scale));

  EXPECT_TRUE(Q("x^3+y^3+z^3").syzygy_basis(1).empty());
}

TEST(MdrTest, SpecExamples) {
  auto tri = Q("x*y*z");
  EXPECT_EQ(tri.ar_dim(0), 0u);
  EXPECT_EQ(tri.mdr(), 1);
  EXPECT_EQ(Fp("x*y*z*(x^9-y^9)").mdr(), 1);
  EXPECT_EQ(Q("x^3+y^3+z^3").mdr(), 2);
}

TEST(ReducednessTest, SpecExamples) {
  EXPECT_EQ(Q("x^2*y").reducedness_check(), Reducedness::NonReduced);
  EXPECT_EQ(Q("x^2+y^2").reducedness_check(), Reducedness::PencilOfLines);
  auto tri = Q("x*y*z");
  EXPECT_EQ(tri.reducedness_check(), Reducedness::Reduced);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(tri.milnor_dim(k), 3u);
  EXPECT_EQ(Q("(x+y)^2*z^3").reducedness_check(), Reducedness::NonReduced);
  EXPECT_EQ(Q("x^3-y^3").reducedness_check(), Reducedness::PencilOfLines);
}

TEST(GradedProperty, MacaulayRankMatchesDenseKernel) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 3 + trial % 4;
    auto f = syzcurve::testing::random_curve(rng, d);
    JacobianModule<RationalField> mod(f);
    for (int k = 0; k <= d; ++k) {
      EXPECT_EQ(mod.syzygy_basis(k).size(), mod.ar_dim(k)) << to_string(f) << " k=" << k;
      EXPECT_EQ(mod.jacobian_rank(k + d - 1), rank(mod.jacobian_matrix(k)));
    }
  }
}

TEST(GradedProperty, ExactSequence) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 3 + trial % 5;
    JacobianModule<PrimeField> mod(convert(syzcurve::testing::random_curve(rng, d), PrimeField(primes_from_seed(9).first)));
    for (int k = 0; k <= 3 * d; ++k) {
      const long long m = static_cast<long long>(mod.milnor_dim(k));
      const long long rhs = dim_binom2(k + 2) - 3 * dim_binom2(k - d + 3) + static_cast<long long>(mod.ar_dim(k - d + 1));
      EXPECT_EQ(m, rhs) << "d=" << d << " k=" << k;
    }
  }
}

TEST(GradedProperty, KoszulRelationsLiveInDegreeDMinusOne) {
  auto mod = Q("x^4+y^4+z^4");
  EXPECT_EQ(mod.ar_dim(2), 0u);
  EXPECT_EQ(mod.ar_dim(3), 3u);  // the three Koszul relations
  for (const auto& s : mod.syzygy_basis(3)) EXPECT_TRUE(apply_gradient(s.comps, mod.gradient()).is_zero());
}

TEST(GradedProperty, RankLogRecordsEveryMatrix) {
  auto mod = Fp("x*y*z");
  mod.reducedness_check();
  mod.syzygy_basis(1);
  const auto& log = mod.rank_log();
  EXPECT_TRUE(log.count("J_2"));  // ar_0 = 3 - rank J_2
  EXPECT_TRUE(log.count("kernel_1"));
  EXPECT_EQ(log.at("kernel_1"), 7u);
}

TEST(MacaulaySpanTest, NormalFormAndMembership) {
  auto mod = Q("x^3-y^2*z");
  const auto& span = mod.jacobian_span(2);  // J_2 = span(x^2, yz, y^2)
  EXPECT_EQ(span.rank(), 3u);
  auto vec = [](const char* s) { return parse_poly(s).coefficients(); };
  EXPECT_TRUE(span.contains(vec("x^2 + 5*y*z")));
  EXPECT_FALSE(span.contains(vec("x*y")));
  EXPECT_EQ(span.free_columns().size(), 3u);
}
