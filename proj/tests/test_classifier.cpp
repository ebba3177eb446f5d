#include <random>

#include <gtest/gtest.h>

#include "support/random_curves.hpp"
#include "syzcurve/classifier.hpp"
#include "syzcurve/parser.hpp"

using namespace syzcurve;

namespace {

const RationalField QQ;
using QPoly = HomogPoly<RationalField>;

JacobianModule<RationalField> Q(const char* s) { return JacobianModule<RationalField>(parse_poly(s)); }

JacobianModule<PrimeField> Fp(const char* s) {
  return JacobianModule<PrimeField>(convert(parse_poly(s), PrimeField(primes_from_seed(1).first)));
}

template <class F>
Classification run(JacobianModule<F>& mod) {
  auto b = compute_invariants(mod, 2 * mod.degree());
  check_bundle(b);
  return classify(mod, b);
}

QPoly zero1() { return QPoly(QQ, 1); }

}  // namespace

TEST(TauTestTest, SpecExamples) {
  EXPECT_EQ(tau_test(12, 1, 111), TestOutcome::Free);
  EXPECT_EQ(tau_test(3, 1, 2), TestOutcome::NearlyFree);
  EXPECT_EQ(tau_test(12, 4, 80), TestOutcome::Neither);
  EXPECT_EQ(tau_test(4, 2, 6), TestOutcome::NearlyFree);  // r = d/2
}

TEST(CtStTestTest, SpecExamples) {
  EXPECT_EQ(ctst_test(2, 1, 3), TestOutcome::Free);
  EXPECT_EQ(ctst_test(2, 3, 3), TestOutcome::NearlyFree);
  EXPECT_EQ(ctst_test(3, 3, 3), TestOutcome::Neither);  // T + 3
  EXPECT_THROW(ctst_test(2, 2, 3), InternalInconsistency);  // T + 1
  EXPECT_THROW(ctst_test(1, 1, 3), InternalInconsistency);  // below T
}

TEST(DeltaTestTest, SpecExamples) {
  auto tri = Q("x*y*z");
  EXPECT_EQ(delta_test(tri, 1), TestOutcome::Free);
  auto cusp = Q("x^3-y^2*z");
  EXPECT_EQ(delta_test(cusp, 1), TestOutcome::NearlyFree);
  auto nodal = Q("y^2*z-x^3-x^2*z");
  EXPECT_EQ(delta_test(nodal, 2), TestOutcome::Neither);
}

TEST(PairingTest, TriangleSaito) {
  auto mod = Q("x*y*z");
  auto x = variable(QQ, 0), y = variable(QQ, 1), z = variable(QQ, 2);
  Triple<RationalField> r1{x, -y, zero1()}, r2{x, zero1(), -z};
  auto w = cross_product(r1, r2);
  EXPECT_EQ(w[0], parse_poly("y*z"));
  EXPECT_EQ(w[1], parse_poly("x*z"));
  EXPECT_EQ(w[2], parse_poly("x*y"));
  auto h = pairing(r1, r2, mod.gradient());
  EXPECT_EQ(h.degree(), 0);
  EXPECT_EQ(h.coefficient({0, 0, 0}), 1);
  EXPECT_TRUE(saito_verify(mod.gradient(), Syzygy<RationalField>{1, r1}, Syzygy<RationalField>{1, r2}));
}

TEST(PairingTest, DependentPairFails) {
  auto mod = Q("x*y*z*(x+y+z)");
  auto x = variable(QQ, 0);
  const auto& low = mod.syzygy_basis(2);
  ASSERT_FALSE(low.empty());
  const auto& rho = low.front();
  Triple<RationalField> junk = multiply(x, rho.comps);  // degree 3, a multiple of rho
  EXPECT_TRUE(pairing(rho.comps, junk, mod.gradient()).is_zero());

  auto tri = Q("x*y*z");
  auto x1 = variable(QQ, 0), y1 = variable(QQ, 1);
  Triple<RationalField> r1{x1, -y1, zero1()};
  Triple<RationalField> r1x = multiply(x1, r1);
  EXPECT_THROW(saito_verify(tri.gradient(), Syzygy<RationalField>{1, r1}, Syzygy<RationalField>{2, r1x}),
               std::invalid_argument);
  EXPECT_TRUE(pairing(r1, r1x, tri.gradient()).is_zero());
}

TEST(PairingTest, FreeArrangementExponentsOneTen) {
  auto mod = Fp("x*y*z*(x^9-y^9)");
  auto [rho1, rho2] = free_generators(mod, 1);
  EXPECT_EQ(rho1.degree, 1);
  EXPECT_EQ(rho2.degree, 10);
  EXPECT_TRUE(saito_verify(mod.gradient(), rho1, rho2));
}

TEST(PairingProperty, BilinearAndAntisymmetric) {
  // Relations of a smooth quartic in degree 3 and 4 (Koszul and multiples).
  auto mod = Q("x^4+y^4+z^4+x^2*y*z");
  const auto& s3 = mod.syzygy_basis(3);
  const auto& s4 = mod.syzygy_basis(4);
  ASSERT_GE(s3.size(), 2u);
  ASSERT_GE(s4.size(), 1u);
  const auto& g = mod.gradient();
  for (std::size_t i = 0; i < s3.size(); ++i) {
    for (std::size_t j = 0; j < s3.size(); ++j) {
      auto hij = pairing(s3[i].comps, s3[j].comps, g);
      auto hji = pairing(s3[j].comps, s3[i].comps, g);
      EXPECT_EQ(hij, -hji);
      if (i == j) EXPECT_TRUE(hij.is_zero());
    }
  }
  // Additivity in the first argument, homogeneity in the second.
  const auto& a = s3[0].comps;
  const auto& b = s3[1].comps;
  Triple<RationalField> sum{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  const auto& c = s4[0].comps;
  EXPECT_EQ(pairing(sum, c, g), pairing(a, c, g) + pairing(b, c, g));
  Triple<RationalField> c3{c[0].scaled(3), c[1].scaled(3), c[2].scaled(3)};
  EXPECT_EQ(pairing(a, c3, g), pairing(a, c, g).scaled(3));
}

TEST(NearlyFreeGeneratorsTest, Cusp) {
  auto mod = Q("x^3-y^2*z");
  auto gens = nearly_free_generators(mod, 1, 5);
  EXPECT_EQ(gens.rho1.degree, 1);
  EXPECT_TRUE(gens.rho1.a().is_zero());
  EXPECT_EQ(gens.rho2.degree, 2);
  EXPECT_EQ(gens.rho3.degree, 2);
  EXPECT_EQ(mod.ar_dim(2), 5u);
  EXPECT_EQ(dim_S(1), 3u);
  EXPECT_TRUE(gens.linear_forms_independent);
  EXPECT_TRUE(gens.generates);
  // ar' from the resolution: 2*C(k,2) + C(k+1,2) - C(k-1,2) for d = 3, r = 1.
  for (int k = 0; k <= 5; ++k) {
    const long long hand = 2 * dim_binom2(k) + dim_binom2(k + 1) - dim_binom2(k - 1);
    EXPECT_EQ(gens.ar_prime.at(k), hand);
    EXPECT_EQ(gens.ar_prime.at(k), static_cast<long long>(mod.ar_dim(k)));
  }
  EXPECT_EQ(gens.ar_prime.values, (std::vector<long long>{0, 1, 5, 11, 19, 29}));
}

TEST(NearlyFreeGeneratorsTest, FreeInputIsRejected) {
  auto tri = Q("x*y*z");
  EXPECT_THROW(nearly_free_generators(tri, 1, 4), std::invalid_argument);
}

TEST(ClassifyTest, SpecExamples) {
  auto a = Fp("x*y*z*(x^9-y^9)");
  auto ca = run(a);
  EXPECT_EQ(ca.verdict, Verdict::Free);
  EXPECT_EQ(ca.exponents, (std::pair{1, 10}));
  ASSERT_TRUE(ca.criteria);
  EXPECT_EQ(ca.criteria->tau_test, TestOutcome::Free);
  EXPECT_EQ(ca.criteria->ctst_test, TestOutcome::Free);
  EXPECT_EQ(ca.criteria->delta_test, TestOutcome::Free);
  EXPECT_TRUE(ca.verified);

  auto cusp = Q("x^3-y^2*z");
  auto cc = run(cusp);
  EXPECT_EQ(cc.verdict, Verdict::NearlyFree);
  EXPECT_EQ(cc.exponents, (std::pair{1, 2}));
  EXPECT_TRUE(cc.symmetry_flag);
  EXPECT_TRUE(cc.verified);

  auto c = Fp("x*y*z*(x^3-y^3)*(y^3-z^3)*(x^3-z^3)");
  auto cf = run(c);
  EXPECT_EQ(cf.verdict, Verdict::Free);
  EXPECT_EQ(cf.exponents, (std::pair{4, 7}));
}

TEST(ClassifyTest, OtherShapes) {
  auto fermat = Q("x^3+y^3+z^3");
  EXPECT_EQ(run(fermat).verdict, Verdict::Smooth);
  auto pencil = Q("x^2+y^2");
  EXPECT_EQ(run(pencil).verdict, Verdict::PencilOfLines);
  auto nodal = Q("y^2*z-x^3-x^2*z");
  auto cn = run(nodal);
  EXPECT_EQ(cn.verdict, Verdict::Neither);
  EXPECT_FALSE(cn.exponents);
  auto quad = Q("x*y*z*(x+y+z)");
  auto cq = run(quad);
  EXPECT_EQ(cq.verdict, Verdict::NearlyFree);
  EXPECT_EQ(cq.exponents, (std::pair{2, 2}));
  EXPECT_TRUE(cq.verified);
}

TEST(ClassifyProperty, CriteriaAgreeOnRandomCurves) {
  std::mt19937_64 rng(51);
  const PrimeField k(primes_from_seed(4).first);
  int classified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 3 + trial % 5;
    JacobianModule<PrimeField> mod(convert(syzcurve::testing::random_curve(rng, d), k));
    if (mod.reducedness_check() != Reducedness::Reduced) continue;
    auto c = run(mod);  // throws on disagreement
    EXPECT_TRUE(c.verified);
    ++classified;
  }
  EXPECT_GE(classified, 30);
}
