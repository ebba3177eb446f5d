#include <gtest/gtest.h>

#include "syzcurve/arrangements.hpp"
#include "syzcurve/invariants.hpp"
#include "syzcurve/parser.hpp"

using namespace syzcurve;

namespace {

ProjectivePoint L(long a, long b, long c) { return {mpq_class(a), mpq_class(b), mpq_class(c)}; }

long long algebraic_tau(const LineSet& lines) {
  JacobianModule<PrimeField> mod(convert(arrangement_poly(lines), PrimeField(primes_from_seed(1).first)));
  return tjurina(mod);
}

std::vector<int> multiplicities(const LatticeSummary& s) {
  std::vector<int> out;
  for (const auto& p : s.points) out.push_back(p.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(ArrangementPolyTest, SpecExamples) {
  EXPECT_EQ(arrangement_poly(LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)})), parse_poly("x*y*z"));
  EXPECT_EQ(arrangement_poly(LineSet({L(1, 0, 0), L(0, 1, 0), L(1, -1, 0), L(0, 0, 1)})), parse_poly("x*y*z*(x-y)"));
}

TEST(LineSetTest, Validation) {
  EXPECT_THROW(LineSet({L(1, 0, 0), L(2, 0, 0), L(0, 0, 1)}), InputError);  // proportional
  EXPECT_THROW(LineSet({L(1, 0, 0), L(0, 0, 0), L(0, 0, 1)}), InputError);
  EXPECT_THROW(LineSet({L(1, 0, 0), L(0, 1, 0)}), InputError);
}

TEST(IntersectionLatticeTest, SpecExamples) {
  auto tri = intersection_lattice(LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)}));
  EXPECT_EQ(multiplicities(tri), (std::vector<int>{2, 2, 2}));

  auto star = intersection_lattice(LineSet({L(1, 0, 0), L(0, 1, 0), L(1, -1, 0), L(1, 1, 0)}));
  ASSERT_EQ(star.points.size(), 1u);
  EXPECT_EQ(star.points[0].multiplicity, 4);
  ASSERT_TRUE(star.points[0].coords);
  EXPECT_EQ(*star.points[0].coords, L(0, 0, 1));
  EXPECT_TRUE(star.pair_count_ok());

  auto quad = intersection_lattice(LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 1)}));
  EXPECT_EQ(multiplicities(quad), (std::vector<int>(6, 2)));
}

TEST(IntersectionLatticeTest, CanonicalScaling) {
  auto p = canonical_point({mpq_class(0), mpq_class(-3), mpq_class(6)});
  EXPECT_EQ(p, L(0, 1, -2));
  auto s = intersection_lattice(LineSet({L(2, 0, 0), L(0, 3, 0), L(1, 1, 0), L(0, 0, 5)}));
  EXPECT_EQ(multiplicities(s), (std::vector<int>{2, 2, 2, 3}));
}

TEST(LatticeTjurinaTest, SpecExamples) {
  EXPECT_EQ(lattice_tjurina(intersection_lattice(LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)}))), 3);
  auto d12 = parse_lattice_summary("degree 12\n11 1\n2 11\n");
  EXPECT_EQ(d12.degree, 12);
  EXPECT_EQ(lattice_tjurina(d12), 111);
  auto star = intersection_lattice(LineSet({L(1, 0, 0), L(0, 1, 0), L(1, -1, 0), L(1, 1, 0)}));
  EXPECT_EQ(lattice_tjurina(star), 9);
}

TEST(LatticeTjurinaTest, CombinatoricsAgreesWithAlgebra) {
  const std::vector<LineSet> sets{
      LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1)}),
      LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 1)}),
      LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, -1, 0), L(0, 1, -1), L(1, 0, -1)}),
      LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, 1, 0), L(1, 2, 3), L(2, -1, 5), L(1, 1, 1)}),
      LineSet({L(1, 0, 0), L(0, 1, 0), L(0, 0, 1), L(1, -1, 0), L(1, 1, 0), L(1, 2, 0), L(1, 0, 1)}),
  };
  for (const auto& s : sets) EXPECT_EQ(lattice_tjurina(intersection_lattice(s)), algebraic_tau(s));
}

TEST(TeraoTest, SpecExamples) {
  EXPECT_EQ(terao_rigidity(12, 111), (TeraoResult{TeraoResult::Kind::Rigid, 1}));
  EXPECT_EQ(terao_rigidity(12, 103), (TeraoResult{TeraoResult::Kind::Rigid, 2}));
  EXPECT_EQ(terao_rigidity(12, 97), (TeraoResult{TeraoResult::Kind::Rigid, 3}));
  EXPECT_EQ(terao_rigidity(12, 93), (TeraoResult{TeraoResult::Kind::NotCovered, 4}));
  EXPECT_EQ(terao_rigidity(12, 100).kind, TeraoResult::Kind::NoSolution);
  EXPECT_EQ(to_string(terao_rigidity(12, 93)), "NotCovered(4)");
  EXPECT_EQ(to_string(terao_rigidity(12, 111)), "Rigid(1)");
}

TEST(TeraoTest, RigidAtEveryCoveredMaximum) {
  for (int d = 3; d <= 30; ++d) {
    for (int r = 0; r * r <= d - 3; ++r) {
      const long long tau_max = static_cast<long long>(d - 1) * (d - r - 1) + r * r;
      EXPECT_EQ(terao_rigidity(d, tau_max), (TeraoResult{TeraoResult::Kind::Rigid, r})) << d << " " << r;
    }
  }
}

TEST(IntervalTest, SpecExamples) {
  auto rows = interval_table(12);
  ASSERT_EQ(rows.size(), 6u);
  const std::vector<std::tuple<int, long long, long long>> expected_rows{{1, 110, 111}, {2, 99, 103}, {3, 88, 97}, {4, 77, 93}};
  for (std::size_t i = 0; i < expected_rows.size(); ++i) {
    EXPECT_EQ(rows[i].r, std::get<0>(expected_rows[i]));
    EXPECT_EQ(rows[i].tau_min, std::get<1>(expected_rows[i]));
    EXPECT_EQ(rows[i].tau_max, std::get<2>(expected_rows[i]));
  }
  EXPECT_EQ(rows[4].tau_min, 66);
  EXPECT_EQ(rows[4].tau_max, 91);
  EXPECT_EQ(rows[5].tau_min, 55);
  EXPECT_EQ(rows[5].tau_max, 90);  // 11*5 + 36 - 1

  auto d3 = interval_table(3);
  ASSERT_EQ(d3.size(), 1u);
  EXPECT_EQ(d3[0].tau_min, 2);
  EXPECT_EQ(d3[0].tau_max, 3);
  auto d4 = interval_table(4);
  ASSERT_EQ(d4.size(), 2u);
  EXPECT_EQ(d4[0].tau_min, 6);
  EXPECT_EQ(d4[0].tau_max, 7);
  EXPECT_EQ(d4[1].tau_min, 3);
  EXPECT_EQ(d4[1].tau_max, 6);
}

TEST(IntervalTest, DisjointnessScan) {
  for (int d = 3; d <= 30; ++d) {
    for (int s = 1; s * s <= d - 3; ++s) {
      const long long max_s = static_cast<long long>(d - 1) * (d - s - 1) + s * s;
      const long long min_prev = static_cast<long long>(d - 1) * (d - s);
      EXPECT_LT(max_s, min_prev) << "d=" << d << " s=" << s;
    }
  }
}

TEST(FileFormatTest, LineSets) {
  auto s = parse_line_set("# triangle\n1 0 0\n0 1 0  # y\n0 0 1/2\n\n");
  EXPECT_EQ(s.degree(), 3);
  EXPECT_EQ(s.lines()[2][2], mpq_class(1, 2));
  EXPECT_THROW(parse_line_set("1 0 0\n0 1\n0 0 1\n"), InputError);
  EXPECT_THROW(parse_line_set("1 0 0\n0 1 a\n0 0 1\n"), InputError);
  EXPECT_THROW(parse_line_set("1 0 0\n0 1 1/0\n0 0 1\n"), InputError);
  EXPECT_THROW(parse_line_set("1 0 0\n2 0 0\n0 0 1\n"), InputError);
}

TEST(FileFormatTest, LatticeSummaries) {
  auto s = parse_lattice_summary("# A3\ndegree 6\n3 4\n2 3\n");
  EXPECT_EQ(s.degree, 6);
  EXPECT_EQ(lattice_tjurina(s), 19);
  EXPECT_THROW(parse_lattice_summary("degree 6\n3 4\n"), InputError);  // pair count 12 != 15
  EXPECT_THROW(parse_lattice_summary("3 4\n2 3\n"), InputError);       // missing header
  EXPECT_THROW(parse_lattice_summary("degree 3\n1 3\n"), InputError);  // multiplicity below 2
}
