#include <gtest/gtest.h>

#include <set>

#include "rankstab/bifiltration_io.hpp"
#include "rankstab/errors.hpp"
#include "rankstab/persistence.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace rankstab {
namespace {

using testing::Rng;

const char* kTwoVerticesEdge = "bifiltration 2\n0 0 ; 0 0\n0 1 ; 0 0\n1 0 1 ; 1 1";

ScalarFiltration two_vertices_edge() { return ScalarFiltration({{{0}, 0}, {{1}, 0}, {{0, 1}, 1}}); }

ScalarFiltration triangle_boundary() {
  return ScalarFiltration(
      {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}});
}

void expect_matches_oracle(const ScalarFiltration& f) {
  std::set<double> values;
  for (const auto& s : f.simplices()) values.insert(values.end(), s.value);
  const auto top = *f.max_dimension();
  for (std::size_t q = 0; q <= std::min<std::size_t>(top, 1); ++q) {
    const auto bc = compute_barcode(f, q);
    for (double s : values)
      for (double t : values) {
        if (s > t) continue;
        EXPECT_EQ(bc.count_containing(s, t), testing::brute_force_persistent_rank(f, s, t, q))
            << "degree " << q << " s=" << s << " t=" << t;
      }
  }
}

TEST(OrderSimplices, ValueThenDimensionThenLex) {
  EXPECT_EQ(order_simplices(two_vertices_edge()), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(order_simplices(ScalarFiltration({{{1}, 1}, {{0}, 0}})), (std::vector<std::size_t>{1, 0}));
  const ScalarFiltration f({{{0, 2}, 1}, {{2}, 0}, {{0, 1}, 1}, {{1}, 0}, {{0}, 0}});
  EXPECT_EQ(order_simplices(f), (std::vector<std::size_t>{4, 3, 1, 2, 0}));
}

TEST(ComputeBarcode, TwoVerticesAndEdge) {
  const auto f = two_vertices_edge();
  const auto bc = compute_barcode(f, 0);
  EXPECT_EQ(bc.intervals(), (std::vector<Interval>{{0, kInfinity, 0}, {0, 1, 0}}));
  expect_matches_oracle(f);
  EXPECT_TRUE(compute_barcode(f, 1).empty());
}

TEST(ComputeBarcode, SingleVertex) {
  const auto bc = compute_barcode(ScalarFiltration({{{0}, 0}}), 0);
  EXPECT_EQ(bc.intervals(), (std::vector<Interval>{{0, kInfinity, 0}}));
}

TEST(ComputeBarcode, TriangleBoundaryHasOneLoop) {
  const auto f = triangle_boundary();
  EXPECT_EQ(compute_barcode(f, 1).intervals(), (std::vector<Interval>{{1, kInfinity, 1}}));
  EXPECT_EQ(testing::brute_force_persistent_rank(f, 1, 1, 1), 1u);
  expect_matches_oracle(f);
}

TEST(ComputeBarcode, FilledTriangleKillsLoop) {
  auto simplices = triangle_boundary().simplices();
  simplices.push_back({{0, 1, 2}, 2.5});
  const ScalarFiltration f(simplices);
  EXPECT_EQ(compute_barcode(f, 1).intervals(), (std::vector<Interval>{{1, 2.5, 1}}));
  EXPECT_TRUE(compute_barcode(f, 2).empty());
}

TEST(ComputeBarcode, DegreeOutOfRange) {
  EXPECT_THROW(compute_barcode(two_vertices_edge(), 2), PreconditionError);
  EXPECT_THROW(compute_barcode(ScalarFiltration({}), 0), PreconditionError);
}

TEST(ComputeBarcode, MatchesBruteForceOnRandomFiltrations) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) expect_matches_oracle(testing::random_scalar_filtration(rng, 8));
}

TEST(ComputeBarcode, IndependentOfStorageOrder) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_scalar_filtration(rng, 10);
    auto permuted = f.simplices();
    std::reverse(permuted.begin(), permuted.end());
    const ScalarFiltration g(permuted);
    EXPECT_EQ(compute_barcodes(f), compute_barcodes(g));
  }
}

TEST(BettiAt, Examples) {
  const auto one = parse_bifiltration("bifiltration 2\n0 0 ; 0 0");
  EXPECT_EQ(betti_at(one, Grade{0, 0}, 0), 1u);
  const auto m = parse_bifiltration(kTwoVerticesEdge);
  EXPECT_EQ(betti_at(m, Grade{0, 0}, 0), 2u);
  EXPECT_EQ(betti_at(m, Grade{1, 1}, 0), 1u);
  EXPECT_EQ(betti_at(m, Grade{1, 0.5}, 0), 2u);
  EXPECT_EQ(betti_at(m, Grade{-1, 5}, 0), 0u);
  EXPECT_EQ(betti_at(m, Grade{1, 1}, 3), 0u);
}

TEST(RankInvariant, Examples) {
  const auto one = parse_bifiltration("bifiltration 2\n0 0 ; 0 0");
  EXPECT_EQ(rank_invariant(one, {Grade{0, 0}, Grade{0, 0}, 0}), 1u);
  const auto m = parse_bifiltration(kTwoVerticesEdge);
  EXPECT_EQ(rank_invariant(m, {Grade{0, 0}, Grade{2, 2}, 0}), 1u);
  EXPECT_EQ(testing::brute_force_rank_invariant(m, Grade{0, 0}, Grade{2, 2}, 0), 1u);
  EXPECT_EQ(rank_invariant(m, {Grade{0, 0}, Grade{0.5, 0.5}, 0}), 2u);
  EXPECT_EQ(testing::brute_force_rank_invariant(m, Grade{0, 0}, Grade{0.5, 0.5}, 0), 2u);
}

TEST(RankInvariant, RequiresUBelowV) {
  const auto m = parse_bifiltration(kTwoVerticesEdge);
  EXPECT_THROW(rank_invariant(m, {Grade{1, 0}, Grade{0, 1}, 0}), PreconditionError);
  EXPECT_THROW(rank_invariant(m, {Grade{0, 0, 0}, Grade{1, 1, 1}, 0}), PreconditionError);
}

TEST(RankInvariant, DiagonalEqualsBettiAndMonotone) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = testing::random_complex(rng, 2, 12, 0.0, 3.0, 0.5);
    for (int k = 0; k < 10; ++k) {
      std::vector<double> u(2), up(2), vp(2), v(2);
      for (int i = 0; i < 2; ++i) {
        u[i] = rng.uniform(-0.5, 3.5);
        up[i] = u[i] + rng.uniform(0, 1);
        vp[i] = up[i] + rng.uniform(0, 1);
        v[i] = vp[i] + rng.uniform(0, 1);
      }
      for (std::size_t q = 0; q <= 1; ++q) {
        EXPECT_EQ(rank_invariant(m, {Grade(u), Grade(u), q}), betti_at(m, Grade(u), q));
        EXPECT_LE(rank_invariant(m, {Grade(u), Grade(v), q}), rank_invariant(m, {Grade(up), Grade(vp), q}));
        EXPECT_EQ(rank_invariant(m, {Grade(u), Grade(v), q}),
                  testing::brute_force_rank_invariant(m, Grade(u), Grade(v), q));
      }
    }
  }
}

TEST(RankInvariant, AgreesWithLineRestriction) {
  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = testing::random_complex(rng, 2, 12);
    const auto line = testing::random_line(rng, 2);
    const auto f = restrict_to_line(m, line);
    for (int k = 0; k < 8; ++k) {
      const double s = rng.uniform(-1, 5);
      const double t = s + rng.uniform(0.01, 3);
      const Grade u(line.point_at(s)), v(line.point_at(t));
      ASSERT_TRUE(strictly_below(u, v));
      for (std::size_t q = 0; q <= 1; ++q) {
        const std::size_t expected =
            q <= *f.max_dimension() ? compute_barcode(f, q).count_containing(s, t) : 0;
        EXPECT_EQ(rank_invariant(m, {u, v, q}), expected);
      }
    }
  }
}

TEST(Barcode, RejectsBadIntervals) {
  EXPECT_THROW(Barcode(0, {{1, 1, 0}}), ValidationError);
  EXPECT_THROW(Barcode(0, {{1, 0, 0}}), ValidationError);
  EXPECT_THROW(Barcode(0, {{0, 1, 1}}), ValidationError);
}

}  // namespace
}  // namespace rankstab
