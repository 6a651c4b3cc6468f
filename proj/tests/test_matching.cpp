#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "pdg/matching.hpp"
#include "pdg/verify.hpp"

using namespace pdg;

namespace {

const Diagram kX = make_diagram({{0, 10}, {1, 9}});
const Diagram kY = make_diagram({{1, 11}, {2, 10}});

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Parse;
}

Diagram shifted(const Diagram& d, double s) {
  Diagram out = d;
  for (auto& pt : out.points) {
    pt.birth += s;
    pt.death += s;
  }
  return out;
}

Diagram scaled(const Diagram& d, double s) {
  Diagram out = d;
  for (auto& pt : out.points) {
    pt.birth *= s;
    pt.death *= s;
  }
  return out;
}

}  // namespace

TEST(Matching, AugmentedCostMatrixByHand) {
  const AugmentedProblem prob = build_augmented_problem(kX, kY, {1.0, 1.0});
  ASSERT_EQ(prob.size(), 4u);
  const double expected[4][4] = {
      {2, 2, 10, 10},
      {2, 2, 8, 8},
      {10, 8, 0, 0},
      {10, 8, 0, 0},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(prob.cost(i, j), expected[i][j]) << i << "," << j;
  }
}

TEST(Matching, DistanceExamples) {
  EXPECT_DOUBLE_EQ(distance(kX, kY, {1.0, 1.0}).value, 4.0);
  EXPECT_DOUBLE_EQ(distance(kX, kY, {2.0, 2.0}).value, 2.0);
  EXPECT_DOUBLE_EQ(distance(kX, kY, {kInfinity, kInfinity}).value, 1.0);
  const Diagram one = make_diagram({{0, 4}});
  EXPECT_DOUBLE_EQ(distance(one, Diagram{}, {1.0, 1.0}).value, 4.0);
  EXPECT_DOUBLE_EQ(distance(one, Diagram{}, {2.0, 2.0}).value, 4.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(distance(one, Diagram{}, {kInfinity, kInfinity}).value, 2.0);
  EXPECT_DOUBLE_EQ(distance(Diagram{}, Diagram{}, {}).value, 0.0);
}

TEST(Matching, MatchingCostOfIdentityAndCross) {
  const MetricParams l1{1.0, 1.0};
  const std::vector<std::size_t> parallel = {0, 1, 2, 3};
  const std::vector<std::size_t> cross = {1, 0, 2, 3};
  const std::vector<std::size_t> all_diag = {2, 3, 0, 1};
  EXPECT_DOUBLE_EQ(matching_cost(kX, kY, parallel, l1), 4.0);
  EXPECT_DOUBLE_EQ(matching_cost(kX, kY, cross, l1), 4.0);
  EXPECT_DOUBLE_EQ(matching_cost(kX, kY, all_diag, l1), 36.0);
  EXPECT_DOUBLE_EQ(matching_cost(kX, kY, cross, {2.0, 2.0}), std::sqrt(8.0));
  EXPECT_EQ(kind_of([&] { matching_cost(kX, kY, std::vector<std::size_t>{0, 0, 1, 2}, l1); }), ErrorKind::Structural);
  EXPECT_EQ(kind_of([&] { matching_cost(kX, kY, std::vector<std::size_t>{0, 1, 2}, l1); }), ErrorKind::Structural);
}

TEST(Matching, WrongSolverAndSizeGuard) {
  const AugmentedProblem finite = build_augmented_problem(kX, kY, {2.0, 2.0});
  const AugmentedProblem bottleneck = build_augmented_problem(kX, kY, {kInfinity, 2.0});
  EXPECT_EQ(kind_of([&] { solve_assignment_bottleneck(finite); }), ErrorKind::WrongSolver);
  EXPECT_EQ(kind_of([&] { solve_assignment_sum(bottleneck); }), ErrorKind::WrongSolver);

  verify::Rng rng(1);
  const Diagram big = verify::random_diagram(rng, 6);
  const Diagram other = verify::random_diagram(rng, 4);
  EXPECT_EQ(kind_of([&] { brute_force_distance(big, other, {}); }), ErrorKind::SizeGuard);
  EXPECT_EQ(kind_of([&] { enumerate_optimal_matchings(big, other, {}); }), ErrorKind::SizeGuard);
  EXPECT_NO_THROW(distance(big, other, {}));
}

TEST(Matching, AgreesWithDefinitionOracle) {
  verify::Rng rng(2024);
  for (const ExtendedReal& p : verify::p_grid()) {
    for (const ExtendedReal& q : verify::q_grid()) {
      const MetricParams mp{p, q};
      for (int trial = 0; trial < 25; ++trial) {
        const auto [x, y] = verify::random_pair(rng, 7);
        const DistanceResult r = distance(x, y, mp);
        const double ref = oracle::definition_distance(x, y, mp);
        EXPECT_NEAR(r.value, ref, 1e-9 * std::max(1.0, ref)) << verify::pq(p, q);
        EXPECT_NEAR(brute_force_distance(x, y, mp), ref, 1e-9 * std::max(1.0, ref)) << verify::pq(p, q);
        // the witness realises the reported value exactly
        EXPECT_EQ(matching_cost(x, y, r.witness, mp), r.value);
      }
    }
  }
}

TEST(Matching, PseudometricAndInvariances) {
  verify::Rng rng(99);
  for (const ExtendedReal& p : verify::p_grid()) {
    for (const ExtendedReal& q : verify::q_grid()) {
      const MetricParams mp{p, q};
      for (int trial = 0; trial < 10; ++trial) {
        const auto [x, y] = verify::random_pair(rng, 10);
        const Diagram z = verify::random_diagram(rng, 3);
        const double dxy = distance(x, y, mp).value;
        const double tol = 1e-9 * std::max(1.0, dxy);
        EXPECT_NEAR(distance(x, x, mp).value, 0.0, 1e-12);
        EXPECT_NEAR(dxy, distance(y, x, mp).value, tol);
        EXPECT_LE(distance(x, z, mp).value, dxy + distance(y, z, mp).value + 1e-9 * (1 + dxy));

        // relabelling and reordering change nothing
        Diagram relabelled = x;
        std::reverse(relabelled.points.begin(), relabelled.points.end());
        for (auto& pt : relabelled.points) pt.index += 100;
        EXPECT_NEAR(distance(relabelled, y, mp).value, dxy, tol);

        EXPECT_NEAR(distance(shifted(x, 3.5), shifted(y, 3.5), mp).value, dxy, 1e-9 * std::max(1.0, dxy));
        EXPECT_NEAR(distance(scaled(x, 2.5), scaled(y, 2.5), mp).value, 2.5 * dxy, 1e-9 * std::max(1.0, dxy));
      }
    }
  }
}

TEST(Matching, MonotoneInPAndQ) {
  verify::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [x, y] = verify::random_pair(rng, 10);
    for (const ExtendedReal& q : verify::q_grid()) {
      double prev = std::numeric_limits<double>::infinity();
      for (const ExtendedReal& p : verify::p_grid()) {
        const double d = distance(x, y, {p, q}).value;
        EXPECT_LE(d, prev + 1e-9 * std::max(1.0, d));
        prev = d;
      }
    }
    for (const ExtendedReal& p : verify::p_grid()) {
      double prev = std::numeric_limits<double>::infinity();
      for (const ExtendedReal& q : verify::q_grid()) {
        const double d = distance(x, y, {p, q}).value;
        EXPECT_LE(d, prev + 1e-9 * std::max(1.0, d));
        prev = d;
      }
    }
  }
}

TEST(Matching, LargePDoesNotOverflow) {
  const Diagram x = make_diagram({{0, 1e6}, {0, 2e6}});
  const double d = distance(x, Diagram{}, {64.0, 1.0}).value;
  EXPECT_TRUE(std::isfinite(d));
  EXPECT_NEAR(d, 2e6 * std::pow(1.0 + std::pow(0.5, 64.0), 1.0 / 64.0), 1e-3);
}

TEST(Matching, EnumerationCounts) {
  EXPECT_EQ(enumerate_optimal_matchings(kX, kY, {1.0, 1.0}).size(), 2u);
  EXPECT_EQ(enumerate_optimal_matchings(kX, kY, {2.0, 2.0}).size(), 1u);
  const Diagram single = make_diagram({{0, 2}});
  const auto self = enumerate_optimal_matchings(single, single, {2.0, 2.0});
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].total, 0.0);
  // every reported matching is optimal
  verify::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [x, y] = verify::random_pair(rng, 6);
    const MetricParams mp{1.0, 1.0};
    const double d = distance(x, y, mp).value;
    const auto all = enumerate_optimal_matchings(x, y, mp);
    ASSERT_FALSE(all.empty());
    for (const Matching& m : all) EXPECT_NEAR(matching_cost(x, y, m, mp), d, 1e-9 * std::max(1.0, d));
  }
}

TEST(Matching, AggregateEdgeCases) {
  const std::vector<double> costs = {3.0, 4.0};
  EXPECT_DOUBLE_EQ(aggregate(costs, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(aggregate(costs, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(aggregate(costs, kInfinity), 4.0);
  EXPECT_DOUBLE_EQ(aggregate(std::vector<double>{}, 2.0), 0.0);
}
