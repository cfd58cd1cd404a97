#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "leadersel/errors.hpp"
#include "leadersel/hop_paths.hpp"
#include "support/oracles.hpp"

using namespace leadersel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t S = 0, A = 1, T = 2;

SelectionDigraph three(std::vector<Arc> arcs) { return SelectionDigraph(3, S, T, std::move(arcs)); }

SelectionDigraph random_digraph(std::mt19937_64& rng, PathObjective objective) {
  const std::size_t nodes = 2 + rng() % 7;  // at most 8
  const std::size_t max_arcs = std::min<std::size_t>(20, nodes * (nodes - 1));
  const std::size_t want = rng() % (max_arcs + 1);
  std::vector<Arc> arcs;
  std::vector<std::pair<std::size_t, std::size_t>> used;
  std::uniform_real_distribution<double> w(0.0, 10.0);
  while (arcs.size() < want) {
    const std::size_t a = rng() % nodes, b = rng() % nodes;
    if (a == b || std::find(used.begin(), used.end(), std::pair{a, b}) != used.end()) continue;
    used.emplace_back(a, b);
    double weight = std::round(w(rng) * 4.0) / 4.0;  // coarse values create ties
    if (objective == PathObjective::Widest) {
      weight += 0.25;
      if (rng() % 10 == 0) weight = kInf;
    }
    arcs.push_back({a, b, weight});
  }
  return SelectionDigraph(nodes, 0, nodes - 1, std::move(arcs));
}

}  // namespace

TEST(MinWeightPath, SingleArc) {
  const auto r = min_weight_path(three({{S, T, 5}}), 3);
  EXPECT_EQ(r.nodes, (std::vector<std::size_t>{S, T}));
  EXPECT_EQ(r.weight, 5.0);
  EXPECT_EQ(r.hop_count, 1u);
}

TEST(MinWeightPath, HopBudgetDecides) {
  const auto g = three({{S, A, 1}, {A, T, 1}, {S, T, 3}});
  const auto two = min_weight_path(g, 2);
  EXPECT_EQ(two.nodes, (std::vector<std::size_t>{S, A, T}));
  EXPECT_EQ(two.weight, 2.0);
  const auto one = min_weight_path(g, 1);
  EXPECT_EQ(one.nodes, (std::vector<std::size_t>{S, T}));
  EXPECT_EQ(one.weight, 3.0);
}

TEST(MinWeightPath, EqualValuesPreferFewerHops) {
  const auto g = three({{S, A, 1}, {A, T, 1}, {S, T, 2}});
  EXPECT_EQ(min_weight_path(g, 2).hop_count, 1u);
}

TEST(MinWeightPath, TiesPreferSmallerPredecessor) {
  // Two 2-hop routes of equal weight through vertices 1 and 2.
  const SelectionDigraph g(4, 0, 3, {{0, 2, 1}, {2, 3, 1}, {0, 1, 1}, {1, 3, 1}});
  EXPECT_EQ(min_weight_path(g, 2).nodes, (std::vector<std::size_t>{0, 1, 3}));
}

TEST(WidestPath, Examples) {
  const auto g = three({{S, A, 5}, {A, T, 2}, {S, T, 3}});
  const auto r = widest_path(g, 2);
  EXPECT_EQ(r.nodes, (std::vector<std::size_t>{S, T}));
  EXPECT_EQ(r.weight, 3.0);

  const auto inf = widest_path(three({{S, T, kInf}}), 1);
  EXPECT_EQ(inf.nodes, (std::vector<std::size_t>{S, T}));
  EXPECT_TRUE(std::isinf(inf.weight));

  EXPECT_THROW(widest_path(three({{S, A, 5}, {A, T, 2}}), 1), Unreachable);
}

TEST(HopPaths, UnreachableAndInvalidInput) {
  EXPECT_THROW(min_weight_path(three({{S, A, 1}}), 4), Unreachable);
  EXPECT_THROW(min_weight_path(three({{S, T, 1}}), 0), std::invalid_argument);
  EXPECT_THROW(three({{S, S, 1}}), std::invalid_argument);
  EXPECT_THROW(three({{S, T, 1}, {S, T, 2}}), std::invalid_argument);
  EXPECT_THROW(three({{S, T, std::nan("")}}), std::invalid_argument);
  EXPECT_THROW(three({{S, 7, 1}}), std::invalid_argument);
  EXPECT_THROW(min_weight_path(three({{S, T, -1}}), 1), std::invalid_argument);
  EXPECT_THROW(widest_path(three({{S, T, 0}}), 1), std::invalid_argument);
}

TEST(HopPaths, InfiniteArcInMinModeIsStillReachable) {
  const auto r = min_weight_path(three({{S, T, kInf}}), 1);
  EXPECT_TRUE(std::isinf(r.weight));
}

TEST(HopPaths, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    for (auto objective : {PathObjective::MinWeight, PathObjective::Widest}) {
      const auto g = random_digraph(rng, objective);
      const std::size_t hops = 1 + rng() % 6;
      const auto expected = oracle::best_walk(g, hops, objective);
      const auto solve = [&] {
        return objective == PathObjective::MinWeight ? min_weight_path(g, hops) : widest_path(g, hops);
      };
      if (!expected) {
        EXPECT_THROW(solve(), Unreachable);
        continue;
      }
      const auto r = solve();
      EXPECT_EQ(r.weight, *expected);
      EXPECT_LE(r.hop_count, hops);
      EXPECT_EQ(r.nodes.size(), r.hop_count + 1);
      EXPECT_EQ(r.nodes.front(), g.source());
      EXPECT_EQ(r.nodes.back(), g.target());
      const auto recomputed = walk_weight(g, r.nodes, objective);
      ASSERT_TRUE(recomputed);
      if (std::isinf(r.weight)) {
        EXPECT_EQ(*recomputed, r.weight);
      } else {
        EXPECT_NEAR(*recomputed, r.weight, 1e-12);
      }
    }
  }
}

TEST(HopPaths, MonotoneInHopBudget) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    for (auto objective : {PathObjective::MinWeight, PathObjective::Widest}) {
      const auto g = random_digraph(rng, objective);
      const HopTable table(g, 6, objective);
      std::optional<double> previous;
      for (std::size_t h = 1; h <= 6; ++h) {
        std::optional<double> value;
        try {
          value = table.best_path(h).weight;
        } catch (const Unreachable&) {
        }
        if (previous) {
          ASSERT_TRUE(value);
          if (objective == PathObjective::MinWeight) {
            EXPECT_LE(*value, *previous);
          } else {
            EXPECT_GE(*value, *previous);
          }
        }
        if (value) previous = value;
      }
    }
  }
}

TEST(HopTable, BestPathAgreesWithDirectSolve) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_digraph(rng, PathObjective::MinWeight);
    const HopTable table(g, 6, PathObjective::MinWeight);
    for (std::size_t h = 1; h <= 6; ++h) {
      try {
        const auto direct = min_weight_path(g, h);
        const auto from_table = table.best_path(h);
        EXPECT_EQ(direct.nodes, from_table.nodes);
        EXPECT_EQ(direct.weight, from_table.weight);
      } catch (const Unreachable&) {
        EXPECT_THROW(table.best_path(h), Unreachable);
      }
    }
  }
}
