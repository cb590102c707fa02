#include <gtest/gtest.h>

#include <numeric>

#include "ptchain/dp.hpp"
#include "ptchain/geometry.hpp"
#include "ptchain/oracle.hpp"
#include "test_support.hpp"

using namespace ptchain;

namespace {

PtGraph e2_tournament(int n) {
  EdgeList e2;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e2.emplace_back(i, j);
  return PtGraph::build({}, e2, std::vector<Weight>(n, 1));
}

PtGraph interval_pqrs() {
  using geometry::ChordInterval;
  return geometry::build_order(geometry::make_instance(
      geometry::Kind::Chords, std::vector<ChordInterval>{{0, 10}, {1, 4}, {5, 9}, {11, 12}}));
}

// Brute maximum over all chains from x to y accepted by the predicate.
std::optional<Weight> definitional(const PtGraph& g, const std::vector<std::vector<Vertex>>& chains,
                                   Vertex x, Vertex y,
                                   const std::function<bool(const std::vector<Vertex>&)>& accept) {
  std::optional<Weight> best;
  for (const auto& c : chains) {
    if (c.size() < 2 || c.front() != x || c.back() != y || !accept(c)) continue;
    const Weight w = chain_weight(g, c);
    if (!best || w > *best) best = w;
  }
  return best;
}

bool degenerate(const PtGraph& g, const std::vector<Vertex>& c) {
  return c.size() < 3 || classify_chain(g, c).kind == ChainKind::Degenerate;
}

bool others_into_last_by_e1(const PtGraph& g, const std::vector<Vertex>& c, std::size_t skip_front) {
  for (std::size_t i = skip_front; i + 1 < c.size(); ++i)
    if (g.edge_class(c[i], c.back()) != EdgeClass::E1) return false;
  return true;
}

std::uint64_t sum_out_squared(const PtGraph& g) {
  std::uint64_t s = 0;
  for (Vertex v = 0; v < g.n(); ++v) s += g.out_degree(v) * g.out_degree(v);
  return s;
}

}  // namespace

TEST(DpTables, SingleEdge) {
  PtGraph g = PtGraph::build({{0, 1}}, {}, {3, 4});
  DpTables t = dp_tables(g);
  for (Table table : {Table::W, Table::W1, Table::D, Table::D1}) EXPECT_EQ(t.value(table, 0, 1), 7);
  EXPECT_EQ(t.back(Table::D, 0, 1).term, Term::Base);
  EXPECT_EQ(t.back(Table::D1, 0, 1).term, Term::Base);
  EXPECT_FALSE(t.value(Table::W, 1, 0).has_value());

  PtGraph g2 = PtGraph::build({}, {{0, 1}}, {3, 4});
  DpTables t2 = dp_tables(g2);
  EXPECT_EQ(t2.value(Table::W, 0, 1), 7);
  EXPECT_FALSE(t2.value(Table::W1, 0, 1).has_value());
}

TEST(DpTables, TransitiveTournament) {
  PtGraph g = e2_tournament(4);
  DpTables t = dp_tables(g);
  EXPECT_EQ(t.value(Table::D, 0, 3), 4);
  EXPECT_EQ(t.value(Table::W, 0, 3), 4);
  EXPECT_EQ(t.back(Table::D, 0, 3).term, Term::Split);
  EXPECT_EQ(t.back(Table::D, 0, 3).via, 1);
  EXPECT_EQ(t.back(Table::D, 1, 3).term, Term::Split);
  EXPECT_EQ(t.back(Table::D, 1, 3).via, 2);
  EXPECT_EQ(t.reconstruct(Table::W, 0, 3), (std::vector<Vertex>{0, 1, 2, 3}));
  // Oracle: the largest chain has 4 vertices.
  EXPECT_EQ(oracle::brute_max_weight_chain(g).value, 4);
}

TEST(DpTables, NestedIntervals) {
  PtGraph g = interval_pqrs();
  DpTables t = dp_tables(g);
  EXPECT_EQ(t.value(Table::W, 0, 3), 4);
  EXPECT_EQ(t.reconstruct(Table::W, 0, 3), (std::vector<Vertex>{0, 1, 2, 3}));
  // Oracle over all 2^4 subsets.
  EXPECT_EQ(oracle::brute_max_weight_chain(g).value, 4);
}

TEST(DpTables, RejectsNonStrong) {
  PtGraph g = PtGraph::build({{0, 1}, {1, 2}}, {}, {1, 1, 1});
  try {
    dp_tables(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStrong);
  }
  EXPECT_THROW(max_weight_chain_dp(g), Error);
}

TEST(DpTables, EntriesMatchTheirDefinitions) {
  for (int family = 0; family < 3; ++family) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const int n = 5 + static_cast<int>(seed % 5);  // 5..9
      PtGraph g = support::strong_instance(family, n, seed)
                      .with_weights(oracle::random_weights(n, {0, 20}, seed * 31 + family));
      const auto chains = support::all_chains(g);
      const DpTables t = dp_tables(g);
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : g.out(x)) {
          const auto any = [](const std::vector<Vertex>&) { return true; };
          EXPECT_EQ(t.value(Table::W, x, y), definitional(g, chains, x, y, any));
          EXPECT_EQ(t.value(Table::D, x, y),
                    definitional(g, chains, x, y, [&](const auto& c) { return degenerate(g, c); }));
          EXPECT_EQ(t.value(Table::D1, x, y), definitional(g, chains, x, y, [&](const auto& c) {
                      return degenerate(g, c) && others_into_last_by_e1(g, c, 1);
                    }));
          if (g.edge_class(x, y) == EdgeClass::E1) {
            EXPECT_EQ(t.value(Table::W1, x, y), definitional(g, chains, x, y, [&](const auto& c) {
                        return others_into_last_by_e1(g, c, 0);
                      }));
          } else {
            EXPECT_FALSE(t.value(Table::W1, x, y).has_value());
          }
          // Ordering between tables, and the two-chain floor.
          const Weight base = g.weight(x) + g.weight(y);
          EXPECT_GE(*t.value(Table::D1, x, y), base);
          EXPECT_LE(*t.value(Table::D1, x, y), *t.value(Table::D, x, y));
          EXPECT_LE(*t.value(Table::D, x, y), *t.value(Table::W, x, y));
          if (auto w1 = t.value(Table::W1, x, y)) {
            EXPECT_LE(*t.value(Table::D1, x, y), *w1);
            EXPECT_LE(*w1, *t.value(Table::W, x, y));
          }
          for (Table table : {Table::W, Table::W1, Table::D, Table::D1}) {
            if (!t.value(table, x, y)) continue;
            const auto c = t.reconstruct(table, x, y);
            EXPECT_TRUE(verify_chain(g, c));
            EXPECT_EQ(chain_weight(g, c), *t.value(table, x, y));
          }
        }
      }
    }
  }
}

TEST(MaxWeightChainDp, Examples) {
  DpResult single = max_weight_chain_dp(PtGraph::build({}, {}, {9}));
  EXPECT_EQ(single.value, 9);
  EXPECT_EQ(single.chain, std::vector<Vertex>{0});

  using geometry::ChordInterval;
  PtGraph crossing = geometry::build_order(geometry::make_instance(
      geometry::Kind::Chords, std::vector<ChordInterval>{{0, 3}, {1, 4}, {2, 5}}));
  DpResult r = max_weight_chain_dp(crossing);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.chain, std::vector<Vertex>{0});

  EXPECT_THROW(max_weight_chain_dp(PtGraph::build({}, {}, {})), Error);
}

TEST(MaxWeightChainDp, ZeroWeightsPreferShortestPrefix) {
  // Everything weighs 0: the singleton of the first vertex is the smallest
  // optimal pi-sequence.
  PtGraph g = e2_tournament(4).with_weights({0, 0, 0, 0});
  DpResult r = max_weight_chain_dp(g);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.chain, std::vector<Vertex>{0});
}

TEST(MaxWeightChainDp, MatchesOracleOnIntervals) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    oracle::GenSpec spec;
    spec.kind = oracle::GenKind::Chords;
    spec.n = 1 + static_cast<int>(seed % 12);
    spec.seed = seed;
    const PtGraph base = geometry::build_order(oracle::generate_instance(spec));
    const PtGraph g = base.with_weights(oracle::random_weights(spec.n, {0, 20}, seed + 1000));
    const DpResult dp = max_weight_chain_dp(g);
    const ChainResult brute = oracle::brute_max_weight_chain(g);
    ASSERT_EQ(dp.value, brute.value) << "seed " << seed;
    EXPECT_TRUE(verify_chain(g, dp.chain));
    EXPECT_EQ(chain_weight(g, dp.chain), dp.value);
  }
}

TEST(MaxWeightChainDp, WeightScaling) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const PtGraph g = support::strong_instance(static_cast<int>(seed), n, seed)
                          .with_weights(oracle::random_weights(n, {0, 20}, seed));
    const DpResult r1 = max_weight_chain_dp(g);
    for (Weight s : {2, 7}) {
      std::vector<Weight> scaled(g.weights().begin(), g.weights().end());
      for (auto& w : scaled) w *= s;
      const PtGraph gs = g.with_weights(scaled);
      const DpResult rs = max_weight_chain_dp(gs);
      EXPECT_EQ(rs.value, s * r1.value);
      EXPECT_EQ(chain_weight(gs, r1.chain), rs.value);
    }
  }
}

TEST(MaxWeightChainDp, InspectionCounter) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    oracle::GenSpec spec;
    spec.kind = oracle::GenKind::Chords;
    spec.n = 10 + static_cast<int>(seed) * 5;
    spec.seed = seed;
    const PtGraph g = geometry::build_order(oracle::generate_instance(spec));
    const DpResult r = max_weight_chain_dp(g);
    std::uint64_t sum_deg2 = 0;
    for (Vertex v = 0; v < g.n(); ++v) sum_deg2 += g.degree(v) * g.degree(v);
    EXPECT_EQ(r.counters.inspections, sum_out_squared(g));
    EXPECT_LE(r.counters.inspections, sum_deg2);
    EXPECT_LE(r.counters.inspections,
              4 * (sum_deg2 + static_cast<std::uint64_t>(g.n()) * g.n()));
  }
}
