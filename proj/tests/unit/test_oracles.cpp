#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "predkit/error.hpp"
#include "predkit/generators.hpp"
#include "predkit/oracles.hpp"
#include "predkit/paging.hpp"
#include "predkit/paging_policies.hpp"
#include "predkit/problems.hpp"

namespace predkit {
namespace {

BitString B(const std::string& s) { return BitString::parse(s); }

std::vector<VertexArrival> arrivals_of(std::size_t n, const naive::Edges& edges) {
  std::vector<VertexArrival> arrivals(n);
  for (auto [u, v] : edges) arrivals[static_cast<std::size_t>(std::max(u, v))].back_edges.push_back(std::min(u, v));
  return arrivals;
}

VcInstance vc(std::size_t n, const naive::Edges& edges, const std::string& x) {
  VcInstance inst;
  inst.data.requests = arrivals_of(n, edges);
  inst.data.x = B(x);
  inst.data.xhat = B(x);
  return inst;
}

TEST(BruteForce, AsgWitnessIsX) {
  AsgInstance inst{AsgLevel::finite(3), {B("0110"), B("1111"), std::vector<AsgPrompt>(4)}};
  OracleResult r = brute_force_opt(inst);
  EXPECT_EQ(r.opt_cost, Cost(2));
  EXPECT_EQ(r.witness.to_string(), "0110");
  EXPECT_EQ(exact_opt(inst).method, OracleMethod::kClosedForm);
}

TEST(BruteForce, StarCover) {
  OracleResult r = brute_force_opt(vc(4, {{0, 1}, {0, 2}, {0, 3}}, "1000"));
  EXPECT_EQ(r.opt_cost, Cost(1));
  EXPECT_EQ(r.witness.to_string(), "1000");
}

TEST(BruteForce, BdvcFigureGraph) {
  // Challenges v1..v4, then one pendant at v3 and three at v4.
  VcInstance inst = vc(8, {{2, 4}, {3, 5}, {3, 6}, {3, 7}}, "00110000");
  OracleResult r = brute_force_opt(inst);
  EXPECT_EQ(r.opt_cost, Cost(2));
  // {v3, v4} is optimal; the tie with {v4, pendant of v3} goes to the lexicographically smaller string.
  Graph g = Graph::from_arrivals(inst.data.requests);
  EXPECT_EQ(vc_check_and_cost(g, B("00110000"), std::nullopt), (Evaluation{true, Cost(2)}));
  EXPECT_EQ(r.witness.to_string(), "00011000");
}

TEST(BruteForce, SizeLimit) {
  AsgInstance big{AsgLevel::finite(2), {BitString(25), BitString(25), std::vector<AsgPrompt>(25)}};
  EXPECT_THROW(brute_force_opt(big), SizeLimitExceeded);
  PagingInstance paging{2, {B("0"), B("0"), {1}}};
  EXPECT_THROW(brute_force_opt(paging), InvalidInput);
}

TEST(KColorable, Examples) {
  for (std::int64_t k = 1; k <= 4; ++k) {
    naive::Edges edges;
    for (int u = 0; u <= k; ++u) {
      for (int v = u + 1; v <= k; ++v) edges.push_back({u, v});
    }
    EXPECT_FALSE(k_colorable(Graph::from_arrivals(arrivals_of(static_cast<std::size_t>(k + 1), edges)), k));
  }
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<VertexArrival> forest(20);
    for (std::size_t v = 1; v < forest.size(); ++v) {
      if (rng() % 4 != 0) forest[v].back_edges.push_back(rng() % v);
    }
    ASSERT_TRUE(k_colorable(Graph::from_arrivals(forest), 2));
  }
}

TEST(KColorable, FigureSubgraphIsThreeColorable) {
  // G_0 is the 3-Spill figure graph without the challenges whose truth bit is 1 (v2, v4).
  naive::Edges edges{{0, 4}, {1, 4}, {1, 5}, {1, 6}, {5, 6}, {1, 7}, {5, 7}, {6, 7}, {1, 8}, {2, 8},
                     {2, 9}, {3, 9}, {3, 10}, {3, 11}, {10, 11}, {3, 12}, {10, 12}, {3, 13}, {10, 13},
                     {12, 13}, {3, 14}, {10, 14}, {12, 14}, {3, 15}};
  Graph g = Graph::from_arrivals(arrivals_of(16, edges));
  std::vector<std::size_t> g0{0, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  EXPECT_TRUE(k_colorable(g.induced(g0), 3));
  EXPECT_FALSE(k_colorable(g, 2));
}

TEST(KColorable, ComponentLimit) {
  std::vector<VertexArrival> path(30);
  for (std::size_t v = 1; v < path.size(); ++v) path[v].back_edges.push_back(v - 1);
  // One 30-vertex component is above the exact-coloring cap.
  EXPECT_THROW(k_colorable(Graph::from_arrivals(path), 2), SizeLimitExceeded);
}

TEST(GreedyIr, Examples) {
  std::vector<Interval> disjoint{{0, 1}, {2, 3}, {4, 5}};
  EXPECT_EQ(greedy_ir_opt(disjoint).opt_cost, Cost(0));
  std::vector<Interval> through{{0, 10}, {1, 6}, {4, 5}, {3, 8}};
  EXPECT_EQ(greedy_ir_opt(through).opt_cost, Cost(3));
  std::vector<Interval> figure{{0, 3}, {3, 6}, {6, 9}, {9, 12}, {6, 9}, {9, 10}, {10, 11}, {11, 12}};
  EXPECT_EQ(greedy_ir_opt(figure).opt_cost, Cost(2));
}

TEST(GreedyIr, AgreesWithBruteForceAndReference) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = rng() % 11;
    std::vector<Interval> iv(n);
    std::vector<std::pair<int, int>> niv(n);
    for (std::size_t i = 0; i < n; ++i) {
      int l = static_cast<int>(rng() % 20);
      int len = static_cast<int>(rng() % 6) + 1;
      iv[i] = {l, l + len};
      niv[i] = {l, l + len};
    }
    IrInstance inst{std::nullopt, {BitString(n), BitString(n), iv}};
    Cost greedy = greedy_ir_opt(iv).opt_cost;
    ASSERT_EQ(greedy, brute_force_opt(inst).opt_cost);
    auto ref = naive::min_ones(static_cast<int>(n), [&](const naive::Bits& y) { return naive::kept_disjoint(niv, y); });
    ASSERT_EQ(greedy, Cost(*ref));
  }
}

TEST(SearchOracles, AgreeWithBruteForceAndReference) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 150; ++rep) {
    int n = static_cast<int>(rng() % 9) + 1;
    naive::Edges edges;
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (rng() % 3 == 0) edges.push_back({u, v});
      }
    }
    auto arrivals = arrivals_of(static_cast<std::size_t>(n), edges);
    Graph g = Graph::from_arrivals(arrivals);
    BitString zeros(static_cast<std::size_t>(n));
    auto vc_ref = naive::min_ones(n, [&](const naive::Bits& y) { return naive::is_cover(edges, y); });
    ASSERT_EQ(search_vc_opt(g).opt_cost, Cost(*vc_ref));
    ASSERT_EQ(brute_force_opt(VcInstance{std::nullopt, {zeros, zeros, arrivals}}).opt_cost, Cost(*vc_ref));
    auto dom_ref = naive::min_ones(n, [&](const naive::Bits& y) { return naive::dominates(n, edges, y); });
    ASSERT_EQ(search_dom_opt(g).opt_cost, Cost(*dom_ref));
    for (int k = 1; k <= 3; ++k) {
      auto spill_ref =
          naive::min_ones(n, [&](const naive::Bits& y) { return naive::kept_colorable(n, edges, y, k); });
      ASSERT_EQ(search_spill_opt(g, k).opt_cost, Cost(*spill_ref)) << "k=" << k;
      ASSERT_EQ(brute_force_opt(SpillInstance{k, std::nullopt, {zeros, zeros, arrivals}}).opt_cost, Cost(*spill_ref));
    }
  }
}

TEST(SearchOracles, WitnessesReevaluate) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = rng() % 10 + 1;
    std::vector<VertexArrival> arrivals(n);
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t u = 0; u < v; ++u) {
        if (rng() % 3 == 0) arrivals[v].back_edges.push_back(u);
      }
    }
    Graph g = Graph::from_arrivals(arrivals);
    OracleResult r = search_vc_opt(g);
    ASSERT_EQ(vc_check_and_cost(g, r.witness, std::nullopt), (Evaluation{true, r.opt_cost}));
    r = search_dom_opt(g);
    ASSERT_EQ(dom_check_and_cost(g, r.witness), (Evaluation{true, r.opt_cost}));
    r = search_spill_opt(g, 2);
    ASSERT_EQ(spill_check_and_cost(g, r.witness, 2, std::nullopt), (Evaluation{true, r.opt_cost}));
  }
}

TEST(VerifyEncoding, Examples) {
  PagingInstance paging{2, {B("0100"), B("0000"), {0, 1, 2, 0}}};
  EXPECT_TRUE(verify_optimal_encoding(paging).pass);
  paging.data.x = B("0000");
  EXPECT_FALSE(verify_optimal_encoding(paging).pass);

  // An isolated vertex in the cover is never needed.
  EncodingVerdict v = verify_optimal_encoding(vc(3, {{0, 1}}, "111"));
  EXPECT_FALSE(v.pass);
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.opt_cost, Cost(1));

  AsgInstance asg{AsgLevel::finite(4), {B("1011"), B("0000"), std::vector<AsgPrompt>(4)}};
  EXPECT_TRUE(verify_optimal_encoding(asg).pass);
}

TEST(Lfd, NeverWorseThanOnlinePolicies) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    std::int64_t k = static_cast<std::int64_t>(rng() % 4) + 1;
    std::size_t n = rng() % 60;
    std::vector<PageId> trace(n);
    for (PageId& p : trace) p = static_cast<PageId>(rng() % static_cast<std::uint64_t>(3 * k));
    BitString pred(n);
    for (std::size_t i = 0; i < n; ++i) pred.set(i, rng() & 1);
    std::int64_t best = lfd(trace, k).faults;
    LruPolicy lru;
    FifoPolicy fifo;
    ASSERT_LE(best, simulate_paging(trace, pred, k, lru).faults);
    ASSERT_LE(best, simulate_paging(trace, pred, k, fifo).faults);
    ASSERT_LE(best, fwz(trace, k, pred).faults);
    ASSERT_LE(best, fbb(trace, k, pred).run.faults);
  }
}

}  // namespace
}  // namespace predkit
