#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "extremalkit/errors.hpp"
#include "extremalkit/graph.hpp"
#include "extremalkit/oracle.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/weighting.hpp"

using namespace exk;

namespace {

std::vector<Rat> random_weights(std::mt19937_64& rng, int n) {
  std::vector<Rat> v(static_cast<std::size_t>(n));
  // Division canonicalizes; the two-argument mpq_class constructor does not.
  for (Rat& x : v) x = Rat(static_cast<long>(rng() % 9)) / Rat(static_cast<long>(1 + rng() % 3));
  return v;
}

}  // namespace

TEST_CASE("weighted oracle on pinned instances") {
  // Mantel: triangle-free on 4 unit vertices keeps 4 edges.
  VertexWeighting unit4 = VertexWeighting::unit(4);
  WeightedOracleResult r = max_weight_clique_free(4, {EdgeWeightKind::Min, unit4}, 3);
  CHECK(r.value == Rat(4));
  CHECK(!contains_clique(r.witness, 3));
  CHECK(r.witness.edge_count() == 4);

  // ell > n: everything is clique-free, take all of K_n.
  VertexWeighting unit3 = VertexWeighting::unit(3);
  CHECK(max_weight_clique_free(3, {EdgeWeightKind::Min, unit3}, 5).value == Rat(3));

  // A zero-weight vertex adds nothing: triangle-free on the three heavy
  // vertices keeps two edges of weight 2 each.
  VertexWeighting withzero({Rat(2), Rat(2), Rat(2), Rat(0)});
  CHECK(max_weight_clique_free(4, {EdgeWeightKind::Min, withzero}, 3).value == Rat(4));
}

TEST_CASE("weighted oracle serial and parallel agree") {
  std::mt19937_64 rng(52);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    int ell = 3 + static_cast<int>(rng() % 3);
    WeightedEdgeFunction fn{rep % 2 ? EdgeWeightKind::Min : EdgeWeightKind::Product,
                            VertexWeighting(random_weights(rng, n))};
    WeightedOracleResult serial = max_weight_clique_free_serial(n, fn, ell);
    WeightedOracleResult parallel = max_weight_clique_free(n, fn, ell);
    CHECK(serial.value == parallel.value);
    CHECK(serial.witness == parallel.witness);
  }
}

TEST_CASE("edge oracle on pinned hosts") {
  EdgeOracleResult k5 = max_edges_clique_free_subgraph(Graph::complete(5), 3);
  CHECK(k5.value == 6);  // Mantel floor(25/4)
  CHECK(!contains_clique(k5.witness, 3));
  CHECK(max_edges_clique_free_subgraph(Graph::complete(4), 4).value == 5);
  // Host already triangle-free: keep everything.
  Graph bip = build_complete_multipartite({3, 3});
  CHECK(max_edges_clique_free_subgraph(bip, 3).value == 9);
  // Sparse host: two disjoint edges, nothing to forbid.
  Graph sparse(4);
  sparse.add_edge(0, 1);
  sparse.add_edge(2, 3);
  CHECK(max_edges_clique_free_subgraph(sparse, 3).value == 2);

  EdgeOracleResult ser = max_edges_clique_free_subgraph_serial(build_complete_multipartite({2, 2, 2}), 3);
  EdgeOracleResult par = max_edges_clique_free_subgraph(build_complete_multipartite({2, 2, 2}), 3);
  CHECK(ser.value == 8);
  CHECK(ser.value == par.value);
  CHECK(ser.witness == par.witness);
}

TEST_CASE("oracle caps are hard errors") {
  VertexWeighting w9 = VertexWeighting::unit(9);
  CHECK_THROWS_AS(max_weight_clique_free(9, {EdgeWeightKind::Min, w9}, 3), CapExceededError);
  CHECK_THROWS_AS(max_edges_clique_free_subgraph(Graph::complete(8), 3), CapExceededError);
  CHECK_THROWS_AS(max_weight_clique_free_with_t_edges(8, VertexWeighting::unit(8), 3, 1),
                  CapExceededError);
  VertexWeighting w4 = VertexWeighting::unit(4);
  CHECK_THROWS_AS(max_weight_clique_free(4, {EdgeWeightKind::Min, w4}, 2), std::invalid_argument);
}

TEST_CASE("t-edge oracle feasibility boundary") {
  VertexWeighting unit5 = VertexWeighting::unit(5);
  std::int64_t turan = turan_edge_count(5, 2);
  for (int t = 0; t <= 10; ++t) {
    auto r = max_weight_clique_free_with_t_edges(5, unit5, 3, t);
    if (t <= turan) {
      REQUIRE(r.has_value());
      CHECK(*r == Rat(t));  // unit weights: w_min == edge count
    } else {
      CHECK(!r.has_value());
    }
  }
  CHECK(!max_weight_clique_free_with_t_edges(5, unit5, 3, -1).has_value());
}

TEST_CASE("t-edge optimum is always met by a subgraph of B_ell") {
  // Sharper form of the section-2.2 claim: for every feasible t, some t-edge
  // subgraph of B_ell already attains the max over all K_ell-free graphs.
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 15; ++rep) {
    int n = 3 + static_cast<int>(rng() % 4);
    int ell = 3 + static_cast<int>(rng() % 2);
    VertexWeighting w(random_weights(rng, n));
    WeightedEdgeFunction fn{EdgeWeightKind::Min, w};
    Graph b = build_B(ell, w);
    auto b_edges = b.edges();
    int mb = static_cast<int>(b_edges.size());
    for (int t = 0; t <= mb; ++t) {
      auto best = max_weight_clique_free_with_t_edges(n, w, ell, t);
      REQUIRE(best.has_value());
      // Max over t-edge subgraphs of B_ell, by direct subset enumeration.
      Rat best_b(-1);
      for (std::uint32_t mask = 0; mask < (1u << mb); ++mask) {
        if (std::popcount(mask) != t) continue;
        Rat sum = 0;
        for (int i = 0; i < mb; ++i)
          if (mask >> i & 1) sum += fn.edge(b_edges[static_cast<std::size_t>(i)].first,
                                            b_edges[static_cast<std::size_t>(i)].second);
        if (sum > best_b) best_b = sum;
      }
      CHECK(best_b == *best);
    }
  }
}
