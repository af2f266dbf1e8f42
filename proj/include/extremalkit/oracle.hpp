// Brute-force ground truth for every extremal quantity. Built and tested
// before the closed forms; an oracle never approximates, so the size caps are
// hard errors.
//
// Enumeration walks edge subsets depth-first in lexicographic edge order,
// include-branch first, pruning with the admissible bound
// current weight + sum of remaining edge weights. The first optimum such a
// walk completes is kept, so the returned witness is deterministic (and, for
// maximal optima, the lexicographically smallest edge set). The parallel
// variants shard the top of the search tree across OpenMP workers with a
// shared monotone best bound; shards prune other shards' subtrees only
// strictly below the bound, so the reduced result is identical to the serial
// one regardless of thread count.
#pragma once

#include <cstdint>
#include <optional>

#include "extremalkit/graph.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/weighting.hpp"

namespace exk {

inline constexpr int kOracleMaxVertices = 8;         // C(8,2) = 28 edge slots
inline constexpr int kOracleMaxVerticesT = 7;        // t-constrained variant
inline constexpr int kOracleMaxHostEdges = 24;       // host-subgraph variant

struct WeightedOracleResult {
  Rat value;
  Graph witness;
};

// max{ w(G) : G subseteq K_n, G K_ell-free }, exact, with one maximizer.
WeightedOracleResult max_weight_clique_free(int n, const WeightedEdgeFunction& w, int ell);
WeightedOracleResult max_weight_clique_free_serial(int n, const WeightedEdgeFunction& w, int ell);

// Max w_min-weight over K_ell-free graphs with exactly t edges; nullopt when
// no K_ell-free graph on n vertices has t edges (infeasible t is a distinct
// signal, not weight zero).
std::optional<Rat> max_weight_clique_free_with_t_edges(int n, const VertexWeighting& weighting,
                                                       int ell, int t);

struct EdgeOracleResult {
  std::int64_t value;
  Graph witness;
};

// Largest K_ell-free spanning subgraph of an arbitrary host, by edge count.
EdgeOracleResult max_edges_clique_free_subgraph(const Graph& host, int ell);
EdgeOracleResult max_edges_clique_free_subgraph_serial(const Graph& host, int ell);

}  // namespace exk
