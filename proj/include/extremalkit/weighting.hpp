// Vertex-induced edge weightings and the weighted extremal numbers
// ex(n, w_min, K_ell) and ex(n, w_prod, K_ell).
#pragma once

#include <vector>

#include "extremalkit/graph.hpp"
#include "extremalkit/partition.hpp"
#include "extremalkit/rat.hpp"

namespace exk {

// Nonnegative rational vertex weights. Kept in input order plus a stable
// descending sort (ties broken by input index), since the extremal
// construction B_ell is defined on the sorted order W(v_1) >= ... >= W(v_n).
class VertexWeighting {
 public:
  explicit VertexWeighting(std::vector<Rat> weights);

  static VertexWeighting unit(int n);

  int size() const { return static_cast<int>(input_.size()); }
  const std::vector<Rat>& input_order() const { return input_; }
  const Rat& sorted(int rank) const { return input_[static_cast<std::size_t>(order_[rank])]; }
  int input_index_of_rank(int rank) const { return order_[static_cast<std::size_t>(rank)]; }

 private:
  std::vector<Rat> input_;
  std::vector<int> order_;  // order_[rank] = input index
};

enum class EdgeWeightKind { Min, Product };

// w_min(uv) = min(W(u), W(v)); w_prod(uv) = W(u) * W(v). Vertices are sorted
// ranks: vertex i of any graph paired with this function means v_{i+1}.
struct WeightedEdgeFunction {
  EdgeWeightKind kind;
  VertexWeighting base;

  int size() const { return base.size(); }
  Rat edge(int u, int v) const;
};

// B_ell(v_1..v_n): complete (ell-1)-partite graph putting v_i into part
// i mod (ell-1). Vertex i of the result is v_{i+1} (sorted rank). ell >= 3.
Graph build_B(int ell, const VertexWeighting& weighting);

// Sum of edge weights; graph vertices are ranks into w.base.
Rat weight_of(const Graph& g, const WeightedEdgeFunction& w);

// ex(n, w_min, K_ell) = w_min(B_ell(v_1..v_n)).
Rat ex_min(const VertexWeighting& weighting, int ell);

struct ExProdResult {
  Rat value;
  IndexPartition partition;  // over input vertex indices
};

// ex(n, w_prod, K_ell): maximize sum_{P != P'} W(P) W(P') over partitions of
// the vertices into at most ell-1 parts; returns the optimum and a witness.
ExProdResult ex_prod(const VertexWeighting& weighting, int ell);

// Zykov duplication: delete y and re-add it with x's neighborhood. Requires x
// and y nonadjacent; preserves K_ell-freeness.
Graph duplicate_vertex(const Graph& g, int x, int y);

}  // namespace exk
