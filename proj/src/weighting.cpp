#include "extremalkit/weighting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace exk {

VertexWeighting::VertexWeighting(std::vector<Rat> weights) : input_(std::move(weights)) {
  for (Rat& w : input_) {
    if (sgn(w.get_den()) == 0) throw std::invalid_argument("vertex weight has zero denominator");
    w.canonicalize();  // tolerate values from mpq_class(p, q), which skips this
    if (w < 0) throw std::invalid_argument("vertex weights must be nonnegative");
  }
  order_.resize(input_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return input_[static_cast<std::size_t>(a)] > input_[static_cast<std::size_t>(b)]; });
}

VertexWeighting VertexWeighting::unit(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return VertexWeighting(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
}

Rat WeightedEdgeFunction::edge(int u, int v) const {
  const Rat& a = base.sorted(u);
  const Rat& b = base.sorted(v);
  if (kind == EdgeWeightKind::Min) return a < b ? a : b;
  return a * b;
}

Graph build_B(int ell, const VertexWeighting& weighting) {
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
  int n = weighting.size();
  Graph g(n);
  int parts = ell - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % parts != v % parts) g.add_edge(u, v);
  return g;
}

Rat weight_of(const Graph& g, const WeightedEdgeFunction& w) {
  if (g.vertex_count() > w.size()) throw std::invalid_argument("graph has more vertices than the weighting");
  Rat total = 0;
  for (auto [u, v] : g.edges()) total += w.edge(u, v);
  return total;
}

Rat ex_min(const VertexWeighting& weighting, int ell) {
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
  WeightedEdgeFunction w{EdgeWeightKind::Min, weighting};
  return weight_of(build_B(ell, weighting), w);
}

ExProdResult ex_prod(const VertexWeighting& weighting, int ell) {
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
  PartitionResult r = partition_maximize_products(weighting.input_order(), ell - 1);
  return {std::move(r.value), std::move(r.partition)};
}

Graph duplicate_vertex(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("cannot duplicate a vertex onto itself");
  if (g.has_edge(x, y)) throw std::invalid_argument("duplication requires a nonadjacent pair");
  Graph out = g;
  std::uint64_t old = g.adjacency_mask(y);
  while (old) {
    int u = std::countr_zero(old);
    old &= old - 1;
    out.remove_edge(y, u);
  }
  std::uint64_t mask = g.adjacency_mask(x);
  while (mask) {
    int u = std::countr_zero(mask);
    mask &= mask - 1;
    out.add_edge(y, u);  // x,y nonadjacent, so u != y
  }
  return out;
}

}  // namespace exk
