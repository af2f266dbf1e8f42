// Small simple graphs and trees, with the tree classifications the crossing
// number formulas dispatch on.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace exk {

// Simple undirected graph on dense vertex ids 0..n-1, adjacency kept as one
// 64-bit mask per vertex. Desk scale by design: n <= 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // set semantics; throws on loops / bad ids
  void remove_edge(int u, int v);
  std::uint64_t adjacency_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;

  // Edge list in lexicographic (u, v) order with u < v.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// True iff G has ell mutually adjacent vertices (ell >= 1).
bool contains_clique(const Graph& g, int ell);

// C(|E|,2) - sum_v C(d(v),2): adjacent edges cannot cross, so this bounds the
// crossing count of every legal drawing.
std::int64_t thrackle_bound(const Graph& g);

// K_{k_1,...,k_r}: parts laid out consecutively, all cross-part edges present.
Graph build_complete_multipartite(const std::vector<int>& part_sizes);

// Edge count of the Turan graph T_{n,ell} (balanced complete ell-partite).
std::int64_t turan_edge_count(std::int64_t n, std::int64_t ell);

// Connected acyclic graph; construction validates.
class Tree {
 public:
  Tree(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return graph_.vertex_count(); }
  const Graph& graph() const { return graph_; }
  std::vector<int> degrees() const;
  std::vector<int> distances_from(int v) const;  // BFS hop counts
  int eccentricity(int v) const;
  int diameter() const;

 private:
  Graph graph_;
};

// Spider: exactly one vertex of degree >= 3; legs are the maximal paths from
// it. Stored as leg lengths sorted non-increasing, k >= 3.
class SpiderDescriptor {
 public:
  explicit SpiderDescriptor(std::vector<int> legs);

  const std::vector<int>& legs() const { return legs_; }
  int leg_count() const { return static_cast<int>(legs_.size()); }
  int vertex_count() const;
  int eccentricity() const { return legs_.front(); }
  std::vector<int> levels() const;  // a_i = #legs of length >= i
  Tree to_tree() const;             // 0 = branch vertex, legs laid out in order

 private:
  std::vector<int> legs_;
};

// a_i = number of legs with length >= i; legs must be sorted non-increasing.
std::vector<int> spider_levels(const std::vector<int>& legs);

// Diameter-4 tree rooted at its unique eccentricity-2 vertex: the root's i-th
// child has children[i] children of its own. Sorted non-increasing; zero
// entries are root-attached leaves; at least two entries must be positive,
// otherwise the diameter is below 4.
class Diam4Descriptor {
 public:
  explicit Diam4Descriptor(std::vector<int> children);

  const std::vector<int>& children() const { return children_; }
  int child_count() const { return static_cast<int>(children_.size()); }
  int grandchild_count() const;
  int vertex_count() const;  // 1 + k + sum c_i
  // 0 = root, 1..k = children in descriptor order, then grandchildren grouped
  // by parent.
  Tree to_tree() const;

 private:
  std::vector<int> children_;
};

// Multi-label classification; the labels overlap (a spider with all legs of
// length 2 is also a diameter-4 tree) and callers pick the formula they want.
struct TreeClassification {
  bool caterpillar = false;
  std::optional<SpiderDescriptor> spider;
  std::optional<Diam4Descriptor> diam4;
  bool other() const { return !caterpillar && !spider && !diam4; }
};

TreeClassification classify_tree(const Tree& t);

}  // namespace exk
