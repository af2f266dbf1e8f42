#include "extremalkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "extremalkit/rat.hpp"

namespace exk {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds supported maximum " +
                                std::to_string(kMaxVertices));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
  int deg_sum = 0;
  for (std::uint64_t mask : adj_) deg_sum += std::popcount(mask);
  return deg_sum / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t mask = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    while (mask) {
      int v = std::countr_zero(mask);
      out.emplace_back(u, v);
      mask &= mask - 1;
    }
  }
  return out;
}

namespace {

// Clique search over the candidate mask, extending by increasing vertex id.
bool clique_in(const Graph& g, std::uint64_t candidates, int need) {
  if (need <= 0) return true;
  if (std::popcount(candidates) < need) return false;
  std::uint64_t rest = candidates;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (std::popcount(rest) + 1 < need) return false;
    if (clique_in(g, rest & g.adjacency_mask(v), need - 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_clique(const Graph& g, int ell) {
  if (ell < 1) throw std::invalid_argument("clique order must be >= 1");
  if (ell > g.vertex_count()) return false;
  std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << g.vertex_count()) - 1;
  return clique_in(g, all, ell);
}

std::int64_t thrackle_bound(const Graph& g) {
  std::int64_t bound = choose2(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) bound -= choose2(g.degree(v));
  return bound;
}

Graph build_complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("need at least one part");
  long long total = 0;
  for (int k : part_sizes) {
    if (k < 1) throw std::invalid_argument("part sizes must be positive");
    total += k;
  }
  Graph g(static_cast<int>(total));
  int offset_u = 0;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    int offset_v = offset_u + part_sizes[i];
    for (std::size_t j = i + 1; j < part_sizes.size(); ++j) {
      for (int u = 0; u < part_sizes[i]; ++u)
        for (int v = 0; v < part_sizes[j]; ++v) g.add_edge(offset_u + u, offset_v + v);
      offset_v += part_sizes[j];
    }
    offset_u += part_sizes[i];
  }
  return g;
}

std::int64_t turan_edge_count(std::int64_t n, std::int64_t ell) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  // r parts of size q+1, ell-r of size q
  std::int64_t q = n / ell;
  std::int64_t r = n % ell;
  std::int64_t sum_sq = r * (q + 1) * (q + 1) + (ell - r) * q * q;
  return (n * n - sum_sq) / 2;
}

Tree::Tree(int n, std::vector<std::pair<int, int>> edge_list) : graph_(n) {
  if (n < 1) throw std::invalid_argument("a tree needs at least one vertex");
  if (static_cast<int>(edge_list.size()) != n - 1)
    throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs exactly " +
                                std::to_string(n - 1) + " edges");
  for (auto [u, v] : edge_list) {
    if (graph_.has_edge(u, v)) throw std::invalid_argument("duplicate tree edge");
    graph_.add_edge(u, v);
  }
  if (static_cast<int>(distances_from(0).size()) != n)
    throw std::invalid_argument("edge list is not connected");
}

std::vector<int> Tree::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertex_count()));
  for (int v = 0; v < vertex_count(); ++v) d[static_cast<std::size_t>(v)] = graph_.degree(v);
  return d;
}

std::vector<int> Tree::distances_from(int v) const {
  std::vector<int> dist(static_cast<std::size_t>(vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(v)] = 0;
  q.push(v);
  int reached = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    ++reached;
    std::uint64_t mask = graph_.adjacency_mask(u);
    while (mask) {
      int w = std::countr_zero(mask);
      mask &= mask - 1;
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  if (reached != vertex_count()) dist.clear();  // disconnected; Tree ctor rejects
  return dist;
}

int Tree::eccentricity(int v) const {
  auto dist = distances_from(v);
  return *std::max_element(dist.begin(), dist.end());
}

int Tree::diameter() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, eccentricity(v));
  return best;
}

SpiderDescriptor::SpiderDescriptor(std::vector<int> legs) : legs_(std::move(legs)) {
  if (legs_.size() < 3) throw std::invalid_argument("a spider needs at least 3 legs");
  for (int l : legs_)
    if (l < 1) throw std::invalid_argument("leg lengths must be positive");
  std::sort(legs_.begin(), legs_.end(), std::greater<int>());
}

int SpiderDescriptor::vertex_count() const {
  return 1 + std::accumulate(legs_.begin(), legs_.end(), 0);
}

std::vector<int> spider_levels(const std::vector<int>& legs) {
  if (legs.empty()) return {};
  if (!std::is_sorted(legs.begin(), legs.end(), std::greater<int>()))
    throw std::invalid_argument("legs must be sorted non-increasing");
  if (legs.back() < 1) throw std::invalid_argument("leg lengths must be positive");
  std::vector<int> levels(static_cast<std::size_t>(legs.front()), 0);
  for (int l : legs)
    for (int i = 0; i < l; ++i) ++levels[static_cast<std::size_t>(i)];
  return levels;
}

std::vector<int> SpiderDescriptor::levels() const { return spider_levels(legs_); }

Tree SpiderDescriptor::to_tree() const {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int l : legs_) {
    int prev = 0;
    for (int i = 0; i < l; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, std::move(edges));
}

Diam4Descriptor::Diam4Descriptor(std::vector<int> children) : children_(std::move(children)) {
  for (int c : children_)
    if (c < 0) throw std::invalid_argument("child counts must be nonnegative");
  std::sort(children_.begin(), children_.end(), std::greater<int>());
  if (children_.size() < 2 || children_[1] < 1)
    throw std::invalid_argument("diameter 4 needs at least two children with children of their own");
}

int Diam4Descriptor::grandchild_count() const {
  return std::accumulate(children_.begin(), children_.end(), 0);
}

int Diam4Descriptor::vertex_count() const { return 1 + child_count() + grandchild_count(); }

Tree Diam4Descriptor::to_tree() const {
  std::vector<std::pair<int, int>> edges;
  int k = child_count();
  int next = k + 1;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(0, i + 1);
    for (int j = 0; j < children_[static_cast<std::size_t>(i)]; ++j) edges.emplace_back(i + 1, next++);
  }
  return Tree(next, std::move(edges));
}

namespace {

bool is_caterpillar(const Tree& t) {
  // Remove all leaves; a caterpillar is left with a path (possibly empty).
  int n = t.vertex_count();
  auto deg = t.degrees();
  std::vector<bool> kept(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) kept[static_cast<std::size_t>(v)] = n > 1 && deg[static_cast<std::size_t>(v)] >= 2;
  for (int v = 0; v < n; ++v) {
    if (!kept[static_cast<std::size_t>(v)]) continue;
    int inner = 0;
    std::uint64_t mask = t.graph().adjacency_mask(v);
    while (mask) {
      int w = std::countr_zero(mask);
      mask &= mask - 1;
      if (kept[static_cast<std::size_t>(w)]) ++inner;
    }
    if (inner > 2) return false;  // spine vertex of degree >= 3
  }
  return true;  // the leafless remainder of a tree is connected, so degrees <= 2 suffice
}

std::optional<SpiderDescriptor> as_spider(const Tree& t) {
  int center = -1;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.graph().degree(v) >= 3) {
      if (center >= 0) return std::nullopt;  // more than one branch vertex
      center = v;
    }
  }
  if (center < 0) return std::nullopt;  // a path
  std::vector<int> legs;
  std::uint64_t mask = t.graph().adjacency_mask(center);
  while (mask) {
    int first = std::countr_zero(mask);
    mask &= mask - 1;
    int len = 1, prev = center, cur = first;
    while (t.graph().degree(cur) == 2) {
      std::uint64_t next_mask = t.graph().adjacency_mask(cur) & ~(std::uint64_t{1} << prev);
      prev = cur;
      cur = std::countr_zero(next_mask);
      ++len;
    }
    legs.push_back(len);
  }
  return SpiderDescriptor(legs);
}

std::optional<Diam4Descriptor> as_diam4(const Tree& t) {
  if (t.diameter() != 4) return std::nullopt;
  int root = -1;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.eccentricity(v) == 2) {
      root = v;
      break;  // the center of a diameter-4 tree is unique
    }
  std::vector<int> children;
  std::uint64_t mask = t.graph().adjacency_mask(root);
  while (mask) {
    int u = std::countr_zero(mask);
    mask &= mask - 1;
    children.push_back(t.graph().degree(u) - 1);
  }
  return Diam4Descriptor(children);
}

}  // namespace

TreeClassification classify_tree(const Tree& t) {
  TreeClassification c;
  c.caterpillar = is_caterpillar(t);
  c.spider = as_spider(t);
  c.diam4 = as_diam4(t);
  return c;
}

}  // namespace exk
