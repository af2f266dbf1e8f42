#include "extremalkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "extremalkit/errors.hpp"
#include "extremalkit/parallel.hpp"

namespace exk {
namespace {

// Does the graph contain a K_need all of whose vertices lie in candidates?
bool clique_in_mask(const Graph& g, std::uint64_t candidates, int need) {
  if (need <= 0) return true;
  std::uint64_t rest = candidates;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (std::popcount(rest) + 1 < need) return false;
    if (clique_in_mask(g, rest & g.adjacency_mask(v), need - 1)) return true;
  }
  return false;
}

// Would adding uv to g create a K_ell? Equivalent to a K_{ell-2} inside the
// common neighborhood.
bool edge_completes_clique(const Graph& g, int u, int v, int ell) {
  return clique_in_mask(g, g.adjacency_mask(u) & g.adjacency_mask(v), ell - 2);
}

// One DFS engine for both weighted and edge-count oracles; Value is Rat or
// int64. Records the first completion of the running maximum, so the witness
// is a pure function of the edge order (see the header for why the parallel
// sharding reproduces it).
template <typename Value>
struct SubsetSearch {
  const std::vector<std::pair<int, int>>& edge_order;
  const std::vector<Value>& edge_values;
  int ell;
  std::vector<Value> suffix;  // suffix[i] = sum of values of edges i..end

  // Local snapshot of the shared monotone lower bound on the optimum; both
  // the true shared variable (*shared_slot) and this snapshot are touched
  // only inside the exk_oracle_floor critical section.
  Value shared_floor;
  Value* shared_slot = nullptr;
  std::uint64_t visits = 0;

  Graph current;
  Value current_value;
  bool have_record = false;
  Value record_value{};
  Graph record_graph;

  SubsetSearch(const std::vector<std::pair<int, int>>& order, const std::vector<Value>& values,
               int ell_, int n)
      : edge_order(order), edge_values(values), ell(ell_), shared_floor{}, current(n), current_value{} {
    suffix.assign(order.size() + 1, Value{});
    for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + values[i];
  }

  void complete() {
    if (!have_record || current_value > record_value) {
      have_record = true;
      record_value = current_value;
      record_graph = current;
      if (shared_slot) {
#pragma omp critical(exk_oracle_floor)
        {
          if (record_value > *shared_slot) *shared_slot = record_value;
          if (*shared_slot > shared_floor) shared_floor = *shared_slot;
        }
      }
    }
  }

  void dfs(std::size_t i) {
    if (shared_slot && (++visits & 0xFFF) == 0) {
#pragma omp critical(exk_oracle_floor)
      {
        if (*shared_slot > shared_floor) shared_floor = *shared_slot;
      }
    }
    // Strict pruning: a subtree is dropped only when it cannot even tie the
    // floor, so every optimum-bearing subtree is visited.
    if (have_record && current_value + suffix[i] < std::max(record_value, shared_floor)) return;
    if (!have_record && current_value + suffix[i] < shared_floor) return;
    if (i == edge_order.size()) {
      complete();
      return;
    }
    auto [u, v] = edge_order[i];
    if (!edge_completes_clique(current, u, v, ell)) {
      current.add_edge(u, v);
      current_value += edge_values[i];
      dfs(i + 1);
      current_value -= edge_values[i];
      current.remove_edge(u, v);
    }
    dfs(i + 1);
  }
};

// A shard is one include/exclude pattern for the first `depth` edges,
// enumerated in DFS visit order (include branch first).
template <typename Value>
struct ShardOutcome {
  bool reached = false;  // pattern legal (no clique while laying the prefix)
  bool have_record = false;
  Value record_value{};
  Graph record_graph;
};

template <typename Value>
std::pair<Value, Graph> run_subset_search(int n, const std::vector<std::pair<int, int>>& order,
                                          const std::vector<Value>& values, int ell, bool parallel) {
  const int m = static_cast<int>(order.size());
  if (m == 0) return {Value{}, Graph(n)};

  int depth = 0;
  if (parallel && max_threads() > 1) depth = std::min(m, 10);
  const std::uint64_t shard_count = std::uint64_t{1} << depth;
  std::vector<ShardOutcome<Value>> shards(shard_count);

  Value shared_floor{};  // guarded by the critical section below
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel ? max_threads() : 1)
  for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(shard_count); ++rank) {
    // rank 0 is the all-include pattern, matching include-first DFS order.
    std::uint64_t pattern = shard_count - 1 - static_cast<std::uint64_t>(rank);
    SubsetSearch<Value> search(order, values, ell, n);
    bool legal = true;
    for (int j = 0; j < depth && legal; ++j) {
      if (!(pattern >> (depth - 1 - j) & 1)) continue;  // bit j of the pattern, MSB = edge 0
      auto [u, v] = order[static_cast<std::size_t>(j)];
      if (edge_completes_clique(search.current, u, v, ell)) {
        legal = false;
      } else {
        search.current.add_edge(u, v);
        search.current_value += values[static_cast<std::size_t>(j)];
      }
    }
    if (!legal) continue;
    search.shared_slot = &shared_floor;
#pragma omp critical(exk_oracle_floor)
    { search.shared_floor = shared_floor; }
    search.dfs(static_cast<std::size_t>(depth));
    ShardOutcome<Value>& out = shards[static_cast<std::size_t>(rank)];
    out.reached = true;
    out.have_record = search.have_record;
    if (search.have_record) {
      out.record_value = search.record_value;
      out.record_graph = std::move(search.record_graph);
    }
  }

  // Reduce in DFS prefix order: the first shard attaining the maximum holds
  // the witness the serial walk would have produced.
  bool have = false;
  Value best{};
  const Graph* witness = nullptr;
  for (const auto& shard : shards) {
    if (!shard.reached || !shard.have_record) continue;
    if (!have || shard.record_value > best) {
      have = true;
      best = shard.record_value;
      witness = &shard.record_graph;
    }
  }
  if (!have) return {Value{}, Graph(n)};  // every pattern illegal cannot happen (all-exclude is legal)
  return {best, *witness};
}

std::vector<std::pair<int, int>> complete_edge_order(int n) {
  std::vector<std::pair<int, int>> order;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) order.emplace_back(u, v);
  return order;
}

WeightedOracleResult weighted_oracle(int n, const WeightedEdgeFunction& w, int ell, bool parallel) {
  if (n < 0 || n > kOracleMaxVertices)
    throw CapExceededError("weighted oracle handles at most " + std::to_string(kOracleMaxVertices) +
                           " vertices, got " + std::to_string(n));
  if (n > w.size()) throw std::invalid_argument("weighting has fewer vertices than requested");
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
  auto order = complete_edge_order(n);
  std::vector<Rat> values;
  values.reserve(order.size());
  for (auto [u, v] : order) values.push_back(w.edge(u, v));
  auto [value, witness] = run_subset_search<Rat>(n, order, values, ell, parallel);
  return {std::move(value), std::move(witness)};
}

EdgeOracleResult edge_oracle(const Graph& host, int ell, bool parallel) {
  if (host.edge_count() > kOracleMaxHostEdges)
    throw CapExceededError("host oracle handles at most " + std::to_string(kOracleMaxHostEdges) +
                           " edges, got " + std::to_string(host.edge_count()));
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
  auto order = host.edges();
  std::vector<std::int64_t> values(order.size(), 1);
  auto [value, witness] = run_subset_search<std::int64_t>(host.vertex_count(), order, values, ell, parallel);
  return {value, std::move(witness)};
}

}  // namespace

WeightedOracleResult max_weight_clique_free(int n, const WeightedEdgeFunction& w, int ell) {
  return weighted_oracle(n, w, ell, true);
}

WeightedOracleResult max_weight_clique_free_serial(int n, const WeightedEdgeFunction& w, int ell) {
  return weighted_oracle(n, w, ell, false);
}

EdgeOracleResult max_edges_clique_free_subgraph(const Graph& host, int ell) {
  return edge_oracle(host, ell, true);
}

EdgeOracleResult max_edges_clique_free_subgraph_serial(const Graph& host, int ell) {
  return edge_oracle(host, ell, false);
}

std::optional<Rat> max_weight_clique_free_with_t_edges(int n, const VertexWeighting& weighting,
                                                       int ell, int t) {
  if (n < 0 || n > kOracleMaxVerticesT)
    throw CapExceededError("t-edge oracle handles at most " + std::to_string(kOracleMaxVerticesT) +
                           " vertices, got " + std::to_string(n));
  if (n > weighting.size()) throw std::invalid_argument("weighting has fewer vertices than requested");
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
  if (t < 0) return std::nullopt;

  WeightedEdgeFunction w{EdgeWeightKind::Min, weighting};
  auto order = complete_edge_order(n);
  std::vector<Rat> values;
  values.reserve(order.size());
  for (auto [u, v] : order) values.push_back(w.edge(u, v));
  std::vector<Rat> suffix(order.size() + 1, Rat(0));
  for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + values[i];

  std::optional<Rat> best;
  Graph current(n);
  Rat current_value = 0;
  auto dfs = [&](auto&& self, std::size_t i, int used) -> void {
    if (used > t) return;
    if (t - used > static_cast<int>(order.size() - i)) return;  // not enough edges left
    if (best && current_value + suffix[i] < *best) return;
    if (i == order.size()) {
      if (used == t && (!best || current_value > *best)) best = current_value;
      return;
    }
    auto [u, v] = order[i];
    if (!edge_completes_clique(current, u, v, ell)) {
      current.add_edge(u, v);
      current_value += values[i];
      self(self, i + 1, used + 1);
      current_value -= values[i];
      current.remove_edge(u, v);
    }
    self(self, i + 1, used);
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace exk
