// ex(K_{k_1..k_r}, K_ell) via the reduction to product-weight partition
// maximization: merge parts of [r] into ell-1 groups.
#pragma once

#include <vector>

#include "extremalkit/graph.hpp"
#include "extremalkit/partition.hpp"
#include "extremalkit/rat.hpp"

namespace exk {

struct HostSpec {
  std::vector<long long> part_sizes;  // k_1..k_r, all >= 1
  int ell = 3;                        // forbidden clique order, >= 3

  HostSpec(std::vector<long long> parts, int forbidden_clique);
  int part_count() const { return static_cast<int>(part_sizes.size()); }
};

struct MultipartiteResult {
  Int value;                 // edge count of the extremal subgraph
  IndexPartition partition;  // merging partition of the r part indices
};

MultipartiteResult ex_multipartite(const HostSpec& spec);

// The complete (ell-1)-partite subgraph of the host realizing a partition:
// merged part P gets k_P = sum_{i in P} k_i vertices. Always K_ell-free.
Graph merged_witness_graph(const HostSpec& spec, const IndexPartition& partition);

}  // namespace exk
