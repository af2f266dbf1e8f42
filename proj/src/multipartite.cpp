#include "extremalkit/multipartite.hpp"

#include <stdexcept>

namespace exk {

HostSpec::HostSpec(std::vector<long long> parts, int forbidden_clique)
    : part_sizes(std::move(parts)), ell(forbidden_clique) {
  if (part_sizes.empty()) throw std::invalid_argument("host needs at least one part");
  for (long long k : part_sizes)
    if (k < 1) throw std::invalid_argument("part sizes must be positive");
  if (ell < 3) throw std::invalid_argument("ell must be >= 3");
}

MultipartiteResult ex_multipartite(const HostSpec& spec) {
  std::vector<Rat> sizes;
  sizes.reserve(spec.part_sizes.size());
  for (long long k : spec.part_sizes) sizes.emplace_back(static_cast<long>(k));
  PartitionResult r = partition_maximize_products(sizes, spec.ell - 1);
  Int value = r.value.get_num();  // integral: a sum of products of integers
  return {std::move(value), std::move(r.partition)};
}

Graph merged_witness_graph(const HostSpec& spec, const IndexPartition& partition) {
  if (partition.ground_size() != spec.part_count())
    throw std::invalid_argument("partition ground set does not match the host parts");
  if (partition.block_count() > spec.ell - 1)
    throw std::invalid_argument("witness needs at most ell-1 merged parts");
  std::vector<int> merged_sizes;
  merged_sizes.reserve(partition.blocks().size());
  long long total = 0;
  for (const auto& block : partition.blocks()) {
    long long s = 0;
    for (int i : block) s += spec.part_sizes[static_cast<std::size_t>(i)];
    total += s;
    merged_sizes.push_back(static_cast<int>(s));
  }
  if (total > Graph::kMaxVertices)
    throw std::invalid_argument("witness graph needs more than 64 vertices; value is still exact");
  return build_complete_multipartite(merged_sizes);
}

}  // namespace exk
