// Balanced multiway partitioning under the pairwise block-sum product
// objective. Maximizing sum_{P != P'} S_P S_{P'} over partitions into at most
// m blocks is the same as minimizing sum_P S_P^2, via
//   sum_{P != P'} S_P S_{P'} = (S^2 - sum_P S_P^2) / 2,   S = total.
#pragma once

#include <vector>

#include "extremalkit/rat.hpp"

namespace exk {

// Partition of {0..size-1} into at most max_blocks nonempty blocks. Canonical
// form: elements sorted within blocks, blocks ordered by smallest element,
// empty blocks dropped.
class IndexPartition {
 public:
  IndexPartition() = default;
  IndexPartition(std::vector<std::vector<int>> blocks, int ground_size, int max_blocks);

  // assignment[i] = block of element i; block count <= max_blocks.
  static IndexPartition from_assignment(const std::vector<int>& assignment, int max_blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int ground_size() const { return ground_size_; }
  int max_blocks() const { return max_blocks_; }

  // Block ids in first-appearance order over element index; the canonical
  // vector compared lexicographically to pick witnesses.
  std::vector<int> assignment() const;

  bool operator==(const IndexPartition& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
  int ground_size_ = 0;
  int max_blocks_ = 0;
};

struct PartitionResult {
  Rat value;  // sum over unordered block pairs of S_P * S_P'
  IndexPartition partition;
};

// The objective value of a given partition.
Rat partition_product_value(const std::vector<Rat>& values, const IndexPartition& partition);

// Exact optimum via branch and bound (largest values assigned first, symmetry
// breaking on empty blocks, water-filling relaxation bound). Among optimal
// partitions the witness has the lexicographically smallest canonical
// assignment vector. values must be nonnegative, m >= 1.
PartitionResult partition_maximize_products(const std::vector<Rat>& values, int m);

// Feasible lower bound: greedy longest-processing-time assignment, plus
// Karmarkar-Karp style differencing; the better of the two is returned.
// Never exceeds the exact optimum.
PartitionResult partition_heuristic(const std::vector<Rat>& values, int m);

}  // namespace exk
