#include "extremalkit/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace exk {

IndexPartition::IndexPartition(std::vector<std::vector<int>> blocks, int ground_size, int max_blocks)
    : ground_size_(ground_size), max_blocks_(max_blocks) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
  if (max_blocks < 1) throw std::invalid_argument("need at least one block");
  std::vector<bool> seen(static_cast<std::size_t>(ground_size), false);
  for (auto& block : blocks) {
    for (int e : block) {
      if (e < 0 || e >= ground_size) throw std::invalid_argument("element out of range");
      if (seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("element appears twice");
      seen[static_cast<std::size_t>(e)] = true;
    }
    std::sort(block.begin(), block.end());
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("partition misses an element");
  std::erase_if(blocks, [](const std::vector<int>& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  if (static_cast<int>(blocks.size()) > max_blocks)
    throw std::invalid_argument("partition uses more than " + std::to_string(max_blocks) + " blocks");
  blocks_ = std::move(blocks);
}

IndexPartition IndexPartition::from_assignment(const std::vector<int>& assignment, int max_blocks) {
  std::map<int, std::vector<int>> by_id;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] < 0) throw std::invalid_argument("negative block id");
    by_id[assignment[i]].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(by_id.size());
  for (auto& [id, block] : by_id) blocks.push_back(std::move(block));
  return IndexPartition(std::move(blocks), static_cast<int>(assignment.size()), max_blocks);
}

std::vector<int> IndexPartition::assignment() const {
  std::vector<int> out(static_cast<std::size_t>(ground_size_), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int e : blocks_[b]) out[static_cast<std::size_t>(e)] = static_cast<int>(b);
  return out;
}

Rat partition_product_value(const std::vector<Rat>& values, const IndexPartition& partition) {
  if (static_cast<int>(values.size()) != partition.ground_size())
    throw std::invalid_argument("value count does not match partition ground size");
  Rat total = 0, sum_sq = 0;
  for (const auto& block : partition.blocks()) {
    Rat s = 0;
    for (int e : block) s += values[static_cast<std::size_t>(e)];
    total += s;
    sum_sq += s * s;
  }
  return (total * total - sum_sq) / 2;
}

namespace {

// Minimum of sum (s_i + x_i)^2 over fractional x >= 0 with sum x = remaining:
// water-fill the lowest sums up to a common level.
Rat water_fill_bound(const std::vector<Rat>& sums, const Rat& remaining) {
  std::vector<Rat> sorted = sums;
  std::sort(sorted.begin(), sorted.end());
  int m = static_cast<int>(sorted.size());
  Rat prefix = 0;
  for (int k = 1; k <= m; ++k) {
    prefix += sorted[static_cast<std::size_t>(k - 1)];
    if (k == m || prefix + remaining <= Rat(k) * sorted[static_cast<std::size_t>(k)]) {
      Rat level_mass = prefix + remaining;
      Rat bound = level_mass * level_mass / k;
      for (int i = k; i < m; ++i) bound += sorted[static_cast<std::size_t>(i)] * sorted[static_cast<std::size_t>(i)];
      return bound;
    }
  }
  return 0;  // m == 0 cannot happen; keeps the compiler happy
}

// Branch and bound for min sum of squared block sums, items taken in the
// given (non-increasing) order. Used twice: once unconstrained for the value,
// then as the feasibility test inside the lexicographic witness rebuild.
struct SquareSumSearch {
  const std::vector<Rat>& items;  // sorted non-increasing
  int m;
  std::vector<Rat> sums;
  Rat suffix_total = 0;  // recomputed per level from suffixes
  std::vector<Rat> suffix;

  explicit SquareSumSearch(const std::vector<Rat>& items_sorted, int m_) : items(items_sorted), m(m_) {
    sums.assign(static_cast<std::size_t>(m), Rat(0));
    suffix.assign(items.size() + 1, Rat(0));
    for (std::size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + items[i];
  }

  // Strict-improvement search: updates best to the true minimum reachable
  // below its initial value (so seed it with any feasible sum of squares).
  void improve(std::size_t i, const Rat& sum_sq, int prev_block, Rat& best) {
    if (i == items.size()) {
      if (sum_sq < best) best = sum_sq;
      return;
    }
    if (water_fill_bound(sums, suffix[i]) >= best) return;
    int start = (i > 0 && items[i] == items[i - 1]) ? prev_block : 0;
    for (int b = start; b < m; ++b) {
      bool duplicate_sum = false;
      for (int c = start; c < b && !duplicate_sum; ++c) duplicate_sum = sums[c] == sums[b];
      if (duplicate_sum) continue;  // equal-sum blocks are interchangeable
      const Rat& v = items[i];
      Rat delta = v * (2 * sums[static_cast<std::size_t>(b)] + v);
      sums[static_cast<std::size_t>(b)] += v;
      improve(i + 1, sum_sq + delta, b, best);
      sums[static_cast<std::size_t>(b)] -= v;
    }
  }

  // Can the remaining items reach a final sum of squares <= target?
  bool feasible(std::size_t i, const Rat& sum_sq, int prev_block, const Rat& target) {
    if (i == items.size()) return sum_sq <= target;
    if (water_fill_bound(sums, suffix[i]) > target) return false;
    int start = (i > 0 && items[i] == items[i - 1]) ? prev_block : 0;
    for (int b = start; b < m; ++b) {
      bool duplicate_sum = false;
      for (int c = start; c < b && !duplicate_sum; ++c) duplicate_sum = sums[c] == sums[b];
      if (duplicate_sum) continue;
      const Rat& v = items[i];
      Rat delta = v * (2 * sums[static_cast<std::size_t>(b)] + v);
      sums[static_cast<std::size_t>(b)] += v;
      bool ok = feasible(i + 1, sum_sq + delta, b, target);
      sums[static_cast<std::size_t>(b)] -= v;
      if (ok) return true;
    }
    return false;
  }
};

void check_inputs(const std::vector<Rat>& values, int m) {
  if (m < 1) throw std::invalid_argument("need at least one block");
  for (const Rat& v : values)
    if (v < 0) throw std::invalid_argument("values must be nonnegative");
}

Rat sum_sq_of(const std::vector<Rat>& values, const IndexPartition& p) {
  Rat s = 0;
  for (const auto& block : p.blocks()) {
    Rat bs = 0;
    for (int e : block) bs += values[static_cast<std::size_t>(e)];
    s += bs * bs;
  }
  return s;
}

}  // namespace

PartitionResult partition_heuristic(const std::vector<Rat>& values, int m) {
  check_inputs(values, m);
  int n = static_cast<int>(values.size());
  if (n == 0) return {Rat(0), IndexPartition({}, 0, m)};

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)]; });

  // Longest processing time: next item to the lightest block.
  std::vector<int> lpt_assignment(static_cast<std::size_t>(n), 0);
  {
    std::vector<Rat> sums(static_cast<std::size_t>(m), Rat(0));
    for (int idx : order) {
      int target = 0;
      for (int b = 1; b < m; ++b)
        if (sums[static_cast<std::size_t>(b)] < sums[static_cast<std::size_t>(target)]) target = b;
      sums[static_cast<std::size_t>(target)] += values[static_cast<std::size_t>(idx)];
      lpt_assignment[static_cast<std::size_t>(idx)] = target;
    }
  }
  IndexPartition lpt = IndexPartition::from_assignment(lpt_assignment, m);
  Rat lpt_value = partition_product_value(values, lpt);

  // Largest differencing: combine the two tuples with the widest spread,
  // pairing sums in opposite order.
  struct Tuple {
    std::vector<Rat> sums;                 // non-increasing
    std::vector<std::vector<int>> blocks;  // aligned with sums
    std::size_t born;
  };
  std::vector<Tuple> tuples;
  tuples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Tuple t;
    t.sums.assign(static_cast<std::size_t>(m), Rat(0));
    t.blocks.assign(static_cast<std::size_t>(m), {});
    t.sums[0] = values[static_cast<std::size_t>(i)];
    t.blocks[0] = {i};
    t.born = static_cast<std::size_t>(i);
    tuples.push_back(std::move(t));
  }
  std::size_t next_born = tuples.size();
  auto spread = [](const Tuple& t) { return t.sums.front() - t.sums.back(); };
  while (tuples.size() > 1) {
    auto pick = [&](std::size_t skip) {
      std::size_t best = skip == 0 ? 1 : 0;
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (i == skip || i == best) continue;
        Rat di = spread(tuples[i]), db = spread(tuples[best]);
        if (di > db || (di == db && tuples[i].born < tuples[best].born)) best = i;
      }
      return best;
    };
    std::size_t first = pick(tuples.size());
    std::size_t second = pick(first);
    Tuple merged;
    merged.sums.assign(static_cast<std::size_t>(m), Rat(0));
    merged.blocks.assign(static_cast<std::size_t>(m), {});
    const Tuple& a = tuples[first];
    const Tuple& b = tuples[second];
    for (int s = 0; s < m; ++s) {
      std::size_t sa = static_cast<std::size_t>(s), sb = static_cast<std::size_t>(m - 1 - s);
      merged.sums[sa] = a.sums[sa] + b.sums[sb];
      merged.blocks[sa] = a.blocks[sa];
      merged.blocks[sa].insert(merged.blocks[sa].end(), b.blocks[sb].begin(), b.blocks[sb].end());
    }
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) perm[static_cast<std::size_t>(s)] = s;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return merged.sums[static_cast<std::size_t>(x)] > merged.sums[static_cast<std::size_t>(y)]; });
    Tuple sorted;
    sorted.sums.reserve(static_cast<std::size_t>(m));
    sorted.blocks.reserve(static_cast<std::size_t>(m));
    for (int s : perm) {
      sorted.sums.push_back(merged.sums[static_cast<std::size_t>(s)]);
      sorted.blocks.push_back(std::move(merged.blocks[static_cast<std::size_t>(s)]));
    }
    sorted.born = next_born++;
    if (first < second) std::swap(first, second);
    tuples.erase(tuples.begin() + static_cast<std::ptrdiff_t>(first));
    tuples.erase(tuples.begin() + static_cast<std::ptrdiff_t>(second));
    tuples.push_back(std::move(sorted));
  }
  IndexPartition kk(std::move(tuples.front().blocks), n, m);
  Rat kk_value = partition_product_value(values, kk);

  if (kk_value > lpt_value) return {std::move(kk_value), std::move(kk)};
  return {std::move(lpt_value), std::move(lpt)};
}

PartitionResult partition_maximize_products(const std::vector<Rat>& values, int m) {
  check_inputs(values, m);
  int n = static_cast<int>(values.size());
  if (n == 0) return {Rat(0), IndexPartition({}, 0, m)};

  PartitionResult seed = partition_heuristic(values, m);
  Rat best_sum_sq = sum_sq_of(values, seed.partition);

  std::vector<Rat> sorted_desc = values;
  std::sort(sorted_desc.begin(), sorted_desc.end(), std::greater<Rat>());
  {
    SquareSumSearch search(sorted_desc, m);
    search.improve(0, Rat(0), 0, best_sum_sq);
  }
  const Rat target = best_sum_sq;

  // Rebuild the witness digit by digit in input order; each prefix keeps only
  // block ids in first-appearance order, so the greedy lexicographic choice
  // over feasible digits is exactly the canonical-assignment minimum.
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  std::vector<Rat> prefix_sums(static_cast<std::size_t>(m), Rat(0));
  Rat prefix_sum_sq = 0;
  int used = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> rest(values.begin() + i + 1, values.end());
    std::sort(rest.begin(), rest.end(), std::greater<Rat>());
    int limit = std::min(used, m - 1);
    bool placed = false;
    for (int b = 0; b <= limit && !placed; ++b) {
      const Rat& v = values[static_cast<std::size_t>(i)];
      Rat delta = v * (2 * prefix_sums[static_cast<std::size_t>(b)] + v);
      prefix_sums[static_cast<std::size_t>(b)] += v;
      SquareSumSearch search(rest, m);
      search.sums = prefix_sums;
      if (search.feasible(0, prefix_sum_sq + delta, 0, target)) {
        assignment[static_cast<std::size_t>(i)] = b;
        prefix_sum_sq += delta;
        used = std::max(used, b + 1);
        placed = true;
      } else {
        prefix_sums[static_cast<std::size_t>(b)] -= v;
      }
    }
    if (!placed) throw std::logic_error("lexicographic witness rebuild lost the optimum");
  }

  Rat total = 0;
  for (const Rat& v : values) total += v;
  PartitionResult out;
  out.value = (total * total - target) / 2;
  out.partition = IndexPartition::from_assignment(assignment, m);
  return out;
}

}  // namespace exk
