#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "extremalkit/graph.hpp"
#include "extremalkit/partition.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/weighting.hpp"

using namespace exk;

namespace {

// Exhaustive optimum + lexicographically smallest canonical witness.
PartitionResult brute_force_partition(const std::vector<Rat>& values, int m) {
  int n = static_cast<int>(values.size());
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  PartitionResult best{Rat(-1), {}};
  std::vector<int> best_canonical;
  while (true) {
    IndexPartition p = IndexPartition::from_assignment(assignment, m);
    Rat value = partition_product_value(values, p);
    std::vector<int> canonical = p.assignment();
    if (value > best.value || (value == best.value && canonical < best_canonical)) {
      best = {value, p};
      best_canonical = canonical;
    }
    int i = n - 1;
    while (i >= 0 && assignment[static_cast<std::size_t>(i)] == m - 1)
      assignment[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++assignment[static_cast<std::size_t>(i)];
  }
  return best;
}

std::vector<Rat> random_values(std::mt19937_64& rng, int n) {
  std::vector<Rat> v(static_cast<std::size_t>(n));
  // Divide instead of using the two-argument constructor: mpq_class(p, q)
  // skips canonicalization, division does not.
  for (Rat& x : v) x = Rat(static_cast<long>(rng() % 12)) / Rat(static_cast<long>(1 + rng() % 4));
  return v;
}

}  // namespace

TEST_CASE("index partition canonical form") {
  IndexPartition p({{2, 0}, {}, {3, 1}}, 4, 3);
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(p.assignment() == std::vector<int>{0, 1, 0, 1});
  CHECK(p == IndexPartition::from_assignment({5, 7, 5, 7}, 3));
  CHECK_THROWS_AS(IndexPartition({{0}, {1}, {2}}, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(IndexPartition({{0}, {0, 1}}, 2, 2), std::invalid_argument);  // repeated
  CHECK_THROWS_AS(IndexPartition({{0}}, 2, 2), std::invalid_argument);          // 1 missing
}

TEST_CASE("partition objective value") {
  std::vector<Rat> values{Rat(1), Rat(2), Rat(3)};
  IndexPartition p({{0, 1}, {2}}, 3, 2);
  CHECK(partition_product_value(values, p) == Rat(9));  // (1+2)*3
  IndexPartition singletons({{0}, {1}, {2}}, 3, 3);
  CHECK(partition_product_value(values, singletons) == Rat(11));  // 2+3+6
}

TEST_CASE("exact partition optimum matches exhaustive search") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng() % 7);
    int m = 1 + static_cast<int>(rng() % 4);
    std::vector<Rat> values = random_values(rng, n);
    PartitionResult exact = partition_maximize_products(values, m);
    PartitionResult brute = brute_force_partition(values, m);
    CHECK(exact.value == brute.value);
    // Witness choice: lexicographically smallest canonical assignment.
    CHECK(exact.partition.assignment() == brute.partition.assignment());
    CHECK(partition_product_value(values, exact.partition) == exact.value);
  }
}

TEST_CASE("partition heuristic is feasible and never beats the optimum") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 1 + static_cast<int>(rng() % 9);
    int m = 1 + static_cast<int>(rng() % 4);
    std::vector<Rat> values = random_values(rng, n);
    PartitionResult heur = partition_heuristic(values, m);
    CHECK(partition_product_value(values, heur.partition) == heur.value);
    CHECK(heur.value <= partition_maximize_products(values, m).value);
  }
  // Plain greedy stalls at 63 here; the differencing pass finds the optimum.
  std::vector<Rat> hard{Rat(5), Rat(4), Rat(3), Rat(2), Rat(2)};
  CHECK(partition_heuristic(hard, 2).value == Rat(64));
  CHECK(partition_maximize_products(hard, 2).value == Rat(64));
}

TEST_CASE("partition edge cases") {
  CHECK(partition_maximize_products({}, 3).value == Rat(0));
  CHECK(partition_maximize_products({Rat(7)}, 1).value == Rat(0));
  std::vector<Rat> zeros{Rat(0), Rat(0), Rat(0)};
  CHECK(partition_maximize_products(zeros, 2).value == Rat(0));
  CHECK_THROWS_AS(partition_maximize_products({Rat(1)}, 0), std::invalid_argument);
  CHECK_THROWS_AS(partition_maximize_products({Rat(-1)}, 2), std::invalid_argument);
}

TEST_CASE("vertex weighting sorts stably") {
  VertexWeighting w({Rat(1), Rat(3), Rat(3), Rat(2)});
  CHECK(w.sorted(0) == Rat(3));
  CHECK(w.input_index_of_rank(0) == 1);  // ties keep input order
  CHECK(w.input_index_of_rank(1) == 2);
  CHECK(w.sorted(3) == Rat(1));
  CHECK_THROWS_AS(VertexWeighting({Rat(-1)}), std::invalid_argument);
  CHECK(VertexWeighting::unit(3).input_order() == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
}

TEST_CASE("B_ell structure and edge functions") {
  VertexWeighting w({Rat(5), Rat(4), Rat(3), Rat(2), Rat(1)});
  Graph b3 = build_B(3, w);  // parts by rank parity: {0,2,4}, {1,3}
  CHECK(b3.edge_count() == 6);
  CHECK(b3.has_edge(0, 1));
  CHECK(!b3.has_edge(0, 2));
  CHECK(!contains_clique(b3, 3));

  WeightedEdgeFunction wmin{EdgeWeightKind::Min, w};
  WeightedEdgeFunction wprod{EdgeWeightKind::Product, w};
  CHECK(wmin.edge(0, 3) == Rat(2));
  CHECK(wprod.edge(0, 3) == Rat(10));
  CHECK(weight_of(b3, wmin) == ex_min(w, 3));
  CHECK_THROWS_AS(build_B(2, w), std::invalid_argument);
}

TEST_CASE("ex_min invariance and monotonicity") {
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    int ell = 3 + static_cast<int>(rng() % 3);
    std::vector<Rat> values = random_values(rng, n);
    Rat base = ex_min(VertexWeighting(values), ell);

    std::vector<Rat> shuffled = values;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(ex_min(VertexWeighting(shuffled), ell) == base);

    std::vector<Rat> bumped = values;
    bumped[rng() % bumped.size()] += Rat(1, 3);
    CHECK(ex_min(VertexWeighting(bumped), ell) >= base);

    CHECK(ex_prod(VertexWeighting(shuffled), ell).value ==
          ex_prod(VertexWeighting(values), ell).value);
  }
}

TEST_CASE("ex_prod witness reproduces its value") {
  VertexWeighting w({Rat(3), Rat(1), Rat(4), Rat(1), Rat(5)});
  ExProdResult r = ex_prod(w, 3);
  CHECK(partition_product_value(w.input_order(), r.partition) == r.value);
  CHECK(r.partition.max_blocks() == 2);
  // All weights equal: value is w^2 * t_{n,ell-1}.
  VertexWeighting eq({Rat(2), Rat(2), Rat(2), Rat(2)});
  CHECK(ex_prod(eq, 3).value == Rat(4) * Rat(turan_edge_count(4, 2)));
}

TEST_CASE("zykov duplication preserves clique-freeness") {
  std::mt19937_64 rng(45);
  VertexWeighting w(random_values(rng, 8));
  Graph g = build_B(4, w);
  REQUIRE(!contains_clique(g, 4));
  int steps = 0;
  for (int it = 0; it < 50000 && steps < 1000; ++it) {
    int x = static_cast<int>(rng() % 8), y = static_cast<int>(rng() % 8);
    if (x == y || g.has_edge(x, y)) continue;
    g = duplicate_vertex(g, x, y);
    ++steps;
    REQUIRE(!contains_clique(g, 4));
  }
  CHECK(steps == 1000);
  Graph h = build_B(3, w);
  CHECK_THROWS_AS(duplicate_vertex(h, 0, 1), std::invalid_argument);  // adjacent
}
