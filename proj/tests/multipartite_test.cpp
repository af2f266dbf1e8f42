#include <doctest.h>

#include <stdexcept>

#include "extremalkit/graph.hpp"
#include "extremalkit/multipartite.hpp"
#include "extremalkit/oracle.hpp"

using namespace exk;

TEST_CASE("host spec validation") {
  CHECK_THROWS_AS(HostSpec({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(HostSpec({2, 0, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(HostSpec({2, 2}, 2), std::invalid_argument);
}

TEST_CASE("pinned multipartite values") {
  CHECK(ex_multipartite(HostSpec({2, 2, 2}, 3)).value == 8);
  // Triangle host, triangle forbidden: best is one merged pair.
  CHECK(ex_multipartite(HostSpec({1, 1, 1}, 3)).value == 2);
  // ell - 1 >= r: no merge needed, the host itself is extremal.
  HostSpec free_host({3, 2, 2}, 4);
  MultipartiteResult r = ex_multipartite(free_host);
  CHECK(r.value == build_complete_multipartite({3, 2, 2}).edge_count());
  CHECK(r.partition.block_count() == 3);
}

TEST_CASE("unit parts recover the turan numbers") {
  for (int n = 2; n <= 8; ++n)
    for (int ell : {3, 4}) {
      HostSpec spec(std::vector<long long>(static_cast<std::size_t>(n), 1), ell);
      CHECK(ex_multipartite(spec).value == turan_edge_count(n, ell - 1));
    }
}

TEST_CASE("reduction matches the host-subgraph oracle on sampled hosts") {
  for (auto& [parts, ell] : std::vector<std::pair<std::vector<long long>, int>>{
           {{3, 2, 1}, 3}, {{2, 2, 2, 2}, 3}, {{2, 2, 2, 2}, 4}, {{3, 3, 2}, 4}, {{4, 3}, 3}}) {
    HostSpec spec(parts, ell);
    MultipartiteResult reduction = ex_multipartite(spec);
    std::vector<int> iparts(parts.begin(), parts.end());
    EdgeOracleResult oracle = max_edges_clique_free_subgraph(build_complete_multipartite(iparts), ell);
    CHECK(reduction.value == Int(oracle.value));
  }
}

TEST_CASE("merged witness realizes the value") {
  HostSpec spec({3, 2, 2, 1}, 3);
  MultipartiteResult r = ex_multipartite(spec);
  Graph witness = merged_witness_graph(spec, r.partition);
  CHECK(!contains_clique(witness, 3));
  CHECK(r.value == Int(static_cast<long>(witness.edge_count())));
}

TEST_CASE("values beyond the witness graph cap stay exact") {
  // Parts sum to 75 > 64: the value is fine, only the explicit graph is not.
  HostSpec spec({40, 30, 5}, 3);
  MultipartiteResult r = ex_multipartite(spec);
  // Merge {30, 5} against {40}: 40 * 35 edges.
  CHECK(r.value == 1400);
  CHECK_THROWS_AS(merged_witness_graph(spec, r.partition), std::invalid_argument);
}
