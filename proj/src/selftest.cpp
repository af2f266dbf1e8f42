#include "extremalkit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iterator>
#include <random>
#include <stdexcept>
#include <vector>

#include "extremalkit/anneal.hpp"
#include "extremalkit/drawings.hpp"
#include "extremalkit/errors.hpp"
#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"
#include "extremalkit/multipartite.hpp"
#include "extremalkit/oracle.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/weighting.hpp"

namespace exk::selftest {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string vec_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// 1. ex_min against the brute-force oracle over a seeded random weight grid.
Outcome criterion_min_oracle() {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int ell : {3, 4, 5}) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * n + ell));
      for (int rep = 0; rep < 200; ++rep) {
        std::vector<Rat> weights(static_cast<std::size_t>(n));
        for (Rat& w : weights) w = Rat(static_cast<long>(rng() % 21));
        VertexWeighting weighting(weights);
        Rat formula = ex_min(weighting, ell);
        WeightedEdgeFunction fn{EdgeWeightKind::Min, weighting};
        WeightedOracleResult oracle = max_weight_clique_free(n, fn, ell);
        if (formula != oracle.value)
          return fail("n=" + std::to_string(n) + " ell=" + std::to_string(ell) + " rep=" +
                      std::to_string(rep) + ": ex_min=" + rat_to_string(formula) + " oracle=" +
                      rat_to_string(oracle.value));
        if (contains_clique(oracle.witness, ell)) return fail("oracle witness contains a forbidden clique");
        if (weight_of(oracle.witness, fn) != oracle.value)
          return fail("oracle witness weight disagrees with its value");
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " weightings matched the oracle exactly"};
}

// 2. ex_prod against the same oracle with the product edge function.
Outcome criterion_prod_oracle() {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int ell : {3, 4, 5}) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * n + ell));
      for (int rep = 0; rep < 200; ++rep) {
        std::vector<Rat> weights(static_cast<std::size_t>(n));
        for (Rat& w : weights) w = Rat(static_cast<long>(rng() % 21));
        VertexWeighting weighting(weights);
        ExProdResult formula = ex_prod(weighting, ell);
        WeightedEdgeFunction fn{EdgeWeightKind::Product, weighting};
        WeightedOracleResult oracle = max_weight_clique_free(n, fn, ell);
        if (formula.value != oracle.value)
          return fail("n=" + std::to_string(n) + " ell=" + std::to_string(ell) + " rep=" +
                      std::to_string(rep) + ": ex_prod=" + rat_to_string(formula.value) + " oracle=" +
                      rat_to_string(oracle.value));
        if (partition_product_value(weighting.input_order(), formula.partition) != formula.value)
          return fail("ex_prod witness partition does not reproduce the value");
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " weightings matched the oracle exactly"};
}

// 3. The multipartite reduction against the host-subgraph oracle.
Outcome criterion_multipartite_oracle() {
  std::vector<std::vector<int>> parts_list;
  std::vector<int> cur;
  std::function<void(int, int)> gen = [&](int maxv, int remaining) {
    if (!cur.empty() && static_cast<int>(cur.size()) <= 4) parts_list.push_back(cur);
    if (static_cast<int>(cur.size()) == 4) return;
    for (int v = std::min(maxv, remaining); v >= 1; --v) {
      cur.push_back(v);
      gen(v, remaining - v);
      cur.pop_back();
    }
  };
  gen(3, 8);

  int checked = 0;
  for (const auto& parts : parts_list) {
    for (int ell : {3, 4}) {
      HostSpec spec(std::vector<long long>(parts.begin(), parts.end()), ell);
      MultipartiteResult reduction = ex_multipartite(spec);
      Graph host = build_complete_multipartite(parts);
      EdgeOracleResult oracle = max_edges_clique_free_subgraph(host, ell);
      if (reduction.value != oracle.value)
        return fail("parts=" + vec_text(parts) + " ell=" + std::to_string(ell) + ": reduction=" +
                    reduction.value.get_str() + " oracle=" + std::to_string(oracle.value));
      Graph witness = merged_witness_graph(spec, reduction.partition);
      if (contains_clique(witness, ell)) return fail("merged witness contains a forbidden clique");
      if (reduction.value != Int(static_cast<long>(witness.edge_count())))
        return fail("merged witness edge count disagrees for parts=" + vec_text(parts));
      ++checked;
    }
  }
  HostSpec pinned({2, 2, 2}, 3);
  if (ex_multipartite(pinned).value != 8) return fail("ex(K_{2,2,2}, K_3) != 8");
  return {true, std::to_string(checked) + " part vectors matched the host oracle exactly"};
}

// 4. Unit weights recover the Turan numbers; the edge-count recurrence holds.
Outcome criterion_turan() {
  for (int n = 1; n <= 8; ++n) {
    for (int ell = 3; ell <= 6; ++ell) {
      Rat expected(static_cast<long>(turan_edge_count(n, ell - 1)));
      VertexWeighting unit = VertexWeighting::unit(n);
      if (ex_min(unit, ell) != expected)
        return fail("ex_min(unit " + std::to_string(n) + ", " + std::to_string(ell) +
                    ") != turan_edge_count");
      if (ex_prod(unit, ell).value != expected)
        return fail("ex_prod(unit " + std::to_string(n) + ", " + std::to_string(ell) +
                    ") != turan_edge_count");
    }
  }
  for (int ell = 1; ell <= 8; ++ell) {
    std::int64_t prev = 0;
    for (std::int64_t n = 1; n <= 64; ++n) {
      std::int64_t direct = turan_edge_count(n, ell);
      std::int64_t recurred = prev + (n - 1) - (n - 1) / ell;
      if (direct != recurred)
        return fail("recurrence broke at n=" + std::to_string(n) + " ell=" + std::to_string(ell));
      prev = direct;
    }
  }
  return {true, "unit-weight grid n<=8 and recurrence n<=64 hold exactly"};
}

// 5. draw_diam4 realizes the closed form exactly, including the pinned type.
Outcome criterion_diam4_realization() {
  std::mt19937_64 rng(5001);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<int> c;
    do {
      int k = 2 + static_cast<int>(rng() % 5);
      c.assign(static_cast<std::size_t>(k), 0);
      for (int& x : c) x = static_cast<int>(rng() % 5);
    } while (std::count_if(c.begin(), c.end(), [](int x) { return x > 0; }) < 2);
    Diam4Descriptor desc(c);
    Drawing drawing = draw_diam4(desc);
    if (!is_legal(drawing).legal) return fail("illegal drawing for " + vec_text(desc.children()));
    std::int64_t counted = crossing_count(drawing);
    std::int64_t formula = maxcr_diam4(desc);
    if (counted != formula)
      return fail("type " + vec_text(desc.children()) + ": drawing has " + std::to_string(counted) +
                  " crossings, formula says " + std::to_string(formula));
  }

  Diam4Descriptor pinned({3, 2, 2, 1});
  if (maxcr_diam4(pinned) != 44) return fail("maxcr_diam4((3,2,2,1)) != 44");
  Drawing drawing = draw_diam4(pinned);
  if (crossing_count(drawing) != 44) return fail("draw_diam4((3,2,2,1)) does not reach 44 crossings");
  auto missed = missed_nontrivial_crossings(drawing);
  if (missed.size() != 3)
    return fail("draw_diam4((3,2,2,1)) missed " + std::to_string(missed.size()) + " pairs, expected 3");
  int k = pinned.child_count();
  for (const auto& [e, f] : missed) {
    auto root_edge = e, grand_edge = f;
    if (root_edge.first != 0) std::swap(root_edge, grand_edge);
    bool shape = root_edge.first == 0 && root_edge.second >= 1 && root_edge.second <= k &&
                 grand_edge.first >= 1 && grand_edge.first <= k && grand_edge.second > k &&
                 root_edge.second % 2 == grand_edge.first % 2 && root_edge.second < grand_edge.first;
    if (!shape) return fail("missed pair is not of the form {v v_i, v_i' grandchild}, i<i', same parity");
  }
  return {true, "100 random types realized exactly; (3,2,2,1) gives 44 with 3 structured misses"};
}

// 6. The d-value double sum against its w_min identity (checked inside d_value).
Outcome criterion_d_identity() {
  std::mt19937_64 rng(6001);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<int> c;
    do {
      int k = 2 + static_cast<int>(rng() % 9);
      c.assign(static_cast<std::size_t>(k), 0);
      for (int& x : c) x = static_cast<int>(rng() % 11);
    } while (std::count_if(c.begin(), c.end(), [](int x) { return x > 0; }) < 2);
    try {
      if (d_value(Diam4Descriptor(c)) < 0) return fail("negative d for " + vec_text(c));
    } catch (const InternalCheckError& e) {
      return fail(std::string(e.what()) + " for " + vec_text(c));
    }
  }
  return {true, "1000 descriptors: explicit sum == w_min identity"};
}

// 7. Observation 4.2: leg form equals level form.
Outcome criterion_spider_identity() {
  std::mt19937_64 rng(7001);
  for (int rep = 0; rep < 1000; ++rep) {
    int k = 3 + static_cast<int>(rng() % 6);
    std::vector<int> legs(static_cast<std::size_t>(k));
    for (int& l : legs) l = 1 + static_cast<int>(rng() % 6);
    SpiderDescriptor desc(legs);
    auto [leg_form, level_form] = spider_identity_sides(desc);
    if (leg_form != level_form)
      return fail("legs " + vec_text(desc.legs()) + ": " + std::to_string(leg_form) +
                  " != " + std::to_string(level_form));
  }
  return {true, "1000 leg vectors: both sides agree"};
}

// 8. Annealing attains every closed form on n <= 9 and never exceeds one.
Outcome criterion_heuristic_attainment() {
  std::vector<std::vector<int>> spiders;
  {
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int maxv, int remaining) {
      if (cur.size() >= 3) spiders.push_back(cur);
      for (int v = std::min(maxv, remaining); v >= 1; --v) {
        cur.push_back(v);
        gen(v, remaining - v);
        cur.pop_back();
      }
    };
    gen(8, 8);
  }
  int attained = 0;
  for (const auto& legs : spiders) {
    SpiderDescriptor desc(legs);
    std::int64_t formula = maxcr_spider(desc);
    AnnealResult result = anneal_max_crossings(desc.to_tree());  // throws if a bound is exceeded
    if (result.crossings != formula)
      return fail("spider " + vec_text(legs) + ": annealed " + std::to_string(result.crossings) +
                  ", formula " + std::to_string(formula));
    ++attained;
  }

  std::vector<std::vector<int>> diam4s;
  {
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int maxv, int budget) {  // budget = 8 - k - sum so far
      if (cur.size() >= 2)
        for (int zeros = 0; zeros <= budget; ++zeros) {
          std::vector<int> c = cur;
          c.insert(c.end(), static_cast<std::size_t>(zeros), 0);
          diam4s.push_back(std::move(c));
        }
      for (int v = std::min(maxv, budget - 1); v >= 1; --v) {
        cur.push_back(v);
        gen(v, budget - v - 1);
        cur.pop_back();
      }
    };
    gen(7, 8);
  }
  for (const auto& c : diam4s) {
    Diam4Descriptor desc(c);
    std::int64_t formula = maxcr_diam4(desc);
    AnnealResult result = anneal_max_crossings(desc.to_tree());
    if (result.crossings != formula)
      return fail("diam4 " + vec_text(c) + ": annealed " + std::to_string(result.crossings) +
                  ", formula " + std::to_string(formula));
    ++attained;
  }
  return {true, std::to_string(attained) + " closed-form instances attained exactly"};
}

// 9. Lemma 4.1 on random legal spider drawings with pairwise-crossing feet.
Outcome criterion_lemma41() {
  std::mt19937_64 rng(9001);
  auto coord = [&] { return Rat(static_cast<long>(rng() % 25) - 12); };
  int accepted = 0;
  for (long attempt = 0; attempt < 2000000 && accepted < 500; ++attempt) {
    std::vector<int> legs(3);
    for (int& l : legs) l = 2 + static_cast<int>(rng() % 3);
    SpiderDescriptor desc(legs);
    Tree tree = desc.to_tree();
    const int n = tree.vertex_count();

    Drawing d;
    d.graph = tree.graph();
    d.positions.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) d.positions.push_back({coord(), coord()});

    // Legs are laid out consecutively: leg j covers vertices first..first+len-1.
    std::vector<int> leg_of(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> feet;
    {
      int next = 1;
      const auto& ls = desc.legs();
      for (std::size_t j = 0; j < ls.size(); ++j) {
        int len = ls[j];
        for (int i = 0; i < len; ++i) leg_of[static_cast<std::size_t>(next + i)] = static_cast<int>(j);
        feet.emplace_back(next + len - 2, next + len - 1);  // outermost edge (len >= 2)
        next += len;
      }
    }
    auto cross = [&](std::pair<int, int> e, std::pair<int, int> f) {
      return segments_properly_cross(d.positions[static_cast<std::size_t>(e.first)],
                                     d.positions[static_cast<std::size_t>(e.second)],
                                     d.positions[static_cast<std::size_t>(f.first)],
                                     d.positions[static_cast<std::size_t>(f.second)]);
    };
    if (!cross(feet[0], feet[1]) || !cross(feet[0], feet[2]) || !cross(feet[1], feet[2])) continue;
    if (!is_legal(d).legal) continue;
    ++accepted;

    bool found = false;
    for (const auto& foot : feet) {
      int foot_leg = leg_of[static_cast<std::size_t>(foot.second)];
      for (auto e : d.graph.edges()) {
        if (e == feet[0] || e == feet[1] || e == feet[2]) continue;
        int e_leg = leg_of[static_cast<std::size_t>(e.second)];  // e.second is never the center
        if (e_leg == foot_leg) continue;
        if (!cross(e, foot)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return fail("drawing " + std::to_string(accepted) + " has no qualifying missed pair");
  }
  if (accepted < 500) return fail("only " + std::to_string(accepted) + " qualifying drawings found");
  return {true, "500 qualifying drawings, zero counterexamples"};
}

// 10. Exactness: invariance under positive-rational similarity maps, and the
// count + missed = thrackle-bound identity on every corpus drawing.
Outcome criterion_geometry_exactness() {
  std::mt19937_64 rng(10001);
  std::vector<Drawing> corpus;
  corpus.push_back(draw_diam4(Diam4Descriptor({3, 2, 2, 1})));
  corpus.push_back(draw_diam4(Diam4Descriptor({1, 1, 1})));
  {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    corpus.push_back({g, {{Rat(0), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}, {Rat(2), Rat(0)}}});
  }
  auto coord = [&] { return Rat(static_cast<long>(rng() % 31) - 15); };
  while (corpus.size() < 9) {
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    Tree tree(n, edges);
    Drawing d;
    d.graph = tree.graph();
    for (int v = 0; v < n; ++v) d.positions.push_back({coord(), coord()});
    if (is_legal(d).legal) corpus.push_back(std::move(d));
  }

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const Drawing& base = corpus[idx];
    std::int64_t count = crossing_count(base);
    auto missed = missed_nontrivial_crossings(base);
    if (count + static_cast<std::int64_t>(missed.size()) != thrackle_bound(base.graph))
      return fail("count + missed != thrackle bound on corpus drawing " + std::to_string(idx));
    for (int rep = 0; rep < 100; ++rep) {
      Rat scale = Rat(static_cast<long>(1 + rng() % 20)) / Rat(static_cast<long>(1 + rng() % 20));
      Rat tx = Rat(static_cast<long>(rng() % 41) - 20) / Rat(static_cast<long>(1 + rng() % 10));
      Rat ty = Rat(static_cast<long>(rng() % 41) - 20) / Rat(static_cast<long>(1 + rng() % 10));
      Drawing mapped = base;
      for (Point& p : mapped.positions) p = {scale * p.x + tx, scale * p.y + ty};
      if (!is_legal(mapped).legal)
        return fail("similarity image of corpus drawing " + std::to_string(idx) + " reported illegal");
      if (crossing_count(mapped) != count || missed_nontrivial_crossings(mapped) != missed)
        return fail("predicates changed under scaling/translation on drawing " + std::to_string(idx));
    }
  }
  return {true, "9 corpus drawings invariant under 100 maps each; bound identity holds"};
}

const struct {
  const char* name;
  Outcome (*run)();
} kCriteria[] = {
    {"min-weight oracle equivalence", criterion_min_oracle},
    {"product-weight oracle equivalence", criterion_prod_oracle},
    {"multipartite oracle equivalence", criterion_multipartite_oracle},
    {"turan reduction and recurrence", criterion_turan},
    {"diameter-4 constructive realization", criterion_diam4_realization},
    {"d-value identity", criterion_d_identity},
    {"spider level identity", criterion_spider_identity},
    {"heuristic attainment", criterion_heuristic_attainment},
    {"lemma 4.1 randomized check", criterion_lemma41},
    {"geometry exactness under affine maps", criterion_geometry_exactness},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

std::string criterion_name(int id) {
  if (id < 1 || id > criterion_count()) throw std::invalid_argument("criterion id out of range");
  return kCriteria[id - 1].name;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw std::invalid_argument("criterion id out of range");
  CriterionResult result;
  result.id = id;
  result.name = kCriteria[id - 1].name;
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = kCriteria[id - 1].run();
    result.pass = outcome.pass;
    result.detail = outcome.detail;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run(const std::vector<int>& only,
                                 const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int id = 1; id <= criterion_count(); ++id) ids.push_back(id);
  std::vector<CriterionResult> results;
  results.reserve(ids.size());
  for (int id : ids) {
    results.push_back(run_criterion(id));
    if (on_done) on_done(results.back());
  }
  return results;
}

}  // namespace exk::selftest
