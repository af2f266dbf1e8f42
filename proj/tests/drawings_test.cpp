#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "extremalkit/anneal.hpp"
#include "extremalkit/drawings.hpp"
#include "extremalkit/errors.hpp"
#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"

using namespace exk;

TEST_CASE("d-value on pinned descriptors") {
  CHECK(d_value(Diam4Descriptor({3, 2, 2, 1})) == 3);  // 0+0+1*2+1*1
  CHECK(d_value(Diam4Descriptor({1, 1})) == 0);
  CHECK(d_value(Diam4Descriptor({1, 1, 1})) == 1);
  CHECK(d_value(Diam4Descriptor({4, 4, 4, 4})) == 8);  // 0*4 + 0*4 + 1*4 + 1*4
}

TEST_CASE("diam4 formula and caterpillar regime") {
  CHECK(maxcr_diam4(Diam4Descriptor({3, 2, 2, 1})) == 44);
  // At most two grandchildren: caterpillar, formula equals the thrackle bound.
  for (auto c : {std::vector<int>{1, 1}, std::vector<int>{2, 1}, std::vector<int>{1, 1, 0}}) {
    Diam4Descriptor desc(c);
    CHECK(diam4_is_caterpillar(desc));
    CHECK(maxcr_diam4(desc) == thrackle_bound(desc.to_tree().graph()));
  }
  CHECK(!diam4_is_caterpillar(Diam4Descriptor({1, 1, 1})));
  // Formula never exceeds the thrackle bound.
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<int> c(2 + rng() % 4);
    for (int& x : c) x = static_cast<int>(rng() % 4);
    if (std::count_if(c.begin(), c.end(), [](int x) { return x > 0; }) < 2) continue;
    Diam4Descriptor desc(c);
    CHECK(maxcr_diam4(desc) <= thrackle_bound(desc.to_tree().graph()));
  }
}

TEST_CASE("diam4 drawing realizes the formula") {
  for (auto c : {std::vector<int>{1, 1}, std::vector<int>{1, 1, 1}, std::vector<int>{3, 2, 2, 1},
                 std::vector<int>{4, 4, 4, 4, 4}, std::vector<int>{2, 1, 0, 0}}) {
    Diam4Descriptor desc(c);
    Drawing d = draw_diam4(desc);
    REQUIRE(is_legal(d).legal);
    CHECK(crossing_count(d) == maxcr_diam4(desc));
  }
}

TEST_CASE("spider formula") {
  // Star: every edge pair adjacent.
  CHECK(maxcr_spider(SpiderDescriptor({1, 1, 1})) == 0);
  CHECK(maxcr_spider(SpiderDescriptor({1, 1, 1, 1, 1})) == 0);
  // Spider (2,2,2): C(6,2) - (3 + 3*1) - [C(1,2)+C(2,2)] = 15 - 6 - 1 = 8.
  CHECK(maxcr_spider(SpiderDescriptor({2, 2, 2})) == 8);
  // Bound discipline with the exact equality characterization.
  std::mt19937_64 rng(72);
  for (int rep = 0; rep < 200; ++rep) {
    int k = 3 + static_cast<int>(rng() % 5);
    std::vector<int> legs(static_cast<std::size_t>(k));
    for (int& l : legs) l = 1 + static_cast<int>(rng() % 5);
    SpiderDescriptor desc(legs);
    auto [leg_form, level_form] = spider_identity_sides(desc);
    CHECK(leg_form == level_form);
    std::int64_t bound = thrackle_bound(desc.to_tree().graph());
    std::int64_t correction = 0;
    auto levels = desc.levels();
    for (std::size_t i = 1; i < levels.size(); ++i) {
      std::int64_t a = levels[i];
      correction += choose2(a / 2) + choose2(a - a / 2);
    }
    CHECK(maxcr_spider(desc) == bound - correction);
    CHECK(maxcr_spider(desc) <= bound);
    CHECK((maxcr_spider(desc) == bound) == (correction == 0));
  }
}

TEST_CASE("maxcr_tree dispatch") {
  MaxcrReport cat = maxcr_tree(Tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK(cat.method == MaxcrReport::Method::Thrackle);
  REQUIRE(cat.exact);
  CHECK(*cat.exact == 3);
  CHECK(cat.lower == 3);
  CHECK(cat.upper == 3);

  MaxcrReport spider = maxcr_tree(SpiderDescriptor({3, 2, 2}).to_tree());
  CHECK(spider.method == MaxcrReport::Method::SpiderFormula);
  REQUIRE(spider.exact);
  CHECK(*spider.exact == maxcr_spider(SpiderDescriptor({3, 2, 2})));

  MaxcrReport diam4 = maxcr_tree(Diam4Descriptor({3, 2, 2, 1}).to_tree());
  CHECK(diam4.method == MaxcrReport::Method::Diam4Formula);
  REQUIRE(diam4.exact);
  CHECK(*diam4.exact == 44);

  // A spider whose legs are all length 2 is also diameter-4; either formula
  // is exact, and the dispatcher must pick one that matches the other.
  CHECK(maxcr_spider(SpiderDescriptor({2, 2, 2})) == maxcr_diam4(Diam4Descriptor({1, 1, 1})));

  Tree other(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {1, 7}, {7, 8}});
  MaxcrReport bounds = maxcr_tree(other, 5);
  CHECK(bounds.method == MaxcrReport::Method::BoundsOnly);
  CHECK(!bounds.exact);
  CHECK(bounds.lower >= 0);
  CHECK(bounds.lower <= bounds.upper);
  CHECK(bounds.upper == thrackle_bound(other.graph()));
}

TEST_CASE("annealer determinism and parallel equivalence") {
  Tree t = SpiderDescriptor({2, 2, 1}).to_tree();
  AnnealParams params;
  params.iterations = 3000;
  params.restarts = 4;
  params.seed = 7;
  AnnealResult a = anneal_max_crossings(t, params);
  AnnealResult b = anneal_max_crossings(t, params);
  AnnealResult c = anneal_max_crossings_serial(t, params);
  CHECK(a.crossings == b.crossings);
  CHECK(a.drawing.positions == b.drawing.positions);
  CHECK(a.crossings == c.crossings);
  CHECK(a.drawing.positions == c.drawing.positions);
  REQUIRE(is_legal(a.drawing).legal);
  CHECK(crossing_count(a.drawing) == a.crossings);
  CHECK(a.crossings <= thrackle_bound(t.graph()));
}

TEST_CASE("annealer input validation") {
  Tree p4(4, {{0, 1}, {1, 2}, {2, 3}});
  AnnealParams bad;
  bad.iterations = 0;
  CHECK_THROWS_AS(anneal_max_crossings(p4, bad), std::invalid_argument);
  AnnealParams tiny;
  tiny.grid_half_width = 1;  // 9 grid points cannot host 10 vertices
  std::vector<std::pair<int, int>> path_edges;
  for (int v = 1; v < 10; ++v) path_edges.emplace_back(v - 1, v);
  CHECK_THROWS_AS(anneal_max_crossings(Tree(10, path_edges), tiny), GridTooSmallError);
  std::vector<std::pair<int, int>> long_path;
  for (int v = 1; v < 33; ++v) long_path.emplace_back(v - 1, v);
  CHECK_THROWS_AS(anneal_max_crossings(Tree(33, long_path), AnnealParams{}), CapExceededError);
}

TEST_CASE("annealer attains small exact values") {
  Tree p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(anneal_max_crossings(p4).crossings == 1);
  CHECK(anneal_max_crossings(SpiderDescriptor({1, 1, 1}).to_tree()).crossings == 0);
}
