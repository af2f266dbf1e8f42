#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "extremalkit/drawings.hpp"
#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"
#include "extremalkit/io.hpp"
#include "extremalkit/partition.hpp"
#include "extremalkit/svg.hpp"
#include "extremalkit/weighting.hpp"

using namespace exk;
using nlohmann::json;

TEST_CASE("rational json forms") {
  CHECK(rat_to_json(Rat(3)) == json("3"));
  CHECK(rat_to_json(Rat(-5, 2)) == json("-5/2"));
  CHECK(rat_from_json(json("2/4")) == Rat(1, 2));  // canonicalized
  CHECK(rat_from_json(json(7)) == Rat(7));
  CHECK_THROWS_AS(rat_from_json(json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(json("abc")), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(json(1.5)), std::invalid_argument);  // non-integral number
  CHECK(rat_from_string("-7/3") == Rat(-7, 3));
}

TEST_CASE("graph and tree round trips") {
  Graph g = build_complete_multipartite({2, 2});
  CHECK(graph_from_json(graph_to_json(g)) == g);

  Tree t = SpiderDescriptor({2, 2, 1}).to_tree();
  json j = tree_to_json(t);
  CHECK(j["n"] == 6);
  CHECK(tree_from_json(j).graph() == t.graph());

  // Descriptor shorthands parse to the canonical layouts.
  CHECK(tree_from_json(json{{"spider", {2, 2, 1}}}).graph() == t.graph());
  CHECK(tree_from_json(json{{"diam4", {3, 2, 2, 1}}}).graph() ==
        Diam4Descriptor({3, 2, 2, 1}).to_tree().graph());
  CHECK_THROWS(tree_from_json(json{{"n", 3}, {"edges", {{0, 1}, {1, 2}, {0, 2}}}}));  // cycle
}

TEST_CASE("weighting round trip keeps exact rationals") {
  VertexWeighting w({Rat(3), Rat(5, 2), Rat(0)});
  json j = weighting_to_json(w);
  CHECK(j["weights"][1] == "5/2");
  CHECK(weighting_from_json(j).input_order() == w.input_order());
  // Bare arrays and integral numbers are accepted on input.
  CHECK(weighting_from_json(json::parse("[3, \"5/2\", 0]")).input_order() == w.input_order());
}

TEST_CASE("drawing round trip") {
  Drawing d = draw_diam4(Diam4Descriptor({2, 1}));
  json j = drawing_to_json(d);
  Drawing back = drawing_from_json(j);
  CHECK(back.graph == d.graph);
  CHECK(back.positions == d.positions);

  json missing = j;
  missing["positions"].erase(0);
  CHECK_THROWS_AS(drawing_from_json(missing), std::invalid_argument);
  json dup = j;
  dup["positions"][1][0] = dup["positions"][0][0];  // two rows for one vertex
  CHECK_THROWS_AS(drawing_from_json(dup), std::invalid_argument);
}

TEST_CASE("partition json shape") {
  IndexPartition p({{0, 2}, {1}}, 3, 2);
  json j = partition_to_json(p);
  CHECK(j["blocks"] == json::parse("[[0,2],[1]]"));
}

TEST_CASE("svg export is structurally sound") {
  Drawing d = draw_diam4(Diam4Descriptor({2, 2, 1}));
  std::string svg = export_svg(d);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t lines = 0;
  for (std::size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1))
    ++lines;
  CHECK(lines == static_cast<std::size_t>(d.graph.edge_count()));
  // One marker per crossing when enabled, none when disabled.
  std::size_t dots = 0;
  for (std::size_t at = svg.find("class=\"crossing\""); at != std::string::npos;
       at = svg.find("class=\"crossing\"", at + 1))
    ++dots;
  CHECK(dots == static_cast<std::size_t>(crossing_count(d)));
  SvgOptions plain;
  plain.mark_crossings = false;
  plain.label_vertices = false;
  CHECK(export_svg(d, plain).find("class=\"crossing\"") == std::string::npos);
}
