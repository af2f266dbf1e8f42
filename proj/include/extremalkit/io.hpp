// JSON schemas shared by the CLI and the library:
//   graph/tree   {"n": 5, "edges": [[0,1],[1,2],...]}
//   descriptors  {"spider": [2,2,2]}  or  {"diam4": [3,2,2,1]}
//   weighting    {"weights": [3, "5/2", 1]}
//   drawing      {"n":..., "edges":[...], "positions": [[v,"px","py"],...]}
// Rationals are written as strings in "p/q" form (plain "p" for integers).
#pragma once

#include <string>

#include <json.hpp>

#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"
#include "extremalkit/partition.hpp"
#include "extremalkit/weighting.hpp"

namespace exk {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);  // accepts descriptor shorthands too

nlohmann::json weighting_to_json(const VertexWeighting& w);
VertexWeighting weighting_from_json(const nlohmann::json& j);

nlohmann::json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const IndexPartition& p);

// Rational <-> JSON string ("p" or "p/q"); integral JSON numbers accepted.
nlohmann::json rat_to_json(const Rat& value);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

}  // namespace exk
