#include "extremalkit/io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exk {

using nlohmann::json;

json rat_to_json(const Rat& value) { return rat_to_string(value); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

namespace {

std::pair<int, std::vector<std::pair<int, int>>> graph_parts_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be [u, v]");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return {n, std::move(edges)};
}

}  // namespace

Graph graph_from_json(const json& j) {
  auto [n, edges] = graph_parts_from_json(j);
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

json tree_to_json(const Tree& t) { return graph_to_json(t.graph()); }

Tree tree_from_json(const json& j) {
  if (j.is_object() && j.contains("spider"))
    return SpiderDescriptor(j.at("spider").get<std::vector<int>>()).to_tree();
  if (j.is_object() && j.contains("diam4"))
    return Diam4Descriptor(j.at("diam4").get<std::vector<int>>()).to_tree();
  auto [n, edges] = graph_parts_from_json(j);
  return Tree(n, std::move(edges));
}

json weighting_to_json(const VertexWeighting& w) {
  json weights = json::array();
  for (const Rat& r : w.input_order()) weights.push_back(rat_to_json(r));
  return json{{"weights", std::move(weights)}};
}

VertexWeighting weighting_from_json(const json& j) {
  const json& weights = j.is_object() && j.contains("weights") ? j.at("weights") : j;
  if (!weights.is_array()) throw std::invalid_argument("weighting JSON needs a \"weights\" array");
  std::vector<Rat> values;
  values.reserve(weights.size());
  for (const auto& entry : weights) values.push_back(rat_from_json(entry));
  return VertexWeighting(std::move(values));
}

json drawing_to_json(const Drawing& d) {
  json out = graph_to_json(d.graph);
  json positions = json::array();
  for (int v = 0; v < d.graph.vertex_count(); ++v) {
    const Point& p = d.positions[static_cast<std::size_t>(v)];
    positions.push_back(json::array({v, rat_to_json(p.x), rat_to_json(p.y)}));
  }
  out["positions"] = std::move(positions);
  return out;
}

Drawing drawing_from_json(const json& j) {
  Drawing d;
  d.graph = graph_from_json(j);
  if (!j.contains("positions")) throw std::invalid_argument("drawing JSON needs \"positions\"");
  const int n = d.graph.vertex_count();
  d.positions.assign(static_cast<std::size_t>(n), Point{});
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& entry : j.at("positions")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("position entries must be [vertex, \"x\", \"y\"]");
    int v = entry.at(0).get<int>();
    if (v < 0 || v >= n) throw std::invalid_argument("position for unknown vertex " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("vertex " + std::to_string(v) + " placed twice");
    seen[static_cast<std::size_t>(v)] = true;
    d.positions[static_cast<std::size_t>(v)] = {rat_from_json(entry.at(1)), rat_from_json(entry.at(2))};
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no position");
  return d;
}

json partition_to_json(const IndexPartition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return json{{"blocks", std::move(blocks)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace exk
