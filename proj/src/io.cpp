#include "ramsey_lab/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ramsey_lab/error.hpp"

namespace ramsey_lab {

namespace {

template <class T>
T field(const Json& doc, const char* name, const std::string& where) {
  if (!doc.is_object() || !doc.contains(name))
    throw DomainError(where + "." + name + ": missing");
  try {
    return doc.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(where + "." + name + ": " + e.what());
  }
}

}  // namespace

Json graph_to_json(const LayeredGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"k", g.k()}, {"m", g.part_size()}, {"edges", std::move(edges)}};
}

LayeredGraph graph_from_json(const Json& doc) {
  const int k = field<int>(doc, "k", "graph");
  const auto m = field<std::uint32_t>(doc, "m", "graph");
  const auto raw = field<std::vector<std::vector<Vertex>>>(doc, "edges", "graph");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != 2)
      throw DomainError("graph.edges[" + std::to_string(i) + "]: expected a pair");
    edges.emplace_back(raw[i][0], raw[i][1]);
  }
  return LayeredGraph(k, m, edges);
}

Json hypergraph_to_json(const TightHypergraph& h) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto t = h.edge(static_cast<EdgeId>(e));
    edges.push_back(std::vector<Vertex>(t.begin(), t.end()));
  }
  return Json{{"k", h.k()}, {"vertices", h.vertex_count()}, {"edges", std::move(edges)}};
}

Json coloring_to_json(const Coloring& coloring) {
  Json colors = Json::array();
  for (auto c : coloring.colors) colors.push_back(static_cast<int>(c));
  return Json{{"r", coloring.r}, {"colors", std::move(colors)}};
}

Coloring coloring_from_json(const Json& doc) {
  Coloring col;
  col.r = field<int>(doc, "r", "coloring");
  if (col.r < 2 || col.r > 256) throw DomainError("coloring.r: must lie in [2, 256]");
  const auto raw = field<std::vector<int>>(doc, "colors", "coloring");
  col.colors.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] >= col.r)
      throw DomainError("coloring.colors[" + std::to_string(i) + "]: color outside [0, r)");
    col.colors.push_back(static_cast<std::uint8_t>(raw[i]));
  }
  return col;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

}  // namespace ramsey_lab
