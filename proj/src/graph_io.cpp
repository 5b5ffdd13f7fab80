#include "fixnum/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fixnum {

namespace {

using nlohmann::json;

std::vector<std::pair<int, int>> parse_edge_array(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

} // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump() + "\n";
}

Graph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer \"n\" field");
  const int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) edges = parse_edge_array(j["edges"]);
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string())
      throw std::invalid_argument("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return Graph(n, edges, std::move(name));
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m))
    throw std::invalid_argument("graph text must start with \"n m\"");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int k = 0; k < m; ++k) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("graph text ended before " +
                                  std::to_string(m) + " edges were read");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("graph file is empty: " + path);
  return text[first] == '{' ? graph_from_json(text) : graph_from_text(text);
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write graph file: " + path);
  const bool as_json =
      path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  out << (as_json ? graph_to_json(g) : graph_to_text(g));
}

} // namespace fixnum
