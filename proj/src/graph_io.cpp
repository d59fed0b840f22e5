#include "graphmon/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graphmon/error.hpp"

namespace graphmon {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Graph parse_text(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "vertex") {
      if (words.size() != 2)
        throw ParseError("expected 'vertex <id>'", line_no);
      for (const auto& v : vertices)
        if (v == words[1])
          throw ParseError("duplicate vertex '" + words[1] + "'", line_no);
      try {
        Graph probe({words[1]}, {});
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      vertices.push_back(words[1]);
    } else if (words[0] == "edge") {
      if (words.size() != 3)
        throw ParseError("expected 'edge <src> <dst>'", line_no);
      edges.emplace_back(words[1], words[2]);
      edge_lines.push_back(line_no);
    } else {
      throw ParseError("unknown directive '" + words[0] + "'", line_no);
    }
  }
  if (vertices.empty()) throw ParseError("no vertices");
  std::vector<std::string> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const auto& endpoint : {edges[i].first, edges[i].second})
      if (!std::binary_search(sorted.begin(), sorted.end(), endpoint))
        throw ParseError("unknown vertex '" + endpoint + "'", edge_lines[i]);
  }
  return Graph(std::move(vertices), edges);
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vertices =
        j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edge must be a [source, range] pair");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    if (vertices.empty()) throw ParseError("no vertices");
    return Graph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_text(text);
}

Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (const auto& n : g.names()) out += "vertex " + n + "\n";
  for (const Edge& e : g.edges())
    out += "edge " + g.name(e.source) + " " + g.name(e.range) + "\n";
  return out;
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.names();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges())
    edges.push_back({g.name(e.source), g.name(e.range)});
  j["edges"] = std::move(edges);
  return j;
}

VertexSet parse_vertex_list(const Graph& g, std::string_view text) {
  VertexSet s(g.vertex_count());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) {
      if (trim(text).empty()) break;
      throw ParseError("empty entry in vertex list '" + std::string(text) +
                       "'");
    }
    auto v = g.find(item);
    if (!v) throw ParseError("unknown vertex '" + std::string(item) + "'");
    s.insert(*v);
  }
  return s;
}

}  // namespace graphmon
