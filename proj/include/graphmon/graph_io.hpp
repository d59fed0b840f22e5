#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "graphmon/graph.hpp"
#include <json.hpp>

namespace graphmon {

/// Reads the line-oriented graph format:
///
///     # comment
///     vertex a
///     edge a b      # repeated lines give parallel edges
///
/// A document whose first non-blank character is `{` is read as the JSON
/// form emitted by graph_to_json. Throws ParseError with the line number.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
/// `path` of "-" reads standard input.
Graph load_graph(const std::string& path);

/// Canonical text form: vertex lines in canonical order, then edge lines in
/// index order. Re-parses to an identical Graph.
std::string format_graph(const Graph& g);

nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Comma-separated vertex names; the empty string is the empty set.
VertexSet parse_vertex_list(const Graph& g, std::string_view text);

}  // namespace graphmon
