#pragma once
#include <filesystem>
#include <string>

#include "rbg/graph.hpp"

namespace rbg {

/// Plain-text edge list: one "u v" pair per line. Non-core vertices are
/// marked by exclusion lines "#core u"; labels by "#label v gen idx".
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// JSON form {n, edges: [[u,v],...], core: [bool,...], labels}.
std::string to_json_text(const Graph& g);
Graph from_json_text(const std::string& text);

/// Dispatches on extension: ".json" uses the JSON form, anything else the
/// plain-text edge list.
Graph read_graph(const std::filesystem::path& path);
void write_graph(const std::filesystem::path& path, const Graph& g);

} // namespace rbg
