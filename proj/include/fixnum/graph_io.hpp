#pragma once

#include "fixnum/graph.hpp"

#include <string>

namespace fixnum {

// Canonical JSON form: {"edges":[[i,j],...],"n":<int>,"name":...} with
// edges sorted as (u<v, lexicographic); "name" present only when nonempty.
// Loading then re-saving any valid file reproduces the canonical bytes.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Whitespace-separated text form: first line "n m", then m lines "i j".
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

// Reads a graph file, auto-detecting JSON (first non-space byte is '{')
// versus the edge-list text format.
Graph load_graph_file(const std::string& path);

// Writes JSON when the path ends in ".json", the text format otherwise.
void save_graph_file(const Graph& g, const std::string& path);

} // namespace fixnum
