#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hamsym/graph.hpp"

namespace hamsym {

// graph6 encoding as described in the nauty/Traces format notes.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" prefix and one trailing newline.
// Throws MalformedHeader on a bad size field, out-of-range byte or short body,
// TrailingGarbage when bytes remain after the adjacency data.
Graph graph6_decode(std::string_view bytes);

// {"n": int, "edges": [[u,v],...], "labels": [...] (optional)}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace hamsym
