#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "ramsey_lab/coloring.hpp"
#include "ramsey_lab/cycles.hpp"
#include "ramsey_lab/layered_graph.hpp"

namespace ramsey_lab {

using Json = nlohmann::json;

/// {"k": int, "m": int, "edges": [[u, v], ...]} with u < v, sorted.
Json graph_to_json(const LayeredGraph& g);
/// Throws DomainError naming the offending field.
LayeredGraph graph_from_json(const Json& doc);

/// {"k": int, "vertices": int, "edges": [[v_1, ..., v_k], ...]}, part-indexed,
/// canonical order.
Json hypergraph_to_json(const TightHypergraph& h);

/// {"r": int, "colors": [int per hyperedge in canonical order]}.
Json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& doc);

/// Pretty-printed with a trailing newline; byte-stable for equal documents.
std::string dump(const Json& doc);

Json read_json_file(const std::filesystem::path& path);
/// "-" writes to stdout.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ramsey_lab
