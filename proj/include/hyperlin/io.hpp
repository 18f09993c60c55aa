#pragma once

#include <string>

#include "hyperlin/core.hpp"

namespace hyperlin {

// Malformed input; `line` is 1-based when known.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

// Text edge-list format: first line "n r" (r=0 for non-uniform), then one edge
// per line as space-separated vertex indices. Writer output is canonical, so
// write∘read∘write is byte-identical.
std::string write_edge_list(const Hypergraph& g);
Hypergraph read_edge_list(const std::string& text);

// JSON mirror {schema, n, uniformity, edges}; uniformity 0 means non-uniform.
std::string write_json(const Hypergraph& g);
Hypergraph read_json(const std::string& text);

Hypergraph load_hypergraph_file(const std::string& path);  // dispatches on .json suffix
void save_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

} // namespace hyperlin
