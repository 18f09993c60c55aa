#include "hyperlin/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperlin {

std::string write_edge_list(const Hypergraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.uniformity().value_or(0) << '\n';
    for (const Edge& e : g.edges()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, r = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> r) || n < 0 || r < 0)
                throw ParseError("expected header 'n r'", lineno);
            continue;
        }
        Edge e;
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= n) throw ParseError("vertex out of range", lineno);
            e.push_back(static_cast<Vertex>(v));
        }
        if (!ls.eof()) throw ParseError("non-numeric token in edge", lineno);
        if (e.size() < 2) throw ParseError("edge with fewer than 2 vertices", lineno);
        if (r > 0 && static_cast<int>(e.size()) != r)
            throw ParseError("edge size does not match declared uniformity", lineno);
        edges.push_back(std::move(e));
    }
    if (n < 0) throw ParseError("missing header", 1);
    try {
        return Hypergraph(n, std::move(edges),
                          r > 0 ? std::optional<int>(r) : std::nullopt);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
    }
}

std::string write_json(const Hypergraph& g) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = g.vertex_count();
    j["uniformity"] = g.uniformity().value_or(0);
    j["edges"] = g.edges();
    return j.dump(2) + "\n";
}

Hypergraph read_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    int r = j.at("uniformity").get<int>();
    auto edges = j.at("edges").get<std::vector<Edge>>();
    return Hypergraph(n, std::move(edges), r > 0 ? std::optional<int>(r) : std::nullopt);
}

Hypergraph load_hypergraph_file(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_json(text);
    return read_edge_list(text);
}

void save_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace hyperlin
