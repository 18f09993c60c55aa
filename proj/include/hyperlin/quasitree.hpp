#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hyperlin/certify.hpp"
#include "hyperlin/core.hpp"

namespace hyperlin {

// One edge of a quasi-tree segment: the host edge together with its role
// vertices. `main` lies in L_i, `companion` in L'_i, `child` is the edge's
// representative in L_{i+1}; the remaining vertices are free expansion
// vertices.
struct QuasiTreeEdge {
    EdgeId edge = -1;
    Vertex main = -1;
    Vertex companion = -1;
    Vertex child = -1;
};

// Leveled linear quasi-tree: stacked r-partite segments H_0..H_{h-1} with main
// levels L_0..L_h and companion levels L'_0..L'_{h-1}; each segment is the
// r-expansion of its defining bipartite graph B_i = {(main, companion)}.
// A leveled linear tree is the degenerate case where every companion vertex
// has exactly one child.
class LeveledQuasiTree {
public:
    static LeveledQuasiTree single_vertex(Vertex w);
    static LeveledQuasiTree from_segments(const Hypergraph& host, Vertex root,
                                          std::vector<std::vector<QuasiTreeEdge>> segments);

    Vertex root() const { return root_; }
    int height() const { return static_cast<int>(segments_.size()); }
    const std::vector<QuasiTreeEdge>& segment(int i) const {
        return segments_[static_cast<size_t>(i)];
    }
    const std::vector<Vertex>& main_level(int i) const {
        return main_levels_[static_cast<size_t>(i)];
    }
    const std::vector<Vertex>& companion_level(int i) const {
        return companion_levels_[static_cast<size_t>(i)];
    }

    // -1 when v is not in that kind of level.
    int main_level_of(Vertex v) const;
    int companion_level_of(Vertex v) const;
    bool contains_vertex(Vertex v) const { return vertices_.count(v) != 0; }
    const QuasiTreeEdge* parent_edge(Vertex child) const;

    std::vector<EdgeId> all_edges() const;
    std::vector<Vertex> all_vertices() const; // sorted
    // Every companion has exactly one child: the leveled linear tree case.
    bool tree_like() const;

private:
    Vertex root_ = -1;
    std::vector<std::vector<QuasiTreeEdge>> segments_;
    std::vector<std::vector<Vertex>> main_levels_;      // L_0..L_h, sorted
    std::vector<std::vector<Vertex>> companion_levels_; // L'_0..L'_{h-1}, sorted
    std::unordered_map<Vertex, int> main_level_index_;
    std::unordered_map<Vertex, int> companion_level_index_;
    std::unordered_map<Vertex, std::pair<int, int>> parent_; // child -> (segment, slot)
    std::unordered_map<Vertex, char> vertices_;
};

// Structural validation against a host; returns an empty string when valid,
// otherwise the first violated condition.
std::string quasi_tree_violation(const Hypergraph& host, const LeveledQuasiTree& q);
void validate_quasi_tree(const Hypergraph& host, const LeveledQuasiTree& q); // throws

// Down graph H_x rooted at a main- or companion-level vertex: the sub-quasi-
// tree of descendants of x.
LeveledQuasiTree down_graph(const LeveledQuasiTree& q, const Hypergraph& host, Vertex x);

// The unique monotone root-to-target path (target in a main level), as host
// edges ordered from the root downwards. Length = level of target.
PathCertificate monotone_root_path(const LeveledQuasiTree& q, const Hypergraph& host,
                                   Vertex target);

// Main-level-h vertices lying under x (i.e. L_h intersected with V(H_x)).
std::vector<Vertex> descendants_at_bottom(const LeveledQuasiTree& q, Vertex x);

} // namespace hyperlin
