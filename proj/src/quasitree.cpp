#include "hyperlin/quasitree.hpp"

#include <algorithm>
#include <set>

namespace hyperlin {

LeveledQuasiTree LeveledQuasiTree::single_vertex(Vertex w) {
    LeveledQuasiTree q;
    q.root_ = w;
    q.main_levels_ = {{w}};
    q.main_level_index_[w] = 0;
    q.vertices_[w] = 1;
    return q;
}

LeveledQuasiTree LeveledQuasiTree::from_segments(
    const Hypergraph& host, Vertex root, std::vector<std::vector<QuasiTreeEdge>> segments) {
    LeveledQuasiTree q;
    q.root_ = root;
    q.segments_ = std::move(segments);
    int h = static_cast<int>(q.segments_.size());
    q.main_levels_.assign(static_cast<size_t>(h) + 1, {});
    q.companion_levels_.assign(static_cast<size_t>(h), {});
    q.main_levels_[0] = {root};
    q.main_level_index_[root] = 0;
    q.vertices_[root] = 1;
    for (int i = 0; i < h; ++i) {
        std::set<Vertex> comps, children;
        for (int slot = 0; slot < static_cast<int>(q.segments_[static_cast<size_t>(i)].size());
             ++slot) {
            const QuasiTreeEdge& e = q.segments_[static_cast<size_t>(i)][static_cast<size_t>(slot)];
            comps.insert(e.companion);
            if (!children.insert(e.child).second)
                throw std::invalid_argument("LeveledQuasiTree: duplicate child representative");
            q.parent_[e.child] = {i, slot};
            for (Vertex v : host.edge(e.edge)) q.vertices_[v] = 1;
        }
        q.companion_levels_[static_cast<size_t>(i)].assign(comps.begin(), comps.end());
        q.main_levels_[static_cast<size_t>(i) + 1].assign(children.begin(), children.end());
        for (Vertex v : comps) q.companion_level_index_[v] = i;
        for (Vertex v : children) q.main_level_index_[v] = i + 1;
    }
    return q;
}

int LeveledQuasiTree::main_level_of(Vertex v) const {
    auto it = main_level_index_.find(v);
    return it == main_level_index_.end() ? -1 : it->second;
}

int LeveledQuasiTree::companion_level_of(Vertex v) const {
    auto it = companion_level_index_.find(v);
    return it == companion_level_index_.end() ? -1 : it->second;
}

const QuasiTreeEdge* LeveledQuasiTree::parent_edge(Vertex child) const {
    auto it = parent_.find(child);
    if (it == parent_.end()) return nullptr;
    return &segments_[static_cast<size_t>(it->second.first)]
                     [static_cast<size_t>(it->second.second)];
}

std::vector<EdgeId> LeveledQuasiTree::all_edges() const {
    std::vector<EdgeId> out;
    for (const auto& seg : segments_)
        for (const auto& e : seg) out.push_back(e.edge);
    return out;
}

bool LeveledQuasiTree::tree_like() const {
    for (const auto& seg : segments_) {
        std::set<Vertex> comps;
        for (const auto& e : seg)
            if (!comps.insert(e.companion).second) return false;
    }
    return true;
}

std::vector<Vertex> LeveledQuasiTree::all_vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (auto& [v, _] : vertices_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::string quasi_tree_violation(const Hypergraph& host, const LeveledQuasiTree& q) {
    int h = q.height();
    if (q.root() < 0 || q.root() >= host.vertex_count()) return "root out of range";
    std::vector<std::set<Vertex>> segment_vertices(static_cast<size_t>(h));
    std::set<EdgeId> edge_ids;
    for (int i = 0; i < h; ++i) {
        if (q.segment(i).empty()) return "empty segment " + std::to_string(i);
        std::set<Vertex> mains(q.main_level(i).begin(), q.main_level(i).end());
        std::set<Vertex> comps(q.companion_level(i).begin(), q.companion_level(i).end());
        std::set<Vertex> children(q.main_level(i + 1).begin(), q.main_level(i + 1).end());
        std::set<std::pair<Vertex, Vertex>> bpairs;
        std::set<Vertex> expansion_used;
        for (const QuasiTreeEdge& te : q.segment(i)) {
            if (te.edge < 0 || te.edge >= host.edge_count()) return "edge id out of range";
            if (!edge_ids.insert(te.edge).second) return "repeated host edge";
            const Edge& e = host.edge(te.edge);
            for (Vertex v : e) segment_vertices[static_cast<size_t>(i)].insert(v);
            auto inset = [&](Vertex v) { return std::binary_search(e.begin(), e.end(), v); };
            if (!inset(te.main) || !inset(te.companion) || !inset(te.child))
                return "role vertex missing from edge";
            if (!mains.count(te.main)) return "main vertex not in its level";
            if (!comps.count(te.companion)) return "companion vertex not in its level";
            if (!children.count(te.child)) return "child vertex not in next level";
            // exactly one vertex in each of L_i, L'_i, L_{i+1}
            int in_main = 0, in_comp = 0, in_child = 0;
            for (Vertex v : e) {
                in_main += mains.count(v) ? 1 : 0;
                in_comp += comps.count(v) ? 1 : 0;
                in_child += children.count(v) ? 1 : 0;
            }
            if (in_main != 1 || in_comp != 1 || in_child != 1)
                return "edge meets a level more than once (segment " + std::to_string(i) + ")";
            if (!bpairs.insert({te.main, te.companion}).second)
                return "defining bipartite graph has a repeated pair";
            // expansion vertices fresh across edges and outside L_i, L'_i
            for (Vertex v : e) {
                if (v == te.main || v == te.companion) continue;
                if (mains.count(v) || comps.count(v)) return "expansion vertex inside a level";
                if (!expansion_used.insert(v).second)
                    return "expansion vertices shared between edges (segment " +
                           std::to_string(i) + ")";
            }
        }
    }
    if (q.main_level(0).size() != 1 || q.main_level(0)[0] != q.root()) return "L_0 != {root}";
    // segment overlap: consecutive share exactly L_{i+1}, others disjoint
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            std::vector<Vertex> common;
            std::set_intersection(segment_vertices[static_cast<size_t>(i)].begin(),
                                  segment_vertices[static_cast<size_t>(i)].end(),
                                  segment_vertices[static_cast<size_t>(j)].begin(),
                                  segment_vertices[static_cast<size_t>(j)].end(),
                                  std::back_inserter(common));
            if (j == i + 1) {
                // consecutive segments meet exactly in the mains of the later
                // one (childless representatives of L_j need not recur)
                std::set<Vertex> mains_j;
                for (const QuasiTreeEdge& te : q.segment(j)) mains_j.insert(te.main);
                std::vector<Vertex> want(mains_j.begin(), mains_j.end());
                if (common != want)
                    return "V(H_" + std::to_string(i) + ") and V(H_" + std::to_string(j) +
                           ") do not meet exactly in L_" + std::to_string(j);
            } else if (!common.empty()) {
                return "segments " + std::to_string(i) + "," + std::to_string(j) + " overlap";
            }
        }
    // union of segments is linear
    {
        std::vector<EdgeId> ids(edge_ids.begin(), edge_ids.end());
        if (!is_linear(host.restrict_edges(ids))) return "union of segments not linear";
    }
    return {};
}

void validate_quasi_tree(const Hypergraph& host, const LeveledQuasiTree& q) {
    std::string why = quasi_tree_violation(host, q);
    if (!why.empty()) throw std::invalid_argument("quasi-tree invalid: " + why);
}

LeveledQuasiTree down_graph(const LeveledQuasiTree& q, const Hypergraph& host, Vertex x) {
    if (x == q.root()) return q;
    int a_main = q.main_level_of(x);
    int a_comp = q.companion_level_of(x);
    if (a_main < 0 && a_comp < 0)
        throw std::invalid_argument("down_graph: x is not a main- or companion-level vertex");
    int h = q.height();
    std::vector<std::vector<QuasiTreeEdge>> segs;
    std::set<Vertex> frontier = {x};
    int start = a_main >= 0 ? a_main : a_comp;
    bool first_as_companion = a_main < 0;
    for (int i = start; i < h; ++i) {
        std::vector<QuasiTreeEdge> seg;
        std::set<Vertex> next;
        for (const QuasiTreeEdge& te : q.segment(i)) {
            bool take;
            if (i == start && first_as_companion)
                take = te.companion == x;
            else
                take = frontier.count(te.main) != 0;
            if (!take) continue;
            QuasiTreeEdge copy = te;
            if (i == start && first_as_companion) {
                // within H_x the root is x; the host main becomes the companion
                std::swap(copy.main, copy.companion);
            }
            seg.push_back(copy);
            next.insert(copy.child);
        }
        if (seg.empty()) break;
        segs.push_back(std::move(seg));
        frontier = std::move(next);
    }
    return LeveledQuasiTree::from_segments(host, x, std::move(segs));
}

PathCertificate monotone_root_path(const LeveledQuasiTree& q, const Hypergraph& host,
                                   Vertex target) {
    (void)host;
    int lvl = q.main_level_of(target);
    if (lvl < 0) throw std::invalid_argument("monotone_root_path: target not in a main level");
    if (lvl == 0) throw std::invalid_argument("monotone_root_path: target is the root");
    std::vector<EdgeId> chain;
    Vertex cur = target;
    while (cur != q.root()) {
        const QuasiTreeEdge* pe = q.parent_edge(cur);
        if (!pe) throw std::invalid_argument("monotone_root_path: broken parent chain");
        chain.push_back(pe->edge);
        cur = pe->main;
    }
    std::reverse(chain.begin(), chain.end());
    return PathCertificate{chain, q.root(), target};
}

std::vector<Vertex> descendants_at_bottom(const LeveledQuasiTree& q, Vertex x) {
    int h = q.height();
    if (x == q.root()) return q.main_level(h);
    int a_main = q.main_level_of(x);
    int a_comp = q.companion_level_of(x);
    if (a_main == h) return {x}; // already at the bottom
    if (a_main < 0 && a_comp < 0) return {};
    int start = a_main >= 0 ? a_main : a_comp;
    bool as_companion = a_main < 0;
    std::set<Vertex> frontier = {x};
    for (int i = start; i < h; ++i) {
        std::set<Vertex> next;
        for (const QuasiTreeEdge& te : q.segment(i)) {
            bool take = (i == start && as_companion) ? (te.companion == x)
                                                     : (frontier.count(te.main) != 0);
            if (take) next.insert(te.child);
        }
        frontier = std::move(next);
    }
    return std::vector<Vertex>(frontier.begin(), frontier.end());
}

} // namespace hyperlin
