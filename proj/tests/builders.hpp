#pragma once

// Shared instance builders for the test suites.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "hyperlin/core.hpp"
#include "hyperlin/quasitree.hpp"
#include "hyperlin/rng.hpp"
#include "hyperlin/searchutil.hpp"

namespace testers {

using namespace hyperlin;

// Incrementally built host whose edges are registered as they are created.
struct HostBuilder {
    int next = 0;
    std::vector<Edge> edges;

    Vertex fresh() { return next++; }
    std::vector<Vertex> fresh_block(int k) {
        std::vector<Vertex> out;
        for (int i = 0; i < k; ++i) out.push_back(fresh());
        return out;
    }
    EdgeId add(std::vector<Vertex> e) {
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
        return static_cast<EdgeId>(edges.size() - 1);
    }
    Hypergraph graph() const { return Hypergraph(next, edges); }
    LinearHypergraph linear() const { return LinearHypergraph(graph()); }
};

// Leveled linear tree: every main-level vertex spawns `branching` edges, each
// with a fresh companion and fresh child (plus r-3 extra expansion vertices).
struct TreeSpec {
    HostBuilder host;
    LeveledQuasiTree tree = LeveledQuasiTree::single_vertex(0);

    static TreeSpec build(int height, int branching, int r) {
        TreeSpec out;
        Vertex root = out.host.fresh();
        std::vector<std::vector<QuasiTreeEdge>> segments;
        std::vector<Vertex> level = {root};
        for (int i = 0; i < height; ++i) {
            std::vector<QuasiTreeEdge> seg;
            std::vector<Vertex> next_level;
            for (Vertex x : level)
                for (int b = 0; b < branching; ++b) {
                    QuasiTreeEdge te;
                    te.main = x;
                    te.companion = out.host.fresh();
                    te.child = out.host.fresh();
                    std::vector<Vertex> e = {te.main, te.companion, te.child};
                    for (int k = 0; k < r - 3; ++k) e.push_back(out.host.fresh());
                    te.edge = out.host.add(e);
                    seg.push_back(te);
                    next_level.push_back(te.child);
                }
            segments.push_back(std::move(seg));
            level = std::move(next_level);
        }
        out.tree = LeveledQuasiTree::from_segments(out.host.graph(), root, std::move(segments));
        return out;
    }

    // pool edges: `per_vertex` fresh r-edges through every bottom vertex
    std::vector<EdgeId> attach_pool(int per_vertex, int r) {
        std::vector<EdgeId> pool;
        for (Vertex u : tree.main_level(tree.height()))
            for (int k = 0; k < per_vertex; ++k) {
                std::vector<Vertex> e = {u};
                for (int j = 0; j < r - 1; ++j) e.push_back(host.fresh());
                pool.push_back(host.add(e));
            }
        return pool;
    }

    // refresh the tree object after adding edges to the host
    void refresh() {
        std::vector<std::vector<QuasiTreeEdge>> segs;
        for (int i = 0; i < tree.height(); ++i) segs.push_back(tree.segment(i));
        tree = LeveledQuasiTree::from_segments(host.graph(), tree.root(), std::move(segs));
    }
};

// Random linear r-graph by greedy packing with rejection.
inline Hypergraph random_linear(int n, int r, int target_edges, std::uint64_t seed,
                                int forbid_cycle_len = 0,
                                long long budget = 10'000'000) {
    SplitRng rng = SplitRng(seed).split("random_linear");
    std::vector<char> pair_used(static_cast<size_t>(n) * n, 0);
    std::vector<Edge> edges;
    std::vector<std::vector<int>> incidence(static_cast<size_t>(n));
    int misses = 0;
    (void)budget;
    while (static_cast<int>(edges.size()) < target_edges && misses < 60 * n) {
        std::set<Vertex> pick;
        while (static_cast<int>(pick.size()) < r)
            pick.insert(rng.below_int(n));
        Edge e(pick.begin(), pick.end());
        bool ok = true;
        for (size_t i = 0; i < e.size() && ok; ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                if (pair_used[static_cast<size_t>(e[i]) * n + e[j]]) { ok = false; break; }
        if (ok && forbid_cycle_len >= 3)
            ok = !hyperlin::searchutil_adding_creates_cycle_shim(n, edges, incidence, e,
                                                                 forbid_cycle_len);
        if (!ok) { ++misses; continue; }
        misses = 0;
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                pair_used[static_cast<size_t>(e[i]) * n + e[j]] = 1;
        int pos = static_cast<int>(edges.size());
        for (Vertex v : e) incidence[static_cast<size_t>(v)].push_back(pos);
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    return Hypergraph(n, std::move(edges));
}

// Random k-uniform hypergraph (not necessarily linear), distinct edges.
inline Hypergraph random_uniform(int n, int k, int target_edges, std::uint64_t seed) {
    SplitRng rng = SplitRng(seed).split("random_uniform");
    std::set<Edge> edges;
    int guard = 50 * target_edges + 100;
    while (static_cast<int>(edges.size()) < target_edges && guard-- > 0) {
        std::set<Vertex> pick;
        while (static_cast<int>(pick.size()) < k) pick.insert(rng.below_int(n));
        edges.insert(Edge(pick.begin(), pick.end()));
    }
    return Hypergraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

} // namespace testers
