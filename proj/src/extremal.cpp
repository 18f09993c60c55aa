#include "hyperlin/extremal.hpp"

#include "hyperlin/searchutil.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hyperlin {

long long packing_upper_bound(int n, int r) {
    if (n < r) return 0;
    return static_cast<long long>(n) / r * ((n - 1) / (r - 1));
}

namespace {

std::vector<Edge> all_r_subsets(int n, int r) {
    std::vector<Edge> out;
    Edge cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) { out.push_back(cur); return; }
        for (int v = from; v <= n - (r - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Incremental search state shared by the Turán, packing and (6,3) searches.
struct Searcher {
    int n, r, len;          // len = 0: packing, no cycle constraint
    bool sixthree;          // (6,3) mode: non-linear triples allowed
    bool iso_prune;
    long long budget;
    std::vector<Edge> universe;
    std::vector<int> chosen;                 // indices into universe
    std::vector<Edge> cur_edges;             // materialized, synced with `chosen`
    std::vector<std::vector<int>> incidence; // vertex -> positions in `chosen`
    std::vector<char> pair_used;             // n*n, linear modes only
    int best = -1;
    std::vector<int> best_set;
    long long nodes = 0;
    bool exhausted = true;

    Searcher(int n_, int r_, int len_, bool sixthree_, bool iso_, long long budget_)
        : n(n_), r(r_), len(len_), sixthree(sixthree_), iso_prune(iso_), budget(budget_),
          universe(all_r_subsets(n_, r_)),
          incidence(static_cast<size_t>(n_)),
          pair_used(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0) {}

    const Edge& edge_at(int pos) const { return universe[static_cast<size_t>(chosen[static_cast<size_t>(pos)])]; }

    bool pairs_free(const Edge& e) const {
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                if (pair_used[static_cast<size_t>(e[i]) * n + e[j]]) return false;
        return true;
    }

    void mark_pairs(const Edge& e, char val) {
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                pair_used[static_cast<size_t>(e[i]) * n + e[j]] = val;
    }

    bool union_small(const Edge& a, const Edge& b, const Edge& c) const {
        std::set<Vertex> u(a.begin(), a.end());
        u.insert(b.begin(), b.end());
        u.insert(c.begin(), c.end());
        return u.size() <= 6;
    }

    bool violates_63(const Edge& e) const {
        int k = static_cast<int>(chosen.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (union_small(e, edge_at(i), edge_at(j))) return true;
        return false;
    }

    bool creates_cycle(const Edge& e) {
        return searchutil::adding_creates_cycle(n, cur_edges, incidence, e, len);
    }

    bool feasible(const Edge& e) {
        if (sixthree) return !violates_63(e);
        if (!pairs_free(e)) return false;
        return !creates_cycle(e);
    }

    void push(int idx) {
        const Edge& e = universe[static_cast<size_t>(idx)];
        chosen.push_back(idx);
        cur_edges.push_back(e);
        int pos = static_cast<int>(chosen.size()) - 1;
        for (Vertex v : e) incidence[static_cast<size_t>(v)].push_back(pos);
        if (!sixthree) mark_pairs(e, 1);
    }

    void pop() {
        int idx = chosen.back();
        const Edge& e = universe[static_cast<size_t>(idx)];
        for (Vertex v : e) incidence[static_cast<size_t>(v)].pop_back();
        if (!sixthree) mark_pairs(e, 0);
        chosen.pop_back();
        cur_edges.pop_back();
    }

    long long free_pair_bound() const {
        long long used = 0;
        for (char c : pair_used) used += c;
        long long total = static_cast<long long>(n) * (n - 1) / 2;
        long long per_edge = static_cast<long long>(r) * (r - 1) / 2;
        return (total - used) / per_edge;
    }

    int upper_bound(int from) {
        int k = static_cast<int>(chosen.size());
        int addable = 0;
        for (int idx = from; idx < static_cast<int>(universe.size()); ++idx) {
            const Edge& e = universe[static_cast<size_t>(idx)];
            if (sixthree ? !violates_63(e) : pairs_free(e)) ++addable;
        }
        long long ub = k + addable;
        if (!sixthree) {
            ub = std::min(ub, static_cast<long long>(k) + free_pair_bound());
            ub = std::min(ub, packing_upper_bound(n, r));
        }
        return static_cast<int>(ub);
    }

    // --- certified automorphism skip ---

    std::vector<std::uint64_t> fingerprints(const Edge& marked) {
        return searchutil::refined_fingerprints(n, cur_edges, incidence, marked);
    }

    bool certify_automorphism(const Edge& from_e, const Edge& to_e,
                              const std::vector<std::uint64_t>& cfrom,
                              const std::vector<std::uint64_t>& cto) {
        std::set<Edge> graph_edges(cur_edges.begin(), cur_edges.end());
        return searchutil::certified_automorphism(n, graph_edges, from_e, to_e, cfrom, cto);
    }

    void dfs(int from) {
        if (nodes++ > budget) { exhausted = false; return; }
        int k = static_cast<int>(chosen.size());
        if (k > best) {
            best = k;
            best_set = chosen;
        }
        if (k + (static_cast<int>(universe.size()) - from) <= best) return;
        if (upper_bound(from) <= best) return;
        // explored siblings for the automorphism skip
        std::vector<std::pair<std::vector<std::uint64_t>, int>> explored;
        for (int idx = from; idx < static_cast<int>(universe.size()); ++idx) {
            const Edge& e = universe[static_cast<size_t>(idx)];
            if (!feasible(e)) continue;
            if (iso_prune) {
                auto fp = fingerprints(e);
                auto sorted_fp = fp;
                std::sort(sorted_fp.begin(), sorted_fp.end());
                bool skip = false;
                for (auto& [prev_fp_sorted, prev_idx] : explored) {
                    if (prev_fp_sorted != sorted_fp) continue;
                    const Edge& pe = universe[static_cast<size_t>(prev_idx)];
                    auto pfp = fingerprints(pe);
                    if (certify_automorphism(e, pe, fp, pfp)) { skip = true; break; }
                }
                if (skip) continue;
                explored.push_back({std::move(sorted_fp), idx});
            }
            push(idx);
            dfs(idx + 1);
            pop();
            if (nodes > budget) return;
        }
    }

    ExtremalReport run() {
        dfs(0);
        ExtremalReport rep;
        rep.n = n;
        rep.r = r;
        rep.len = len;
        rep.lo = std::max(best, 0);
        rep.exact = exhausted;
        rep.hi = exhausted ? rep.lo
                           : static_cast<int>(sixthree ? static_cast<long long>(universe.size())
                                                       : packing_upper_bound(n, r));
        rep.nodes = nodes;
        rep.packing_bound = packing_upper_bound(n, r);
        std::vector<Edge> es;
        for (int idx : best_set) es.push_back(universe[static_cast<size_t>(idx)]);
        rep.witness = Hypergraph(n, std::move(es));
        return rep;
    }
};

ExtremalReport run_search(int n, int r, int len, bool sixthree, bool iso, long long budget) {
    if (n < r || r < 2) throw std::invalid_argument("extremal search: need n >= r >= 2");
    Searcher s(n, r, len, sixthree, iso, budget);
    return s.run();
}

} // namespace

ExtremalReport ex_linear(int n, int r, int len, long long budget) {
    if (r < 3 || len < 3) throw std::invalid_argument("ex_linear: need r >= 3 and len >= 3");
    return run_search(n, r, len, false, true, budget);
}

ExtremalReport ex_linear_unpruned(int n, int r, int len, long long budget) {
    if (r < 3 || len < 3) throw std::invalid_argument("ex_linear_unpruned: need r >= 3, len >= 3");
    return run_search(n, r, len, false, false, budget);
}

ExtremalReport max_linear_packing(int n, int r, long long budget) {
    return run_search(n, r, 0, false, true, budget);
}

std::vector<ExtremalReport> turan_table(int n_lo, int n_hi, int r, int len, long long budget) {
    std::vector<ExtremalReport> out;
    for (int n = n_lo; n <= n_hi; ++n) out.push_back(ex_linear(n, r, len, budget));
    return out;
}

bool satisfies_63(const Hypergraph& g) {
    if (g.uniformity().value_or(3) != 3)
        throw std::invalid_argument("satisfies_63: triple systems only");
    for (EdgeId i = 0; i < g.edge_count(); ++i)
        for (EdgeId j = i + 1; j < g.edge_count(); ++j)
            for (EdgeId k = j + 1; k < g.edge_count(); ++k) {
                std::set<Vertex> u(g.edge(i).begin(), g.edge(i).end());
                u.insert(g.edge(j).begin(), g.edge(j).end());
                u.insert(g.edge(k).begin(), g.edge(k).end());
                if (u.size() <= 6) return false;
            }
    return true;
}

ExtremalReport f3_663_max(int n, long long budget) {
    if (n < 3) throw std::invalid_argument("f3_663_max: need n >= 3");
    return run_search(n, 3, 0, true, true, budget);
}

} // namespace hyperlin
