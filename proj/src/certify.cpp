#include "hyperlin/certify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace hyperlin {

namespace {

// Small dynamic bitset over vertices.
struct VertexSet {
    std::vector<std::uint64_t> words;
    explicit VertexSet(int n) : words(static_cast<size_t>((n + 63) / 64), 0) {}
    void add(Vertex v) { words[static_cast<size_t>(v) >> 6] |= 1ULL << (v & 63); }
    void remove(Vertex v) { words[static_cast<size_t>(v) >> 6] &= ~(1ULL << (v & 63)); }
    bool has(Vertex v) const { return (words[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1ULL; }
};

int intersection_size(const Edge& a, const Edge& b) {
    size_t i = 0, j = 0;
    int c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++c; ++i; ++j; }
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return c;
}

std::vector<Vertex> intersection(const Edge& a, const Edge& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool valid_ids(const Hypergraph& host, const std::vector<EdgeId>& ids) {
    std::set<EdgeId> seen;
    for (EdgeId id : ids) {
        if (id < 0 || id >= host.edge_count()) return false;
        if (!seen.insert(id).second) return false;
    }
    return true;
}

void spend(long long& budget, const char* where) {
    if (--budget < 0) throw BudgetExceeded(std::string(where) + ": node budget exhausted");
}

} // namespace

bool validate_linear_cycle(const Hypergraph& host, const CycleCertificate& c,
                           int expected_length) {
    int len = c.length();
    if (len < 3) return false;
    if (expected_length >= 0 && len != expected_length) return false;
    if (!valid_ids(host, c.edges)) return false;
    std::vector<Vertex> connectors;
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            int want = consecutive ? 1 : 0;
            if (intersection_size(host.edge(c.edges[static_cast<size_t>(i)]),
                                  host.edge(c.edges[static_cast<size_t>(j)])) != want)
                return false;
        }
        auto shared = intersection(host.edge(c.edges[static_cast<size_t>(i)]),
                                   host.edge(c.edges[static_cast<size_t>((i + 1) % len)]));
        connectors.push_back(shared.front());
    }
    std::sort(connectors.begin(), connectors.end());
    return std::adjacent_find(connectors.begin(), connectors.end()) == connectors.end();
}

bool validate_linear_path(const Hypergraph& host, const PathCertificate& c,
                          int expected_length) {
    int len = c.length();
    if (len < 1) return false;
    if (expected_length >= 0 && len != expected_length) return false;
    if (!valid_ids(host, c.edges)) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            int want = (j == i + 1) ? 1 : 0;
            if (intersection_size(host.edge(c.edges[static_cast<size_t>(i)]),
                                  host.edge(c.edges[static_cast<size_t>(j)])) != want)
                return false;
        }
    const Edge& first = host.edge(c.edges.front());
    const Edge& last = host.edge(c.edges.back());
    if (!std::binary_search(first.begin(), first.end(), c.x)) return false;
    if (!std::binary_search(last.begin(), last.end(), c.y)) return false;
    if (len == 1) return c.x != c.y;
    // endpoints have path-degree 1
    Vertex v1 = intersection(first, host.edge(c.edges[1])).front();
    Vertex vl = intersection(last, host.edge(c.edges[static_cast<size_t>(len - 2)])).front();
    return c.x != v1 && c.y != vl;
}

bool validate_sunflower(const Hypergraph& host, const SunflowerCertificate& c) {
    if (c.members.size() < 2) return false;
    if (!valid_ids(host, c.members)) return false;
    if (!std::is_sorted(c.core.begin(), c.core.end())) return false;
    for (size_t i = 0; i < c.members.size(); ++i)
        for (size_t j = i + 1; j < c.members.size(); ++j)
            if (intersection(host.edge(c.members[i]), host.edge(c.members[j])) != c.core)
                return false;
    return true;
}

bool validate_berge_cycle(const Hypergraph& host, const BergeCycleCertificate& c,
                          int expected_length) {
    int len = static_cast<int>(c.edges.size());
    if (len < 3 || static_cast<int>(c.vertices.size()) != len) return false;
    if (expected_length >= 0 && len != expected_length) return false;
    if (!valid_ids(host, c.edges)) return false;
    std::set<Vertex> vs(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(vs.size()) != len) return false;
    for (int i = 0; i < len; ++i) {
        const Edge& e = host.edge(c.edges[static_cast<size_t>(i)]);
        Vertex a = c.vertices[static_cast<size_t>(i)];
        Vertex b = c.vertices[static_cast<size_t>((i + 1) % len)];
        if (!std::binary_search(e.begin(), e.end(), a) ||
            !std::binary_search(e.begin(), e.end(), b))
            return false;
    }
    return true;
}

// --- linear cycle search ---

namespace {

struct CycleSearcher {
    const Hypergraph& g;
    int len;
    long long budget;
    bool counting;
    long long count = 0;
    std::vector<EdgeId> stack;
    std::vector<char> used_edge;
    VertexSet used;
    std::optional<CycleCertificate> found;

    CycleSearcher(const Hypergraph& g_, int len_, long long budget_, bool counting_)
        : g(g_), len(len_), budget(budget_), counting(counting_),
          used_edge(static_cast<size_t>(g_.edge_count()), 0), used(g_.vertex_count()) {}

    // Extends the partial cycle e_1..e_k. prev_connector is the vertex shared
    // by e_{k-1} and e_k (or -1 when k = 1).
    bool extend(Vertex prev_connector, Vertex first_connector) {
        int k = static_cast<int>(stack.size());
        EdgeId base = stack.front();
        const Edge& last = g.edge(stack.back());
        bool closing = (k == len - 1);
        for (Vertex w : last) {
            if (w == prev_connector) continue;
            for (EdgeId cand : g.incident(w)) {
                spend(budget, "find_linear_cycle");
                if (cand <= base || used_edge[static_cast<size_t>(cand)]) continue;
                const Edge& f = g.edge(cand);
                // f must meet the path exactly in {w} (plus the first edge's
                // vertex when closing).
                int hits_last = 0;
                Vertex close_at = -1;
                bool ok = true;
                for (Vertex u : f) {
                    if (!used.has(u)) continue;
                    if (u == w) { ++hits_last; continue; }
                    if (closing) {
                        const Edge& first = g.edge(base);
                        bool in_first = std::binary_search(first.begin(), first.end(), u);
                        if (in_first && u != first_connector && close_at < 0) { close_at = u; continue; }
                    }
                    ok = false;
                    break;
                }
                if (!ok || hits_last != 1) continue;
                if (closing) {
                    if (close_at < 0) continue;
                    // direction canonicalization: second edge id below last edge id
                    if (stack[1] > cand) continue;
                    stack.push_back(cand);
                    CycleCertificate cert{stack};
                    stack.pop_back();
                    if (counting) { ++count; continue; }
                    found = cert;
                    return true;
                }
                stack.push_back(cand);
                used_edge[static_cast<size_t>(cand)] = 1;
                std::vector<Vertex> fresh;
                for (Vertex u : f)
                    if (!used.has(u)) { used.add(u); fresh.push_back(u); }
                bool done = extend(w, k == 1 ? w : first_connector);
                for (Vertex u : fresh) used.remove(u);
                used_edge[static_cast<size_t>(cand)] = 0;
                stack.pop_back();
                if (done) return true;
            }
        }
        return false;
    }

    void run() {
        if (len < 3 || g.edge_count() < len) return;
        // first-edge heuristic: minimum vertex degree, ties by id
        std::vector<EdgeId> order(static_cast<size_t>(g.edge_count()));
        for (EdgeId i = 0; i < g.edge_count(); ++i) order[static_cast<size_t>(i)] = i;
        std::vector<int> key(static_cast<size_t>(g.edge_count()));
        for (EdgeId i = 0; i < g.edge_count(); ++i) {
            int mindeg = std::numeric_limits<int>::max();
            for (Vertex v : g.edge(i)) mindeg = std::min(mindeg, g.degree(v));
            key[static_cast<size_t>(i)] = mindeg;
        }
        std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
            return key[static_cast<size_t>(a)] < key[static_cast<size_t>(b)];
        });
        for (EdgeId first : order) {
            stack.assign(1, first);
            used_edge[static_cast<size_t>(first)] = 1;
            for (Vertex u : g.edge(first)) used.add(u);
            bool done = extend(-1, -1) && !counting;
            for (Vertex u : g.edge(first)) used.remove(u);
            used_edge[static_cast<size_t>(first)] = 0;
            if (done) return;
        }
    }
};

} // namespace

std::optional<CycleCertificate> find_linear_cycle(const Hypergraph& g, int length,
                                                  long long budget) {
    if (length < 3) throw std::invalid_argument("find_linear_cycle: length must be >= 3");
    CycleSearcher s(g, length, budget, false);
    s.run();
    return s.found;
}

long long count_linear_cycles(const Hypergraph& g, int length, long long budget) {
    if (length < 3) throw std::invalid_argument("count_linear_cycles: length must be >= 3");
    CycleSearcher s(g, length, budget, true);
    s.run();
    return s.count;
}

// --- linear path search ---

namespace {

// Internal-avoidance semantics: every path vertex except the two designated
// endpoints must avoid `forbidden`. A prescribed endpoint may itself be a
// forbidden vertex; a free (kAnyVertex) endpoint is never chosen among them.
struct PathSearcher {
    const Hypergraph& g;
    int len;
    Vertex want_x, want_y;
    long long budget;
    std::vector<EdgeId> stack;
    std::vector<char> used_edge;
    VertexSet used;
    VertexSet banned;
    Vertex x_actual = kAnyVertex;
    std::optional<PathCertificate> found;

    PathSearcher(const Hypergraph& g_, int len_, Vertex x_, Vertex y_,
                 const std::vector<Vertex>& forbidden, long long budget_)
        : g(g_), len(len_), want_x(x_), want_y(y_), budget(budget_),
          used_edge(static_cast<size_t>(g_.edge_count()), 0), used(g_.vertex_count()),
          banned(g_.vertex_count()) {
        for (Vertex v : forbidden) banned.add(v);
    }

    bool extend(Vertex prev_connector) {
        int k = static_cast<int>(stack.size());
        const Edge& last = g.edge(stack.back());
        for (Vertex w : last) {
            if (w == prev_connector || banned.has(w)) continue;
            if (w == want_y) continue; // y keeps path-degree 1
            for (EdgeId cand : g.incident(w)) {
                spend(budget, "find_linear_path");
                if (used_edge[static_cast<size_t>(cand)]) continue;
                const Edge& f = g.edge(cand);
                bool is_last = (k == len - 1);
                bool ok = true;
                int hits = 0;
                for (Vertex u : f) {
                    if (used.has(u)) {
                        if (u == w) ++hits;
                        else { ok = false; break; }
                        continue;
                    }
                    if (u == want_y && !is_last) { ok = false; break; }
                    if (banned.has(u) && !(is_last && u == want_y)) { ok = false; break; }
                }
                if (!ok || hits != 1) continue;
                if (is_last) {
                    Vertex y = want_y;
                    if (y != kAnyVertex) {
                        if (!std::binary_search(f.begin(), f.end(), y)) continue;
                    } else {
                        for (Vertex u : f)
                            if (u != w && !used.has(u) && !banned.has(u)) { y = u; break; }
                        if (y == kAnyVertex) continue;
                    }
                    stack.push_back(cand);
                    found = PathCertificate{stack, x_actual, y};
                    stack.pop_back();
                    return true;
                }
                stack.push_back(cand);
                used_edge[static_cast<size_t>(cand)] = 1;
                std::vector<Vertex> fresh;
                for (Vertex u : f)
                    if (!used.has(u)) { used.add(u); fresh.push_back(u); }
                bool done = extend(w);
                for (Vertex u : fresh) used.remove(u);
                used_edge[static_cast<size_t>(cand)] = 0;
                stack.pop_back();
                if (done) return true;
            }
        }
        return false;
    }

    void run() {
        if (g.edge_count() < len) return;
        for (EdgeId first = 0; first < g.edge_count(); ++first) {
            spend(budget, "find_linear_path");
            const Edge& e = g.edge(first);
            Vertex x = want_x;
            if (x != kAnyVertex && !std::binary_search(e.begin(), e.end(), x)) continue;
            if (len == 1) {
                // single edge: choose endpoints, everything else ban-free
                std::vector<Vertex> banned_in;
                for (Vertex v : e)
                    if (banned.has(v)) banned_in.push_back(v);
                Vertex y = want_y;
                if (y != kAnyVertex && (!std::binary_search(e.begin(), e.end(), y) || y == x))
                    continue;
                // endpoints absorb banned vertices; more than two banned cannot work
                auto is_endpoint = [&](Vertex v) { return v == x || v == y; };
                bool feasible = std::all_of(banned_in.begin(), banned_in.end(), is_endpoint);
                if (x == kAnyVertex || y == kAnyVertex) {
                    // choose missing endpoints greedily: cover banned vertices first
                    std::vector<Vertex> need(banned_in.begin(), banned_in.end());
                    std::erase_if(need, is_endpoint);
                    Vertex cx = x, cy = y;
                    for (Vertex b : need) {
                        if (cx == kAnyVertex && b != cy) cx = b;
                        else if (cy == kAnyVertex && b != cx) cy = b;
                    }
                    for (Vertex v : e) {
                        if (cx == kAnyVertex && v != cy && !banned.has(v)) cx = v;
                    }
                    for (Vertex v : e) {
                        if (cy == kAnyVertex && v != cx && !banned.has(v)) cy = v;
                    }
                    if (cx == kAnyVertex || cy == kAnyVertex) continue;
                    feasible = true;
                    for (Vertex v : e)
                        if (banned.has(v) && v != cx && v != cy) feasible = false;
                    if (!feasible) continue;
                    found = PathCertificate{{first}, cx, cy};
                    return;
                }
                if (!feasible) continue;
                found = PathCertificate{{first}, x, y};
                return;
            }
            if (x == kAnyVertex) {
                for (Vertex v : e)
                    if (!banned.has(v)) { x = v; break; }
                if (x == kAnyVertex) continue;
            }
            // first-edge vertices other than x are internal
            bool entry_ok = true;
            for (Vertex v : e) {
                if (v == x) continue;
                if (banned.has(v) || v == want_y) { entry_ok = false; break; }
            }
            if (!entry_ok) continue;
            x_actual = x;
            stack.assign(1, first);
            used_edge[static_cast<size_t>(first)] = 1;
            for (Vertex u : e) used.add(u);
            // x keeps path-degree 1: it cannot serve as the first connector
            bool done = extend(x);
            for (Vertex u : e) used.remove(u);
            used_edge[static_cast<size_t>(first)] = 0;
            if (done) return;
        }
    }
};

} // namespace

std::optional<PathCertificate> find_linear_path(const Hypergraph& g, int length, Vertex x,
                                                Vertex y, const std::vector<Vertex>& forbidden,
                                                long long budget) {
    if (length < 1) throw std::invalid_argument("find_linear_path: length must be >= 1");
    PathSearcher s(g, length, x, y, forbidden, budget);
    s.run();
    return s.found;
}

// --- sunflower search ---

namespace {

// Exact search for `need` pairwise disjoint petals among candidates.
bool pack_petals(const std::vector<std::vector<Vertex>>& petals,
                 const std::vector<EdgeId>& ids, int need, int n, long long& budget,
                 std::vector<EdgeId>& out) {
    std::vector<size_t> chosen;
    VertexSet used(n);
    std::function<bool(size_t)> go = [&](size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == need) return true;
        if (chosen.size() + (petals.size() - from) < static_cast<size_t>(need)) return false;
        for (size_t i = from; i < petals.size(); ++i) {
            spend(budget, "find_sunflower");
            bool free = std::none_of(petals[i].begin(), petals[i].end(),
                                     [&](Vertex v) { return used.has(v); });
            if (!free) continue;
            for (Vertex v : petals[i]) used.add(v);
            chosen.push_back(i);
            if (go(i + 1)) return true;
            chosen.pop_back();
            for (Vertex v : petals[i]) used.remove(v);
        }
        return false;
    };
    if (!go(0)) return false;
    out.clear();
    for (size_t i : chosen) out.push_back(ids[i]);
    return true;
}

} // namespace

std::optional<SunflowerCertificate> find_sunflower(const Hypergraph& g, int members,
                                                   int min_core_size, long long budget) {
    if (members < 2) throw std::invalid_argument("find_sunflower: members must be >= 2");
    // candidate cores: empty set plus all pairwise intersections
    std::set<std::vector<Vertex>> cores;
    if (min_core_size <= 0) cores.insert({});
    for (EdgeId i = 0; i < g.edge_count(); ++i)
        for (EdgeId j = i + 1; j < g.edge_count(); ++j) {
            spend(budget, "find_sunflower");
            auto c = intersection(g.edge(i), g.edge(j));
            if (static_cast<int>(c.size()) >= std::max(min_core_size, 0) && !c.empty())
                cores.insert(std::move(c));
        }
    for (const auto& core : cores) {
        std::vector<EdgeId> ids;
        std::vector<std::vector<Vertex>> petals;
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (!std::includes(e.begin(), e.end(), core.begin(), core.end())) continue;
            std::vector<Vertex> petal;
            std::set_difference(e.begin(), e.end(), core.begin(), core.end(),
                                std::back_inserter(petal));
            ids.push_back(id);
            petals.push_back(std::move(petal));
        }
        if (static_cast<int>(ids.size()) < members) continue;
        std::vector<EdgeId> out;
        if (pack_petals(petals, ids, members, g.vertex_count(), budget, out)) {
            SunflowerCertificate cert{core, out};
            return cert;
        }
    }
    return std::nullopt;
}

// --- berge cycle search ---

namespace {

struct BergeSearcher {
    const Hypergraph& g;
    int len;
    long long budget;
    std::vector<EdgeId> edges;
    std::vector<Vertex> verts;
    std::vector<char> used_edge;
    VertexSet used_v;
    std::optional<BergeCycleCertificate> found;

    BergeSearcher(const Hypergraph& g_, int len_, long long budget_)
        : g(g_), len(len_), budget(budget_),
          used_edge(static_cast<size_t>(g_.edge_count()), 0), used_v(g_.vertex_count()) {}

    bool extend() {
        int k = static_cast<int>(verts.size());
        Vertex cur = verts.back();
        if (k == len) {
            Vertex start = verts.front();
            for (EdgeId cand : g.incident(cur)) {
                spend(budget, "find_berge_cycle");
                if (used_edge[static_cast<size_t>(cand)]) continue;
                const Edge& e = g.edge(cand);
                if (!std::binary_search(e.begin(), e.end(), start)) continue;
                edges.push_back(cand);
                found = BergeCycleCertificate{edges, verts};
                return true;
            }
            return false;
        }
        for (EdgeId cand : g.incident(cur)) {
            if (used_edge[static_cast<size_t>(cand)]) continue;
            for (Vertex next : g.edge(cand)) {
                spend(budget, "find_berge_cycle");
                if (next == cur || used_v.has(next)) continue;
                if (next < verts.front()) continue; // x_1 is the least threaded vertex
                edges.push_back(cand);
                used_edge[static_cast<size_t>(cand)] = 1;
                verts.push_back(next);
                used_v.add(next);
                bool done = extend();
                used_v.remove(next);
                verts.pop_back();
                used_edge[static_cast<size_t>(cand)] = 0;
                edges.pop_back();
                if (done) return true;
            }
        }
        return false;
    }

    void run() {
        if (g.edge_count() < len) return;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            verts.assign(1, v);
            used_v.add(v);
            if (extend()) return;
            used_v.remove(v);
        }
    }
};

} // namespace

std::optional<BergeCycleCertificate> find_berge_cycle(const Hypergraph& g, int length,
                                                      long long budget) {
    if (length < 3) throw std::invalid_argument("find_berge_cycle: length must be >= 3");
    BergeSearcher s(g, length, budget);
    s.run();
    return s.found;
}

// --- transversal branch and bound / independence ---

namespace {

struct CoverSearcher {
    const Hypergraph& g;
    long long budget;
    std::vector<char> in_cover;
    std::vector<Vertex> best;
    int chosen = 0;

    CoverSearcher(const Hypergraph& g_, long long budget_)
        : g(g_), budget(budget_), in_cover(static_cast<size_t>(g_.vertex_count()), 0) {}

    // Greedy disjoint uncovered edges; each needs its own cover vertex.
    int lower_bound(const std::vector<EdgeId>& uncovered) {
        VertexSet used(g.vertex_count());
        int lb = 0;
        for (EdgeId id : uncovered) {
            const Edge& e = g.edge(id);
            if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return used.has(v); })) {
                ++lb;
                for (Vertex v : e) used.add(v);
            }
        }
        return lb;
    }

    std::vector<EdgeId> uncovered_edges() const {
        std::vector<EdgeId> out;
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (std::none_of(e.begin(), e.end(),
                             [&](Vertex v) { return in_cover[static_cast<size_t>(v)]; }))
                out.push_back(id);
        }
        return out;
    }

    void store_best(const std::vector<EdgeId>& pairwise_disjoint_rest) {
        best.clear();
        std::set<Vertex> extras;
        for (EdgeId id : pairwise_disjoint_rest) extras.insert(g.edge(id).front());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (in_cover[static_cast<size_t>(v)] || extras.count(v)) best.push_back(v);
    }

    void dfs() {
        spend(budget, "min_vertex_cover");
        auto uncovered = uncovered_edges();
        if (uncovered.empty()) {
            if (chosen < static_cast<int>(best.size())) store_best({});
            return;
        }
        int lb = lower_bound(uncovered);
        if (chosen + lb >= static_cast<int>(best.size())) return;
        // pairwise-disjoint remainder: one vertex per edge closes it optimally
        if (lb == static_cast<int>(uncovered.size())) {
            store_best(uncovered);
            return;
        }
        // branch on a smallest uncovered edge
        EdgeId pick = uncovered.front();
        for (EdgeId id : uncovered)
            if (g.edge(id).size() < g.edge(pick).size()) pick = id;
        // uncovered-degree within the branching edge; a vertex dominated by a
        // sibling (its uncovered edges a subset) never needs its own branch
        auto uncovered_at = [&](Vertex v) {
            std::set<EdgeId> ids;
            for (EdgeId id : g.incident(v)) {
                const Edge& e = g.edge(id);
                if (std::none_of(e.begin(), e.end(),
                                 [&](Vertex u) { return in_cover[static_cast<size_t>(u)]; }))
                    ids.insert(id);
            }
            return ids;
        };
        std::vector<std::pair<Vertex, std::set<EdgeId>>> branchers;
        for (Vertex v : g.edge(pick)) branchers.push_back({v, uncovered_at(v)});
        for (size_t i = 0; i < branchers.size(); ++i) {
            bool dominated = false;
            for (size_t j = 0; j < branchers.size() && !dominated; ++j) {
                if (i == j) continue;
                const auto& a = branchers[i].second;
                const auto& b = branchers[j].second;
                bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
                if (subset && (a.size() < b.size() || j < i)) dominated = true;
            }
            if (dominated) continue;
            Vertex v = branchers[i].first;
            in_cover[static_cast<size_t>(v)] = 1;
            ++chosen;
            dfs();
            --chosen;
            in_cover[static_cast<size_t>(v)] = 0;
        }
    }

    CoverResult run() {
        // initial incumbent: all vertices of a greedy maximal matching
        VertexSet used(g.vertex_count());
        std::set<Vertex> init;
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return used.has(v); }))
                for (Vertex v : e) { used.add(v); init.insert(v); }
        }
        best.assign(init.begin(), init.end());
        dfs();
        return CoverResult{static_cast<int>(best.size()), best};
    }
};

} // namespace

CoverResult min_vertex_cover(const Hypergraph& g, long long budget) {
    CoverSearcher s(g, budget);
    return s.run();
}

AlphaResult independence_number(const Hypergraph& g, AlphaMode mode, long long budget) {
    int n = g.vertex_count();
    if (mode == AlphaMode::Exact) {
        if (n > 40)
            throw BudgetExceeded("independence_number: exact mode limited to n <= 40");
        CoverResult cover = min_vertex_cover(g, budget);
        std::vector<char> in(static_cast<size_t>(n), 0);
        for (Vertex v : cover.witness) in[static_cast<size_t>(v)] = 1;
        AlphaResult out;
        out.exact = true;
        for (Vertex v = 0; v < n; ++v)
            if (!in[static_cast<size_t>(v)]) out.witness.push_back(v);
        out.size = static_cast<int>(out.witness.size());
        return out;
    }
    // greedy: minimum degree first, ties by index
    std::vector<Vertex> order(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<char> in(static_cast<size_t>(n), 0);
    std::vector<int> have(static_cast<size_t>(g.edge_count()), 0);
    AlphaResult out;
    for (Vertex v : order) {
        bool ok = true;
        for (EdgeId id : g.incident(v))
            if (have[static_cast<size_t>(id)] + 1 == static_cast<int>(g.edge(id).size())) {
                ok = false;
                break;
            }
        if (!ok) continue;
        in[static_cast<size_t>(v)] = 1;
        for (EdgeId id : g.incident(v)) ++have[static_cast<size_t>(id)];
    }
    for (Vertex v = 0; v < n; ++v)
        if (in[static_cast<size_t>(v)]) out.witness.push_back(v);
    out.size = static_cast<int>(out.witness.size());
    out.exact = false;
    return out;
}

std::optional<int> linear_girth(const LinearHypergraph& g, int max_length, long long budget) {
    if (max_length < 3) throw std::invalid_argument("linear_girth: max_length must be >= 3");
    for (int len = 3; len <= max_length; ++len)
        if (find_linear_cycle(g.graph(), len, budget)) return len;
    return std::nullopt;
}

} // namespace hyperlin
