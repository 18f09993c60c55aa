#include "hyperlin/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "hyperlin/searchutil.hpp"

namespace hyperlin {

namespace {

std::uint64_t graph_digest(const Hypergraph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        mix(0xabcdefULL);
        for (Vertex v : e) mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

} // namespace

Hypergraph contract_sunflowers(const Hypergraph& g, int len, long long budget) {
    if (len < 3) throw std::invalid_argument("contract_sunflowers: len must be >= 3");
    int r = g.max_edge_size();
    int members = r * len;
    Hypergraph cur = g;
    for (;;) {
        auto sf = find_sunflower(cur, members, 2, budget);
        if (!sf) break;
        // replace the smallest member by the core
        EdgeId victim = *std::min_element(sf->members.begin(), sf->members.end());
        std::vector<Edge> edges;
        for (EdgeId id = 0; id < cur.edge_count(); ++id)
            if (id != victim) edges.push_back(cur.edge(id));
        if (std::find(edges.begin(), edges.end(), sf->core) == edges.end())
            edges.push_back(sf->core);
        std::sort(edges.begin(), edges.end());
        cur = Hypergraph(cur.vertex_count(), std::move(edges));
    }
    // make it simple: keep only subset-minimal edges
    std::vector<Edge> keep;
    for (EdgeId i = 0; i < cur.edge_count(); ++i) {
        bool minimal = true;
        for (EdgeId j = 0; j < cur.edge_count() && minimal; ++j) {
            if (i == j) continue;
            const Edge& a = cur.edge(i);
            const Edge& b = cur.edge(j);
            if (b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end()))
                minimal = false;
        }
        if (minimal) keep.push_back(cur.edge(i));
    }
    return Hypergraph(cur.vertex_count(), std::move(keep));
}

TwoQResult two_q_linearity(const Hypergraph& g, long long q) {
    if (q < 1) throw std::invalid_argument("two_q_linearity: q must be positive");
    std::map<std::pair<Vertex, Vertex>, long long> count;
    for (const Edge& e : g.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) ++count[{e[i], e[j]}];
    for (auto& [pr, c] : count)
        if (c >= q) return TwoQResult{false, pr};
    return TwoQResult{true, std::nullopt};
}

long long sunflower_free_q(int r, int p) {
    if (r < 2 || p < 2) throw std::invalid_argument("sunflower_free_q: need r, p >= 2");
    long long q = 1;
    for (int i = 2; i <= r; ++i) {
        if (q > std::numeric_limits<long long>::max() / i)
            throw std::overflow_error("sunflower_free_q: overflow");
        q *= i;
    }
    for (int i = 0; i < r; ++i) {
        if (q > std::numeric_limits<long long>::max() / (p - 1))
            throw std::overflow_error("sunflower_free_q: overflow");
        q *= (p - 1);
    }
    return q;
}

LinearHypergraph linear_extract(const Hypergraph& g, long long q) {
    auto check = two_q_linearity(g, q);
    if (!check.ok)
        throw PreconditionViolated("linear_extract: input is not (2," + std::to_string(q) +
                                   ")-linear");
    int m = g.edge_count();
    // conflict graph: edges sharing at least two vertices
    std::vector<std::vector<int>> adj(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = g.edge(i);
            const Edge& b = g.edge(j);
            std::vector<Vertex> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) {
                adj[static_cast<size_t>(i)].push_back(j);
                adj[static_cast<size_t>(j)].push_back(i);
            }
        }
    // dynamic minimum-degree-first greedy (Caro-Wei order)
    std::vector<int> deg(static_cast<size_t>(m));
    std::vector<char> gone(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) deg[static_cast<size_t>(i)] = static_cast<int>(adj[static_cast<size_t>(i)].size());
    std::vector<EdgeId> keep;
    for (;;) {
        int pick = -1;
        for (int i = 0; i < m; ++i)
            if (!gone[static_cast<size_t>(i)] && (pick < 0 || deg[static_cast<size_t>(i)] < deg[static_cast<size_t>(pick)]))
                pick = i;
        if (pick < 0) break;
        keep.push_back(pick);
        gone[static_cast<size_t>(pick)] = 1;
        for (int nb : adj[static_cast<size_t>(pick)]) {
            if (gone[static_cast<size_t>(nb)]) continue;
            gone[static_cast<size_t>(nb)] = 1;
            for (int nb2 : adj[static_cast<size_t>(nb)])
                if (!gone[static_cast<size_t>(nb2)]) --deg[static_cast<size_t>(nb2)];
        }
    }
    std::sort(keep.begin(), keep.end());
    int r = std::max(g.max_edge_size(), 2);
    if (static_cast<long long>(keep.size()) * q * r * r < 2LL * m)
        throw std::logic_error("linear_extract: greedy fell below the 2|G|/(q r^2) bound");
    return LinearHypergraph(g.restrict_edges(keep));
}

SparsityAudit local_sparsity_audit(const LinearHypergraph& h, int len, long long budget) {
    const Hypergraph& g = h.graph();
    int r = std::max(g.max_edge_size(), 2);
    long long bound_coeff = 1;
    for (int i = 0; i < r + 4; ++i) {
        if (bound_coeff > std::numeric_limits<long long>::max() / r)
            throw std::overflow_error("local_sparsity_audit: bound overflow");
        bound_coeff *= r;
    }
    bound_coeff *= len;
    SparsityAudit out;
    // shadow adjacency
    std::set<std::pair<Vertex, Vertex>> shadow;
    std::vector<std::set<Vertex>> nbr(static_cast<size_t>(g.vertex_count()));
    for (const Edge& e : g.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                shadow.insert({e[i], e[j]});
                nbr[static_cast<size_t>(e[i])].insert(e[j]);
                nbr[static_cast<size_t>(e[j])].insert(e[i]);
            }
    bool any_violation = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> nv(nbr[static_cast<size_t>(v)].begin(), nbr[static_cast<size_t>(v)].end());
        long long pairs = 0;
        for (size_t i = 0; i < nv.size(); ++i)
            for (size_t j = i + 1; j < nv.size(); ++j)
                if (shadow.count({nv[i], nv[j]})) ++pairs;
        SparsityEntry entry;
        entry.v = v;
        entry.pairs_in_neighborhood = pairs;
        entry.bound = bound_coeff * static_cast<long long>(nv.size());
        entry.violated = pairs > entry.bound;
        any_violation = any_violation || entry.violated;
        out.entries.push_back(entry);
    }
    if (any_violation) out.located = find_linear_cycle(g, len, budget);
    return out;
}

PartitionOrPath increasing_path_partition(const Hypergraph& h, const std::vector<Vertex>& order,
                                          int len) {
    int n = h.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("increasing_path_partition: order must list every vertex");
    if (len < 1) throw std::invalid_argument("increasing_path_partition: len must be >= 1");
    std::vector<int> rank(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (order[static_cast<size_t>(i)] < 0 || order[static_cast<size_t>(i)] >= n ||
            rank[static_cast<size_t>(order[static_cast<size_t>(i)])] != -1)
            throw std::invalid_argument("increasing_path_partition: order is not a permutation");
        rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    }
    // process edges by the rank of their largest vertex
    std::vector<EdgeId> eorder(static_cast<size_t>(h.edge_count()));
    for (EdgeId i = 0; i < h.edge_count(); ++i) eorder[static_cast<size_t>(i)] = i;
    auto max_rank = [&](EdgeId id) {
        int best = -1;
        for (Vertex v : h.edge(id)) best = std::max(best, rank[static_cast<size_t>(v)]);
        return best;
    };
    auto min_vertex = [&](EdgeId id) {
        Vertex best = -1;
        for (Vertex v : h.edge(id))
            if (best < 0 || rank[static_cast<size_t>(v)] < rank[static_cast<size_t>(best)]) best = v;
        return best;
    };
    auto max_vertex = [&](EdgeId id) {
        Vertex best = -1;
        for (Vertex v : h.edge(id))
            if (best < 0 || rank[static_cast<size_t>(v)] > rank[static_cast<size_t>(best)]) best = v;
        return best;
    };
    std::stable_sort(eorder.begin(), eorder.end(),
                     [&](EdgeId a, EdgeId b) { return max_rank(a) < max_rank(b); });
    std::vector<int> longest(static_cast<size_t>(n), 0);
    std::vector<EdgeId> back(static_cast<size_t>(n), -1);
    for (EdgeId id : eorder) {
        Vertex lo = min_vertex(id), hi = max_vertex(id);
        if (longest[static_cast<size_t>(lo)] + 1 > longest[static_cast<size_t>(hi)]) {
            longest[static_cast<size_t>(hi)] = longest[static_cast<size_t>(lo)] + 1;
            back[static_cast<size_t>(hi)] = id;
            if (longest[static_cast<size_t>(hi)] >= len) {
                // reconstruct the increasing path ending here
                std::vector<EdgeId> path;
                Vertex cur = hi;
                while (back[static_cast<size_t>(cur)] >= 0 &&
                       static_cast<int>(path.size()) < len) {
                    EdgeId pe = back[static_cast<size_t>(cur)];
                    path.push_back(pe);
                    cur = min_vertex(pe);
                }
                std::reverse(path.begin(), path.end());
                PathCertificate cert{path, min_vertex(path.front()), max_vertex(path.back())};
                return cert;
            }
        }
    }
    std::vector<std::vector<Vertex>> classes(static_cast<size_t>(len));
    for (Vertex v = 0; v < n; ++v) classes[static_cast<size_t>(longest[static_cast<size_t>(v)])].push_back(v);
    return classes;
}

bool validate_increasing_path(const Hypergraph& h, const std::vector<Vertex>& order,
                              const PathCertificate& p) {
    if (!validate_linear_path(h, p)) return false;
    int n = h.vertex_count();
    std::vector<int> rank(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) rank[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    int len = p.length();
    std::vector<Vertex> connectors;
    for (int i = 0; i + 1 < len; ++i) {
        const Edge& a = h.edge(p.edges[static_cast<size_t>(i)]);
        const Edge& b = h.edge(p.edges[static_cast<size_t>(i + 1)]);
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        connectors.push_back(common.front());
    }
    for (int i = 0; i < len; ++i) {
        const Edge& e = h.edge(p.edges[static_cast<size_t>(i)]);
        int lo = i == 0 ? -1 : rank[static_cast<size_t>(connectors[static_cast<size_t>(i - 1)])];
        int hi = i == len - 1 ? n : rank[static_cast<size_t>(connectors[static_cast<size_t>(i)])];
        for (Vertex v : e) {
            int rv = rank[static_cast<size_t>(v)];
            if (i > 0 && v == connectors[static_cast<size_t>(i - 1)]) continue;
            if (i < len - 1 && v == connectors[static_cast<size_t>(i)]) continue;
            if (rv <= lo || rv >= hi) return false;
        }
    }
    return true;
}

namespace {

struct BfsLevels {
    std::vector<std::vector<Vertex>> levels; // each in the BFS child order pi_i
};

BfsLevels bfs_levels_two_graph(const Hypergraph& h, Vertex v,
                               const std::vector<char>* live = nullptr) {
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(h.vertex_count()));
    for (const Edge& e : h.edges())
        if (e.size() == 2) {
            if (live && (!(*live)[static_cast<size_t>(e[0])] || !(*live)[static_cast<size_t>(e[1])]))
                continue;
            adj[static_cast<size_t>(e[0])].push_back(e[1]);
            adj[static_cast<size_t>(e[1])].push_back(e[0]);
        }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    BfsLevels out;
    std::vector<char> seen(static_cast<size_t>(h.vertex_count()), 0);
    out.levels.push_back({v});
    seen[static_cast<size_t>(v)] = 1;
    for (;;) {
        std::vector<Vertex> next;
        for (Vertex u : out.levels.back())
            for (Vertex w : adj[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    next.push_back(w); // children listed by parent order
                }
        if (next.empty()) break;
        out.levels.push_back(std::move(next));
    }
    return out;
}

std::vector<Vertex> order_from_level(const Hypergraph& h, const std::vector<Vertex>& level) {
    // level order first, remaining vertices after (they are irrelevant to the
    // induced subgraph's dynamic program)
    std::vector<char> in(static_cast<size_t>(h.vertex_count()), 0);
    std::vector<Vertex> order = level;
    for (Vertex v : level) in[static_cast<size_t>(v)] = 1;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (!in[static_cast<size_t>(v)]) order.push_back(v);
    return order;
}

} // namespace

LevelIndependent bfs_level_independent(const Hypergraph& h, Vertex v, int m) {
    if (m < 2) throw std::invalid_argument("bfs_level_independent: m must be >= 2");
    if (v < 0 || v >= h.vertex_count())
        throw std::invalid_argument("bfs_level_independent: vertex out of range");
    BfsLevels bfs = bfs_levels_two_graph(h, v);
    LevelIndependent out;
    out.levels = bfs.levels;
    for (int i = 0; i < static_cast<int>(bfs.levels.size()) && i <= m; ++i) {
        const auto& level = bfs.levels[static_cast<size_t>(i)];
        Hypergraph sub = h.induced(level);
        auto result = increasing_path_partition(sub, order_from_level(h, level), 2 * m - 1);
        if (std::holds_alternative<PathCertificate>(result))
            throw PreconditionViolated(
                "bfs_level_independent: level " + std::to_string(i) +
                " has an increasing path of length 2m-1 (host has a (2m+1)-cycle)");
        auto classes = std::get<std::vector<std::vector<Vertex>>>(result);
        std::set<Vertex> in_level(level.begin(), level.end());
        std::vector<Vertex> best;
        for (auto& cls : classes) {
            std::vector<Vertex> restricted;
            for (Vertex u : cls)
                if (in_level.count(u)) restricted.push_back(u);
            if (restricted.size() > best.size()) best = std::move(restricted);
        }
        if (static_cast<long long>(best.size()) * (2LL * m - 1) <
            static_cast<long long>(level.size()))
            throw std::logic_error("bfs_level_independent: class below |S_i|/(2m-1)");
        out.independent.push_back(std::move(best));
    }
    return out;
}

namespace {

bool contains_full_edge(const Hypergraph& g, const std::vector<char>& in_set) {
    for (const Edge& e : g.edges()) {
        bool inside = std::all_of(e.begin(), e.end(),
                                  [&](Vertex v) { return in_set[static_cast<size_t>(v)] != 0; });
        if (inside) return true;
    }
    return false;
}

} // namespace

PipelineTrace independent_set_pipeline(const Hypergraph& g, int len, bool verify_free,
                                       long long budget) {
    if (len < 3) throw std::invalid_argument("independent_set_pipeline: len must be >= 3");
    int r = g.uniformity().value_or(g.max_edge_size());
    if (r < 2) r = 2;
    int n = g.vertex_count();
    PipelineTrace trace;
    auto stage = [&](const std::string& name, const Hypergraph& snap,
                     std::map<std::string, long long> stats) {
        PipelineStage st;
        st.name = name;
        st.digest = graph_digest(snap);
        st.stats = std::move(stats);
        trace.stages.push_back(std::move(st));
        trace.sizes_per_stage.push_back(snap.edge_count());
    };

    if (verify_free) {
        if (find_linear_cycle(g, len, budget))
            throw std::invalid_argument("independent_set_pipeline: input contains the cycle");
    }
    stage("input", g, {{"n", n}, {"edges", g.edge_count()}, {"verified", verify_free ? 1 : 0}});

    Hypergraph g1 = contract_sunflowers(g, len, budget);
    stage("contract_sunflowers", g1, {{"edges", g1.edge_count()}});

    long long q = sunflower_free_q(r, r * len);
    TwoQResult tq = two_q_linearity(g1, q);
    if (!tq.ok)
        throw std::logic_error("independent_set_pipeline: contraction left a heavy pair");
    stage("two_q_linearity", g1, {{"q", q}});

    // low-degree restriction: keep deg(v) * n <= 2 r |G1|
    std::vector<Vertex> low;
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<long long>(g1.degree(v)) * n <= 2LL * r * g1.edge_count())
            low.push_back(v);
    if (2 * static_cast<long long>(low.size()) < n)
        throw std::logic_error("independent_set_pipeline: fewer than n/2 low-degree vertices");
    Hypergraph h = g1.induced(low);
    stage("low_degree", h, {{"kept_vertices", static_cast<long long>(low.size())}});

    std::vector<char> in_set(static_cast<size_t>(n), 0);
    std::vector<char> is_low(static_cast<size_t>(n), 0);
    for (Vertex v : low) is_low[static_cast<size_t>(v)] = 1;

    if (len % 2 == 0) {
        // even: greedy Caro-Wei on the shadow of H, with neighborhood stats
        Hypergraph d = shadow2(h);
        long long nb_sets = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (!is_low[static_cast<size_t>(v)] || d.degree(v) == 0) continue;
            std::vector<Vertex> nv;
            for (EdgeId id : d.incident(v))
                for (Vertex u : d.edge(id))
                    if (u != v) nv.push_back(u);
            Hypergraph dn = d.induced(nv);
            nb_sets += independence_number(dn, AlphaMode::Greedy, budget).size;
        }
        AlphaResult shadow_is = independence_number(d, AlphaMode::Greedy, budget);
        for (Vertex v : shadow_is.witness)
            if (is_low[static_cast<size_t>(v)]) in_set[static_cast<size_t>(v)] = 1;
        stage("even_shadow_greedy", d,
              {{"shadow_edges", d.edge_count()},
               {"greedy_size", shadow_is.size},
               {"neighborhood_greedy_total", nb_sets}});
    } else {
        // odd: iterated BFS-level extraction with deletion
        int m = (len - 1) / 2;
        std::vector<char> live = is_low;
        long long live_count = static_cast<long long>(low.size());
        long long rounds = 0;
        while (live_count > 0) {
            ++rounds;
            Vertex v = -1;
            for (Vertex u = 0; u < n; ++u)
                if (live[static_cast<size_t>(u)]) { v = u; break; }
            std::vector<Vertex> live_list;
            for (Vertex u = 0; u < n; ++u)
                if (live[static_cast<size_t>(u)]) live_list.push_back(u);
            Hypergraph hlive = h.induced(live_list);
            BfsLevels bfs = bfs_levels_two_graph(hlive, v, &live);
            double ratio_cap = std::pow(static_cast<double>(live_count), 1.0 / m);
            int k = -1;
            for (int i = 0; i + 1 <= m && i < static_cast<int>(bfs.levels.size()); ++i) {
                double next_sz = i + 1 < static_cast<int>(bfs.levels.size())
                                     ? static_cast<double>(bfs.levels[static_cast<size_t>(i) + 1].size())
                                     : 0.0;
                if (next_sz <= ratio_cap * static_cast<double>(bfs.levels[static_cast<size_t>(i)].size())) {
                    k = i;
                    break;
                }
            }
            if (k < 0)
                throw PreconditionViolated(
                    "independent_set_pipeline: BFS levels grew past n^{1/m} for every k <= m-1");
            const auto& sk = bfs.levels[static_cast<size_t>(k)];
            Hypergraph sub = hlive.induced(sk);
            auto result = increasing_path_partition(sub, order_from_level(hlive, sk), 2 * m - 1);
            if (std::holds_alternative<PathCertificate>(result))
                throw PreconditionViolated(
                    "independent_set_pipeline: increasing path implies a (2m+1)-cycle");
            auto classes = std::get<std::vector<std::vector<Vertex>>>(result);
            std::set<Vertex> in_level(sk.begin(), sk.end());
            std::vector<Vertex> sprime;
            for (auto& cls : classes) {
                std::vector<Vertex> restricted;
                for (Vertex u : cls)
                    if (in_level.count(u)) restricted.push_back(u);
                if (restricted.size() > sprime.size()) sprime = std::move(restricted);
            }
            for (Vertex u : sprime) in_set[static_cast<size_t>(u)] = 1;
            // S~ = S_{k-1} u S_k u S_{k+1} (S_0 u S_1 when k = 0)
            std::set<Vertex> tilde;
            for (int i = std::max(0, k - 1);
                 i <= k + 1 && i < static_cast<int>(bfs.levels.size()); ++i)
                tilde.insert(bfs.levels[static_cast<size_t>(i)].begin(),
                             bfs.levels[static_cast<size_t>(i)].end());
            // Z: one vertex outside S~ per big edge meeting S'
            std::set<Vertex> sprime_set(sprime.begin(), sprime.end());
            std::set<Vertex> z;
            for (const Edge& e : hlive.edges()) {
                if (e.size() < 3) continue;
                bool touches = std::any_of(e.begin(), e.end(), [&](Vertex u) {
                    return sprime_set.count(u) != 0;
                });
                if (!touches) continue;
                for (Vertex u : e)
                    if (!tilde.count(u)) { z.insert(u); break; }
            }
            for (Vertex u : tilde)
                if (live[static_cast<size_t>(u)]) { live[static_cast<size_t>(u)] = 0; --live_count; }
            for (Vertex u : z)
                if (live[static_cast<size_t>(u)]) { live[static_cast<size_t>(u)] = 0; --live_count; }
        }
        stage("odd_bfs_extraction", h, {{"rounds", rounds}});
    }

    // greedy completion keeps independence in the ORIGINAL graph and
    // guarantees the n/(shadow degree + 1) baseline
    std::vector<int> filled(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        for (Vertex v : g.edge(id))
            if (in_set[static_cast<size_t>(v)]) ++filled[static_cast<size_t>(id)];
    // drop any vertex that already closes an input edge (defensive repair,
    // then verify)
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (filled[static_cast<size_t>(id)] == static_cast<int>(g.edge(id).size()))
            throw std::logic_error("independent_set_pipeline: stage output not independent");
    for (Vertex v = 0; v < n; ++v) {
        if (in_set[static_cast<size_t>(v)]) continue;
        bool ok = true;
        for (EdgeId id : g.incident(v))
            if (filled[static_cast<size_t>(id)] + 1 == static_cast<int>(g.edge(id).size())) {
                ok = false;
                break;
            }
        if (!ok) continue;
        in_set[static_cast<size_t>(v)] = 1;
        for (EdgeId id : g.incident(v)) ++filled[static_cast<size_t>(id)];
    }
    for (Vertex v = 0; v < n; ++v)
        if (in_set[static_cast<size_t>(v)]) trace.independent_set.push_back(v);
    stage("completion", g, {{"size", static_cast<long long>(trace.independent_set.size())}});

    // final soundness check against the original
    if (contains_full_edge(g, in_set))
        throw std::logic_error("independent_set_pipeline: output not independent in the input");
    return trace;
}

RamseyReport ramsey_exact_small(int r, int len, int t, long long budget) {
    if (r < 2 || len < 3 || t < 1)
        throw std::invalid_argument("ramsey_exact_small: need r >= 2, len >= 3, t >= 1");
    RamseyReport rep;
    rep.r = r;
    rep.len = len;
    rep.t = t;
    long long nodes = 0;

    // witness on [n]: red graph, len-cycle-free, alpha < t (every t-subset
    // spans a red edge). Returns nullopt when none exists (exhaustive).
    auto find_witness = [&](int n) -> std::optional<Hypergraph> {
        std::vector<Edge> red;
        std::vector<std::vector<int>> incidence(static_cast<size_t>(n));
        std::optional<Hypergraph> found;
        // first uncovered t-subset in lex order
        std::function<std::optional<std::vector<Vertex>>()> uncovered =
            [&]() -> std::optional<std::vector<Vertex>> {
            std::vector<Vertex> comb(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i) comb[static_cast<size_t>(i)] = i;
            for (;;) {
                bool covered = false;
                for (const Edge& e : red) {
                    if (std::includes(comb.begin(), comb.end(), e.begin(), e.end())) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) return comb;
                // next combination
                int i = t - 1;
                while (i >= 0 && comb[static_cast<size_t>(i)] == n - t + i) --i;
                if (i < 0) return std::nullopt;
                ++comb[static_cast<size_t>(i)];
                for (int j = i + 1; j < t; ++j)
                    comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
            }
        };
        std::function<bool(int)> dfs = [&](int depth) -> bool {
            if (++nodes > budget) throw BudgetExceeded("ramsey_exact_small: budget exhausted");
            auto gap = uncovered();
            if (!gap) {
                std::vector<Edge> sorted_red = red;
                std::sort(sorted_red.begin(), sorted_red.end());
                found = Hypergraph(n, std::move(sorted_red));
                return true;
            }
            if (t < r) return false; // no r-edge fits inside a t-set
            // candidate red edges inside the gap t-set
            std::vector<Edge> cands;
            std::vector<int> pickidx(static_cast<size_t>(r));
            std::function<void(int, int)> combs = [&](int from, int got) {
                if (got == r) {
                    Edge e;
                    for (int i = 0; i < r; ++i)
                        e.push_back((*gap)[static_cast<size_t>(pickidx[static_cast<size_t>(i)])]);
                    cands.push_back(std::move(e));
                    return;
                }
                for (int i = from; i <= t - (r - got); ++i) {
                    pickidx[static_cast<size_t>(got)] = i;
                    combs(i + 1, got + 1);
                }
            };
            combs(0, 0);
            std::vector<std::pair<std::vector<std::uint64_t>, Edge>> explored;
            for (const Edge& e : cands) {
                if (searchutil::adding_creates_cycle(n, red, incidence, e, len)) continue;
                if (depth == 0 && !red.empty()) { /* unreachable: depth 0 has empty red */ }
                if (depth == 0) {
                    // all candidates at the root are equivalent under S_n
                    Edge canon;
                    for (int i = 0; i < r; ++i) canon.push_back(i);
                    if (e != canon) continue;
                }
                bool skip = false;
                if (depth > 0 && depth <= 3) {
                    auto fp = searchutil::refined_fingerprints(n, red, incidence, e);
                    auto sorted_fp = fp;
                    std::sort(sorted_fp.begin(), sorted_fp.end());
                    for (auto& [pfps, pe] : explored) {
                        if (pfps != sorted_fp) continue;
                        auto pfp = searchutil::refined_fingerprints(n, red, incidence, pe);
                        std::set<Edge> eset(red.begin(), red.end());
                        if (searchutil::certified_automorphism(n, eset, e, pe, fp, pfp)) {
                            skip = true;
                            break;
                        }
                    }
                    if (!skip) explored.push_back({std::move(sorted_fp), e});
                }
                if (skip) continue;
                red.push_back(e);
                int pos = static_cast<int>(red.size()) - 1;
                for (Vertex v : e) incidence[static_cast<size_t>(v)].push_back(pos);
                bool done = dfs(depth + 1);
                for (Vertex v : e) incidence[static_cast<size_t>(v)].pop_back();
                red.pop_back();
                if (done) return true;
            }
            return false;
        };
        if (dfs(0)) return found;
        return std::nullopt;
    };

    int n = std::max(1, t - 1);
    Hypergraph last_witness(std::max(0, t - 1), {});
    // witnesses exist for every n < t (any red graph has alpha = n < t)
    for (n = t;; ++n) {
        std::optional<Hypergraph> w;
        try {
            w = find_witness(n);
        } catch (const BudgetExceeded&) {
            rep.lo = n; // R > n-1 was certified before this n
            rep.hi = -1;
            rep.exact = false;
            rep.witness = last_witness;
            rep.nodes = nodes;
            return rep;
        }
        if (!w) {
            rep.lo = rep.hi = n;
            rep.exact = true;
            rep.witness = last_witness;
            rep.nodes = nodes;
            return rep;
        }
        last_witness = *w;
    }
}

} // namespace hyperlin
