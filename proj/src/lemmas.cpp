#include "hyperlin/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "hyperlin/rng.hpp"

namespace hyperlin {

namespace {

std::vector<Vertex> edge_vertices(const Hypergraph& host, const std::vector<EdgeId>& ids) {
    std::set<Vertex> vs;
    for (EdgeId id : ids)
        for (Vertex v : host.edge(id)) vs.insert(v);
    return std::vector<Vertex>(vs.begin(), vs.end());
}

bool sorted_contains(const std::vector<Vertex>& sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool sorted_disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

std::vector<Vertex> sorted_intersection(const std::vector<Vertex>& a,
                                        const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

long long checked_pow(long long base, int exp, const char* what) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<long long>::max() / base)
            throw std::overflow_error(std::string(what) + ": constant overflows 64 bits");
        out *= base;
    }
    return out;
}

unsigned __int128 checked_mul_u128(unsigned __int128 a, unsigned __int128 b, const char* what) {
    if (a != 0 && b > (~(unsigned __int128)0) / a)
        throw std::overflow_error(std::string(what) + ": constant overflows 128 bits");
    return a * b;
}

} // namespace

std::string to_string_u128(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

MatchingCoverResult matching_from_cover(const Hypergraph& h, long long budget) {
    if (h.max_edge_size() > 0 && h.max_edge_size() < 2)
        throw std::invalid_argument("matching_from_cover: edges must have size >= 2");
    MatchingCoverResult out;
    std::set<Vertex> used;
    for (EdgeId id = 0; id < h.edge_count(); ++id) {
        const Edge& e = h.edge(id);
        if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return used.count(v) != 0; })) {
            out.matching.push_back(id);
            used.insert(e.begin(), e.end());
        }
    }
    if (h.vertex_count() <= 30) {
        out.cover_bound = min_vertex_cover(h, budget).size;
        out.cover_exact = true;
    } else {
        out.cover_bound = static_cast<int>(out.matching.size());
        out.cover_exact = false;
    }
    return out;
}

CrossCutResult cross_cut(const Hypergraph& h, const std::vector<Vertex>& cover,
                         std::uint64_t seed, int max_tries) {
    int k = h.max_edge_size();
    if (k < 2) throw std::invalid_argument("cross_cut: empty or degenerate graph");
    if (k > 62) throw std::invalid_argument("cross_cut: edge size too large");
    std::set<Vertex> cov(cover.begin(), cover.end());
    for (const Edge& e : h.edges())
        if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return cov.count(v) != 0; }))
            throw std::invalid_argument("cross_cut: given set is not a vertex cover");
    SplitRng rng = SplitRng(seed).split("cross_cut");
    long long need_num = static_cast<long long>(k) * h.edge_count(); // |H'| >= k|H|/2^k
    long long denom = 1LL << k;
    for (int attempt = 1; attempt <= max_tries; ++attempt) {
        std::set<Vertex> sample;
        for (Vertex v : cov)
            if (rng.next_bool()) sample.insert(v);
        std::vector<EdgeId> keep;
        for (EdgeId id = 0; id < h.edge_count(); ++id) {
            const Edge& e = h.edge(id);
            int hits = 0;
            for (Vertex v : e) hits += sample.count(v) ? 1 : 0;
            if (hits == 1) keep.push_back(id);
        }
        if (static_cast<long long>(keep.size()) * denom >= need_num) {
            std::set<Vertex> in_kept;
            for (EdgeId id : keep)
                for (Vertex v : h.edge(id))
                    if (sample.count(v)) in_kept.insert(v);
            return CrossCutResult{std::move(keep),
                                  std::vector<Vertex>(in_kept.begin(), in_kept.end()), attempt};
        }
    }
    throw FailedAfterRetries("cross_cut: no sample reached (k/2^k)|H| edges after " +
                             std::to_string(max_tries) + " tries");
}

PathCertificate rainbow_path(const Hypergraph& b, const PairColoring& phi, Vertex x, int length,
                             const std::vector<Vertex>& forbidden_colors,
                             const std::vector<Vertex>& avoid_vertices) {
    if (b.uniformity().value_or(2) != 2 && b.edge_count() > 0)
        throw std::invalid_argument("rainbow_path: graph must be 2-uniform");
    if (length < 0) throw std::invalid_argument("rainbow_path: negative length");
    PathCertificate out;
    out.x = x;
    out.y = x;
    if (length == 0) return out;
    std::set<Vertex> blocked_colors(forbidden_colors.begin(), forbidden_colors.end());
    std::set<Vertex> avoid(avoid_vertices.begin(), avoid_vertices.end());
    std::set<Vertex> on_path = {x};
    Vertex cur = x;
    for (int step = 0; step < length; ++step) {
        EdgeId best = -1;
        Vertex best_nb = -1;
        for (EdgeId id : b.incident(cur)) {
            const Edge& e = b.edge(id);
            Vertex nb = e[0] == cur ? e[1] : e[0];
            if (on_path.count(nb) || avoid.count(nb)) continue;
            const std::vector<Vertex>* color = phi.find(cur, nb);
            if (!color)
                throw std::invalid_argument("rainbow_path: uncolored pair {" +
                                            std::to_string(cur) + "," + std::to_string(nb) + "}");
            bool clean = std::none_of(color->begin(), color->end(), [&](Vertex c) {
                return blocked_colors.count(c) != 0;
            });
            if (!clean) continue;
            if (best < 0 || nb < best_nb) { best = id; best_nb = nb; }
        }
        if (best < 0)
            throw PreconditionViolated(
                "rainbow_path: no extension at step " + std::to_string(step + 1) + " of " +
                std::to_string(length) +
                " (min degree below (k+1)*length+|S0| or coloring not strongly proper)");
        const std::vector<Vertex>* color = phi.find(cur, best_nb);
        blocked_colors.insert(color->begin(), color->end());
        on_path.insert(best_nb);
        out.edges.push_back(best);
        cur = best_nb;
    }
    out.y = cur;
    return out;
}

PathCertificate joining_path(const Hypergraph& host, const LeveledQuasiTree& q, Vertex x,
                             Vertex y) {
    int i = q.main_level_of(x);
    if (i < 1 || q.main_level_of(y) != i)
        throw std::invalid_argument("joining_path: x,y must share a main level >= 1");
    if (x == y) throw std::invalid_argument("joining_path: x == y");
    std::vector<EdgeId> left, right; // left: edges from x upward, right: from y upward
    Vertex cx = x, cy = y;
    for (;;) {
        const QuasiTreeEdge* ex = q.parent_edge(cx);
        const QuasiTreeEdge* ey = q.parent_edge(cy);
        if (!ex || !ey) throw std::invalid_argument("joining_path: broken parent chain");
        left.push_back(ex->edge);
        right.push_back(ey->edge);
        if (!sorted_disjoint(host.edge(ex->edge), host.edge(ey->edge))) break;
        cx = ex->main;
        cy = ey->main;
        // distinct mains guaranteed: equal mains would make the edges intersect
    }
    // left runs x upward to the meeting edge; right must come back down to y
    std::vector<EdgeId> edges = left;
    edges.insert(edges.end(), right.rbegin(), right.rend());
    PathCertificate out{edges, x, y};
    if (!validate_linear_path(host, out))
        throw PreconditionViolated("joining_path: assembled walk is not a linear path");
    return out;
}

namespace {

std::vector<Vertex> path_vertices(const Hypergraph& host, const PathCertificate& p) {
    return edge_vertices(host, p.edges);
}

// Greedy maximal spider at the root of q: monotone legs to targets, pairwise
// sharing only the root. cap <= 0 takes everything.
std::vector<PathCertificate> greedy_spider(const Hypergraph& host, const LeveledQuasiTree& q,
                                           const std::vector<Vertex>& targets, int cap) {
    std::vector<PathCertificate> legs;
    std::set<Vertex> used;
    for (Vertex t : targets) {
        if (t == q.root()) continue;
        PathCertificate leg = monotone_root_path(q, host, t);
        auto vs = path_vertices(host, leg);
        bool free = true;
        for (Vertex v : vs)
            if (v != q.root() && used.count(v)) { free = false; break; }
        if (!free) continue;
        for (Vertex v : vs)
            if (v != q.root()) used.insert(v);
        legs.push_back(std::move(leg));
        if (cap > 0 && static_cast<int>(legs.size()) == cap) break;
    }
    return legs;
}

} // namespace

SpiderResult find_spider(const Hypergraph& host, const LeveledQuasiTree& q,
                         const std::vector<Vertex>& targets, int legs) {
    int h = q.height();
    if (h < 1) throw std::invalid_argument("find_spider: quasi-tree must have height >= 1");
    if (legs < 1) throw std::invalid_argument("find_spider: need at least one leg");
    std::vector<Vertex> s = targets;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex t : s)
        if (q.main_level_of(t) != h)
            throw std::invalid_argument("find_spider: target not in the bottom main level");
    int r = host.uniformity().value_or(host.max_edge_size());
    long long need = checked_pow(static_cast<long long>(h) * legs * r, h, "find_spider");
    if (static_cast<long long>(s.size()) < need)
        throw PreconditionViolated("find_spider: |S| = " + std::to_string(s.size()) + " < (hpr)^h = " +
                                   std::to_string(need));

    LeveledQuasiTree sub = q;
    std::vector<Vertex> cur = s;
    Vertex center = q.root();
    std::vector<PathCertificate> out_legs;
    for (;;) {
        out_legs = greedy_spider(host, sub, cur, legs);
        if (static_cast<int>(out_legs.size()) >= legs) {
            center = sub.root();
            break;
        }
        int hq = sub.height();
        if (hq <= 1)
            throw PreconditionViolated("find_spider: fewer than p legs at a height-1 tree (|S| = " +
                                       std::to_string(cur.size()) + ")");
        // pigeonhole on the maximal spider's level vertices (< p legs means the
        // capped greedy already processed every target, so it is maximal)
        std::set<Vertex> udom;
        for (const auto& leg : out_legs)
            for (Vertex v : path_vertices(host, leg)) {
                int ml = sub.main_level_of(v);
                int cl = sub.companion_level_of(v);
                if ((ml >= 1 && ml <= hq - 1) || cl >= 1) udom.insert(v);
            }
        // count chain hits
        std::map<Vertex, int> hits;
        std::map<Vertex, std::vector<Vertex>> chain_vs;
        for (Vertex t : cur) {
            auto vs = path_vertices(host, monotone_root_path(sub, host, t));
            for (Vertex v : vs)
                if (udom.count(v)) ++hits[v];
            chain_vs[t] = std::move(vs);
        }
        Vertex z = -1;
        int best_hits = -1, best_level = std::numeric_limits<int>::max();
        for (auto& [v, c] : hits) {
            int lvl = sub.main_level_of(v);
            if (lvl < 0) lvl = sub.companion_level_of(v);
            bool better = c > best_hits ||
                          (c == best_hits &&
                           (lvl < best_level || (lvl == best_level && v < z)));
            if (better) { z = v; best_hits = c; best_level = lvl; }
        }
        if (z < 0 || best_hits <= 0)
            throw PreconditionViolated("find_spider: maximal spider misses every chain");
        std::vector<Vertex> next;
        for (Vertex t : cur)
            if (std::find(chain_vs[t].begin(), chain_vs[t].end(), z) != chain_vs[t].end())
                next.push_back(t);
        sub = down_graph(sub, host, z);
        cur = std::move(next);
    }
    std::vector<Vertex> share = sorted_intersection(
        [&] {
            auto d = descendants_at_bottom(q, center);
            std::sort(d.begin(), d.end());
            return d;
        }(),
        s);
    long long denom = checked_pow(static_cast<long long>(h) * legs * r, h - 1, "find_spider");
    if (static_cast<long long>(share.size()) * denom < static_cast<long long>(s.size()))
        throw PreconditionViolated("find_spider: share bound |V(H_x) ∩ S| >= |S|/(hpr)^{h-1} failed");
    Spider sp;
    sp.center = center;
    sp.legs = std::move(out_legs);
    return SpiderResult{std::move(sp), std::move(share)};
}

long long odd_expansion_p(int m, int r) { return 2LL * m * r; }

long long odd_expansion_c(int m, int r) {
    long long p = odd_expansion_p(m, r);
    long long base = static_cast<long long>(m) * p * r;
    long long pw = checked_pow(base, m, "odd_expansion_c");
    long long shift = checked_pow(2, r + 2, "odd_expansion_c");
    if (pw > std::numeric_limits<long long>::max() / shift)
        throw std::overflow_error("odd_expansion_c: overflow");
    return shift * pw;
}

long long even_step_denominator(int r, int m, int h) {
    long long base = static_cast<long long>(r) * m * checked_pow(2, r + 2, "even_step_denominator");
    return checked_pow(base, h, "even_step_denominator");
}

TheoremConstants theorem_constants(int r, int m, CycleParity parity) {
    if (m < 2 || r < 3) throw std::invalid_argument("theorem_constants: need m >= 2, r >= 3");
    TheoremConstants out;
    out.exponent_num = m + 1;
    out.exponent_den = m;
    unsigned __int128 lead = 2;
    for (int i = 0; i < r - 1; ++i)
        lead = checked_mul_u128(lead, static_cast<unsigned>(m), "theorem_constants");
    if (parity == CycleParity::Even) {
        unsigned __int128 beta = 1;
        unsigned __int128 base = static_cast<unsigned __int128>(r) * m * (1ULL << (r + 2));
        for (int i = 0; i < m; ++i) beta = checked_mul_u128(beta, base, "theorem_constants");
        out.coefficient = checked_mul_u128(lead, beta, "theorem_constants");
    } else {
        unsigned __int128 c = static_cast<unsigned __int128>(odd_expansion_c(m, r));
        unsigned __int128 cm = 1;
        for (int i = 0; i < m; ++i) cm = checked_mul_u128(cm, c, "theorem_constants");
        out.coefficient = checked_mul_u128(lead, cm, "theorem_constants");
    }
    return out;
}

std::string expansion_step_violation(const Hypergraph& host, const LeveledQuasiTree& q,
                                     const ExpansionStep& step, long long pool_size,
                                     long long size_denominator, int min_degree_p) {
    int h = q.height();
    const std::vector<Vertex>& lh = q.main_level(h);
    if (step.selected.size() != step.gamma.size()) return "gamma not aligned with selected edges";
    std::set<Vertex> sset(step.cross_cut.begin(), step.cross_cut.end());
    if (sset.size() != step.cross_cut.size()) return "cross-cut has repeats";
    for (Vertex v : step.cross_cut)
        if (q.contains_vertex(v)) return "cross-cut vertex inside the quasi-tree";
    std::set<Vertex> gamma_vertices;
    std::set<std::pair<Vertex, Vertex>> gset;
    for (size_t i = 0; i < step.selected.size(); ++i) {
        const Edge& e = host.edge(step.selected[i]);
        auto [main, s] = step.gamma[i];
        if (!sorted_contains(e, main) || !sorted_contains(e, s))
            return "gamma pair not inside its edge";
        int in_lh = 0, in_s = 0;
        for (Vertex v : e) {
            in_lh += sorted_contains(lh, v) ? 1 : 0;
            in_s += sset.count(v) ? 1 : 0;
        }
        if (in_lh != 1 || !sorted_contains(lh, main)) return "edge does not meet L_h exactly in its main vertex";
        if (in_s != 1 || !sset.count(s)) return "edge does not meet the cross-cut exactly once";
        if (!gset.insert({main, s}).second) return "repeated gamma pair";
        gamma_vertices.insert(main);
        gamma_vertices.insert(s);
    }
    for (Vertex v : step.cross_cut)
        if (!gamma_vertices.count(v)) return "cross-cut vertex not used by any edge";
    // expansion property: petals pairwise disjoint and clear of V(Gamma)
    std::set<Vertex> petal_union;
    for (size_t i = 0; i < step.selected.size(); ++i) {
        const Edge& e = host.edge(step.selected[i]);
        for (Vertex v : e) {
            if (v == step.gamma[i].first || v == step.gamma[i].second) continue;
            if (gamma_vertices.count(v)) return "petal vertex lies in V(Gamma)";
            if (!petal_union.insert(v).second) return "petals of two edges intersect";
        }
    }
    if (step.regime == ExpansionRegime::MinDegreeP) {
        std::map<Vertex, int> deg;
        for (auto& [a, b] : step.gamma) { ++deg[a]; ++deg[b]; }
        for (auto& [v, d] : deg)
            if (d < min_degree_p)
                return "MinDegreeP regime but Gamma degree " + std::to_string(d) + " < p";
    } else {
        std::map<Vertex, int> sdeg;
        for (auto& [a, b] : step.gamma) ++sdeg[b];
        for (Vertex v : step.cross_cut)
            if (sdeg[v] != 1) return "CrosscutDegreeOne regime but an S-vertex has degree != 1";
    }
    if (static_cast<long long>(step.selected.size()) * size_denominator < pool_size)
        return "size bound |E*| >= |pool|/denominator failed";
    return {};
}

LeveledQuasiTree extend_quasi_tree(const Hypergraph& host, const LeveledQuasiTree& q,
                                   const ExpansionStep& step) {
    std::vector<QuasiTreeEdge> seg;
    for (size_t i = 0; i < step.selected.size(); ++i) {
        QuasiTreeEdge te;
        te.edge = step.selected[i];
        te.main = step.gamma[i].first;
        te.companion = step.gamma[i].second;
        te.child = -1;
        for (Vertex v : host.edge(te.edge))
            if (v != te.main && v != te.companion) { te.child = v; break; }
        if (te.child < 0) throw std::invalid_argument("extend_quasi_tree: edge too small");
        seg.push_back(te);
    }
    std::vector<std::vector<QuasiTreeEdge>> segments;
    for (int i = 0; i < q.height(); ++i) segments.push_back(q.segment(i));
    segments.push_back(std::move(seg));
    LeveledQuasiTree out = LeveledQuasiTree::from_segments(host, q.root(), std::move(segments));
    validate_quasi_tree(host, out);
    return out;
}

// --- closure surgeries ---

namespace {

// Walk upward from a bottom-level vertex until an edge containing x; edges
// returned top-down (x first). nullopt when the chain misses x.
std::optional<std::vector<EdgeId>> chain_to(const Hypergraph& host, const LeveledQuasiTree& q,
                                            Vertex x, Vertex target) {
    (void)host;
    std::vector<EdgeId> edges;
    Vertex cur = target;
    for (;;) {
        const QuasiTreeEdge* pe = q.parent_edge(cur);
        if (!pe) return std::nullopt;
        edges.push_back(pe->edge);
        if (pe->main == x || pe->companion == x) break;
        if (pe->main == q.root()) return std::nullopt; // reached the top without x
        cur = pe->main;
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

std::vector<Vertex> host_vertices_of(const Hypergraph& host, const std::vector<EdgeId>& ids) {
    return edge_vertices(host, ids);
}

struct PairGraph {
    Hypergraph graph;
    std::map<std::pair<Vertex, Vertex>, EdgeId> to_pool; // sorted pair -> pool edge
};

PairGraph build_pair_graph(const Hypergraph& host, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                           const std::vector<EdgeId>& pool_ids) {
    PairGraph out;
    std::vector<Edge> edges;
    for (size_t i = 0; i < pairs.size(); ++i) {
        Vertex a = pairs[i].first, b = pairs[i].second;
        if (a > b) std::swap(a, b);
        if (!out.to_pool.emplace(std::make_pair(a, b), pool_ids[i]).second)
            throw std::invalid_argument("pair graph: repeated pair");
        edges.push_back({a, b});
    }
    std::sort(edges.begin(), edges.end());
    out.graph = Hypergraph(host.vertex_count(), std::move(edges));
    return out;
}

std::vector<EdgeId> pool_edges_of_path(const PairGraph& pg, const PathCertificate& p) {
    std::vector<EdgeId> out;
    for (EdgeId id : p.edges) {
        const Edge& e = pg.graph.edge(id);
        out.push_back(pg.to_pool.at({e[0], e[1]}));
    }
    return out;
}

std::optional<CycleCertificate> try_cycle(const Hypergraph& host, std::vector<EdgeId> edges,
                                          int expected) {
    CycleCertificate cert{std::move(edges)};
    if (validate_linear_cycle(host, cert, expected)) return cert;
    return std::nullopt;
}

} // namespace

namespace detail {

std::optional<CycleCertificate> even_closure(const LinearHypergraph& g,
                                             const LeveledQuasiTree& tree,
                                             const std::vector<std::pair<Vertex, Vertex>>& bplus,
                                             int m) {
    const Hypergraph& host = g.graph();
    int h = tree.height();
    int r = host.uniformity().value_or(host.max_edge_size());
    if (h < 1 || bplus.empty()) return std::nullopt;
    const std::vector<Vertex>& lh = tree.main_level(h);
    std::map<Vertex, int> aindex;
    const std::vector<Vertex>& kids = tree.main_level(1);
    for (int ci = 0; ci < static_cast<int>(kids.size()); ++ci)
        for (Vertex v : descendants_at_bottom(tree, kids[ci])) aindex[v] = ci;

    std::set<std::pair<Vertex, Vertex>> pairset;
    std::set<Edge> bedgeset;
    for (auto [a, b] : bplus) {
        pairset.insert({a, b});
        bedgeset.insert(a < b ? Edge{a, b} : Edge{b, a});
    }
    Hypergraph bgraph(host.vertex_count(),
                      std::vector<Edge>(bedgeset.begin(), bedgeset.end()));
    std::set<Vertex> bverts;
    for (const Edge& e : bgraph.edges()) { bverts.insert(e[0]); bverts.insert(e[1]); }
    if (2LL * bgraph.edge_count() <
        4LL * r * m * static_cast<long long>(bverts.size()))
        return std::nullopt; // average degree below 4rm
    PeelResult peeled = peel_to_min_degree(bgraph, 2LL * m * r);
    if (peeled.graph.edge_count() == 0) return std::nullopt;
    const Hypergraph& bstar = peeled.graph;

    std::set<Vertex> lhset(lh.begin(), lh.end());
    Vertex x = -1;
    for (Vertex v = 0; v < bstar.vertex_count(); ++v)
        if (bstar.degree(v) > 0 && !lhset.count(v)) { x = v; break; }
    if (x < 0) return std::nullopt;

    int lrb = 2 * m - 2 * h - 2;
    if (lrb < 0) return std::nullopt;
    PathCertificate rb;
    rb.x = rb.y = x;
    if (lrb > 0) {
        std::vector<std::pair<Vertex, Vertex>> star_pairs;
        for (const Edge& e : bstar.edges()) star_pairs.push_back({e[0], e[1]});
        PairColoring phi = default_coloring(g, star_pairs);
        try {
            rb = rainbow_path(bstar, phi, x, lrb);
        } catch (const PreconditionViolated&) {
            return std::nullopt;
        }
    }
    Vertex y = rb.y;
    if (lhset.count(y)) return std::nullopt; // parity must land on the cover side

    std::vector<EdgeId> pplus;
    for (EdgeId id : rb.edges) {
        const Edge& e = bstar.edge(id);
        pplus.push_back(g.pairs().unique_edge(e[0], e[1]));
    }
    std::vector<Vertex> pv = host_vertices_of(host, pplus);

    auto attach = [&](Vertex at, int avoid_index, const std::vector<Vertex>& extra)
        -> std::optional<std::pair<EdgeId, Vertex>> {
        for (auto [u, qv] : pairset) {
            if (qv != at) continue;
            auto it = aindex.find(u);
            if (it == aindex.end() || it->second == avoid_index) continue;
            EdgeId he = g.pairs().unique_edge(u, qv);
            if (he < 0) continue;
            bool clean = true;
            for (Vertex w : host.edge(he)) {
                if (w == at) continue;
                if (sorted_contains(pv, w) || sorted_contains(extra, w)) { clean = false; break; }
            }
            if (clean) return std::make_pair(he, u);
        }
        return std::nullopt;
    };

    auto first_leg = attach(x, -1, {});
    if (!first_leg) return std::nullopt;
    auto [e1, u1] = *first_leg;
    std::vector<Vertex> e1v(host.edge(e1));
    auto second_leg = attach(y, aindex.at(u1), e1v);
    if (!second_leg) return std::nullopt;
    auto [f1, v1] = *second_leg;

    PathCertificate p1 = monotone_root_path(tree, host, u1);
    PathCertificate p2 = monotone_root_path(tree, host, v1);
    std::vector<EdgeId> cycle;
    cycle.push_back(e1);
    cycle.insert(cycle.end(), pplus.begin(), pplus.end());
    cycle.push_back(f1);
    cycle.insert(cycle.end(), p2.edges.rbegin(), p2.edges.rend());
    cycle.insert(cycle.end(), p1.edges.begin(), p1.edges.end());
    return try_cycle(host, std::move(cycle), 2 * m);
}

namespace {

struct ClosureSide {
    Vertex dominator;
    std::vector<Vertex> amain;  // per pool edge: its L_h vertex
    std::vector<Vertex> cross;  // per pool edge: its designated cross vertex
    std::vector<EdgeId> pool;
    std::set<Vertex> cross_set;
};

ClosureSide make_side(const Hypergraph& host, const LeveledQuasiTree& q,
                      const DominatedBlock& blk) {
    ClosureSide s;
    s.dominator = blk.dominator;
    s.pool = blk.pool_edges;
    s.cross = blk.cross;
    const std::vector<Vertex>& lh = q.main_level(q.height());
    for (EdgeId e : blk.pool_edges) {
        Vertex mv = -1;
        for (Vertex v : host.edge(e))
            if (sorted_contains(lh, v)) { mv = v; break; }
        s.amain.push_back(mv);
    }
    s.cross_set.insert(blk.cross.begin(), blk.cross.end());
    return s;
}

std::vector<Vertex> petal_of(const Hypergraph& host, EdgeId e, Vertex a, Vertex c) {
    std::vector<Vertex> out;
    for (Vertex v : host.edge(e))
        if (v != a && v != c) out.push_back(v);
    return out;
}

// y -> b'' path: monotone chain from the dominator to a neighbour of b''
// plus the pool edge, internally disjoint from `avoid`.
std::optional<std::vector<EdgeId>> reroute(const Hypergraph& host, const LeveledQuasiTree& q,
                                           const ClosureSide& side, Vertex bpp,
                                           const std::vector<Vertex>& avoid,
                                           const std::set<EdgeId>& banned_edges) {
    for (size_t i = 0; i < side.pool.size(); ++i) {
        if (side.cross[i] != bpp) continue;
        if (banned_edges.count(side.pool[i])) continue;
        auto chain = chain_to(host, q, side.dominator, side.amain[i]);
        if (!chain) continue;
        std::vector<EdgeId> path = *chain;
        path.push_back(side.pool[i]);
        bool clean = true;
        for (Vertex v : host_vertices_of(host, path)) {
            if (v == side.dominator || v == bpp) continue;
            if (sorted_contains(avoid, v)) { clean = false; break; }
        }
        if (clean) return path;
    }
    return std::nullopt;
}

Vertex level_vertex_of_edge(const Hypergraph& host, const LeveledQuasiTree& q, EdgeId e,
                            int level) {
    for (Vertex v : host.edge(e))
        if (q.main_level_of(v) == level) return v;
    return -1;
}

} // namespace

std::optional<CycleCertificate> odd_closure(const LinearHypergraph& g, const LeveledQuasiTree& q,
                                            const DominatedBlock& bx, const DominatedBlock& by,
                                            int m) {
    const Hypergraph& host = g.graph();
    int h = q.height();
    if (bx.pool_edges.size() != bx.cross.size() || by.pool_edges.size() != by.cross.size())
        throw std::invalid_argument("odd_closure: cross list not aligned with pool edges");
    ClosureSide sx = make_side(host, q, bx);
    ClosureSide sy = make_side(host, q, by);

    bool root_regime = bx.dominator == q.root() && by.dominator == q.root();
    bool companion_regime = false;
    int ilevel = 0;
    if (!root_regime) {
        if (bx.dominator == by.dominator) return std::nullopt;
        int mx = q.main_level_of(bx.dominator), my = q.main_level_of(by.dominator);
        int cx = q.companion_level_of(bx.dominator), cy = q.companion_level_of(by.dominator);
        if (mx >= 1 && mx == my) ilevel = mx;
        else if (cx >= 1 && cx == cy) { ilevel = cx; companion_regime = true; }
        else return std::nullopt;
    }

    PairGraph gamma_y = [&] {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (size_t i = 0; i < sy.pool.size(); ++i) pairs.push_back({sy.amain[i], sy.cross[i]});
        return build_pair_graph(host, pairs, sy.pool);
    }();
    auto phi_y = [&] {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (const Edge& e : gamma_y.graph.edges()) pairs.push_back({e[0], e[1]});
        return default_coloring(g, pairs);
    }();

    for (size_t ia = 0; ia < sx.pool.size(); ++ia) {
        for (size_t ib = 0; ib < sy.pool.size(); ++ib) {
            EdgeId ea = sx.pool[ia], eb = sy.pool[ib];
            if (ea == eb) continue;
            Vertex a = sx.amain[ia], b = sx.cross[ia];
            Vertex ap = sy.amain[ib], bp = sy.cross[ib];
            if (root_regime && (a == ap || b == bp)) continue; // independent pairs only
            auto pa = petal_of(host, ea, a, b);
            auto pb = petal_of(host, eb, ap, bp);
            if (sorted_disjoint(pa, pb)) continue;
            // color collision between the blocks; attempt the surgery
            std::vector<Vertex> forbidden_colors = pa;
            forbidden_colors.insert(forbidden_colors.end(), pb.begin(), pb.end());
            std::vector<Vertex> eav(host.edge(ea)), ebv(host.edge(eb));

            auto run_rainbow = [&](Vertex start, int len,
                                   const std::vector<Vertex>& extra_avoid)
                -> std::optional<PathCertificate> {
                std::set<Vertex> avoid(eav.begin(), eav.end());
                avoid.insert(ebv.begin(), ebv.end());
                avoid.insert(extra_avoid.begin(), extra_avoid.end());
                avoid.erase(start);
                try {
                    return rainbow_path(gamma_y.graph, phi_y, start, len, forbidden_colors,
                                        std::vector<Vertex>(avoid.begin(), avoid.end()));
                } catch (const PreconditionViolated&) {
                    return std::nullopt;
                } catch (const std::invalid_argument&) {
                    return std::nullopt;
                }
            };

            if (root_regime) {
                int len = 2 * m - 2 - 2 * h;
                if (len < 0) continue;
                auto rb = run_rainbow(bp, len, {});
                if (!rb) continue;
                Vertex bpp = rb->y;
                if (!sy.cross_set.count(bpp)) continue;
                std::vector<EdgeId> pplus = {ea, eb};
                auto mid = pool_edges_of_path(gamma_y, *rb);
                pplus.insert(pplus.end(), mid.begin(), mid.end());
                auto chain = chain_to(host, q, q.root(), a);
                if (!chain) continue;
                std::vector<Vertex> used = host_vertices_of(host, pplus);
                auto rv = host_vertices_of(host, *chain);
                used.insert(used.end(), rv.begin(), rv.end());
                std::sort(used.begin(), used.end());
                std::set<EdgeId> banned(pplus.begin(), pplus.end());
                auto back = reroute(host, q, sy, bpp, used, banned);
                if (!back) continue;
                std::vector<EdgeId> cycle = *chain;
                cycle.insert(cycle.end(), pplus.begin(), pplus.end());
                cycle.insert(cycle.end(), back->rbegin(), back->rend());
                if (auto c = try_cycle(host, std::move(cycle), 2 * m + 1)) return c;
                continue;
            }

            // claim 2 / claim 3 regimes
            auto chain_x = chain_to(host, q, bx.dominator, a);
            if (!chain_x) continue;
            std::vector<Vertex> rx = host_vertices_of(host, *chain_x);

            if (!companion_regime) {
                PathCertificate r0;
                try {
                    r0 = joining_path(host, q, bx.dominator, by.dominator);
                } catch (const std::exception&) {
                    continue;
                }
                int j = r0.length() / 2;
                int len = 2 * m - 2 - 2 * h + 2 * (ilevel - j);
                if (len < 0) continue;
                std::vector<Vertex> r0v = host_vertices_of(host, r0.edges);
                std::vector<Vertex> extra = rx;
                extra.insert(extra.end(), r0v.begin(), r0v.end());
                auto rb = run_rainbow(bp, len, extra);
                if (!rb) continue;
                Vertex bpp = rb->y;
                if (!sy.cross_set.count(bpp)) continue;
                std::vector<EdgeId> pplus = {ea, eb};
                auto mid = pool_edges_of_path(gamma_y, *rb);
                pplus.insert(pplus.end(), mid.begin(), mid.end());
                std::vector<Vertex> used = host_vertices_of(host, pplus);
                used.insert(used.end(), rx.begin(), rx.end());
                used.insert(used.end(), r0v.begin(), r0v.end());
                std::sort(used.begin(), used.end());
                std::set<EdgeId> banned(pplus.begin(), pplus.end());
                auto back = reroute(host, q, sy, bpp, used, banned);
                if (!back) continue;
                std::vector<EdgeId> cycle = *chain_x;
                cycle.insert(cycle.end(), pplus.begin(), pplus.end());
                cycle.insert(cycle.end(), back->rbegin(), back->rend());
                cycle.insert(cycle.end(), r0.edges.rbegin(), r0.edges.rend());
                if (auto c = try_cycle(host, std::move(cycle), 2 * m + 1)) return c;
                continue;
            }

            // claim 3: companion-level dominators
            Vertex xstar = level_vertex_of_edge(host, q, chain_x->front(), ilevel);
            if (xstar < 0) continue;
            int len1 = 2 * m - 2 - 2 * h;
            if (len1 < 0) continue;
            auto rb = run_rainbow(bp, len1, rx);
            if (!rb) continue;
            Vertex bpp = rb->y;
            if (!sy.cross_set.count(bpp)) continue;
            std::vector<EdgeId> pplus = {ea, eb};
            auto mid = pool_edges_of_path(gamma_y, *rb);
            pplus.insert(pplus.end(), mid.begin(), mid.end());
            std::vector<Vertex> used = host_vertices_of(host, pplus);
            used.insert(used.end(), rx.begin(), rx.end());
            std::sort(used.begin(), used.end());
            std::set<EdgeId> banned(pplus.begin(), pplus.end());
            auto back = reroute(host, q, sy, bpp, used, banned);
            if (!back) continue;
            Vertex ystar = level_vertex_of_edge(host, q, back->front(), ilevel);
            if (ystar < 0 || ystar == xstar) continue;
            PathCertificate r0;
            try {
                r0 = joining_path(host, q, xstar, ystar);
            } catch (const std::exception&) {
                continue;
            }
            int t = r0.length() / 2;
            if (t == ilevel) {
                std::vector<EdgeId> cycle = *chain_x;
                cycle.insert(cycle.end(), pplus.begin(), pplus.end());
                cycle.insert(cycle.end(), back->rbegin(), back->rend());
                cycle.insert(cycle.end(), r0.edges.rbegin(), r0.edges.rend());
                if (auto c = try_cycle(host, std::move(cycle), 2 * m + 1)) return c;
                continue;
            }
            // shortcut joining path: redo with an odd rainbow length, keeping
            // the dominator's first edge to bridge through y*
            EdgeId ey = back->front();
            int len2 = 2 * m - 2 * h + 2 * (ilevel - t) - 3;
            if (len2 < 1) continue;
            std::vector<Vertex> r0v = host_vertices_of(host, r0.edges);
            std::vector<Vertex> eyv(host.edge(ey));
            std::vector<Vertex> extra2 = rx;
            extra2.insert(extra2.end(), r0v.begin(), r0v.end());
            extra2.insert(extra2.end(), eyv.begin(), eyv.end());
            auto rb2 = run_rainbow(ap, len2, extra2);
            if (!rb2) continue;
            Vertex bpp2 = rb2->y;
            if (!sy.cross_set.count(bpp2)) continue;
            std::vector<EdgeId> pplus2 = {ea, eb};
            auto mid2 = pool_edges_of_path(gamma_y, *rb2);
            pplus2.insert(pplus2.end(), mid2.begin(), mid2.end());
            std::vector<Vertex> used2 = host_vertices_of(host, pplus2);
            used2.insert(used2.end(), rx.begin(), rx.end());
            used2.insert(used2.end(), r0v.begin(), r0v.end());
            for (Vertex v : eyv)
                if (v != by.dominator) used2.push_back(v);
            std::sort(used2.begin(), used2.end());
            std::set<EdgeId> banned2(pplus2.begin(), pplus2.end());
            banned2.insert(ey);
            auto back2 = reroute(host, q, sy, bpp2, used2, banned2);
            if (!back2) continue;
            std::vector<EdgeId> cycle = *chain_x;
            cycle.insert(cycle.end(), pplus2.begin(), pplus2.end());
            cycle.insert(cycle.end(), back2->rbegin(), back2->rend());
            cycle.push_back(ey);
            cycle.insert(cycle.end(), r0.edges.rbegin(), r0.edges.rend());
            if (auto c = try_cycle(host, std::move(cycle), 2 * m + 1)) return c;
        }
    }
    return std::nullopt;
}

} // namespace detail

// --- expansion lemmas ---

namespace {

int require_uniform(const Hypergraph& host, const char* who) {
    auto r = host.uniformity();
    if (!r || *r < 3)
        throw std::invalid_argument(std::string(who) + ": host must be r-uniform with r >= 3");
    return *r;
}

void check_pool_shape(const Hypergraph& host, const LeveledQuasiTree& q,
                      const std::vector<EdgeId>& pool, const char* who) {
    const std::vector<Vertex>& lh = q.main_level(q.height());
    std::set<EdgeId> seen;
    for (EdgeId id : pool) {
        if (id < 0 || id >= host.edge_count())
            throw std::invalid_argument(std::string(who) + ": pool edge id out of range");
        if (!seen.insert(id).second)
            throw std::invalid_argument(std::string(who) + ": repeated pool edge");
        int in_bottom = 0, in_tree = 0;
        for (Vertex v : host.edge(id)) {
            bool bottom = sorted_contains(lh, v);
            in_bottom += bottom ? 1 : 0;
            if (!bottom && q.contains_vertex(v)) ++in_tree;
        }
        if (in_bottom != 1 || in_tree != 0)
            throw PreconditionViolated(std::string(who) + ": pool edge " + std::to_string(id) +
                                       " must meet L_h exactly once and avoid the rest of the tree");
    }
}

long long checked_scale(long long a, long long b, const char* what) {
    if (a != 0 && b > std::numeric_limits<long long>::max() / a)
        throw std::overflow_error(std::string(what) + ": threshold overflows");
    return a * b;
}

// E* with E*\L_h a matching: designated cross vertex per edge, preferring the
// hint set when present (the recursive callers seed it with dominated cover
// vertices so cross-cuts land where the closure surgeries need them).
ExpansionStep matching_step(const Hypergraph& host, const LeveledQuasiTree& q,
                            const std::vector<EdgeId>& selected,
                            const std::set<Vertex>* hint) {
    const std::vector<Vertex>& lh = q.main_level(q.height());
    ExpansionStep st;
    st.regime = ExpansionRegime::CrosscutDegreeOne;
    std::set<Vertex> sset;
    for (EdgeId id : selected) {
        Vertex main = -1, cross = -1;
        for (Vertex v : host.edge(id))
            if (sorted_contains(lh, v)) { main = v; break; }
        if (hint) {
            for (Vertex v : host.edge(id))
                if (v != main && hint->count(v)) { cross = v; break; }
        }
        if (cross < 0) {
            for (Vertex v : host.edge(id))
                if (v != main) { cross = v; break; }
        }
        st.selected.push_back(id);
        st.gamma.push_back({main, cross});
        sset.insert(cross);
    }
    st.cross_cut.assign(sset.begin(), sset.end());
    return st;
}

std::vector<EdgeId> greedy_max_matching(const Hypergraph& f) {
    std::vector<EdgeId> out;
    std::set<Vertex> used;
    for (EdgeId id = 0; id < f.edge_count(); ++id) {
        const Edge& e = f.edge(id);
        if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return used.count(v) != 0; })) {
            out.push_back(id);
            used.insert(e.begin(), e.end());
        }
    }
    return out;
}

struct BipPair {
    Vertex main;
    Vertex cover;
    EdgeId pool;
};

std::vector<Vertex> detail_petal(const Hypergraph& host, const BipPair& bp) {
    std::vector<Vertex> out;
    for (Vertex v : host.edge(bp.pool))
        if (v != bp.main && v != bp.cover) out.push_back(v);
    return out;
}

} // namespace

ExpansionOutcome expand_level_even(const LinearHypergraph& g, const LeveledQuasiTree& tree,
                                   const std::vector<EdgeId>& pool, int m, std::uint64_t seed,
                                   long long budget) {
    const Hypergraph& host = g.graph();
    int r = require_uniform(host, "expand_level_even");
    if (m < 2) throw std::invalid_argument("expand_level_even: m must be >= 2");
    int h = tree.height();
    if (h > m - 1)
        throw PreconditionViolated("even-expansion: height " + std::to_string(h) + " exceeds m-1");
    if (!tree.tree_like())
        throw PreconditionViolated("even-expansion: quasi-tree is not tree-like");
    if (std::string why = quasi_tree_violation(host, tree); !why.empty())
        throw PreconditionViolated("even-expansion: tree invalid: " + why);
    check_pool_shape(host, tree, pool, "even-expansion");
    const std::vector<Vertex>& lh = tree.main_level(h);
    long long hypothesis =
        checked_scale(checked_pow(static_cast<long long>(m) << (r + 3), h, "even-expansion"),
                      static_cast<long long>(lh.size()), "even-expansion");
    if (static_cast<long long>(pool.size()) < hypothesis)
        throw PreconditionViolated("even-expansion: |E| = " + std::to_string(pool.size()) +
                                   " < (m 2^{r+3})^h |L_h| = " + std::to_string(hypothesis));
    long long denom = even_step_denominator(r, m, h);
    auto finish = [&](const std::vector<EdgeId>& sel, const char* stage) -> ExpansionOutcome {
        ExpansionStep st = matching_step(host, tree, sel, nullptr);
        if (std::string why = expansion_step_violation(host, tree, st, pool.size(), denom, 0);
            !why.empty())
            throw PreconditionViolated(std::string("even-expansion ") + stage + ": " + why);
        return st;
    };
    if (h == 0) return finish(pool, "base");

    // F = {e \ L_h}; sigma is a bijection because the host is linear
    std::vector<Edge> fedges;
    for (EdgeId id : pool) {
        Edge fe;
        for (Vertex v : host.edge(id))
            if (!sorted_contains(lh, v)) fe.push_back(v);
        fedges.push_back(std::move(fe));
    }
    Hypergraph f;
    try {
        f = Hypergraph(host.vertex_count(), std::move(fedges));
    } catch (const std::invalid_argument& e) {
        throw PreconditionViolated(std::string("even-expansion: pool not linear over L_h: ") +
                                   e.what());
    }
    CoverResult cover = min_vertex_cover(f, budget);
    std::vector<EdgeId> matching = greedy_max_matching(f);
    if (static_cast<long long>(matching.size()) * denom >=
        static_cast<long long>(pool.size())) {
        std::vector<EdgeId> sel;
        for (EdgeId fid : matching) sel.push_back(pool[static_cast<size_t>(fid)]);
        return finish(sel, "matching");
    }

    // matching too small: by the lemma a 2m-cycle must be reachable
    SplitRng rng = SplitRng(seed).split("even_expansion");
    CrossCutResult cc = cross_cut(f, cover.witness, rng.next_u64(), 64);
    std::set<Vertex> qprime(cc.cross_cut.begin(), cc.cross_cut.end());
    std::vector<BipPair> bpairs;
    for (EdgeId fid : cc.sub_edges) {
        EdgeId pe = pool[static_cast<size_t>(fid)];
        Vertex qv = -1, main = -1;
        for (Vertex v : f.edge(fid))
            if (qprime.count(v)) { qv = v; break; }
        for (Vertex v : host.edge(pe))
            if (sorted_contains(lh, v)) { main = v; break; }
        bpairs.push_back({main, qv, pe});
    }

    std::map<Vertex, int> aindex;
    const std::vector<Vertex>& kids = tree.main_level(1);
    for (int ci = 0; ci < static_cast<int>(kids.size()); ++ci)
        for (Vertex v : descendants_at_bottom(tree, kids[ci])) aindex[v] = ci;

    std::map<Vertex, std::set<int>> subtree_hits;
    for (const BipPair& bp : bpairs) subtree_hits[bp.cover].insert(aindex.at(bp.main));
    std::set<Vertex> qplus;
    for (auto& [v, hits] : subtree_hits)
        if (static_cast<long long>(hits.size()) >= 2LL * r * m) qplus.insert(v);
    long long bplus_sz = 0;
    for (const BipPair& bp : bpairs) bplus_sz += qplus.count(bp.cover) ? 1 : 0;
    long long b_sz = static_cast<long long>(bpairs.size());

    if (2 * bplus_sz >= b_sz) {
        if (static_cast<long long>(qplus.size()) * 4 * r * m >= bplus_sz)
            throw PreconditionViolated(
                "even-expansion case 1: cover-bound contradiction (matching small yet Q+ large)");
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (const BipPair& bp : bpairs)
            if (qplus.count(bp.cover)) pairs.push_back({bp.main, bp.cover});
        auto cyc = detail::even_closure(g, tree, pairs, m);
        if (cyc) return *cyc;
        throw PreconditionViolated(
            "even-expansion case 1: cycle closure failed (rainbow or attachment hypothesis)");
    }

    // case 2: thin cover vertices; recurse into heavy root subtrees
    std::map<Vertex, std::map<int, std::vector<EdgeId>>> by_cover;
    for (const BipPair& bp : bpairs)
        if (!qplus.count(bp.cover)) by_cover[bp.cover][aindex.at(bp.main)].push_back(bp.pool);
    std::map<int, std::vector<EdgeId>> b1; // subtree index -> kept pool edges
    long long b1_sz = 0;
    for (auto& [qv, groups] : by_cover) {
        int best = -1;
        size_t best_sz = 0;
        for (auto& [ai, edges] : groups)
            if (edges.size() > best_sz) { best = ai; best_sz = edges.size(); }
        if (best >= 0) {
            auto& dst = b1[best];
            dst.insert(dst.end(), groups[best].begin(), groups[best].end());
            b1_sz += static_cast<long long>(groups[best].size());
        }
    }
    long long light_thr_base =
        checked_pow(static_cast<long long>(m) << (r + 3), h - 1, "even-expansion");
    long long heavy_mass = 0;
    std::vector<int> heavy;
    for (auto& [ai, edges] : b1) {
        long long asz = static_cast<long long>(descendants_at_bottom(tree, kids[static_cast<size_t>(ai)]).size());
        if (static_cast<long long>(edges.size()) >= checked_scale(light_thr_base, asz, "even-expansion") &&
            !edges.empty()) {
            heavy.push_back(ai);
            heavy_mass += static_cast<long long>(edges.size());
        }
    }
    if (2 * heavy_mass < b1_sz)
        throw PreconditionViolated("even-expansion case 2: heavy subtree mass below |B1|/2");
    for (int ai : heavy) {
        LeveledQuasiTree sub = down_graph(tree, host, kids[static_cast<size_t>(ai)]);
        ExpansionOutcome out =
            expand_level_even(g, sub, b1[ai], m, rng.split(static_cast<std::uint64_t>(ai)).next_u64(), budget);
        if (std::holds_alternative<CycleCertificate>(out)) return out;
    }
    throw PreconditionViolated(
        "even-expansion case 2: every heavy subtree expanded yet the cover stayed small "
        "(the |E| hypothesis failed upstream)");
}

namespace {

ExpansionOutcome expand_odd_impl(const LinearHypergraph& g, const LeveledQuasiTree& q,
                                 const std::vector<EdgeId>& pool, int m, SplitRng rng,
                                 long long budget, const std::set<Vertex>* hint) {
    const Hypergraph& host = g.graph();
    int r = require_uniform(host, "expand_level_odd");
    if (m < 2) throw std::invalid_argument("expand_level_odd: m must be >= 2");
    int h = q.height();
    if (h > m - 1)
        throw PreconditionViolated("odd-expansion: height " + std::to_string(h) + " exceeds m-1");
    if (std::string why = quasi_tree_violation(host, q); !why.empty())
        throw PreconditionViolated("odd-expansion: quasi-tree invalid: " + why);
    check_pool_shape(host, q, pool, "odd-expansion");
    const std::vector<Vertex>& lh = q.main_level(h);
    long long p = odd_expansion_p(m, r);
    long long c = odd_expansion_c(m, r);
    long long ch = checked_pow(c, h, "odd-expansion");
    long long hypothesis = checked_scale(ch, static_cast<long long>(lh.size()), "odd-expansion");
    if (static_cast<long long>(pool.size()) < hypothesis)
        throw PreconditionViolated("odd-expansion: |E| = " + std::to_string(pool.size()) +
                                   " < c^h |L_h| = " + std::to_string(hypothesis));
    auto finish_matching = [&](const std::vector<EdgeId>& sel,
                               const char* stage) -> ExpansionOutcome {
        ExpansionStep st = matching_step(host, q, sel, hint);
        if (std::string why = expansion_step_violation(host, q, st, pool.size(), ch, 0);
            !why.empty())
            throw PreconditionViolated(std::string("odd-expansion ") + stage + ": " + why);
        return st;
    };
    if (h == 0) return finish_matching(pool, "base");

    std::vector<Edge> fedges;
    for (EdgeId id : pool) {
        Edge fe;
        for (Vertex v : host.edge(id))
            if (!sorted_contains(lh, v)) fe.push_back(v);
        fedges.push_back(std::move(fe));
    }
    Hypergraph f;
    try {
        f = Hypergraph(host.vertex_count(), std::move(fedges));
    } catch (const std::invalid_argument& e) {
        throw PreconditionViolated(std::string("odd-expansion: pool not linear over L_h: ") +
                                   e.what());
    }
    CoverResult cover = min_vertex_cover(f, budget);
    if (static_cast<long long>(cover.size) * ch >=
        static_cast<long long>(r - 1) * static_cast<long long>(pool.size())) {
        std::vector<EdgeId> matching = greedy_max_matching(f);
        if (static_cast<long long>(matching.size()) * ch < static_cast<long long>(pool.size()))
            throw PreconditionViolated(
                "odd-expansion: maximal matching fell below |E|/c^h despite a large cover");
        std::vector<EdgeId> sel;
        for (EdgeId fid : matching) sel.push_back(pool[static_cast<size_t>(fid)]);
        return finish_matching(sel, "matching");
    }

    // small-cover regime
    std::vector<Vertex> cc_cover =
        hint ? std::vector<Vertex>(hint->begin(), hint->end()) : cover.witness;
    CrossCutResult cc = cross_cut(f, cc_cover, rng.next_u64(), 64);
    std::set<Vertex> qprime(cc.cross_cut.begin(), cc.cross_cut.end());
    std::vector<BipPair> bpairs;
    for (EdgeId fid : cc.sub_edges) {
        EdgeId pe = pool[static_cast<size_t>(fid)];
        Vertex qv = -1, main = -1;
        for (Vertex v : f.edge(fid))
            if (qprime.count(v)) { qv = v; break; }
        for (Vertex v : host.edge(pe))
            if (sorted_contains(lh, v)) { main = v; break; }
        bpairs.push_back({main, qv, pe});
    }
    long long degree_cut = checked_pow(static_cast<long long>(m) * p * r, m, "odd-expansion");
    std::map<Vertex, std::vector<size_t>> at_cover;
    for (size_t i = 0; i < bpairs.size(); ++i) at_cover[bpairs[i].cover].push_back(i);
    long long bminus_sz = 0, b_sz = static_cast<long long>(bpairs.size());
    std::vector<Vertex> qplus;
    for (auto& [qv, rows] : at_cover) {
        if (static_cast<long long>(rows.size()) >= degree_cut) qplus.push_back(qv);
        else bminus_sz += static_cast<long long>(rows.size());
    }
    if (2 * bminus_sz >= b_sz)
        throw PreconditionViolated(
            "odd-expansion case 1: low-degree cover mass contradicts the small cover");

    // dominators for every high-degree cover vertex
    auto choose_dominator = [&](const std::vector<Vertex>& nby) -> Vertex {
        struct Cand { Vertex v; int level; std::vector<Vertex> share; };
        std::vector<Cand> cands;
        auto consider = [&](Vertex x, int level) {
            auto d = descendants_at_bottom(q, x);
            std::sort(d.begin(), d.end());
            Cand cd{x, level, sorted_intersection(d, nby)};
            if (!cd.share.empty()) cands.push_back(std::move(cd));
        };
        consider(q.root(), 0);
        for (int lvl = 1; lvl <= h - 1; ++lvl) {
            for (Vertex x : q.main_level(lvl)) consider(x, lvl);
            for (Vertex x : q.companion_level(lvl)) consider(x, lvl);
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.share.size() != b.share.size()) return a.share.size() > b.share.size();
            if (a.level != b.level) return a.level < b.level;
            return a.v < b.v;
        });
        long long share_denom =
            checked_pow(static_cast<long long>(h) * p * r, h - 1, "odd-expansion");
        for (const Cand& cd : cands) {
            if (static_cast<long long>(cd.share.size()) * share_denom <
                static_cast<long long>(nby.size()))
                continue;
            LeveledQuasiTree sub = down_graph(q, host, cd.v);
            if (sub.height() == 0) continue;
            if (static_cast<long long>(greedy_spider(host, sub, cd.share, static_cast<int>(p)).size()) >= p)
                return cd.v;
        }
        return -1;
    };

    std::map<Vertex, Vertex> alpha;
    for (Vertex qv : qplus) {
        std::set<Vertex> nb;
        for (size_t i : at_cover[qv]) nb.insert(bpairs[i].main);
        Vertex dom = choose_dominator(std::vector<Vertex>(nb.begin(), nb.end()));
        if (dom < 0)
            throw PreconditionViolated("odd-expansion: no dominator for cover vertex " +
                                       std::to_string(qv));
        alpha[qv] = dom;
    }

    // class masses: root, main levels, companion levels
    struct ClassKey {
        int kind; // 0 root, 1 main, 2 companion
        int level;
        bool operator<(const ClassKey& o) const {
            return kind != o.kind ? kind < o.kind : level < o.level;
        }
    };
    std::map<ClassKey, long long> class_mass;
    for (Vertex qv : qplus) {
        Vertex dom = alpha[qv];
        ClassKey key{0, 0};
        if (dom != q.root()) {
            int ml = q.main_level_of(dom);
            key = ml >= 1 ? ClassKey{1, ml} : ClassKey{2, q.companion_level_of(dom)};
        }
        class_mass[key] += static_cast<long long>(at_cover[qv].size());
    }
    ClassKey best_key{0, 0};
    long long best_mass = -1;
    for (auto& [key, mass] : class_mass)
        if (mass > best_mass) { best_key = key; best_mass = mass; }

    auto step_from_pairs = [&](const std::vector<size_t>& rows,
                               ExpansionRegime regime) -> ExpansionStep {
        ExpansionStep st;
        st.regime = regime;
        std::set<Vertex> sset;
        for (size_t i : rows) {
            st.selected.push_back(bpairs[i].pool);
            st.gamma.push_back({bpairs[i].main, bpairs[i].cover});
            sset.insert(bpairs[i].cover);
        }
        st.cross_cut.assign(sset.begin(), sset.end());
        return st;
    };

    if (best_key.kind == 0) {
        // subcase 2.1: dominators at the root
        std::vector<size_t> rows;
        for (Vertex qv : qplus)
            if (alpha[qv] == q.root())
                rows.insert(rows.end(), at_cover[qv].begin(), at_cover[qv].end());
        std::set<Vertex> bverts;
        for (size_t i : rows) { bverts.insert(bpairs[i].main); bverts.insert(bpairs[i].cover); }
        if (2LL * static_cast<long long>(rows.size()) <
            8LL * m * r * static_cast<long long>(bverts.size()))
            throw PreconditionViolated("odd-expansion subcase 2.1: block average degree below 8mr");
        std::vector<Edge> bedges;
        for (size_t i : rows) {
            Vertex a = bpairs[i].main, b = bpairs[i].cover;
            bedges.push_back(a < b ? Edge{a, b} : Edge{b, a});
        }
        std::sort(bedges.begin(), bedges.end());
        bedges.erase(std::unique(bedges.begin(), bedges.end()), bedges.end());
        Hypergraph b0(host.vertex_count(), std::move(bedges));
        PeelResult peeled = peel_to_min_degree(b0, p);
        if (peeled.graph.edge_count() == 0 ||
            2 * peeled.graph.edge_count() < b0.edge_count())
            throw PreconditionViolated("odd-expansion subcase 2.1: peel lost more than half the block");
        std::vector<size_t> kept;
        {
            std::set<std::pair<Vertex, Vertex>> keep_pairs;
            for (const Edge& e : peeled.graph.edges()) keep_pairs.insert({e[0], e[1]});
            for (size_t i : rows) {
                Vertex a = bpairs[i].main, b = bpairs[i].cover;
                if (a > b) std::swap(a, b);
                if (keep_pairs.count({a, b})) kept.push_back(i);
            }
        }
        // strong-rainbow verification: petals pairwise disjoint
        bool collision = false;
        for (size_t xi = 0; xi < kept.size() && !collision; ++xi)
            for (size_t yj = xi + 1; yj < kept.size(); ++yj) {
                auto pa = detail_petal(host, bpairs[kept[xi]]);
                auto pb = detail_petal(host, bpairs[kept[yj]]);
                if (!sorted_disjoint(pa, pb)) { collision = true; break; }
            }
        if (collision) {
            detail::DominatedBlock blk;
            blk.dominator = q.root();
            for (size_t i : kept) {
                blk.pool_edges.push_back(bpairs[i].pool);
                blk.cross.push_back(bpairs[i].cover);
            }
            auto cyc = detail::odd_closure(g, q, blk, blk, m);
            if (cyc) return *cyc;
            throw PreconditionViolated("odd-expansion subcase 2.1: closure failed on a rainbow collision");
        }
        ExpansionStep st = step_from_pairs(kept, ExpansionRegime::MinDegreeP);
        if (std::string why = expansion_step_violation(host, q, st, pool.size(), ch,
                                                       static_cast<int>(p));
            !why.empty())
            throw PreconditionViolated("odd-expansion subcase 2.1: " + why);
        return st;
    }

    // subcases 2.2 / 2.3: dominators in a main or companion level
    bool companion = best_key.kind == 2;
    int ilevel = best_key.level;
    std::map<Vertex, std::vector<size_t>> dblocks; // dominator -> D_x rows
    long long d_sz = 0;
    for (Vertex qv : qplus) {
        Vertex dom = alpha[qv];
        if (dom == q.root()) continue;
        int lvl = companion ? q.companion_level_of(dom) : q.main_level_of(dom);
        if (lvl != ilevel) continue;
        if (!companion && q.main_level_of(dom) < 0) continue;
        auto desc = descendants_at_bottom(q, dom);
        std::sort(desc.begin(), desc.end());
        for (size_t i : at_cover[qv])
            if (sorted_contains(desc, bpairs[i].main)) { dblocks[dom].push_back(i); ++d_sz; }
    }
    long long ch1 = checked_pow(c, h - 1, "odd-expansion");
    std::vector<Vertex> heavy;
    long long heavy_mass = 0;
    for (auto& [dom, rows] : dblocks) {
        long long asz = static_cast<long long>(descendants_at_bottom(q, dom).size());
        if (static_cast<long long>(rows.size()) > checked_scale(ch1, asz, "odd-expansion")) {
            heavy.push_back(dom);
            heavy_mass += static_cast<long long>(rows.size());
        }
    }
    if (2 * heavy_mass < d_sz)
        throw PreconditionViolated("odd-expansion subcase 2.2/2.3: heavy block mass below |D|/2");

    std::vector<detail::DominatedBlock> blocks;
    long long type2_mass = 0;
    for (Vertex dom : heavy) {
        std::vector<EdgeId> ex;
        std::set<Vertex> sub_hint;
        for (size_t i : dblocks[dom]) {
            ex.push_back(bpairs[i].pool);
            sub_hint.insert(bpairs[i].cover);
        }
        LeveledQuasiTree sub = down_graph(q, host, dom);
        ExpansionOutcome out = expand_odd_impl(
            g, sub, ex, m, rng.split(static_cast<std::uint64_t>(dom)), budget, &sub_hint);
        if (std::holds_alternative<CycleCertificate>(out)) return out;
        const ExpansionStep& st = std::get<ExpansionStep>(out);
        if (st.regime == ExpansionRegime::CrosscutDegreeOne) {
            type2_mass += static_cast<long long>(dblocks[dom].size());
            continue;
        }
        detail::DominatedBlock blk;
        blk.dominator = dom;
        blk.pool_edges = st.selected;
        for (auto& [a, s] : st.gamma) blk.cross.push_back(s);
        blocks.push_back(std::move(blk));
    }
    if (4 * type2_mass >= d_sz)
        throw PreconditionViolated(
            "odd-expansion subcase 2.2/2.3: type-2 mass implies a large cover "
            "(contradiction with the small-cover state)");

    // cross-block disjointness is claim 2/3; a collision yields the cycle
    std::vector<std::vector<Vertex>> block_verts;
    for (const auto& blk : blocks)
        block_verts.push_back(host_vertices_of(host, blk.pool_edges));
    for (size_t xi = 0; xi < blocks.size(); ++xi)
        for (size_t yj = xi + 1; yj < blocks.size(); ++yj) {
            if (sorted_disjoint(block_verts[xi], block_verts[yj])) continue;
            auto cyc = detail::odd_closure(g, q, blocks[xi], blocks[yj], m);
            if (cyc) return *cyc;
            throw PreconditionViolated(
                "odd-expansion claim 2/3: blocks collide but the closure failed");
        }
    ExpansionStep st;
    st.regime = ExpansionRegime::MinDegreeP;
    std::set<Vertex> sset;
    for (const auto& blk : blocks)
        for (size_t i = 0; i < blk.pool_edges.size(); ++i) {
            EdgeId pe = blk.pool_edges[i];
            Vertex main = -1;
            for (Vertex v : host.edge(pe))
                if (sorted_contains(lh, v)) { main = v; break; }
            st.selected.push_back(pe);
            st.gamma.push_back({main, blk.cross[i]});
            sset.insert(blk.cross[i]);
        }
    st.cross_cut.assign(sset.begin(), sset.end());
    if (std::string why =
            expansion_step_violation(host, q, st, pool.size(), ch, static_cast<int>(p));
        !why.empty())
        throw PreconditionViolated("odd-expansion subcase 2.2/2.3 assembly: " + why);
    return st;
}

} // namespace

ExpansionOutcome expand_level_odd(const LinearHypergraph& g, const LeveledQuasiTree& q,
                                  const std::vector<EdgeId>& pool, int m, std::uint64_t seed,
                                  long long budget) {
    return expand_odd_impl(g, q, pool, m, SplitRng(seed).split("odd_expansion"), budget,
                           nullptr);
}

} // namespace hyperlin

