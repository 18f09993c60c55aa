#include "hyperlin/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hyperlin/rng.hpp"

namespace hyperlin {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    long long g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, std::optional<int> declared_uniformity)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    incidence_.assign(static_cast<size_t>(n), {});
    std::set<Edge> seen;
    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if (e.size() < 2) throw std::invalid_argument("Hypergraph: edge of size < 2");
        for (size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] >= e[i + 1])
                throw std::invalid_argument("Hypergraph: edge not strictly sorted");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("Hypergraph: vertex out of range");
        if (!seen.insert(e).second) throw std::invalid_argument("Hypergraph: duplicate edge");
        for (Vertex v : e) incidence_[static_cast<size_t>(v)].push_back(id);
        total_edge_size_ += static_cast<long long>(e.size());
        max_edge_size_ = std::max(max_edge_size_, static_cast<int>(e.size()));
    }
    if (!edges_.empty()) {
        int r = static_cast<int>(edges_.front().size());
        bool uniform = std::all_of(edges_.begin(), edges_.end(),
                                   [&](const Edge& e) { return static_cast<int>(e.size()) == r; });
        uniformity_ = uniform ? std::optional<int>(r) : std::nullopt;
        if (declared_uniformity && (!uniform || r != *declared_uniformity))
            throw std::invalid_argument("Hypergraph: edges do not match declared uniformity");
    } else {
        uniformity_ = declared_uniformity;
    }
}

Hypergraph Hypergraph::from_unsorted(int n, std::vector<std::vector<Vertex>> edges,
                                     std::optional<int> declared_uniformity) {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    return Hypergraph(n, std::move(edges), declared_uniformity);
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    if (sorted_edge.empty()) return false;
    Vertex v = sorted_edge.front();
    if (v < 0 || v >= n_) return false;
    for (EdgeId id : incidence_[static_cast<size_t>(v)])
        if (edges_[static_cast<size_t>(id)] == sorted_edge) return true;
    return false;
}

Hypergraph Hypergraph::restrict_edges(const std::vector<EdgeId>& keep) const {
    std::vector<Edge> es;
    es.reserve(keep.size());
    for (EdgeId id : keep) es.push_back(edge(id));
    return Hypergraph(n_, std::move(es));
}

Hypergraph Hypergraph::induced(const std::vector<Vertex>& vertices) const {
    std::vector<char> in(static_cast<size_t>(n_), 0);
    for (Vertex v : vertices) in[static_cast<size_t>(v)] = 1;
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        bool inside = std::all_of(e.begin(), e.end(),
                                  [&](Vertex v) { return in[static_cast<size_t>(v)] != 0; });
        if (inside) es.push_back(e);
    }
    return Hypergraph(n_, std::move(es));
}

std::uint64_t PairTable::key(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

PairTable::PairTable(const Hypergraph& g) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) {
                auto& slot = table_[key(e[i], e[j])];
                slot.push_back(id);
                if (slot.size() > 1 && linear_) {
                    linear_ = false;
                    violating_ = std::make_pair(e[i], e[j]);
                }
            }
    }
}

const std::vector<EdgeId>& PairTable::edges_of(Vertex a, Vertex b) const {
    auto it = table_.find(key(a, b));
    return it == table_.end() ? empty_ : it->second;
}

EdgeId PairTable::unique_edge(Vertex a, Vertex b) const {
    const auto& es = edges_of(a, b);
    return es.empty() ? -1 : es.front();
}

LinearHypergraph::LinearHypergraph(Hypergraph g) : g_(std::move(g)), pairs_(g_) {
    if (!pairs_.linear()) {
        auto [a, b] = *pairs_.violating_pair();
        throw std::invalid_argument("LinearHypergraph: pair {" + std::to_string(a) + "," +
                                    std::to_string(b) + "} lies in two edges");
    }
}

bool is_linear(const Hypergraph& g) { return PairTable(g).linear(); }

Hypergraph shadow2(const Hypergraph& g) {
    std::set<Edge> pairs;
    for (const Edge& e : g.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) pairs.insert({e[i], e[j]});
    return Hypergraph(g.vertex_count(), std::vector<Edge>(pairs.begin(), pairs.end()));
}

Hypergraph link(const Hypergraph& g, Vertex x) {
    if (x < 0 || x >= g.vertex_count()) throw std::invalid_argument("link: vertex out of range");
    std::vector<Edge> es;
    for (EdgeId id : g.incident(x)) {
        Edge e = g.edge(id);
        e.erase(std::find(e.begin(), e.end(), x));
        es.push_back(std::move(e));
    }
    return Hypergraph(g.vertex_count(), std::move(es));
}

LinearHypergraph expand(const Hypergraph& skeleton, int r) {
    if (r < 3) throw std::invalid_argument("expand: r must be at least 3");
    if (skeleton.uniformity().value_or(2) != 2)
        throw std::invalid_argument("expand: skeleton must be 2-uniform");
    int n = skeleton.vertex_count();
    Vertex fresh = n;
    std::vector<Edge> es;
    for (const Edge& e : skeleton.edges()) {
        Edge big = e;
        for (int k = 0; k < r - 2; ++k) big.push_back(fresh++);
        std::sort(big.begin(), big.end());
        es.push_back(std::move(big));
    }
    return LinearHypergraph(Hypergraph(fresh, std::move(es)));
}

PairColoring default_coloring(const LinearHypergraph& g,
                              const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    PairColoring out;
    for (auto [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        EdgeId id = g.pairs().unique_edge(a, b);
        if (id < 0)
            throw std::invalid_argument("default_coloring: pair {" + std::to_string(a) + "," +
                                        std::to_string(b) + "} not in the 2-shadow");
        std::vector<Vertex> color;
        for (Vertex v : g.graph().edge(id))
            if (v != a && v != b) color.push_back(v);
        out.colors[{a, b}] = std::move(color);
    }
    return out;
}

namespace {

bool sets_intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    // both sorted
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

bool pairs_incident(std::pair<Vertex, Vertex> p, std::pair<Vertex, Vertex> q) {
    return p.first == q.first || p.first == q.second || p.second == q.first ||
           p.second == q.second;
}

} // namespace

bool is_strongly_proper(const PairColoring& coloring) {
    for (auto it = coloring.colors.begin(); it != coloring.colors.end(); ++it)
        for (auto jt = std::next(it); jt != coloring.colors.end(); ++jt)
            if (pairs_incident(it->first, jt->first) && sets_intersect(it->second, jt->second))
                return false;
    return true;
}

bool is_strongly_rainbow(const PairColoring& coloring) {
    for (auto it = coloring.colors.begin(); it != coloring.colors.end(); ++it)
        for (auto jt = std::next(it); jt != coloring.colors.end(); ++jt)
            if (sets_intersect(it->second, jt->second)) return false;
    return true;
}

namespace {

PeelResult peel(const Hypergraph& g, auto should_remove) {
    int n = g.vertex_count();
    std::vector<char> removed_v(static_cast<size_t>(n), 0);
    std::vector<char> removed_e(static_cast<size_t>(g.edge_count()), 0);
    std::vector<int> deg(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);

    PeelResult out;
    for (;;) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (removed_v[static_cast<size_t>(v)]) continue;
            if (should_remove(deg[static_cast<size_t>(v)])) { pick = v; break; }
        }
        if (pick < 0) break;
        removed_v[static_cast<size_t>(pick)] = 1;
        out.removed.push_back(pick);
        for (EdgeId id : g.incident(pick)) {
            if (removed_e[static_cast<size_t>(id)]) continue;
            removed_e[static_cast<size_t>(id)] = 1;
            for (Vertex u : g.edge(id)) --deg[static_cast<size_t>(u)];
        }
    }
    std::vector<EdgeId> keep;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (!removed_e[static_cast<size_t>(id)]) keep.push_back(id);
    out.graph = g.restrict_edges(keep);
    return out;
}

} // namespace

PeelResult min_degree_peel(const Hypergraph& g, Rational threshold) {
    return peel(g, [&](int d) { return threshold.ge_int(d); });
}

PeelResult half_edge_peel(const Hypergraph& g, Rational d) {
    if (g.edge_count() == 0) throw std::invalid_argument("half_edge_peel: empty graph");
    if (g.uniformity().value_or(0) != 2)
        throw std::invalid_argument("half_edge_peel: graph must be 2-uniform");
    if (!(d == g.average_degree()))
        throw std::invalid_argument("half_edge_peel: d is not the average degree");
    Rational quarter = d.div(4);
    return peel(g, [&](int deg) { return quarter.gt_int(deg); });
}

PeelResult peel_to_min_degree(const Hypergraph& g, long long dmin) {
    return peel(g, [&](int deg) { return deg < dmin; });
}

std::vector<std::vector<Vertex>> degree_split(const LinearHypergraph& g, int t, Rational c,
                                              int m, std::uint64_t seed, int max_tries) {
    if (t < 1) throw std::invalid_argument("degree_split: t must be positive");
    const Hypergraph& h = g.graph();
    int n = h.vertex_count();
    int r = h.uniformity().value_or(h.max_edge_size());
    double threshold = c.to_double() / (2.0 * std::pow(static_cast<double>(t), r - 1)) *
                       std::pow(static_cast<double>(n), 1.0 / static_cast<double>(m));
    SplitRng rng = SplitRng(seed).split("degree_split");
    std::vector<int> color(static_cast<size_t>(n));
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        for (Vertex v = 0; v < n; ++v) color[static_cast<size_t>(v)] = rng.below_int(t);
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
            std::vector<int> count(static_cast<size_t>(t), 0);
            for (EdgeId id : h.incident(u)) {
                const Edge& e = h.edge(id);
                int part = -1;
                bool mono = true;
                for (Vertex v : e) {
                    if (v == u) continue;
                    if (part < 0) part = color[static_cast<size_t>(v)];
                    else if (color[static_cast<size_t>(v)] != part) { mono = false; break; }
                }
                if (mono && part >= 0) ++count[static_cast<size_t>(part)];
            }
            for (int i = 0; i < t; ++i)
                if (static_cast<double>(count[static_cast<size_t>(i)]) < threshold) { ok = false; break; }
        }
        if (ok) {
            std::vector<std::vector<Vertex>> parts(static_cast<size_t>(t));
            for (Vertex v = 0; v < n; ++v) parts[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
            return parts;
        }
    }
    throw FailedAfterRetries("degree_split: no partition met the per-part link bound after " +
                             std::to_string(max_tries) + " colorings (instance below the "
                             "probabilistic regime; reduce c or increase n)");
}

} // namespace hyperlin
