#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperlin/errors.hpp"

namespace hyperlin {

using Vertex = int;
using EdgeId = int;
using Edge = std::vector<Vertex>; // strictly sorted vertex list, size >= 2

// Exact nonnegative rational, used for degree thresholds so peeling never
// depends on floating-point comparisons.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational of(long long n) { return Rational(n, 1); }

    bool le_int(long long x) const { return num <= x * den; }   // this <= x
    bool lt_int(long long x) const { return num < x * den; }    // this <  x
    bool ge_int(long long x) const { return num >= x * den; }
    bool gt_int(long long x) const { return num > x * den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational div(long long d) const { return Rational(num, den * d); }
    bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

// Immutable hypergraph on dense vertex indices 0..n-1. Edges are strictly
// sorted, duplicate-free, and pairwise distinct. `uniformity` is r when all
// edges have size r (may also be declared for an edgeless graph).
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<Edge> edges,
               std::optional<int> declared_uniformity = std::nullopt);

    // Convenience: sorts each edge before validating.
    static Hypergraph from_unsorted(int n, std::vector<std::vector<Vertex>> edges,
                                    std::optional<int> declared_uniformity = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<int> uniformity() const { return uniformity_; }
    int max_edge_size() const { return max_edge_size_; }

    int degree(Vertex v) const { return static_cast<int>(incidence_[static_cast<size_t>(v)].size()); }
    const std::vector<EdgeId>& incident(Vertex v) const { return incidence_[static_cast<size_t>(v)]; }

    long long total_edge_size() const { return total_edge_size_; }
    // Average degree as an exact rational: sum of edge sizes over n.
    Rational average_degree() const { return Rational(total_edge_size_, n_ == 0 ? 1 : n_); }

    bool has_edge(const Edge& sorted_edge) const;
    Hypergraph restrict_edges(const std::vector<EdgeId>& keep) const;
    // Subgraph induced by a vertex set: keeps edges entirely inside `vertices`.
    Hypergraph induced(const std::vector<Vertex>& vertices) const;

    bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<int> uniformity_;
    std::vector<std::vector<EdgeId>> incidence_;
    long long total_edge_size_ = 0;
    int max_edge_size_ = 0;
};

// Pair-occupancy table: every 2-subset of a host edge maps to the edges
// containing it. Backs O(1) linearity checks, default colorings, and the
// "unique edge through {a,b}" queries the algorithms make constantly.
class PairTable {
public:
    explicit PairTable(const Hypergraph& g);

    bool linear() const { return linear_; }
    std::optional<std::pair<Vertex, Vertex>> violating_pair() const { return violating_; }

    // Edges containing the pair {a,b} (any order).
    const std::vector<EdgeId>& edges_of(Vertex a, Vertex b) const;
    // The unique edge through {a,b}; -1 when absent. Requires a linear host.
    EdgeId unique_edge(Vertex a, Vertex b) const;
    bool covered(Vertex a, Vertex b) const { return !edges_of(a, b).empty(); }

private:
    std::uint64_t key(Vertex a, Vertex b) const;
    std::unordered_map<std::uint64_t, std::vector<EdgeId>> table_;
    std::vector<EdgeId> empty_;
    bool linear_ = true;
    std::optional<std::pair<Vertex, Vertex>> violating_;
};

// A Hypergraph whose edges pairwise intersect in at most one vertex.
// Construction validates via the pair table and throws std::invalid_argument
// with the violating pair otherwise.
class LinearHypergraph {
public:
    explicit LinearHypergraph(Hypergraph g);
    const Hypergraph& graph() const { return g_; }
    const PairTable& pairs() const { return pairs_; }

private:
    Hypergraph g_;
    PairTable pairs_;
};

// Default edge-coloring of shadow pairs: {a,b} -> e \ {a,b} for the unique
// host edge e through the pair. Colors are (r-2)-sets disjoint from the pair.
struct PairColoring {
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> colors;

    const std::vector<Vertex>* find(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        auto it = colors.find({a, b});
        return it == colors.end() ? nullptr : &it->second;
    }
};

struct PeelResult {
    Hypergraph graph;              // surviving edges on the original vertex universe
    std::vector<Vertex> removed;   // peeled vertices in removal order
};

// --- operations ---

bool is_linear(const Hypergraph& g);

// All pairs contained in some edge, as a 2-uniform hypergraph (deduplicated).
Hypergraph shadow2(const Hypergraph& g);

// {e \ {x} : x in e}; for a linear host the result is a matching.
Hypergraph link(const Hypergraph& g, Vertex x);

// r-expansion of a simple 2-uniform skeleton: each 2-edge gains r-2 fresh
// vertices, disjoint across edges. Vertices n..n+(r-2)|E|-1 are the expansion
// vertices of edges in order.
LinearHypergraph expand(const Hypergraph& skeleton, int r);

// Default coloring restricted to `pairs`; throws std::invalid_argument when a
// pair lies in no host edge.
PairColoring default_coloring(const LinearHypergraph& g,
                              const std::vector<std::pair<Vertex, Vertex>>& pairs);

// Whether incident pairs always receive disjoint color sets.
bool is_strongly_proper(const PairColoring& coloring);
// Whether all pairs receive pairwise disjoint color sets.
bool is_strongly_rainbow(const PairColoring& coloring);

// Iteratively delete vertices of degree <= threshold (smallest index first);
// the survivors all have degree > threshold.
PeelResult min_degree_peel(const Hypergraph& g, Rational threshold);

// 2-graphs: peel vertices of degree < d/4 where d is the average degree.
// Guarantees min degree >= d/4 and at least half the edges survive.
PeelResult half_edge_peel(const Hypergraph& g, Rational d);

// 2-graphs: peel vertices of degree < dmin. Caller guarantees average degree
// >= 2*dmin, which makes the survivor nonempty with min degree >= dmin.
PeelResult peel_to_min_degree(const Hypergraph& g, long long dmin);

// Random vertex partition into t parts such that every vertex u and part i has
// at least (c / 2t^{r-1}) n^{1/m} link edges entirely inside part i. Retries
// fresh colorings up to max_tries and throws FailedAfterRetries past that.
std::vector<std::vector<Vertex>> degree_split(const LinearHypergraph& g, int t, Rational c,
                                              int m, std::uint64_t seed, int max_tries);

} // namespace hyperlin
