#pragma once

#include <optional>
#include <vector>

#include "hyperlin/core.hpp"

namespace hyperlin {

// Node budget for exact searches. Exhaustion throws BudgetExceeded, so a
// nullopt result always means "proven absent", never "gave up".
inline constexpr long long kDefaultSearchBudget = 10'000'000;

inline constexpr Vertex kAnyVertex = -1;

// Ordered edge list witnessing a linear cycle: consecutive edges share exactly
// one vertex, all other pairs are disjoint, and the shared vertices are
// pairwise distinct (the r-expansion of a graph cycle).
struct CycleCertificate {
    std::vector<EdgeId> edges;
    int length() const { return static_cast<int>(edges.size()); }
};

// Ordered edge list witnessing a linear path with designated endpoints x in
// the first edge and y in the last, both of path-degree 1.
struct PathCertificate {
    std::vector<EdgeId> edges;
    Vertex x = kAnyVertex;
    Vertex y = kAnyVertex;
    int length() const { return static_cast<int>(edges.size()); }
};

// p >= 2 member edges pairwise intersecting exactly in `core` (possibly empty).
struct SunflowerCertificate {
    std::vector<Vertex> core; // sorted
    std::vector<EdgeId> members;
};

// Edges e_1..e_l threaded by distinct vertices x_1..x_l, {x_i, x_{i+1}} in e_i
// cyclically.
struct BergeCycleCertificate {
    std::vector<EdgeId> edges;
    std::vector<Vertex> vertices;
};

bool validate_linear_cycle(const Hypergraph& host, const CycleCertificate& c,
                           int expected_length = -1);
bool validate_linear_path(const Hypergraph& host, const PathCertificate& c,
                          int expected_length = -1);
bool validate_sunflower(const Hypergraph& host, const SunflowerCertificate& c);
bool validate_berge_cycle(const Hypergraph& host, const BergeCycleCertificate& c,
                          int expected_length = -1);

// Backtracking search for a linear cycle of exactly `length` edges. First-edge
// candidates are ordered by minimum vertex degree (ties by edge id); within a
// cycle the first edge is the least edge id, which kills rotations and
// reflections.
std::optional<CycleCertificate> find_linear_cycle(const Hypergraph& g, int length,
                                                  long long budget = kDefaultSearchBudget);

// Count of distinct linear cycles (as edge sets) of exactly `length` edges.
long long count_linear_cycles(const Hypergraph& g, int length,
                              long long budget = kDefaultSearchBudget);

// Linear path of exactly `length` edges with prescribed endpoints (kAnyVertex
// leaves an endpoint free). Every path vertex other than the two endpoints
// must avoid `forbidden`.
std::optional<PathCertificate> find_linear_path(const Hypergraph& g, int length, Vertex x,
                                                Vertex y,
                                                const std::vector<Vertex>& forbidden = {},
                                                long long budget = kDefaultSearchBudget);

// Sunflower with `members` members and core size >= min_core_size. Candidate
// cores are the empty set plus all pairwise edge intersections, which is
// complete for sunflowers with >= 2 members; petal packing is exact.
std::optional<SunflowerCertificate> find_sunflower(const Hypergraph& g, int members,
                                                   int min_core_size = 0,
                                                   long long budget = kDefaultSearchBudget);

std::optional<BergeCycleCertificate> find_berge_cycle(const Hypergraph& g, int length,
                                                      long long budget = kDefaultSearchBudget);

enum class AlphaMode { Exact, Greedy };

struct AlphaResult {
    int size = 0;
    std::vector<Vertex> witness;
    bool exact = false;
};

// Maximum independent set (no edge fully inside the witness). Exact mode is a
// branch-and-bound transversal search, limited to n <= 40.
AlphaResult independence_number(const Hypergraph& g, AlphaMode mode,
                                long long budget = kDefaultSearchBudget);

struct CoverResult {
    int size = 0;
    std::vector<Vertex> witness;
};

// Exact minimum vertex cover (transversal) by branch and bound.
CoverResult min_vertex_cover(const Hypergraph& g, long long budget = kDefaultSearchBudget);

// Smallest cycle length in [3, max_length], or nullopt (= infinity).
std::optional<int> linear_girth(const LinearHypergraph& g, int max_length,
                                long long budget = kDefaultSearchBudget);

} // namespace hyperlin
