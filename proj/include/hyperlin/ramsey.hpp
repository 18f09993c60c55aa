#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperlin/certify.hpp"
#include "hyperlin/core.hpp"

namespace hyperlin {

// Iterated sunflower contraction: while some (a, r*len)-sunflower with core
// size >= 2 exists, replace one member by the core; finally drop superset
// edges. Preserves "no linear len-cycle" and never increases the independence
// number.
Hypergraph contract_sunflowers(const Hypergraph& g, int len,
                               long long budget = kDefaultSearchBudget);

struct TwoQResult {
    bool ok = false;
    std::optional<std::pair<Vertex, Vertex>> violating;
};

// (2,q)-linearity: no pair of vertices lies in q or more edges.
TwoQResult two_q_linearity(const Hypergraph& g, long long q);

// q = r!(p-1)^r, the sunflower-free pair bound.
long long sunflower_free_q(int r, int p);

// Greedy independent set in the pair-conflict graph (edges sharing >= 2
// vertices), minimum degree first: keeps at least 2|G|/(q r^2) edges.
LinearHypergraph linear_extract(const Hypergraph& g, long long q);

struct SparsityEntry {
    Vertex v = -1;
    long long pairs_in_neighborhood = 0;
    long long bound = 0;
    bool violated = false;
};

struct SparsityAudit {
    std::vector<SparsityEntry> entries;
    std::optional<CycleCertificate> located; // a len-cycle when some bound broke
};

// Per-vertex shadow density |D[N(v)]| against the r^{r+4} len |N(v)| bound.
SparsityAudit local_sparsity_audit(const LinearHypergraph& h, int len,
                                   long long budget = kDefaultSearchBudget);

using PartitionOrPath = std::variant<std::vector<std::vector<Vertex>>, PathCertificate>;

// Longest increasing linear path dynamic program: either <= len independent
// classes S_0..S_{len-1} or an increasing linear path of length len under the
// given vertex order (listed smallest to largest).
PartitionOrPath increasing_path_partition(const Hypergraph& h, const std::vector<Vertex>& order,
                                          int len);

bool validate_increasing_path(const Hypergraph& h, const std::vector<Vertex>& order,
                              const PathCertificate& p);

struct LevelIndependent {
    std::vector<std::vector<Vertex>> levels;      // BFS levels S_0, S_1, ... in the 2-edge graph
    std::vector<std::vector<Vertex>> independent; // per level i <= m
};

// BFS levels from v in the size-2 subgraph; per level an independent set of
// size >= |S_i|/(2m-1) via the increasing-path partition with the BFS order.
LevelIndependent bfs_level_independent(const Hypergraph& h, Vertex v, int m);

struct PipelineStage {
    std::string name;
    std::uint64_t digest = 0;
    std::map<std::string, long long> stats;
};

struct PipelineTrace {
    std::vector<PipelineStage> stages;
    std::vector<Vertex> independent_set; // independent in the ORIGINAL graph
    std::vector<long long> sizes_per_stage;
};

// The reduction pipeline: contract sunflowers, check (2,q)-linearity, restrict
// to low-degree vertices, then extract an independent set (greedy Caro-Wei on
// the shadow for even len; iterated BFS-level extraction for odd len),
// finished by greedy completion. The result is re-verified against the input.
PipelineTrace independent_set_pipeline(const Hypergraph& g, int len, bool verify_free = true,
                                       long long budget = kDefaultSearchBudget);

struct RamseyReport {
    int r = 0, len = 0, t = 0;
    int lo = 0, hi = 0; // R in [lo, hi]; lo == hi when exact
    bool exact = false;
    Hypergraph witness; // red graph on lo-1 vertices: len-cycle-free, alpha < t
    long long nodes = 0;
};

// Exact R(C^r_len, K^r_t) by exhaustive search over red graphs with symmetry
// pruning; budget exhaustion yields bounds.
RamseyReport ramsey_exact_small(int r, int len, int t, long long budget = kDefaultSearchBudget);

} // namespace hyperlin
