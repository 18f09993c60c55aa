#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperlin/certify.hpp"
#include "hyperlin/core.hpp"
#include "hyperlin/quasitree.hpp"

namespace hyperlin {

struct MatchingCoverResult {
    std::vector<EdgeId> matching; // greedy maximal, edge-id order
    int cover_bound = 0;          // exact tau when cover_exact, else |matching|
    bool cover_exact = false;
};

// Maximal matching plus the minimum-vertex-cover bound |M| >= tau/k.
// Exact tau by branch and bound when n <= 30.
MatchingCoverResult matching_from_cover(const Hypergraph& h,
                                        long long budget = kDefaultSearchBudget);

struct CrossCutResult {
    std::vector<EdgeId> sub_edges;  // H'
    std::vector<Vertex> cross_cut;  // S', meets each H'-edge exactly once
    int tries_used = 0;
};

// Randomized halving of a vertex cover until at least (k/2^k)|H| edges meet
// the sample in exactly one vertex. Expected O(1) tries; FailedAfterRetries
// past max_tries.
CrossCutResult cross_cut(const Hypergraph& h, const std::vector<Vertex>& cover,
                         std::uint64_t seed, int max_tries = 64);

// Greedy rainbow path of `length` edges from x in a 2-graph under a strongly
// proper coloring: all color sets pairwise disjoint and disjoint from
// forbidden_colors. Path vertices additionally avoid avoid_vertices (an
// extension used by the expansion closures). length 0 yields an empty path.
// Throws PreconditionViolated when a greedy step has no extension.
PathCertificate rainbow_path(const Hypergraph& b, const PairColoring& phi, Vertex x,
                             int length, const std::vector<Vertex>& forbidden_colors = {},
                             const std::vector<Vertex>& avoid_vertices = {});

// x,y in the same main level L_i of q: an even x,y-path of length <= 2i inside
// segments H_0..H_{i-1} meeting L_i only at its endpoints.
PathCertificate joining_path(const Hypergraph& host, const LeveledQuasiTree& q, Vertex x,
                             Vertex y);

struct Spider {
    Vertex center = -1;
    std::vector<PathCertificate> legs; // monotone, pairwise sharing only the center
};

struct SpiderResult {
    Spider spider;
    std::vector<Vertex> share; // V(H_x) ∩ targets
};

// Locate a vertex x whose down graph holds at least |targets|/(hpr)^{h-1} of
// the targets and a p-leg spider of monotone paths from x into them.
SpiderResult find_spider(const Hypergraph& host, const LeveledQuasiTree& q,
                         const std::vector<Vertex>& targets, int legs);

enum class ExpansionRegime { MinDegreeP, CrosscutDegreeOne };

struct ExpansionStep {
    std::vector<EdgeId> selected;                   // E*
    std::vector<Vertex> cross_cut;                  // S, sorted
    std::vector<std::pair<Vertex, Vertex>> gamma;   // per E*-edge: (main in L_h, S-vertex)
    ExpansionRegime regime = ExpansionRegime::CrosscutDegreeOne;
};

// Empty string when the step satisfies its contract against (host, q):
// cross-cut property, expansion property, regime, and |E*| * denom >= |pool|.
std::string expansion_step_violation(const Hypergraph& host, const LeveledQuasiTree& q,
                                     const ExpansionStep& step, long long pool_size,
                                     long long size_denominator, int min_degree_p);

using ExpansionOutcome = std::variant<ExpansionStep, CycleCertificate>;

// Even-cycle expansion: from a leveled linear tree of height h and an edge
// pool meeting L_h once each, either select E* with E*\L_h a matching and
// |E*| >= |pool|/(rm 2^{r+2})^h, or exhibit a linear cycle of length 2m.
ExpansionOutcome expand_level_even(const LinearHypergraph& g, const LeveledQuasiTree& tree,
                                   const std::vector<EdgeId>& pool, int m, std::uint64_t seed,
                                   long long budget = kDefaultSearchBudget);

// Odd-cycle expansion: from a leveled linear quasi-tree, either an
// ExpansionStep whose bipartite graph has min degree >= p = 2mr or all
// cross-cut degrees 1, with |E*| >= |pool|/c^h for c = 2^{r+2}(mpr)^m, or a
// linear cycle of length 2m+1.
ExpansionOutcome expand_level_odd(const LinearHypergraph& g, const LeveledQuasiTree& q,
                                  const std::vector<EdgeId>& pool, int m, std::uint64_t seed,
                                  long long budget = kDefaultSearchBudget);

enum class CycleParity { Even, Odd };

struct TheoremConstants {
    unsigned __int128 coefficient = 0;
    int exponent_num = 0; // exponent is 1 + 1/m = (m+1)/m
    int exponent_den = 1;
};

// c_{m,r} = 2 m^{r-1} (rm 2^{r+2})^m for even cycles;
// c'_{m,r} = 2 m^{r-1} c^m with c = 2^{r+2}(mpr)^m, p = 2mr for odd.
TheoremConstants theorem_constants(int r, int m, CycleParity parity);

long long odd_expansion_p(int m, int r);      // 2mr
long long odd_expansion_c(int m, int r);      // 2^{r+2} (mpr)^m
long long even_step_denominator(int r, int m, int h); // (rm 2^{r+2})^h
std::string to_string_u128(unsigned __int128 v);

// Appends a new segment built from an expansion step; children are the
// smallest free expansion vertex of each selected edge.
LeveledQuasiTree extend_quasi_tree(const Hypergraph& host, const LeveledQuasiTree& q,
                                   const ExpansionStep& step);

namespace detail {

// The closure surgeries of the expansion lemmas, exposed so the cycle-building
// branches can be driven directly on constructed instances (the counting
// hypotheses of the outer recursions are not satisfiable at desk scale).

// Dominated bipartite block at a main- or companion-level vertex x (or the
// root): pool edges pair A_x = L_h ∩ V(H_x) vertices with cross vertices
// outside the quasi-tree; x reaches every A_x vertex by its unique monotone
// path, which yields internally disjoint x,c-paths per cross vertex c.
struct DominatedBlock {
    Vertex dominator = -1;
    std::vector<EdgeId> pool_edges; // each edge meets L_h exactly once
    std::vector<Vertex> cross;      // aligned: the designated cross vertex per edge
};

// Closure surgery for the odd lemma. Handles all three regimes: both blocks at
// the root (the strongly-rainbow check of its first subcase), both dominators
// in the same main level (Claim 2), or the same companion level (Claim 3,
// including the joining-path shortcut re-dial). Looks for a default-color
// collision between the blocks and stitches a linear (2m+1)-cycle from it;
// nullopt when no collision exists or no disjoint re-routing closes it.
std::optional<CycleCertificate> odd_closure(const LinearHypergraph& g,
                                            const LeveledQuasiTree& q,
                                            const DominatedBlock& bx,
                                            const DominatedBlock& by, int m);

// Case-1 surgery of the even lemma: peel the bipartite graph to min degree
// 2rm, grow a rainbow path between two cover-side vertices, then close it
// through two different root subtrees. `bplus` holds (L_h vertex, cover
// vertex) pairs of pool edges. Exposed for constructed-instance tests.
std::optional<CycleCertificate> even_closure(const LinearHypergraph& g,
                                             const LeveledQuasiTree& tree,
                                             const std::vector<std::pair<Vertex, Vertex>>& bplus,
                                             int m);

} // namespace detail

} // namespace hyperlin
