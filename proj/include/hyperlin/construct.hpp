#pragma once

#include <cstdint>
#include <vector>

#include "hyperlin/certify.hpp"
#include "hyperlin/core.hpp"

namespace hyperlin {

struct APFreeSet {
    int n = 0;                 // range bound: elements lie in [1, n]
    std::vector<int> elements; // sorted
};

bool validate_ap3_free(const APFreeSet& s);

enum class APMode { Exact, Greedy };

// Maximum 3-AP-free subset of [1, n] (exact branch and bound for n <= 40) or
// the base-3 digit set {x+1 : x in [0,n), digits of x in {0,1}}.
APFreeSet ap3_free_max(int n, APMode mode, long long budget = kDefaultSearchBudget);

struct ConstructionReport {
    Hypergraph graph;
    int edges = 0;
    int girth_checked = 0;      // max length verified cycle-free
    std::uint64_t seed = 0;
    double keep_probability = 1.0; // deletion-method density (1 for deterministic builds)
    long long cycles_removed = 0;
};

// Ruzsa–Szemerédi tripartite 3-graph from a maximum AP-free set: edges
// {x, x+a, x+2a} over disjoint parts of sizes N, 2N, 3N. Linear and free of
// linear triangles by construction; both re-verified.
ConstructionReport rs_construction(int N, long long budget = kDefaultSearchBudget);

// Random greedy linear packing, then keep each edge with probability p chosen
// so the expected number of len-cycles is at most half the expected edges,
// then delete one edge from every surviving len-cycle. Deterministic per seed.
ConstructionReport random_packing_deletion(int n, int r, int len, std::uint64_t seed,
                                           long long budget = 200'000'000);

// Least-squares slope of log(edges) against log(n); needs >= 3 points with
// pairwise distinct n.
double exponent_fit(const std::vector<std::pair<double, double>>& points);

} // namespace hyperlin
