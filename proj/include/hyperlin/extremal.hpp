#pragma once

#include <vector>

#include "hyperlin/certify.hpp"
#include "hyperlin/core.hpp"

namespace hyperlin {

struct ExtremalReport {
    int n = 0, r = 0, len = 0; // len = 0 means no cycle constraint (packing)
    int lo = 0, hi = 0;        // lo == hi when exact
    bool exact = false;
    Hypergraph witness;        // best graph found (lo edges)
    long long nodes = 0;
    long long packing_bound = 0; // floor(n/r * floor((n-1)/(r-1)))
};

long long packing_upper_bound(int n, int r);

// Exact linear Turán number ex_L(n, C^r_len) by branch and bound over
// lex-increasing edge additions. Sibling subtrees are skipped only when a
// parent automorphism mapping the new edge onto an explored sibling is
// certified explicitly; fingerprints merely guide the matching. On budget
// exhaustion returns sound bounds with exact = false.
ExtremalReport ex_linear(int n, int r, int len, long long budget = 50'000'000);

// The same search without the isomorphism skip: the independent oracle.
ExtremalReport ex_linear_unpruned(int n, int r, int len, long long budget = 50'000'000);

// Maximum number of edges of a linear r-graph on n vertices.
ExtremalReport max_linear_packing(int n, int r, long long budget = 50'000'000);

std::vector<ExtremalReport> turan_table(int n_lo, int n_hi, int r, int len,
                                        long long budget = 50'000'000);

// Brown–Erdős–Sós (6,3)-condition: no three distinct triples span six or
// fewer vertices.
bool satisfies_63(const Hypergraph& g);

// Maximum triple system on n vertices satisfying the (6,3)-condition
// (searched over all triple systems, not only linear ones).
ExtremalReport f3_663_max(int n, long long budget = 50'000'000);

} // namespace hyperlin
