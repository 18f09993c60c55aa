#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hyperlin/core.hpp"

// Shared internals of the exact searchers (extremal and ramsey).

namespace hyperlin::searchutil {

// Would adding `e` to the edge set create a linear cycle of exactly `len`
// edges through `e`? `incidence` maps each vertex to positions in `edges`.
bool adding_creates_cycle(int n, const std::vector<Edge>& edges,
                          const std::vector<std::vector<int>>& incidence, const Edge& e,
                          int len);

// Vertex fingerprints of (edge set, marked edge) after three refinement
// rounds; invariant under any vertex permutation preserving that structure.
std::vector<std::uint64_t> refined_fingerprints(int n, const std::vector<Edge>& edges,
                                                const std::vector<std::vector<int>>& incidence,
                                                const Edge& marked);

// Explicitly search a vertex permutation fixing the edge set (as a set) and
// mapping `from_e` onto `to_e`; fingerprints prune the image candidates. A
// node cap keeps it cheap: failure means "no certificate", never "unsound".
bool certified_automorphism(int n, const std::set<Edge>& edge_set, const Edge& from_e,
                            const Edge& to_e, const std::vector<std::uint64_t>& fp_from,
                            const std::vector<std::uint64_t>& fp_to, long long cap = 200000);

} // namespace hyperlin::searchutil
