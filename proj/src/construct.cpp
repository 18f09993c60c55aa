#include "hyperlin/construct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "hyperlin/rng.hpp"

namespace hyperlin {

bool validate_ap3_free(const APFreeSet& s) {
    if (!std::is_sorted(s.elements.begin(), s.elements.end())) return false;
    for (int v : s.elements)
        if (v < 1 || v > s.n) return false;
    std::set<int> in(s.elements.begin(), s.elements.end());
    if (in.size() != s.elements.size()) return false;
    for (size_t i = 0; i < s.elements.size(); ++i)
        for (size_t j = i + 1; j < s.elements.size(); ++j) {
            int c = 2 * s.elements[j] - s.elements[i]; // a, b -> c completes the AP
            if (c > s.elements[j] && in.count(c)) return false;
        }
    return true;
}

APFreeSet ap3_free_max(int n, APMode mode, long long budget) {
    if (n < 1) throw std::invalid_argument("ap3_free_max: n must be positive");
    APFreeSet out;
    out.n = n;
    if (mode == APMode::Greedy) {
        for (int x = 0; x < n; ++x) {
            int t = x;
            bool ok = true;
            while (t > 0) {
                if (t % 3 == 2) { ok = false; break; }
                t /= 3;
            }
            if (ok) out.elements.push_back(x + 1);
        }
        return out;
    }
    if (n > 40) throw BudgetExceeded("ap3_free_max: exact mode limited to n <= 40");
    std::vector<int> cur, best;
    long long nodes = 0;
    std::function<void(int)> rec = [&](int next) {
        if (++nodes > budget) throw BudgetExceeded("ap3_free_max: node budget exhausted");
        if (static_cast<int>(cur.size()) + (n - next + 1) <= static_cast<int>(best.size()))
            return;
        if (next > n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // include `next` when it completes no AP with two chosen elements
        bool ok = true;
        for (int b : cur) {
            int a = 2 * b - next;
            if (a < b && std::binary_search(cur.begin(), cur.end(), a)) { ok = false; break; }
        }
        if (ok) {
            cur.push_back(next);
            rec(next + 1);
            cur.pop_back();
        }
        rec(next + 1);
    };
    rec(1);
    out.elements = best;
    return out;
}

ConstructionReport rs_construction(int N, long long budget) {
    if (N < 1) throw std::invalid_argument("rs_construction: N must be positive");
    APFreeSet a = ap3_free_max(N, APMode::Exact, budget);
    std::vector<Edge> edges;
    for (int x = 1; x <= N; ++x)
        for (int av : a.elements) {
            // parts on disjoint index ranges [0,N), [N,3N), [3N,6N)
            Vertex vx = x - 1;
            Vertex vy = N + (x + av - 1);
            Vertex vz = 3 * N + (x + 2 * av - 1);
            edges.push_back({vx, vy, vz});
        }
    std::sort(edges.begin(), edges.end());
    Hypergraph g(6 * N, std::move(edges));
    ConstructionReport rep;
    rep.edges = g.edge_count();
    if (!is_linear(g)) throw std::logic_error("rs_construction: output not linear");
    if (find_linear_cycle(g, 3, budget))
        throw std::logic_error("rs_construction: output contains a linear triangle");
    rep.girth_checked = 3;
    rep.graph = std::move(g);
    return rep;
}

ConstructionReport random_packing_deletion(int n, int r, int len, std::uint64_t seed,
                                           long long budget) {
    if (n < r || len < 3) throw std::invalid_argument("random_packing_deletion: need n >= r, len >= 3");
    SplitRng rng = SplitRng(seed).split("packing_deletion");

    // (i) random greedy linear packing
    std::vector<char> pair_used(static_cast<size_t>(n) * n, 0);
    std::vector<Edge> packing;
    long long misses = 0;
    const long long miss_cap = 50LL * n;
    while (misses < miss_cap) {
        std::set<Vertex> chosen;
        while (static_cast<int>(chosen.size()) < r)
            chosen.insert(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
        Edge e(chosen.begin(), chosen.end());
        bool free = true;
        for (size_t i = 0; i < e.size() && free; ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                if (pair_used[static_cast<size_t>(e[i]) * n + e[j]]) { free = false; break; }
        if (!free) { ++misses; continue; }
        misses = 0;
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                pair_used[static_cast<size_t>(e[i]) * n + e[j]] = 1;
        packing.push_back(std::move(e));
    }
    std::sort(packing.begin(), packing.end());
    Hypergraph g0(n, std::move(packing));

    // (ii) deletion-method density: expected cycles at most half the expected
    // edges; cycle count taken exactly from the sampled packing
    long long cycles0 = count_linear_cycles(g0, len, budget);
    double p = 1.0;
    if (cycles0 > 0) {
        p = std::pow(static_cast<double>(g0.edge_count()) / (2.0 * static_cast<double>(cycles0)),
                     1.0 / static_cast<double>(len - 1));
        p = std::min(p, 1.0);
    }
    std::vector<EdgeId> kept;
    for (EdgeId id = 0; id < g0.edge_count(); ++id)
        if (rng.next_double01() < p) kept.push_back(id);
    Hypergraph sample = g0.restrict_edges(kept);

    // (iii) delete one edge from every len-cycle of the sample
    long long removed = 0;
    for (;;) {
        auto cyc = find_linear_cycle(sample, len, budget);
        if (!cyc) break;
        ++removed;
        std::vector<EdgeId> keep2;
        for (EdgeId id = 0; id < sample.edge_count(); ++id)
            if (id != cyc->edges.back()) keep2.push_back(id);
        sample = sample.restrict_edges(keep2);
    }

    if (!is_linear(sample))
        throw std::logic_error("random_packing_deletion: output not linear");
    if (find_linear_cycle(sample, len, budget))
        throw std::logic_error("random_packing_deletion: cycle survived deletion");

    ConstructionReport rep;
    rep.edges = sample.edge_count();
    rep.girth_checked = len;
    rep.seed = seed;
    rep.keep_probability = p;
    rep.cycles_removed = removed;
    rep.graph = std::move(sample);
    return rep;
}

double exponent_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("exponent_fit: need at least 3 points");
    std::set<double> xs;
    for (auto& [x, y] : points) {
        if (x <= 0 || y <= 0) throw std::invalid_argument("exponent_fit: nonpositive point");
        xs.insert(x);
    }
    if (xs.size() != points.size())
        throw std::invalid_argument("exponent_fit: n values must be pairwise distinct");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : points) {
        double lx = std::log(x), ly = std::log(y);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    double k = static_cast<double>(points.size());
    double denom = k * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw std::invalid_argument("exponent_fit: degenerate abscissae");
    return (k * sxy - sx * sy) / denom;
}

} // namespace hyperlin
