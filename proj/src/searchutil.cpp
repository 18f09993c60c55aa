#include "hyperlin/searchutil.hpp"

#include <algorithm>
#include <functional>

namespace hyperlin::searchutil {

bool adding_creates_cycle(int n, const std::vector<Edge>& edges,
                          const std::vector<std::vector<int>>& incidence, const Edge& e,
                          int len) {
    if (len < 3) return false;
    std::vector<char> used_edge(edges.size(), 0);
    std::vector<char> used_v(static_cast<size_t>(n), 0);
    for (Vertex v : e) used_v[static_cast<size_t>(v)] = 1;
    Vertex first_connector = -1;
    std::function<bool(const Edge&, Vertex, int)> grow = [&](const Edge& last, Vertex prev,
                                                             int depth) -> bool {
        for (Vertex w : last) {
            if (w == prev) continue;
            for (int pos : incidence[static_cast<size_t>(w)]) {
                if (used_edge[static_cast<size_t>(pos)]) continue;
                const Edge& f = edges[static_cast<size_t>(pos)];
                bool closing = depth == len - 1;
                int hits = 0;
                Vertex close_at = -1;
                bool ok = true;
                for (Vertex u : f) {
                    if (!used_v[static_cast<size_t>(u)]) continue;
                    if (u == w) { ++hits; continue; }
                    if (closing && close_at < 0 && u != first_connector &&
                        std::binary_search(e.begin(), e.end(), u)) {
                        close_at = u;
                        continue;
                    }
                    ok = false;
                    break;
                }
                if (!ok || hits != 1) continue;
                if (closing) {
                    if (close_at >= 0) return true;
                    continue;
                }
                used_edge[static_cast<size_t>(pos)] = 1;
                std::vector<Vertex> fresh;
                for (Vertex u : f)
                    if (!used_v[static_cast<size_t>(u)]) {
                        used_v[static_cast<size_t>(u)] = 1;
                        fresh.push_back(u);
                    }
                Vertex saved = first_connector;
                if (depth == 1) first_connector = w;
                bool done = grow(f, w, depth + 1);
                first_connector = saved;
                for (Vertex u : fresh) used_v[static_cast<size_t>(u)] = 0;
                used_edge[static_cast<size_t>(pos)] = 0;
                if (done) return true;
            }
        }
        return false;
    };
    return grow(e, -1, 1);
}

std::vector<std::uint64_t> refined_fingerprints(int n, const std::vector<Edge>& edges,
                                                const std::vector<std::vector<int>>& incidence,
                                                const Edge& marked) {
    std::vector<std::uint64_t> color(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        bool inm = std::binary_search(marked.begin(), marked.end(), v);
        color[static_cast<size_t>(v)] =
            0x9e3779b97f4a7c15ULL * (incidence[static_cast<size_t>(v)].size() + 1) ^
            (inm ? 0x5851f42d4c957f2dULL : 0);
    }
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::uint64_t> sig;
            for (int pos : incidence[static_cast<size_t>(v)]) {
                std::uint64_t h = 1469598103934665603ULL;
                for (Vertex u : edges[static_cast<size_t>(pos)])
                    if (u != v) h = (h ^ color[static_cast<size_t>(u)]) * 1099511628211ULL;
                sig.push_back(h);
            }
            bool inm = std::binary_search(marked.begin(), marked.end(), v);
            std::uint64_t extra = 1469598103934665603ULL;
            if (inm)
                for (Vertex u : marked)
                    if (u != v) extra = (extra ^ color[static_cast<size_t>(u)]) * 1099511628211ULL;
            std::sort(sig.begin(), sig.end());
            std::uint64_t h = color[static_cast<size_t>(v)] * 31 + (inm ? 77 : 0);
            for (std::uint64_t s : sig) h = (h ^ s) * 1099511628211ULL;
            h = (h ^ extra) * 1099511628211ULL;
            next[static_cast<size_t>(v)] = h;
        }
        color = std::move(next);
    }
    return color;
}

bool certified_automorphism(int n, const std::set<Edge>& edge_set, const Edge& from_e,
                            const Edge& to_e, const std::vector<std::uint64_t>& fp_from,
                            const std::vector<std::uint64_t>& fp_to, long long cap) {
    std::vector<Vertex> image(static_cast<size_t>(n), -1);
    std::vector<char> taken(static_cast<size_t>(n), 0);
    std::function<bool(Vertex)> place = [&](Vertex v) -> bool {
        if (v == n) {
            for (const Edge& e : edge_set) {
                Edge img;
                for (Vertex u : e) img.push_back(image[static_cast<size_t>(u)]);
                std::sort(img.begin(), img.end());
                if (!edge_set.count(img)) return false;
            }
            Edge img;
            for (Vertex u : from_e) img.push_back(image[static_cast<size_t>(u)]);
            std::sort(img.begin(), img.end());
            return img == to_e;
        }
        for (Vertex u = 0; u < n; ++u) {
            if (taken[static_cast<size_t>(u)]) continue;
            if (fp_from[static_cast<size_t>(v)] != fp_to[static_cast<size_t>(u)]) continue;
            if (--cap < 0) return false;
            image[static_cast<size_t>(v)] = u;
            taken[static_cast<size_t>(u)] = 1;
            if (place(v + 1)) return true;
            taken[static_cast<size_t>(u)] = 0;
            image[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return place(0);
}

} // namespace hyperlin::searchutil
