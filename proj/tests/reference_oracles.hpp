#ifndef SAW_TESTS_REFERENCE_ORACLES_HPP
#define SAW_TESTS_REFERENCE_ORACLES_HPP

// Test-only reference enumerators, deliberately written the slow and
// literal way so the production engine has something independent to agree
// with.

#include "saw/patch.hpp"

#include <optional>
#include <set>
#include <vector>

namespace saw::testing {

// sigma_n by plain recursion over neighbour sets rebuilt from the edge
// list; no visited-mask or work-splitting machinery.
struct NaiveVertexCounter {
    std::vector<std::set<VertexId>> adj;
    std::vector<long> counts;
    std::set<VertexId> visited;

    explicit NaiveVertexCounter(const FinitePatch& p) : adj(static_cast<size_t>(p.vertex_count())) {
        for (const auto& [u, v] : p.edges()) {
            adj[static_cast<size_t>(u)].insert(v);
            adj[static_cast<size_t>(v)].insert(u);
        }
    }

    void walk(VertexId v, int depth, int nmax) {
        ++counts[static_cast<size_t>(depth)];
        if (depth == nmax) return;
        for (VertexId u : adj[static_cast<size_t>(v)]) {
            if (visited.count(u)) continue;
            visited.insert(u);
            walk(u, depth + 1, nmax);
            visited.erase(u);
        }
    }

    std::vector<long> run(VertexId origin, int nmax) {
        counts.assign(static_cast<size_t>(nmax) + 1, 0);
        visited = {origin};
        walk(origin, 0, nmax);
        return counts;
    }
};

// Mid-edge walks following the definition literally: explicit sets of
// visited vertices and visited mid-edges.
struct NaiveMidEdgeCounter {
    const FinitePatch& p;
    std::vector<long> counts;
    std::set<VertexId> vertices;
    std::set<EdgeId> midedges;
    const std::optional<std::vector<bool>>& filter;

    NaiveMidEdgeCounter(const FinitePatch& patch, const std::optional<std::vector<bool>>& f)
        : p(patch), filter(f) {}

    bool accepts(EdgeId e) const { return !filter || (*filter)[static_cast<size_t>(e)]; }

    void walk(VertexId v, int m, int nmax) {
        const EdgeId* eb = p.incident_edges_begin(v);
        const VertexId* nb = p.neighbours_begin(v);
        for (int i = 0; i < p.degree(v); ++i) {
            if (!midedges.count(eb[i]) && accepts(eb[i])) ++counts[static_cast<size_t>(m)];
        }
        if (m == nmax) return;
        for (int i = 0; i < p.degree(v); ++i) {
            if (midedges.count(eb[i]) || vertices.count(nb[i])) continue;
            midedges.insert(eb[i]);
            vertices.insert(nb[i]);
            walk(nb[i], m + 1, nmax);
            vertices.erase(nb[i]);
            midedges.erase(eb[i]);
        }
    }

    std::vector<long> run(const std::vector<EdgeId>& starts, int nmax) {
        counts.assign(static_cast<size_t>(nmax) + 1, 0);
        for (EdgeId se : starts) {
            if (accepts(se)) ++counts[0];
            if (nmax == 0) continue;
            auto [a, b] = p.edge(se);
            for (VertexId first : {a, b}) {
                vertices = {first};
                midedges = {se};
                walk(first, 1, nmax);
            }
        }
        return counts;
    }
};

inline FinitePatch path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_patch(n, edges);
}

inline FinitePatch cycle_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_patch(n, edges);
}

inline FinitePatch petersen_graph() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_patch(10, edges);
}

} // namespace saw::testing

#endif
