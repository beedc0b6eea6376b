#include "saw/gadget.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace saw {

int Gadget::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) d = std::max(d, graph.degree(v));
    return d;
}

int Gadget::diameter() const {
    int diam = 0;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        for (std::int32_t d : graph.bfs_distances(v)) {
            if (d < 0) throw SawError(ErrorCode::Disconnected, "gadget graph is disconnected");
            diam = std::max(diam, static_cast<int>(d));
        }
    }
    return diam;
}

namespace {

struct AutomorphismSearch {
    const FinitePatch& g;
    VertexId n;
    std::vector<bool> adj;                 // dense n*n matrix
    std::vector<VertexId> image;
    std::vector<bool> used;
    std::vector<std::vector<VertexId>> found;

    explicit AutomorphismSearch(const FinitePatch& graph)
        : g(graph), n(graph.vertex_count()), adj(static_cast<size_t>(n) * static_cast<size_t>(n), false),
          image(static_cast<size_t>(n), -1), used(static_cast<size_t>(n), false) {
        for (const auto& [u, v] : g.edges()) {
            adj[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)] = true;
            adj[static_cast<size_t>(v) * static_cast<size_t>(n) + static_cast<size_t>(u)] = true;
        }
    }

    bool adjacent(VertexId a, VertexId b) const {
        return adj[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)];
    }

    void extend(VertexId v) {
        if (v == n) {
            found.emplace_back(image);
            return;
        }
        for (VertexId w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)] || g.degree(v) != g.degree(w)) continue;
            bool ok = true;
            for (VertexId u = 0; u < v; ++u) {
                if (adjacent(u, v) != adjacent(image[static_cast<size_t>(u)], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = true;
            extend(v + 1);
            used[static_cast<size_t>(w)] = false;
            image[static_cast<size_t>(v)] = -1;
        }
    }
};

} // namespace

std::vector<std::vector<VertexId>> find_automorphisms(const FinitePatch& graph) {
    AutomorphismSearch search(graph);
    search.extend(0);
    return std::move(search.found);
}

GadgetValidation validate_gadget(const Gadget& g) {
    const auto& [w1, w2, w3] = g.ports;
    if (w1 == w2 || w1 == w3 || w2 == w3) {
        throw SawError(ErrorCode::PortsNotDistinct, "gadget ports must be pairwise distinct");
    }
    for (VertexId p : g.ports) {
        if (p < 0 || p >= g.graph.vertex_count()) {
            throw SawError(ErrorCode::VertexOutOfRange, "port index out of range");
        }
    }
    for (std::int32_t d : g.graph.bfs_distances(0)) {
        if (d < 0) throw SawError(ErrorCode::Disconnected, "gadget graph is disconnected");
    }

    GadgetValidation report;
    report.automorphisms = find_automorphisms(g.graph);

    auto is_port = [&](VertexId v) { return v == w1 || v == w2 || v == w3; };
    for (const auto& perm : report.automorphisms) {
        if (is_port(perm[static_cast<size_t>(w1)]) && is_port(perm[static_cast<size_t>(w2)]) &&
            is_port(perm[static_cast<size_t>(w3)])) {
            report.port_stabilizers.push_back(perm);
        }
    }

    std::array<bool, 3> reached{true, false, false};
    for (const auto& perm : report.port_stabilizers) {
        VertexId img = perm[static_cast<size_t>(w1)];
        if (img == w2) reached[1] = true;
        if (img == w3) reached[2] = true;
    }
    report.port_transitive = reached[0] && reached[1] && reached[2];
    if (report.port_transitive) {
        report.note =
            "port stabilizer acts transitively on the three ports; any transitive subgroup of the "
            "symmetric group on three points contains a 3-cycle, so it is transitive on unordered "
            "port pairs and the two-port series is independent of the pair chosen";
    } else {
        report.note = "port stabilizer fixes a port; two-port series may depend on the pair chosen";
    }
    return report;
}

Gadget complete_gadget(int n) {
    if (n < 3) throw SawError(ErrorCode::NTooSmall, "complete gadget needs N >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    Gadget g;
    g.graph = build_patch(n, edges);
    g.ports = {0, 1, 2};
    return g;
}

Gadget fisher() { return complete_gadget(3); }

CountPolynomial kn_genfun_closed_form(int n) {
    if (n < 3) throw SawError(ErrorCode::NTooSmall, "closed form needs N >= 3");
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1, BigInt(0));
    BigInt falling = 1;   // (N-2)(N-3)...(N-m+1), empty product for m = 2
    for (int m = 2; m <= n; ++m) {
        coeffs[static_cast<size_t>(m)] = falling;
        falling *= (n - m);
    }
    return CountPolynomial(std::move(coeffs));
}

Gadget generalized_fisher(const FinitePatch& h, VertexId v1, VertexId v2) {
    if (v1 == v2) throw SawError(ErrorCode::IdenticalTerminals, "terminals must be distinct");
    VertexId hn = h.vertex_count();
    if (v1 < 0 || v1 >= hn || v2 < 0 || v2 >= hn) {
        throw SawError(ErrorCode::VertexOutOfRange, "terminal index out of range");
    }
    for (std::int32_t d : h.bfs_distances(0)) {
        if (d < 0) throw SawError(ErrorCode::Disconnected, "template graph is disconnected");
    }

    // Ports 0,1,2 are the identified terminals; copy i glues its v2 onto
    // copy i+1's v1. Interior vertices of copy i start at 3 + i*(|H|-2).
    std::vector<VertexId> interior_rank(static_cast<size_t>(hn), -1);
    VertexId rank = 0;
    for (VertexId u = 0; u < hn; ++u) {
        if (u != v1 && u != v2) interior_rank[static_cast<size_t>(u)] = rank++;
    }
    auto mapped = [&](int copy, VertexId u) -> VertexId {
        if (u == v1) return static_cast<VertexId>(copy);
        if (u == v2) return static_cast<VertexId>((copy + 1) % 3);
        return static_cast<VertexId>(3 + copy * (hn - 2) + interior_rank[static_cast<size_t>(u)]);
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int copy = 0; copy < 3; ++copy) {
        for (const auto& [a, b] : h.edges()) edges.emplace_back(mapped(copy, a), mapped(copy, b));
    }

    Gadget g;
    g.graph = build_patch(3 * hn - 3, edges);
    g.ports = {0, 1, 2};
    return g;
}

AugmentedGadget augment_with_port_edges(const Gadget& g) {
    VertexId n = g.graph.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> edges = g.graph.edges();
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(g.ports[static_cast<size_t>(i)], n + i);
    }
    AugmentedGadget out;
    out.patch = build_patch(n + 3, edges, std::nullopt, g.graph.origin());
    for (int i = 0; i < 3; ++i) {
        out.port_edges[static_cast<size_t>(i)] = out.patch.find_edge(g.ports[static_cast<size_t>(i)], n + i);
    }
    return out;
}

} // namespace saw
