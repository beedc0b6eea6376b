#include "saw/transform.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <string>

namespace saw {

std::vector<bool> TransformedPatch::surviving_edge_filter() const {
    std::vector<bool> accept(static_cast<std::size_t>(patch.edge_count()), false);
    for (EdgeId e : original_edge_map) accept[static_cast<std::size_t>(e)] = true;
    return accept;
}

namespace {

// Shared rewriting core: `choice[v]` names the gadget replacing v, or null
// to keep v. Untouched vertices keep their relative order and precede the
// gadget blocks.
TransformedPatch transform_by_choice(const FinitePatch& patch,
                                     const std::vector<const Gadget*>& choice) {
    VertexId nv = patch.vertex_count();
    std::vector<VertexId> new_index(static_cast<std::size_t>(nv), -1);
    TransformedPatch out;
    out.site_map.assign(static_cast<std::size_t>(nv), std::nullopt);

    VertexId next = 0;
    for (VertexId v = 0; v < nv; ++v) {
        if (choice[static_cast<std::size_t>(v)] == nullptr) {
            new_index[static_cast<std::size_t>(v)] = next++;
            out.untouched.push_back(v);
        }
    }
    for (VertexId v = 0; v < nv; ++v) {
        const Gadget* g = choice[static_cast<std::size_t>(v)];
        if (g != nullptr) {
            out.site_map[static_cast<std::size_t>(v)] = std::make_pair(next, next + g->vertex_count());
            next += g->vertex_count();
        }
    }

    // Incident edges of a replaced vertex, in canonical edge order, attach
    // to ports w1, w2, w3 in order. CSR rows are already edge-id sorted.
    auto attachment = [&](VertexId v, EdgeId e) -> VertexId {
        const Gadget* g = choice[static_cast<std::size_t>(v)];
        const EdgeId* begin = patch.incident_edges_begin(v);
        const EdgeId* end = patch.incident_edges_end(v);
        int slot = static_cast<int>(std::find(begin, end, e) - begin);
        return out.site_map[static_cast<std::size_t>(v)]->first +
               g->ports[static_cast<std::size_t>(slot)];
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<VertexId, VertexId>> surviving;   // parallel to patch.edges()
    surviving.reserve(static_cast<std::size_t>(patch.edge_count()));
    for (EdgeId e = 0; e < patch.edge_count(); ++e) {
        auto [u, v] = patch.edge(e);
        VertexId nu = choice[static_cast<std::size_t>(u)] ? attachment(u, e)
                                                          : new_index[static_cast<std::size_t>(u)];
        VertexId nw = choice[static_cast<std::size_t>(v)] ? attachment(v, e)
                                                          : new_index[static_cast<std::size_t>(v)];
        edges.emplace_back(nu, nw);
        surviving.emplace_back(nu, nw);
    }
    for (VertexId v = 0; v < nv; ++v) {
        const Gadget* g = choice[static_cast<std::size_t>(v)];
        if (g == nullptr) continue;
        VertexId base = out.site_map[static_cast<std::size_t>(v)]->first;
        for (const auto& [a, b] : g->graph.edges()) edges.emplace_back(base + a, base + b);
    }

    VertexId origin = patch.origin();
    VertexId new_origin;
    if (choice[static_cast<std::size_t>(origin)] == nullptr) {
        new_origin = new_index[static_cast<std::size_t>(origin)];
    } else {
        new_origin = out.site_map[static_cast<std::size_t>(origin)]->first +
                     choice[static_cast<std::size_t>(origin)]->ports[0];
    }

    out.patch = build_patch(next, edges, std::nullopt, new_origin);

    out.original_edge_map.resize(static_cast<std::size_t>(patch.edge_count()));
    for (EdgeId e = 0; e < patch.edge_count(); ++e) {
        out.original_edge_map[static_cast<std::size_t>(e)] =
            out.patch.find_edge(surviving[static_cast<std::size_t>(e)].first,
                                surviving[static_cast<std::size_t>(e)].second);
    }

    // In the infinite transformed lattice every kept-but-boundary original
    // vertex would have been different (replaced or fully surrounded), so
    // exactly the images of depth-0 originals are incomplete.
    std::vector<bool> incomplete(static_cast<std::size_t>(next), false);
    bool any = false;
    for (VertexId v : out.untouched) {
        if (patch.boundary_depth(v) == 0) {
            incomplete[static_cast<std::size_t>(new_index[static_cast<std::size_t>(v)])] = true;
            any = true;
        }
    }
    if (any) {
        std::vector<std::int32_t> depth = depth_from_incomplete(out.patch, incomplete);
        out.patch = with_boundary_depth(std::move(out.patch), std::move(depth));
    }
    return out;
}

} // namespace

TransformedPatch transform_all(const FinitePatch& patch, const Gadget& gadget) {
    std::vector<const Gadget*> choice(static_cast<std::size_t>(patch.vertex_count()), nullptr);
    for (VertexId v = 0; v < patch.vertex_count(); ++v) {
        if (patch.boundary_depth(v) >= 1) {
            if (patch.degree(v) != 3) {
                throw SawError(ErrorCode::NonCubicInterior,
                               "interior vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(patch.degree(v)));
            }
            choice[static_cast<std::size_t>(v)] = &gadget;
        }
    }
    return transform_by_choice(patch, choice);
}

TransformedPatch transform_colour_class(const FinitePatch& patch, const Gadget& gadget_black,
                                        const std::optional<Gadget>& gadget_white) {
    if (!patch.has_colours() || !patch.colouring_is_proper()) {
        throw SawError(ErrorCode::NotBipartite, "colour-class transform needs a proper 2-colouring");
    }
    std::vector<const Gadget*> choice(static_cast<std::size_t>(patch.vertex_count()), nullptr);
    for (VertexId v = 0; v < patch.vertex_count(); ++v) {
        if (patch.boundary_depth(v) < 1) continue;
        const Gadget* g = nullptr;
        if (patch.colour(v) == Colour::Black) {
            g = &gadget_black;
        } else if (gadget_white) {
            g = &*gadget_white;
        }
        if (g != nullptr) {
            if (patch.degree(v) != 3) {
                throw SawError(ErrorCode::NonCubicClass,
                               "interior vertex " + std::to_string(v) +
                                   " of the replaced class has degree " + std::to_string(patch.degree(v)));
            }
            choice[static_cast<std::size_t>(v)] = g;
        }
    }
    return transform_by_choice(patch, choice);
}

Gadget compose_gadget(const Gadget& outer, const Gadget& inner) {
    AugmentedGadget aug = augment_with_port_edges(outer);
    VertexId n = outer.vertex_count();

    // Pendant vertices act as the boundary so the rewrite leaves them alone.
    std::vector<bool> leaves(static_cast<std::size_t>(aug.patch.vertex_count()), false);
    for (int i = 0; i < 3; ++i) leaves[static_cast<std::size_t>(n + i)] = true;
    std::vector<std::int32_t> depth = depth_from_incomplete(aug.patch, leaves);
    FinitePatch prepared = with_boundary_depth(std::move(aug.patch), std::move(depth));

    TransformedPatch t = transform_all(prepared, inner);

    // The three leaves are the only untouched vertices, hence indices 0..2.
    std::array<VertexId, 3> new_ports{};
    for (int i = 0; i < 3; ++i) {
        EdgeId surv = t.original_edge_map[static_cast<std::size_t>(aug.port_edges[static_cast<std::size_t>(i)])];
        auto [a, b] = t.patch.edge(surv);
        new_ports[static_cast<std::size_t>(i)] = (a < 3) ? b : a;
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : t.patch.edges()) {
        if (a < 3 || b < 3) continue;
        edges.emplace_back(a - 3, b - 3);
    }
    Gadget composite;
    composite.graph = build_patch(t.patch.vertex_count() - 3, edges);
    for (int i = 0; i < 3; ++i) {
        composite.ports[static_cast<std::size_t>(i)] =
            new_ports[static_cast<std::size_t>(i)] - 3;
    }
    return composite;
}

namespace {

struct ColourRefinedEngine {
    const FinitePatch& patch;
    int nmax;
    bool enforce_depth;
    std::vector<std::vector<std::uint64_t>> tally;

    void record(int black, int white) { ++tally[static_cast<std::size_t>(black)][static_cast<std::size_t>(white)]; }

    void dfs(std::vector<bool>& visited, VertexId v, EdgeId start_edge, EdgeId prev_edge, int black,
             int white) {
        const VertexId* nb = patch.neighbours_begin(v);
        const EdgeId* eb = patch.incident_edges_begin(v);
        const int deg = patch.degree(v);
        for (int i = 0; i < deg; ++i) {
            if (eb[i] != start_edge && eb[i] != prev_edge) record(black, white);
        }
        if (black + white == nmax) return;
        for (int i = 0; i < deg; ++i) {
            EdgeId e = eb[i];
            VertexId u = nb[i];
            if (e == start_edge || visited[static_cast<std::size_t>(u)]) continue;
            if (enforce_depth && patch.boundary_depth(u) == 0) {
                throw std::logic_error("colour-refined enumeration touched a boundary vertex");
            }
            visited[static_cast<std::size_t>(u)] = true;
            int b = black + (patch.colour(u) == Colour::Black ? 1 : 0);
            int w = white + (patch.colour(u) == Colour::White ? 1 : 0);
            dfs(visited, u, start_edge, e, b, w);
            visited[static_cast<std::size_t>(u)] = false;
        }
    }
};

} // namespace

SawSeries ColourRefinedSeries::marginal() const {
    SawSeries out;
    out.convention = LengthConvention::VerticesVisited;
    out.safe_up_to = safe_up_to;
    out.counts.assign(counts.size(), BigInt(0));
    for (std::size_t b = 0; b < counts.size(); ++b) {
        for (std::size_t w = 0; w < counts[b].size(); ++w) {
            if (b + w < out.counts.size()) out.counts[b + w] += counts[b][w];
        }
    }
    while (out.counts.size() > 1 && out.counts.back() == 0) out.counts.pop_back();
    return out;
}

ColourRefinedSeries count_colour_refined(const FinitePatch& patch,
                                         const std::vector<EdgeId>& start_edges, int nmax,
                                         const EnumerationOptions& opts) {
    if (!patch.has_colours() || !patch.colouring_is_proper()) {
        throw SawError(ErrorCode::NotBipartite, "colour-refined counting needs a proper 2-colouring");
    }
    if (start_edges.empty()) throw SawError(ErrorCode::BadInput, "start edge set is empty");
    if (nmax < 0) throw SawError(ErrorCode::BadInput, "nmax must be >= 0");

    std::int32_t horizon = kUnboundedDepth;
    for (EdgeId e : start_edges) {
        if (e < 0 || e >= patch.edge_count()) {
            throw SawError(ErrorCode::BadInput, "start edge id out of range");
        }
        auto [a, b] = patch.edge(e);
        horizon = std::min({horizon, patch.boundary_depth(a), patch.boundary_depth(b)});
    }
    if (!opts.allow_boundary && horizon != kUnboundedDepth && nmax > horizon) {
        throw SawError(ErrorCode::BoundaryUnsafe,
                       "nmax " + std::to_string(nmax) + " exceeds safe horizon " + std::to_string(horizon));
    }

    ColourRefinedEngine engine{patch, nmax, !opts.allow_boundary, {}};
    engine.tally.assign(static_cast<std::size_t>(nmax) + 1,
                        std::vector<std::uint64_t>(static_cast<std::size_t>(nmax) + 1, 0));
    std::vector<bool> visited(static_cast<std::size_t>(patch.vertex_count()), false);
    for (EdgeId se : start_edges) {
        engine.record(0, 0);   // empty walk
        if (nmax == 0) continue;
        auto [a, b] = patch.edge(se);
        for (VertexId first : {a, b}) {
            visited[static_cast<std::size_t>(first)] = true;
            int blk = patch.colour(first) == Colour::Black ? 1 : 0;
            engine.dfs(visited, first, se, se, blk, 1 - blk);
            visited[static_cast<std::size_t>(first)] = false;
        }
    }

    ColourRefinedSeries out;
    out.safe_up_to = horizon;
    out.counts.assign(static_cast<std::size_t>(nmax) + 1,
                      std::vector<BigInt>(static_cast<std::size_t>(nmax) + 1, BigInt(0)));
    for (std::size_t b = 0; b <= static_cast<std::size_t>(nmax); ++b) {
        for (std::size_t w = 0; w <= static_cast<std::size_t>(nmax); ++w) {
            out.counts[b][w] = BigInt(static_cast<unsigned long>(engine.tally[b][w]));
        }
    }
    return out;
}

} // namespace saw
