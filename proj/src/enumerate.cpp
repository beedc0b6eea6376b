#include "saw/enumerate.hpp"

#include "saw/errors.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace saw {

const char* convention_name(LengthConvention c) {
    return c == LengthConvention::EdgeSteps ? "edge_steps" : "vertices_visited";
}

int default_thread_count() {
    if (const char* env = std::getenv("SAW_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// Visited-set policies. The hot loop dominates enumeration time, so small
// patches use plain machine words and only large ones pay for a byte array.
struct Mask64 {
    std::uint64_t bits = 0;
    void set(VertexId v) { bits |= std::uint64_t(1) << v; }
    void clear(VertexId v) { bits &= ~(std::uint64_t(1) << v); }
    bool test(VertexId v) const { return (bits >> v) & 1; }
};

struct Mask128 {
    std::uint64_t lo = 0, hi = 0;
    void set(VertexId v) { (v < 64 ? lo : hi) |= std::uint64_t(1) << (v & 63); }
    void clear(VertexId v) { (v < 64 ? lo : hi) &= ~(std::uint64_t(1) << (v & 63)); }
    bool test(VertexId v) const { return ((v < 64 ? lo : hi) >> (v & 63)) & 1; }
};

struct ByteSet {
    std::vector<std::uint8_t> bytes;
    explicit ByteSet(std::size_t n = 0) : bytes(n, 0) {}
    void set(VertexId v) { bytes[static_cast<std::size_t>(v)] = 1; }
    void clear(VertexId v) { bytes[static_cast<std::size_t>(v)] = 0; }
    bool test(VertexId v) const { return bytes[static_cast<std::size_t>(v)] != 0; }
};

// Per-length tallies in 64-bit: every increment is one unit of search work,
// so a terminating run cannot overflow.
using Tally = std::vector<std::uint64_t>;

void add_tally(Tally& into, const Tally& from) {
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

std::vector<BigInt> tally_to_bigints(const Tally& t) {
    std::vector<BigInt> out;
    out.reserve(t.size());
    for (std::uint64_t v : t) out.emplace_back(static_cast<unsigned long>(v));
    return out;
}

[[noreturn]] void boundary_bug(VertexId v) {
    throw std::logic_error("enumeration touched boundary vertex " + std::to_string(v) +
                           " inside the safe horizon; lattice generator bug");
}

template <class Visited>
struct VertexWalkState {
    Visited visited;
    VertexId current = 0;
    int depth = 0;
};

template <class Visited>
struct MidEdgeWalkState {
    Visited visited;
    VertexId current = 0;
    EdgeId start_edge = -1;
    EdgeId prev_edge = -1;
    int vertices = 0;
};

void run_tasks(std::size_t task_count, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || task_count <= 1) {
        for (std::size_t i = 0; i < task_count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= task_count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t n = std::min(static_cast<std::size_t>(threads), task_count);
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// -------- vertex-origin enumeration (EdgeSteps) --------

struct VertexEngine {
    const FinitePatch& patch;
    int nmax;
    bool moments;
    bool enforce_depth;
    const std::int32_t* depth;
    const std::int32_t* dist;       // BFS distances from origin, for ||pi||^2

    template <class Visited>
    void dfs(Visited& visited, VertexId v, int d, Tally& counts, Tally& m2) const {
        ++counts[static_cast<std::size_t>(d)];
        if (moments) {
            std::uint64_t dd = static_cast<std::uint64_t>(dist[v]);
            m2[static_cast<std::size_t>(d)] += dd * dd;
        }
        if (d == nmax) return;
        for (const VertexId* n = patch.neighbours_begin(v); n != patch.neighbours_end(v); ++n) {
            if (visited.test(*n)) continue;
            if (enforce_depth && depth[*n] == 0) boundary_bug(*n);
            visited.set(*n);
            dfs(visited, *n, d + 1, counts, m2);
            visited.clear(*n);
        }
    }

    // Splits the search tree at a fixed prefix depth; prefixes are counted
    // serially, subtree tallies are combined by addition.
    template <class Visited>
    void collect(Visited& visited, VertexId v, int d, int split, Tally& counts, Tally& m2,
                 std::vector<VertexWalkState<Visited>>& frontier) const {
        ++counts[static_cast<std::size_t>(d)];
        if (moments) {
            std::uint64_t dd = static_cast<std::uint64_t>(dist[v]);
            m2[static_cast<std::size_t>(d)] += dd * dd;
        }
        if (d == nmax) return;
        if (d == split) {
            frontier.push_back({visited, v, d});
            return;
        }
        for (const VertexId* n = patch.neighbours_begin(v); n != patch.neighbours_end(v); ++n) {
            if (visited.test(*n)) continue;
            if (enforce_depth && depth[*n] == 0) boundary_bug(*n);
            visited.set(*n);
            collect(visited, *n, d + 1, split, counts, m2, frontier);
            visited.clear(*n);
        }
    }

    template <class Visited>
    void run(VertexId origin, int threads, int split, Tally& counts, Tally& m2) const {
        Visited visited{};
        if constexpr (std::is_same_v<Visited, ByteSet>) {
            visited = ByteSet(static_cast<std::size_t>(patch.vertex_count()));
        }
        if (enforce_depth && depth[origin] == 0 && nmax > 0) boundary_bug(origin);
        visited.set(origin);
        std::vector<VertexWalkState<Visited>> frontier;
        collect(visited, origin, 0, split, counts, m2, frontier);

        std::vector<Tally> task_counts(frontier.size(), Tally(counts.size(), 0));
        std::vector<Tally> task_m2(frontier.size(), Tally(m2.size(), 0));
        run_tasks(frontier.size(), threads, [&](std::size_t i) {
            VertexWalkState<Visited> st = frontier[i];
            for (const VertexId* n = patch.neighbours_begin(st.current);
                 n != patch.neighbours_end(st.current); ++n) {
                if (st.visited.test(*n)) continue;
                if (enforce_depth && depth[*n] == 0) boundary_bug(*n);
                st.visited.set(*n);
                dfs(st.visited, *n, st.depth + 1, task_counts[i], task_m2[i]);
                st.visited.clear(*n);
            }
        });
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            add_tally(counts, task_counts[i]);
            add_tally(m2, task_m2[i]);
        }
    }
};

// -------- mid-edge enumeration (VerticesVisited) --------

struct MidEdgeEngine {
    const FinitePatch& patch;
    int nmax;
    bool enforce_depth;
    const std::int32_t* depth;
    const std::vector<bool>* filter;    // nullptr = accept all end edges

    bool accepts(EdgeId e) const { return filter == nullptr || (*filter)[static_cast<std::size_t>(e)]; }

    template <class Visited>
    void dfs(Visited& visited, VertexId v, EdgeId start_edge, EdgeId prev_edge, int m,
             Tally& counts) const {
        const VertexId* nb = patch.neighbours_begin(v);
        const EdgeId* eb = patch.incident_edges_begin(v);
        const int deg = patch.degree(v);
        // A walk may end at the midpoint of any incident edge that is not
        // the start edge and was not just crossed; a previously visited far
        // endpoint does not block the midpoint.
        for (int i = 0; i < deg; ++i) {
            EdgeId e = eb[i];
            if (e != start_edge && e != prev_edge && accepts(e)) {
                ++counts[static_cast<std::size_t>(m)];
            }
        }
        if (m == nmax) return;
        for (int i = 0; i < deg; ++i) {
            EdgeId e = eb[i];
            VertexId u = nb[i];
            if (e == start_edge || visited.test(u)) continue;
            if (enforce_depth && depth[u] == 0) boundary_bug(u);
            visited.set(u);
            dfs(visited, u, start_edge, e, m + 1, counts);
            visited.clear(u);
        }
    }

    template <class Visited>
    void collect(Visited& visited, VertexId v, EdgeId start_edge, EdgeId prev_edge, int m, int split,
                 Tally& counts, std::vector<MidEdgeWalkState<Visited>>& frontier) const {
        const VertexId* nb = patch.neighbours_begin(v);
        const EdgeId* eb = patch.incident_edges_begin(v);
        const int deg = patch.degree(v);
        for (int i = 0; i < deg; ++i) {
            EdgeId e = eb[i];
            if (e != start_edge && e != prev_edge && accepts(e)) {
                ++counts[static_cast<std::size_t>(m)];
            }
        }
        if (m == nmax) return;
        if (m == split) {
            frontier.push_back({visited, v, start_edge, prev_edge, m});
            return;
        }
        for (int i = 0; i < deg; ++i) {
            EdgeId e = eb[i];
            VertexId u = nb[i];
            if (e == start_edge || visited.test(u)) continue;
            if (enforce_depth && depth[u] == 0) boundary_bug(u);
            visited.set(u);
            collect(visited, u, start_edge, e, m + 1, split, counts, frontier);
            visited.clear(u);
        }
    }

    template <class Visited>
    void run(const std::vector<EdgeId>& start_edges, int threads, int split, Tally& counts) const {
        std::vector<MidEdgeWalkState<Visited>> frontier;
        for (EdgeId se : start_edges) {
            if (accepts(se)) ++counts[0];   // empty walk, start equals end
            if (nmax == 0) continue;
            auto [a, b] = patch.edge(se);
            for (VertexId first : {a, b}) {
                Visited visited{};
                if constexpr (std::is_same_v<Visited, ByteSet>) {
                    visited = ByteSet(static_cast<std::size_t>(patch.vertex_count()));
                }
                if (enforce_depth && depth[first] == 0) boundary_bug(first);
                visited.set(first);
                collect(visited, first, se, se, 1, split, counts, frontier);
            }
        }
        std::vector<Tally> task_counts(frontier.size(), Tally(counts.size(), 0));
        run_tasks(frontier.size(), threads, [&](std::size_t i) {
            MidEdgeWalkState<Visited> st = frontier[i];
            const VertexId* nb = patch.neighbours_begin(st.current);
            const EdgeId* eb = patch.incident_edges_begin(st.current);
            const int deg = patch.degree(st.current);
            for (int k = 0; k < deg; ++k) {
                EdgeId e = eb[k];
                VertexId u = nb[k];
                if (e == st.start_edge || st.visited.test(u)) continue;
                if (enforce_depth && depth[u] == 0) boundary_bug(u);
                st.visited.set(u);
                dfs(st.visited, u, st.start_edge, e, st.vertices + 1, task_counts[i]);
                st.visited.clear(u);
            }
        });
        for (std::size_t i = 0; i < frontier.size(); ++i) add_tally(counts, task_counts[i]);
    }
};

int resolve_threads(const EnumerationOptions& opts) {
    return opts.threads > 0 ? opts.threads : default_thread_count();
}

std::int32_t midedge_horizon(const FinitePatch& patch, const std::vector<EdgeId>& start_edges) {
    std::int32_t h = kUnboundedDepth;
    for (EdgeId e : start_edges) {
        auto [a, b] = patch.edge(e);
        h = std::min({h, patch.boundary_depth(a), patch.boundary_depth(b)});
    }
    return h;
}

SawSeries count_from_vertex_impl(const FinitePatch& patch, VertexId origin, int nmax, bool moments,
                                 const EnumerationOptions& opts) {
    if (origin < 0 || origin >= patch.vertex_count()) {
        throw SawError(ErrorCode::OriginOutOfRange, "enumeration origin out of range");
    }
    if (nmax < 0) throw SawError(ErrorCode::BadInput, "nmax must be >= 0");
    std::int32_t horizon = patch.safe_walk_length();
    if (!opts.allow_boundary && horizon != kUnboundedDepth && nmax > horizon) {
        throw SawError(ErrorCode::BoundaryUnsafe,
                       "nmax " + std::to_string(nmax) + " exceeds safe horizon " + std::to_string(horizon));
    }

    std::vector<std::int32_t> dist;
    if (moments) dist = patch.bfs_distances(origin);

    VertexEngine engine{patch, nmax, moments, !opts.allow_boundary,
                        patch.boundary_depths().data(), moments ? dist.data() : nullptr};
    Tally counts(static_cast<std::size_t>(nmax) + 1, 0);
    Tally m2(static_cast<std::size_t>(nmax) + 1, 0);
    int threads = resolve_threads(opts);
    int split = std::min(opts.split_depth, nmax);
    VertexId v = patch.vertex_count();
    if (v <= 64) {
        engine.run<Mask64>(origin, threads, split, counts, m2);
    } else if (v <= 128) {
        engine.run<Mask128>(origin, threads, split, counts, m2);
    } else {
        engine.run<ByteSet>(origin, threads, split, counts, m2);
    }

    SawSeries out;
    out.convention = LengthConvention::EdgeSteps;
    out.counts = tally_to_bigints(counts);
    if (moments) out.moments2 = tally_to_bigints(m2);
    out.safe_up_to = horizon;
    return out;
}

} // namespace

SawSeries count_saws_from_vertex(const FinitePatch& patch, VertexId origin, int nmax,
                                 const EnumerationOptions& opts) {
    return count_from_vertex_impl(patch, origin, nmax, false, opts);
}

SawSeries endpoint_moments(const FinitePatch& patch, VertexId origin, int nmax,
                           const EnumerationOptions& opts) {
    return count_from_vertex_impl(patch, origin, nmax, true, opts);
}

SawSeries count_midedge_saws(const FinitePatch& patch, const std::vector<EdgeId>& start_edges,
                             const std::optional<std::vector<bool>>& end_filter, int nmax_vertices,
                             const EnumerationOptions& opts) {
    if (start_edges.empty()) throw SawError(ErrorCode::BadInput, "start edge set is empty");
    for (EdgeId e : start_edges) {
        if (e < 0 || e >= patch.edge_count()) {
            throw SawError(ErrorCode::BadInput, "start edge id out of range");
        }
    }
    if (end_filter && static_cast<EdgeId>(end_filter->size()) != patch.edge_count()) {
        throw SawError(ErrorCode::BadInput, "end filter size must match edge count");
    }
    if (nmax_vertices < 0) throw SawError(ErrorCode::BadInput, "nmax must be >= 0");

    std::int32_t horizon = midedge_horizon(patch, start_edges);
    if (!opts.allow_boundary && horizon != kUnboundedDepth && nmax_vertices > horizon) {
        throw SawError(ErrorCode::BoundaryUnsafe,
                       "nmax " + std::to_string(nmax_vertices) + " exceeds safe horizon " +
                           std::to_string(horizon));
    }

    MidEdgeEngine engine{patch, nmax_vertices, !opts.allow_boundary, patch.boundary_depths().data(),
                         end_filter ? &*end_filter : nullptr};
    Tally counts(static_cast<std::size_t>(nmax_vertices) + 1, 0);
    int threads = resolve_threads(opts);
    int split = std::min(opts.split_depth + 1, nmax_vertices);   // vertices, not edge steps
    VertexId v = patch.vertex_count();
    if (v <= 64) {
        engine.run<Mask64>(start_edges, threads, split, counts);
    } else if (v <= 128) {
        engine.run<Mask128>(start_edges, threads, split, counts);
    } else {
        engine.run<ByteSet>(start_edges, threads, split, counts);
    }

    SawSeries out;
    out.convention = LengthConvention::VerticesVisited;
    out.counts = tally_to_bigints(counts);
    out.safe_up_to = horizon;
    return out;
}

std::vector<EdgeId> origin_incident_edges(const FinitePatch& patch) {
    VertexId o = patch.origin();
    return std::vector<EdgeId>(patch.incident_edges_begin(o), patch.incident_edges_end(o));
}

namespace {

CountPolynomial series_to_polynomial(const SawSeries& s) {
    return CountPolynomial(s.counts);
}

CountPolynomial port_pair_series(const Gadget& g, int port_a, int port_b,
                                 const EnumerationOptions& opts) {
    AugmentedGadget aug = augment_with_port_edges(g);
    std::vector<bool> filter(static_cast<std::size_t>(aug.patch.edge_count()), false);
    filter[static_cast<std::size_t>(aug.port_edges[static_cast<std::size_t>(port_b)])] = true;
    SawSeries s = count_midedge_saws(aug.patch, {aug.port_edges[static_cast<std::size_t>(port_a)]},
                                     filter, g.vertex_count(), opts);
    return series_to_polynomial(s);
}

} // namespace

CountPolynomial gadget_genfun(const Gadget& g, const EnumerationOptions& opts) {
    return gadget_genfun_pair(g, 0, 1, opts);
}

CountPolynomial gadget_genfun_pair(const Gadget& g, int port_a, int port_b,
                                   const EnumerationOptions& opts) {
    if (port_a == port_b || port_a < 0 || port_b < 0 || port_a > 2 || port_b > 2) {
        throw SawError(ErrorCode::InvalidGadget, "port pair must be two distinct indices in 0..2");
    }
    const auto& [w1, w2, w3] = g.ports;
    if (w1 == w2 || w1 == w3 || w2 == w3) {
        throw SawError(ErrorCode::InvalidGadget, "gadget ports must be pairwise distinct");
    }
    for (std::int32_t d : g.graph.bfs_distances(0)) {
        if (d < 0) throw SawError(ErrorCode::InvalidGadget, "gadget graph is disconnected");
    }
    return port_pair_series(g, port_a, port_b, opts);
}

CountPolynomial two_terminal_series(const FinitePatch& h, VertexId v1, VertexId v2,
                                    const EnumerationOptions& opts) {
    if (v1 == v2) throw SawError(ErrorCode::IdenticalTerminals, "terminals must be distinct");
    VertexId n = h.vertex_count();
    if (v1 < 0 || v1 >= n || v2 < 0 || v2 >= n) {
        throw SawError(ErrorCode::VertexOutOfRange, "terminal index out of range");
    }
    std::vector<std::pair<VertexId, VertexId>> edges = h.edges();
    edges.emplace_back(v1, n);
    edges.emplace_back(v2, n + 1);
    FinitePatch aug = build_patch(n + 2, edges, std::nullopt, h.origin());
    EdgeId e1 = aug.find_edge(v1, n);
    EdgeId e2 = aug.find_edge(v2, n + 1);
    std::vector<bool> filter(static_cast<std::size_t>(aug.edge_count()), false);
    filter[static_cast<std::size_t>(e2)] = true;
    SawSeries s = count_midedge_saws(aug, {e1}, filter, n, opts);
    return series_to_polynomial(s);
}

} // namespace saw
