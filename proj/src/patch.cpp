#include "saw/patch.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace saw {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::ImproperColouring: return "ImproperColouring";
        case ErrorCode::OriginOutOfRange: return "OriginOutOfRange";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::UnsupportedTypeVector: return "UnsupportedTypeVector";
        case ErrorCode::PortsNotDistinct: return "PortsNotDistinct";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NTooSmall: return "NTooSmall";
        case ErrorCode::IdenticalTerminals: return "IdenticalTerminals";
        case ErrorCode::InvalidGadget: return "InvalidGadget";
        case ErrorCode::NoBracket: return "NoBracket";
        case ErrorCode::NonPositiveTarget: return "NonPositiveTarget";
        case ErrorCode::BoundaryUnsafe: return "BoundaryUnsafe";
        case ErrorCode::NonCubicInterior: return "NonCubicInterior";
        case ErrorCode::NonCubicClass: return "NonCubicClass";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::EmptyChain: return "EmptyChain";
        case ErrorCode::NoFixedPointInUnitInterval: return "NoFixedPointInUnitInterval";
        case ErrorCode::SeriesTooShort: return "SeriesTooShort";
        case ErrorCode::ConventionMismatch: return "ConventionMismatch";
        case ErrorCode::SubstitutionMismatch: return "SubstitutionMismatch";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

EdgeId FinitePatch::find_edge(VertexId u, VertexId v) const {
    const VertexId* lo = neighbours_begin(u);
    const VertexId* hi = neighbours_end(u);
    const VertexId* it = std::lower_bound(lo, hi, v);
    if (it == hi || *it != v) return -1;
    return adj_edge_[static_cast<size_t>(adj_offset_[static_cast<size_t>(u)] + (it - lo))];
}

std::int32_t FinitePatch::safe_walk_length() const {
    std::int32_t d = boundary_depth(origin_);
    if (d == kUnboundedDepth) return kUnboundedDepth;
    return d > 0 ? d - 1 : 0;
}

std::vector<std::int32_t> FinitePatch::bfs_distances(VertexId src) const {
    std::vector<std::int32_t> dist(static_cast<size_t>(vertex_count_), -1);
    std::deque<VertexId> queue;
    dist[static_cast<size_t>(src)] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const VertexId* n = neighbours_begin(v); n != neighbours_end(v); ++n) {
            if (dist[static_cast<size_t>(*n)] < 0) {
                dist[static_cast<size_t>(*n)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(*n);
            }
        }
    }
    return dist;
}

bool FinitePatch::colouring_is_proper() const {
    if (!has_colours()) return false;
    for (const auto& [u, v] : edges_) {
        if (colour_[static_cast<size_t>(u)] == colour_[static_cast<size_t>(v)]) return false;
    }
    return true;
}

bool is_valid_midedge_walk(const FinitePatch& patch, const MidEdgeWalk& walk) {
    if (walk.start_edge < 0 || walk.start_edge >= patch.edge_count()) return false;
    if (walk.end_edge < 0 || walk.end_edge >= patch.edge_count()) return false;
    if (walk.vertex_sequence.empty()) return walk.start_edge == walk.end_edge;
    if (walk.start_edge == walk.end_edge) return false;

    const auto& seq = walk.vertex_sequence;
    std::vector<bool> seen(static_cast<size_t>(patch.vertex_count()), false);
    for (VertexId v : seq) {
        if (v < 0 || v >= patch.vertex_count() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }

    auto incident = [&](EdgeId e, VertexId v) {
        auto [a, b] = patch.edge(e);
        return a == v || b == v;
    };
    if (!incident(walk.start_edge, seq.front())) return false;
    if (!incident(walk.end_edge, seq.back())) return false;

    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        EdgeId e = patch.find_edge(seq[i], seq[i + 1]);
        if (e < 0) return false;
        // an interior crossing of either terminal mid-edge revisits it
        if (e == walk.start_edge || e == walk.end_edge) return false;
    }
    return true;
}

FinitePatch build_patch(VertexId vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                        std::optional<std::vector<Colour>> colours,
                        VertexId origin) {
    if (origin < 0 || origin >= vertex_count) {
        throw SawError(ErrorCode::OriginOutOfRange,
                       "origin " + std::to_string(origin) + " not in [0," + std::to_string(vertex_count) + ")");
    }

    std::vector<std::pair<VertexId, VertexId>> canon;
    canon.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count) {
            throw SawError(ErrorCode::VertexOutOfRange,
                           "edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (a == b) {
            throw SawError(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
        }
        canon.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canon.begin(), canon.end());
    for (size_t i = 1; i < canon.size(); ++i) {
        if (canon[i] == canon[i - 1]) {
            throw SawError(ErrorCode::DuplicateEdge,
                           "duplicate edge (" + std::to_string(canon[i].first) + "," +
                               std::to_string(canon[i].second) + ")");
        }
    }

    if (colours) {
        if (static_cast<VertexId>(colours->size()) != vertex_count) {
            throw SawError(ErrorCode::ImproperColouring, "colour array size mismatch");
        }
        for (const auto& [u, v] : canon) {
            if ((*colours)[static_cast<size_t>(u)] == (*colours)[static_cast<size_t>(v)]) {
                throw SawError(ErrorCode::ImproperColouring,
                               "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is monochromatic");
            }
        }
    }

    FinitePatch p;
    p.vertex_count_ = vertex_count;
    p.origin_ = origin;
    p.edges_ = std::move(canon);
    if (colours) p.colour_ = std::move(*colours);
    p.boundary_depth_.assign(static_cast<size_t>(vertex_count), kUnboundedDepth);

    std::vector<std::size_t> deg(static_cast<size_t>(vertex_count) + 1, 0);
    for (const auto& [u, v] : p.edges_) {
        ++deg[static_cast<size_t>(u) + 1];
        ++deg[static_cast<size_t>(v) + 1];
    }
    p.adj_offset_.assign(static_cast<size_t>(vertex_count) + 1, 0);
    for (size_t i = 1; i <= static_cast<size_t>(vertex_count); ++i) {
        p.adj_offset_[i] = p.adj_offset_[i - 1] + deg[i];
    }
    p.adj_vertex_.resize(p.adj_offset_.back());
    p.adj_edge_.resize(p.adj_offset_.back());
    std::vector<std::size_t> cursor(p.adj_offset_.begin(), p.adj_offset_.end() - 1);
    // Canonical edge order plus ascending endpoints keeps each CSR row sorted.
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
        const auto& [u, v] = p.edges_[static_cast<size_t>(e)];
        p.adj_vertex_[cursor[static_cast<size_t>(u)]] = v;
        p.adj_edge_[cursor[static_cast<size_t>(u)]++] = e;
        p.adj_vertex_[cursor[static_cast<size_t>(v)]] = u;
        p.adj_edge_[cursor[static_cast<size_t>(v)]++] = e;
    }
    for (VertexId v = 0; v < vertex_count; ++v) {
        auto* b = p.adj_vertex_.data() + p.adj_offset_[static_cast<size_t>(v)];
        auto* e = p.adj_vertex_.data() + p.adj_offset_[static_cast<size_t>(v) + 1];
        if (!std::is_sorted(b, e)) {
            // Rows can come out unsorted only if edge canonicalization broke.
            std::vector<std::pair<VertexId, EdgeId>> row;
            for (auto* it = b; it != e; ++it) {
                row.emplace_back(*it, p.adj_edge_[static_cast<size_t>(p.adj_offset_[static_cast<size_t>(v)] + (it - b))]);
            }
            std::sort(row.begin(), row.end());
            for (size_t i = 0; i < row.size(); ++i) {
                p.adj_vertex_[p.adj_offset_[static_cast<size_t>(v)] + i] = row[i].first;
                p.adj_edge_[p.adj_offset_[static_cast<size_t>(v)] + i] = row[i].second;
            }
        }
    }
    return p;
}

FinitePatch with_boundary_depth(FinitePatch patch, std::vector<std::int32_t> depth) {
    patch.boundary_depth_ = std::move(depth);
    return patch;
}

std::vector<std::int32_t> depth_from_incomplete(const FinitePatch& patch,
                                                const std::vector<bool>& incomplete) {
    std::vector<std::int32_t> depth(static_cast<size_t>(patch.vertex_count()), kUnboundedDepth);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < patch.vertex_count(); ++v) {
        if (incomplete[static_cast<size_t>(v)]) {
            depth[static_cast<size_t>(v)] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const VertexId* n = patch.neighbours_begin(v); n != patch.neighbours_end(v); ++n) {
            if (depth[static_cast<size_t>(*n)] == kUnboundedDepth) {
                depth[static_cast<size_t>(*n)] = depth[static_cast<size_t>(v)] + 1;
                queue.push_back(*n);
            }
        }
    }
    return depth;
}

std::optional<std::vector<Colour>> try_two_colour(const FinitePatch& patch) {
    std::vector<int> col(static_cast<size_t>(patch.vertex_count()), -1);
    std::deque<VertexId> queue;
    for (VertexId s = 0; s < patch.vertex_count(); ++s) {
        if (col[static_cast<size_t>(s)] >= 0) continue;
        col[static_cast<size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const VertexId* n = patch.neighbours_begin(v); n != patch.neighbours_end(v); ++n) {
                if (col[static_cast<size_t>(*n)] < 0) {
                    col[static_cast<size_t>(*n)] = 1 - col[static_cast<size_t>(v)];
                    queue.push_back(*n);
                } else if (col[static_cast<size_t>(*n)] == col[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Colour> out(static_cast<size_t>(patch.vertex_count()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = col[i] == 0 ? Colour::Black : Colour::White;
    return out;
}

} // namespace saw
