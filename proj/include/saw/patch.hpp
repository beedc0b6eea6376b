#ifndef SAW_PATCH_HPP
#define SAW_PATCH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace saw {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Colour labels for bipartite patches.
enum class Colour : std::uint8_t { Black = 0, White = 1 };

// boundary_depth value for vertices of a graph that *is* the whole universe
// (gadgets, test fixtures) rather than a finite window of an infinite lattice.
constexpr std::int32_t kUnboundedDepth = std::numeric_limits<std::int32_t>::max();

// A finite simple undirected graph standing in for (a ball of) an infinite
// lattice. Immutable after construction; safe to share across threads.
//
// Edges get stable ids in canonical order: lexicographic on
// (min endpoint, max endpoint). Mid-edge walks are keyed on these ids.
//
// boundary_depth(v) is the graph distance from v to the nearest vertex whose
// infinite-lattice neighbourhood is incomplete, or kUnboundedDepth when the
// graph is exact. Walk counts taken within the resulting safe horizon agree
// with the infinite lattice.
class FinitePatch {
public:
    FinitePatch() = default;

    VertexId vertex_count() const { return vertex_count_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    VertexId origin() const { return origin_; }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }

    int degree(VertexId v) const {
        return static_cast<int>(adj_offset_[static_cast<size_t>(v) + 1] - adj_offset_[static_cast<size_t>(v)]);
    }

    // Neighbours of v, sorted ascending; adj_edge_ids() aligns with them.
    const VertexId* neighbours_begin(VertexId v) const { return adj_vertex_.data() + adj_offset_[static_cast<size_t>(v)]; }
    const VertexId* neighbours_end(VertexId v) const { return adj_vertex_.data() + adj_offset_[static_cast<size_t>(v) + 1]; }
    const EdgeId* incident_edges_begin(VertexId v) const { return adj_edge_.data() + adj_offset_[static_cast<size_t>(v)]; }
    const EdgeId* incident_edges_end(VertexId v) const { return adj_edge_.data() + adj_offset_[static_cast<size_t>(v) + 1]; }

    // EdgeId of {u,v}, or -1 when not adjacent.
    EdgeId find_edge(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v) >= 0; }

    bool has_colours() const { return !colour_.empty(); }
    Colour colour(VertexId v) const { return colour_[static_cast<size_t>(v)]; }
    const std::vector<Colour>& colours() const { return colour_; }

    std::int32_t boundary_depth(VertexId v) const { return boundary_depth_[static_cast<size_t>(v)]; }
    const std::vector<std::int32_t>& boundary_depths() const { return boundary_depth_; }

    // Largest n such that every n-step SAW from the origin (equivalently,
    // every walk from origin-incident mid-edges visiting <= n vertices whose
    // first vertex is the origin) sees only complete neighbourhoods.
    // Returns kUnboundedDepth for exact graphs, 0 when the origin itself is
    // on the boundary.
    std::int32_t safe_walk_length() const;

    // BFS distances from src within the patch (edges as unit steps).
    std::vector<std::int32_t> bfs_distances(VertexId src) const;

    // Checks the stored colouring (if any) is a proper 2-colouring.
    bool colouring_is_proper() const;

private:
    friend FinitePatch build_patch(VertexId vertex_count,
                                   const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                                   std::optional<std::vector<Colour>> colours,
                                   VertexId origin);
    friend FinitePatch with_boundary_depth(FinitePatch patch, std::vector<std::int32_t> depth);

    VertexId vertex_count_ = 0;
    VertexId origin_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;   // canonical order
    std::vector<std::size_t> adj_offset_;                // CSR offsets, size V+1
    std::vector<VertexId> adj_vertex_;                   // CSR neighbours, sorted per vertex
    std::vector<EdgeId> adj_edge_;                       // edge id per CSR slot
    std::vector<Colour> colour_;                         // empty when uncoloured
    std::vector<std::int32_t> boundary_depth_;           // size V
};

// A walk between mid-edges. Length is the number of vertices visited; the
// empty walk (no vertices) has start_edge == end_edge and length 0. Valid
// walks visit no vertex or mid-edge twice, which for a simple path means
// the start and end edges are never re-crossed in the interior.
struct MidEdgeWalk {
    EdgeId start_edge = -1;
    std::vector<VertexId> vertex_sequence;
    EdgeId end_edge = -1;

    std::size_t length() const { return vertex_sequence.size(); }
};

// Checks every MidEdgeWalk invariant against the patch.
bool is_valid_midedge_walk(const FinitePatch& patch, const MidEdgeWalk& walk);

// Validates and builds a patch. boundary_depth starts at kUnboundedDepth
// everywhere; lattice generators overwrite it.
// Throws SawError: DuplicateEdge, SelfLoop, ImproperColouring,
// OriginOutOfRange, VertexOutOfRange.
FinitePatch build_patch(VertexId vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                        std::optional<std::vector<Colour>> colours = std::nullopt,
                        VertexId origin = 0);

// Returns a copy of `patch` with the given boundary_depth vector installed.
FinitePatch with_boundary_depth(FinitePatch patch, std::vector<std::int32_t> depth);

// Multi-source BFS from the flagged incomplete vertices. All-unflagged input
// yields kUnboundedDepth everywhere.
std::vector<std::int32_t> depth_from_incomplete(const FinitePatch& patch,
                                                const std::vector<bool>& incomplete);

// Greedy 2-colouring by BFS; nullopt when the graph has an odd cycle.
std::optional<std::vector<Colour>> try_two_colour(const FinitePatch& patch);

} // namespace saw

#endif
