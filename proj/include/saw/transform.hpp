#ifndef SAW_TRANSFORM_HPP
#define SAW_TRANSFORM_HPP

#include "saw/bigint.hpp"
#include "saw/enumerate.hpp"
#include "saw/gadget.hpp"
#include "saw/patch.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace saw {

// Result of replacing vertices by gadget copies. Every original edge
// survives as exactly one edge of the rewritten graph (its mid-edge
// persists), recorded in original_edge_map. Untouched original vertices
// come first in the new indexing, followed by one contiguous block per
// replaced site.
struct TransformedPatch {
    FinitePatch patch;
    std::vector<EdgeId> original_edge_map;                    // original EdgeId -> new EdgeId
    std::vector<std::optional<std::pair<VertexId, VertexId>>> site_map;   // vertex -> [begin, end)
    std::vector<VertexId> untouched;                          // original ids, ascending

    // End filter accepting exactly the surviving original mid-edges.
    std::vector<bool> surviving_edge_filter() const;
};

// Replaces every interior vertex (boundary_depth >= 1); all of them must
// have degree 3. Incident edges attach to ports w1,w2,w3 in canonical edge
// order. boundary_depth is recomputed from the untouched boundary vertices.
// Throws NonCubicInterior.
TransformedPatch transform_all(const FinitePatch& patch, const Gadget& gadget);

// Replaces the interior vertices of one colour class (or both, possibly
// with different gadgets). Requires a proper 2-colouring; the replaced
// class(es) must be cubic in the interior. Throws NotBipartite /
// NonCubicClass.
TransformedPatch transform_colour_class(const FinitePatch& patch, const Gadget& gadget_black,
                                        const std::optional<Gadget>& gadget_white = std::nullopt);

// Applies `inner` at every vertex of `outer` (each must have degree 3 once
// the port attachment edge is counted); g of the composite equals
// g_outer composed with g_inner.
Gadget compose_gadget(const Gadget& outer, const Gadget& inner);

// Mid-edge SAW counts refined by colour: counts[b][w] = number of walks
// visiting b black and w white vertices. Lives on untransformed bipartite
// patches.
struct ColourRefinedSeries {
    std::vector<std::vector<BigInt>> counts;    // [black][white], square of side nmax+1
    std::int32_t safe_up_to = 0;

    int nmax() const { return static_cast<int>(counts.size()) - 1; }
    SawSeries marginal() const;                 // by total vertices visited
};

ColourRefinedSeries count_colour_refined(const FinitePatch& patch,
                                         const std::vector<EdgeId>& start_edges, int nmax,
                                         const EnumerationOptions& opts = {});

} // namespace saw

#endif
