#ifndef SAW_ENUMERATE_HPP
#define SAW_ENUMERATE_HPP

#include "saw/bigint.hpp"
#include "saw/gadget.hpp"
#include "saw/patch.hpp"
#include "saw/polynomial.hpp"

#include <optional>
#include <vector>

namespace saw {

// Two length conventions coexist: sigma_n counts edge steps from a vertex,
// mid-edge series count vertices visited between mid-edges. Series carry
// their convention; mixing them is an error.
enum class LengthConvention { EdgeSteps, VerticesVisited };

const char* convention_name(LengthConvention c);

struct SawSeries {
    LengthConvention convention = LengthConvention::EdgeSteps;
    std::vector<BigInt> counts;                         // indexed by length
    std::optional<std::vector<BigInt>> moments2;        // sum of ||pi||^2 per length
    std::int32_t safe_up_to = 0;                        // boundary-safe horizon, kUnboundedDepth when exact

    std::size_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
};

struct EnumerationOptions {
    int threads = 0;          // 0 = SAW_THREADS env or hardware concurrency
    int split_depth = 3;      // search-tree prefix depth for work splitting
    bool allow_boundary = false;   // count on the finite graph as-is
};

int default_thread_count();

// Exact sigma_n(origin) for 0 <= n <= nmax by depth-first backtracking.
// Throws BoundaryUnsafe when nmax exceeds the safe horizon and
// allow_boundary is unset.
SawSeries count_saws_from_vertex(const FinitePatch& patch, VertexId origin, int nmax,
                                 const EnumerationOptions& opts = {});

// Same enumeration with the endpoint-distance second moment accumulated:
// moments2[n] = sum over n-step SAWs of d(origin, endpoint)^2.
SawSeries endpoint_moments(const FinitePatch& patch, VertexId origin, int nmax,
                           const EnumerationOptions& opts = {});

// Mid-edge SAWs (VerticesVisited convention) starting at the given
// mid-edges and ending at any mid-edge accepted by end_filter
// (no filter = accept all). The empty walk at an accepted start edge
// contributes to counts[0].
SawSeries count_midedge_saws(const FinitePatch& patch, const std::vector<EdgeId>& start_edges,
                             const std::optional<std::vector<bool>>& end_filter, int nmax_vertices,
                             const EnumerationOptions& opts = {});

// Edges incident to the patch origin, the canonical start set for walk
// partition series.
std::vector<EdgeId> origin_incident_edges(const FinitePatch& patch);

// Two-port gadget series: attaches one pendant edge per port and counts
// mid-edge SAWs from the first port edge to the second, confined to gadget
// vertices. Exact coefficients; a_0 = a_1 = 0.
CountPolynomial gadget_genfun(const Gadget& g, const EnumerationOptions& opts = {});

// Same series over an arbitrary port pair (for the pair-invariance checks).
CountPolynomial gadget_genfun_pair(const Gadget& g, int port_a, int port_b,
                                   const EnumerationOptions& opts = {});

// Two-terminal series f_H: pendant edges at v1, v2, mid-edge SAWs between
// them inside H.
CountPolynomial two_terminal_series(const FinitePatch& h, VertexId v1, VertexId v2,
                                    const EnumerationOptions& opts = {});

} // namespace saw

#endif
