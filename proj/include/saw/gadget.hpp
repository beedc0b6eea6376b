#ifndef SAW_GADGET_HPP
#define SAW_GADGET_HPP

#include "saw/patch.hpp"
#include "saw/polynomial.hpp"

#include <array>
#include <string>
#include <vector>

namespace saw {

// A finite simple connected graph with three distinguished ports, the unit
// of local transformation. Ports must be pairwise distinct; the counting
// operations additionally need an automorphism subgroup that preserves the
// port set and acts transitively on it (checked by validate_gadget).
struct Gadget {
    FinitePatch graph;
    std::array<VertexId, 3> ports{};

    VertexId vertex_count() const { return graph.vertex_count(); }
    int max_degree() const;
    int diameter() const;
};

struct GadgetValidation {
    std::vector<std::vector<VertexId>> automorphisms;      // full group, lex order
    std::vector<std::vector<VertexId>> port_stabilizers;   // subgroup preserving the port set
    bool port_transitive = false;
    std::string note;
};

// Full automorphism list by ordered backtracking with degree and
// neighbourhood pruning. Intended for gadget-sized graphs.
std::vector<std::vector<VertexId>> find_automorphisms(const FinitePatch& graph);

// Throws PortsNotDistinct / Disconnected; otherwise reports whether the
// port-set stabilizer acts transitively on the three ports.
GadgetValidation validate_gadget(const Gadget& g);

// K_N with the first three vertices as ports. N >= 3; N = 3 is the Fisher
// triangle.
Gadget complete_gadget(int n);
Gadget fisher();

// Two-port series of the K_N gadget in closed form:
//   sum_{m=2}^{N} (N-2)!/(N-m)! x^m.
CountPolynomial kn_genfun_closed_form(int n);

// Three copies of H glued in a cycle at the marked terminals; ports are the
// identification vertices. The cyclic copy rotation is an automorphism, so
// the result is port-transitive by construction.
Gadget generalized_fisher(const FinitePatch& h, VertexId v1, VertexId v2);

// The gadget's graph with one pendant (outer) vertex attached at each port.
// Pendant vertices take indices V, V+1, V+2 in port order; returns the ids
// of the three port edges.
struct AugmentedGadget {
    FinitePatch patch;
    std::array<EdgeId, 3> port_edges{};
};
AugmentedGadget augment_with_port_edges(const Gadget& g);

} // namespace saw

#endif
