#ifndef SAW_LATTICE_HPP
#define SAW_LATTICE_HPP

#include "saw/patch.hpp"

#include <array>
#include <limits>
#include <string>

namespace saw {

constexpr int kInfiniteFaceSize = std::numeric_limits<int>::max();

// Face sizes around a vertex of a transitive planar cubic graph, as a
// canonical (sorted) multiset. 1/inf counts as 0 in the angle sum.
struct TypeVector {
    std::array<int, 3> faces{3, 3, 3};

    static TypeVector of(int a, int b, int c);
    static TypeVector parse(const std::string& text);   // "a,b,c", infinity spelled "inf"

    bool operator==(const TypeVector& o) const { return faces == o.faces; }
    std::string to_string() const;
};

enum class Geometry { Spherical, Euclidean, Hyperbolic };

const char* geometry_name(Geometry g);

// Exact rational comparison of 1/a + 1/b + 1/c against 1/2.
Geometry classify(const TypeVector& tv);

// Ball of graph-radius `radius` around a fixed origin of one of the five
// Euclidean transitive TLF-planar cubic lattices:
//   <6,6,6>, <3,12,12>, <4,8,8>, <4,6,12>, <4,4,inf>.
// boundary_depth is exact (multi-source BFS from vertices whose
// infinite-lattice neighbourhood is incomplete); bipartite lattices carry a
// proper 2-colouring. Throws UnsupportedTypeVector otherwise.
FinitePatch generate_lattice(const TypeVector& tv, int radius);

} // namespace saw

#endif
