#include "saw/lattice.hpp"

#include "saw/bigint.hpp"
#include "saw/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace saw {

TypeVector TypeVector::of(int a, int b, int c) {
    TypeVector tv;
    tv.faces = {a, b, c};
    std::sort(tv.faces.begin(), tv.faces.end());
    for (int f : tv.faces) {
        if (f < 3) throw SawError(ErrorCode::BadInput, "face size must be >= 3 (or inf)");
    }
    return tv;
}

TypeVector TypeVector::parse(const std::string& text) {
    std::array<int, 3> vals{};
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) throw SawError(ErrorCode::BadInput, "type-vector needs exactly three entries");
        // trim spaces
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw SawError(ErrorCode::BadInput, "empty type-vector entry");
        item = item.substr(b, e - b + 1);
        if (item == "inf") {
            vals[static_cast<size_t>(i)] = kInfiniteFaceSize;
        } else {
            try {
                vals[static_cast<size_t>(i)] = std::stoi(item);
            } catch (const std::exception&) {
                throw SawError(ErrorCode::BadInput, "bad type-vector entry: " + item);
            }
        }
        ++i;
    }
    if (i != 3) throw SawError(ErrorCode::BadInput, "type-vector needs exactly three entries");
    return of(vals[0], vals[1], vals[2]);
}

std::string TypeVector::to_string() const {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ",";
        out += faces[static_cast<size_t>(i)] == kInfiniteFaceSize
                   ? "inf"
                   : std::to_string(faces[static_cast<size_t>(i)]);
    }
    return out;
}

const char* geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Spherical: return "spherical";
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

Geometry classify(const TypeVector& tv) {
    BigRat f(0);
    for (int a : tv.faces) {
        if (a != kInfiniteFaceSize) f += BigRat(1, a);
    }
    f.canonicalize();
    BigRat half(1, 2);
    if (f > half) return Geometry::Spherical;
    if (f == half) return Geometry::Euclidean;
    return Geometry::Hyperbolic;
}

namespace {

// One coordinate scheme covers all five generators: a Z^2 cell plus a small
// sublattice index.
struct Coord {
    std::int64_t x = 0;
    std::int64_t y = 0;
    int sub = 0;
    auto operator<=>(const Coord&) const = default;
};

using NeighbourFn = std::function<std::array<Coord, 3>(const Coord&)>;
using ColourFn = std::function<Colour(const Coord&)>;

int parity2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

std::array<Coord, 3> hex_neighbours(const Coord& c) {
    // Brick-wall honeycomb: even-parity vertices link upward, odd downward.
    if (parity2(c.x + c.y) == 0) {
        return {Coord{c.x + 1, c.y, 0}, Coord{c.x - 1, c.y, 0}, Coord{c.x, c.y + 1, 0}};
    }
    return {Coord{c.x + 1, c.y, 0}, Coord{c.x - 1, c.y, 0}, Coord{c.x, c.y - 1, 0}};
}

// Corner d of the triangle that replaces hexagonal vertex (x,y); the
// external edge of corner d leads to the facing corner of the d-th
// hexagonal neighbour. Directions 0,1 are +x,-x (mutually inverse); the
// vertical direction 2 is its own inverse.
std::array<Coord, 3> tri_dodeca_neighbours(const Coord& c) {
    std::array<Coord, 3> hex = hex_neighbours(Coord{c.x, c.y, 0});
    static constexpr int kReverse[3] = {1, 0, 2};
    std::array<Coord, 3> out{};
    int slot = 0;
    for (int d = 0; d < 3; ++d) {
        if (d == c.sub) continue;
        out[static_cast<size_t>(slot++)] = Coord{c.x, c.y, d};
    }
    const Coord& h = hex[static_cast<size_t>(c.sub)];
    out[2] = Coord{h.x, h.y, kReverse[c.sub]};
    return out;
}

// Truncated square tiling: a 4-cycle N,E,S,W per cell, squares joined
// N-to-S vertically and E-to-W horizontally.
std::array<Coord, 3> square_octagon_neighbours(const Coord& c) {
    switch (c.sub) {
        case 0: return {Coord{c.x, c.y, 1}, Coord{c.x, c.y, 3}, Coord{c.x, c.y + 1, 2}};
        case 1: return {Coord{c.x, c.y, 0}, Coord{c.x, c.y, 2}, Coord{c.x + 1, c.y, 3}};
        case 2: return {Coord{c.x, c.y, 1}, Coord{c.x, c.y, 3}, Coord{c.x, c.y - 1, 0}};
        default: return {Coord{c.x, c.y, 0}, Coord{c.x, c.y, 2}, Coord{c.x - 1, c.y, 1}};
    }
}

// Truncated trihexagonal tiling: a 12-gon per triangular-lattice cell, one
// external edge per 12-gon vertex. dtab maps the vertex to the axial
// direction of the neighbouring cell, ptab to the partner vertex there.
std::array<Coord, 3> trunc_trihex_neighbours(const Coord& c) {
    static constexpr std::int64_t kAxial[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    static constexpr int kDir[12] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0};
    static constexpr int kPartner[12] = {5, 8, 7, 10, 9, 0, 11, 2, 1, 4, 3, 6};
    int k = c.sub;
    int d = kDir[k];
    return {Coord{c.x, c.y, (k + 1) % 12},
            Coord{c.x, c.y, (k + 11) % 12},
            Coord{c.x + kAxial[d][0], c.y + kAxial[d][1], kPartner[k]}};
}

std::array<Coord, 3> ladder_neighbours(const Coord& c) {
    return {Coord{c.x - 1, c.y, c.sub}, Coord{c.x + 1, c.y, c.sub}, Coord{c.x, c.y, 1 - c.sub}};
}

FinitePatch generate_from_coords(const NeighbourFn& neighbours, const ColourFn* colour_fn,
                                 const Coord& origin, int radius) {
    std::map<Coord, VertexId> id_of;
    std::vector<Coord> coords;
    std::deque<std::pair<Coord, int>> queue;
    id_of[origin] = 0;
    coords.push_back(origin);
    queue.emplace_back(origin, 0);
    while (!queue.empty()) {
        auto [c, d] = queue.front();
        queue.pop_front();
        if (d == radius) continue;
        for (const Coord& n : neighbours(c)) {
            if (id_of.emplace(n, static_cast<VertexId>(coords.size())).second) {
                coords.push_back(n);
                queue.emplace_back(n, d + 1);
            }
        }
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<bool> incomplete(coords.size(), false);
    for (VertexId v = 0; v < static_cast<VertexId>(coords.size()); ++v) {
        for (const Coord& n : neighbours(coords[static_cast<size_t>(v)])) {
            auto it = id_of.find(n);
            if (it == id_of.end()) {
                incomplete[static_cast<size_t>(v)] = true;
            } else if (v < it->second) {
                edges.emplace_back(v, it->second);
            }
        }
    }

    std::optional<std::vector<Colour>> colours;
    if (colour_fn) {
        colours.emplace(coords.size());
        for (size_t i = 0; i < coords.size(); ++i) (*colours)[i] = (*colour_fn)(coords[i]);
    }

    FinitePatch patch = build_patch(static_cast<VertexId>(coords.size()), edges, std::move(colours), 0);
    std::vector<std::int32_t> depth = depth_from_incomplete(patch, incomplete);
    return with_boundary_depth(std::move(patch), std::move(depth));
}

} // namespace

FinitePatch generate_lattice(const TypeVector& tv, int radius) {
    if (radius < 1) throw SawError(ErrorCode::BadInput, "radius must be >= 1");
    const Coord origin{0, 0, 0};

    if (tv == TypeVector::of(6, 6, 6)) {
        ColourFn colour = [](const Coord& c) {
            return parity2(c.x + c.y) == 0 ? Colour::Black : Colour::White;
        };
        return generate_from_coords(hex_neighbours, &colour, origin, radius);
    }
    if (tv == TypeVector::of(3, 12, 12)) {
        return generate_from_coords(tri_dodeca_neighbours, nullptr, origin, radius);
    }
    if (tv == TypeVector::of(4, 8, 8)) {
        ColourFn colour = [](const Coord& c) {
            int p = parity2(c.x + c.y);
            int swap = (c.sub == 1 || c.sub == 3) ? 1 : 0;
            return (p ^ swap) == 0 ? Colour::Black : Colour::White;
        };
        return generate_from_coords(square_octagon_neighbours, &colour, origin, radius);
    }
    if (tv == TypeVector::of(4, 6, 12)) {
        ColourFn colour = [](const Coord& c) { return c.sub % 2 == 0 ? Colour::Black : Colour::White; };
        return generate_from_coords(trunc_trihex_neighbours, &colour, origin, radius);
    }
    if (tv == TypeVector::of(4, 4, kInfiniteFaceSize)) {
        ColourFn colour = [](const Coord& c) {
            return parity2(c.x + c.sub) == 0 ? Colour::Black : Colour::White;
        };
        return generate_from_coords(ladder_neighbours, &colour, origin, radius);
    }
    throw SawError(ErrorCode::UnsupportedTypeVector,
                   "no generator for type-vector <" + tv.to_string() +
                       ">; supported: 6,6,6  3,12,12  4,8,8  4,6,12  4,4,inf");
}

} // namespace saw
