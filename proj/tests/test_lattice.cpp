#include "saw/errors.hpp"
#include "saw/lattice.hpp"
#include "saw/patch.hpp"

#include <doctest.h>

#include <deque>
#include <vector>

using namespace saw;

namespace {

// Shortest cycle through v: min over incident edges of (path length from v
// to the neighbour avoiding that edge) + 1.
int shortest_cycle_through(const FinitePatch& p, VertexId v) {
    int best = -1;
    for (const VertexId* n = p.neighbours_begin(v); n != p.neighbours_end(v); ++n) {
        std::vector<std::int32_t> dist(static_cast<size_t>(p.vertex_count()), -1);
        std::deque<VertexId> queue;
        dist[static_cast<size_t>(v)] = 0;
        queue.push_back(v);
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (const VertexId* y = p.neighbours_begin(x); y != p.neighbours_end(x); ++y) {
                if (x == v && *y == *n) continue;   // forbid the direct edge
                if (dist[static_cast<size_t>(*y)] < 0) {
                    dist[static_cast<size_t>(*y)] = dist[static_cast<size_t>(x)] + 1;
                    queue.push_back(*y);
                }
            }
        }
        if (dist[static_cast<size_t>(*n)] >= 0) {
            int cycle = dist[static_cast<size_t>(*n)] + 1;
            if (best < 0 || cycle < best) best = cycle;
        }
    }
    return best;
}

// Counts k-cycles through v by path enumeration (each cycle found twice).
int count_cycles_through(const FinitePatch& p, VertexId v, int k) {
    std::vector<bool> visited(static_cast<size_t>(p.vertex_count()), false);
    int found = 0;
    auto dfs = [&](auto&& self, VertexId cur, int len) -> void {
        if (len == k - 1) {
            if (p.adjacent(cur, v)) ++found;
            return;
        }
        for (const VertexId* n = p.neighbours_begin(cur); n != p.neighbours_end(cur); ++n) {
            if (visited[static_cast<size_t>(*n)] || *n == v) continue;
            visited[static_cast<size_t>(*n)] = true;
            self(self, *n, len + 1);
            visited[static_cast<size_t>(*n)] = false;
        }
    };
    visited[static_cast<size_t>(v)] = true;
    dfs(dfs, v, 0);
    return found / 2;
}

void check_cubic_interior(const FinitePatch& p) {
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        if (p.boundary_depth(v) >= 1) CHECK(p.degree(v) == 3);
    }
}

} // namespace

TEST_CASE("type-vector parsing and canonical form") {
    CHECK(TypeVector::parse("12, 3,12") == TypeVector::of(3, 12, 12));
    CHECK(TypeVector::parse("4,4,inf").faces[2] == kInfiniteFaceSize);
    CHECK(TypeVector::of(6, 6, 6).to_string() == "6,6,6");
    CHECK(TypeVector::parse("inf,4,4").to_string() == "4,4,inf");
    CHECK_THROWS_AS(TypeVector::parse("4,4"), SawError);
    CHECK_THROWS_AS(TypeVector::parse("2,8,8"), SawError);
}

TEST_CASE("geometry classification is exact rational") {
    CHECK(classify(TypeVector::of(6, 6, 6)) == Geometry::Euclidean);
    CHECK(classify(TypeVector::of(4, 4, kInfiniteFaceSize)) == Geometry::Euclidean);
    CHECK(classify(TypeVector::of(3, 12, 12)) == Geometry::Euclidean);
    CHECK(classify(TypeVector::of(4, 8, 8)) == Geometry::Euclidean);
    CHECK(classify(TypeVector::of(4, 6, 12)) == Geometry::Euclidean);
    CHECK(classify(TypeVector::of(7, 7, 7)) == Geometry::Hyperbolic);
    CHECK(classify(TypeVector::of(3, 3, 3)) == Geometry::Spherical);
    CHECK(classify(TypeVector::of(5, 5, 5)) == Geometry::Spherical);   // dodecahedron, 3/5 > 1/2
    CHECK(classify(TypeVector::of(6, 6, 7)) == Geometry::Hyperbolic);
    CHECK(classify(TypeVector::of(3, 3, kInfiniteFaceSize)) == Geometry::Spherical);
}

TEST_CASE("hexagonal ball: degree, girth, bipartite") {
    // The hexagon through the origin reaches graph distance 3, so radius 3
    // is the smallest exact ball containing it.
    FinitePatch p = generate_lattice(TypeVector::of(6, 6, 6), 3);
    CHECK(p.degree(p.origin()) == 3);
    CHECK(shortest_cycle_through(p, p.origin()) == 6);

    FinitePatch big = generate_lattice(TypeVector::of(6, 6, 6), 5);
    REQUIRE(big.has_colours());
    CHECK(big.colouring_is_proper());
    check_cubic_interior(big);
}

TEST_CASE("ladder ball: squares but no triangles") {
    FinitePatch p = generate_lattice(TypeVector::of(4, 4, kInfiniteFaceSize), 3);
    check_cubic_interior(p);
    CHECK(shortest_cycle_through(p, p.origin()) == 4);
    CHECK(count_cycles_through(p, p.origin(), 3) == 0);
    CHECK(count_cycles_through(p, p.origin(), 4) > 0);
}

TEST_CASE("unsupported type-vectors are rejected") {
    CHECK_THROWS_AS(generate_lattice(TypeVector::of(5, 5, 5), 2), SawError);
    CHECK_THROWS_AS(generate_lattice(TypeVector::of(7, 7, 7), 2), SawError);
    CHECK_THROWS_AS(generate_lattice(TypeVector::of(3, 3, 3), 2), SawError);
    try {
        generate_lattice(TypeVector::of(5, 5, 5), 2);
    } catch (const SawError& e) {
        CHECK(e.code() == ErrorCode::UnsupportedTypeVector);
    }
}

TEST_CASE("interior vertices have degree three on every lattice") {
    for (TypeVector tv : {TypeVector::of(6, 6, 6), TypeVector::of(3, 12, 12), TypeVector::of(4, 8, 8),
                          TypeVector::of(4, 6, 12), TypeVector::of(4, 4, kInfiniteFaceSize)}) {
        for (int r : {2, 5, 8}) {
            FinitePatch p = generate_lattice(tv, r);
            check_cubic_interior(p);
            CHECK(p.boundary_depth(p.origin()) == r);
        }
    }
}

TEST_CASE("ball sizes match coordinate-set oracles") {
    // Honeycomb coordination sequence is 3k, so |B(r)| = 1 + 3r(r+1)/2.
    for (int r : {1, 2, 4, 8, 12}) {
        FinitePatch p = generate_lattice(TypeVector::of(6, 6, 6), r);
        CHECK(p.vertex_count() == 1 + 3 * r * (r + 1) / 2);
    }
    // Ladder: rail s=0 contributes 2r+1 vertices, rail s=1 contributes 2r-1.
    for (int r : {1, 2, 4, 8, 12}) {
        FinitePatch p = generate_lattice(TypeVector::of(4, 4, kInfiniteFaceSize), r);
        CHECK(p.vertex_count() == 4 * r);
    }
    // The planar tilings grow quadratically.
    for (TypeVector tv : {TypeVector::of(3, 12, 12), TypeVector::of(4, 8, 8), TypeVector::of(4, 6, 12)}) {
        for (int r : {4, 8}) {
            FinitePatch p = generate_lattice(tv, r);
            CHECK(p.vertex_count() >= r * r);
            CHECK(p.vertex_count() <= 30 * r * r);
        }
    }
}

TEST_CASE("triangle-dodecagon lattice has triangles and no two-colouring") {
    FinitePatch p = generate_lattice(TypeVector::of(3, 12, 12), 3);
    CHECK(!p.has_colours());
    CHECK(!try_two_colour(p).has_value());
    CHECK(shortest_cycle_through(p, p.origin()) == 3);
    CHECK(count_cycles_through(p, p.origin(), 3) == 1);   // exactly one triangle per vertex
}

TEST_CASE("square-octagon lattice is bipartite with girth four") {
    FinitePatch p = generate_lattice(TypeVector::of(4, 8, 8), 5);
    REQUIRE(p.has_colours());
    CHECK(p.colouring_is_proper());
    CHECK(shortest_cycle_through(p, p.origin()) == 4);
    CHECK(count_cycles_through(p, p.origin(), 4) == 1);
    CHECK(count_cycles_through(p, p.origin(), 8) >= 2);    // two octagon faces
}

TEST_CASE("truncated trihexagonal lattice: one square, one hexagon, one 12-gon") {
    FinitePatch p = generate_lattice(TypeVector::of(4, 6, 12), 6);
    REQUIRE(p.has_colours());
    CHECK(p.colouring_is_proper());
    CHECK(shortest_cycle_through(p, p.origin()) == 4);
    CHECK(count_cycles_through(p, p.origin(), 4) == 1);
    CHECK(count_cycles_through(p, p.origin(), 6) == 1);
    CHECK(count_cycles_through(p, p.origin(), 12) >= 1);
}
