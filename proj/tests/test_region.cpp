#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "tilepipe/fixtures.hpp"
#include "tilepipe/sharp.hpp"

using namespace tilepipe;

TEST_CASE("boxes: counts and coloring") {
    Region r = make_box(2, 2, 1);
    REQUIRE(r.size() == 4);
    REQUIRE(r.count(Color::black) == 2);
    REQUIRE(r.count(Color::white) == 2);
    REQUIRE(make_box(3, 3, 2).size() == 18);
    REQUIRE(make_box(4, 4, 2).size() == 32);

    REQUIRE(r.color({0, 0, 0}) == Color::black);
    REQUIRE(r.color({1, 0, 0}) == Color::white);
    REQUIRE(r.color({1, 1, 0}) == Color::black);
    REQUIRE_THROWS_AS(r.color({5, 5, 5}), Error);
    REQUIRE_THROWS_AS(make_box(0, 2, 2), Error);
}

TEST_CASE("adjacent cells always differ in color") {
    for (const Region& r : {fixtures::hex_region(), fixtures::annulus442(), fixtures::torus6()}) {
        for (const CellCoord& c : r.cells())
            for (int a = 0; a < 3; ++a)
                for (int s : {-1, +1}) {
                    CellCoord n = r.neighbor(c, a, s);
                    if (r.contains(n)) REQUIRE(r.color(n) == opposite(r.color(c)));
                }
    }
}

TEST_CASE("region validation") {
    // Disconnected.
    REQUIRE_THROWS_AS(make_region({{0, 0, 0}, {2, 0, 0}}), Error);
    // Edge pinch: two cells sharing only an edge.
    REQUIRE_THROWS_AS(make_region({{0, 0, 0}, {1, 1, 0}}), Error);
    // Odd wrap period.
    REQUIRE_THROWS_AS(make_region({{0, 0, 0}}, {std::optional<int64_t>(3), {}, {}}), Error);
    // The hex region's singular corner is fine.
    REQUIRE_NOTHROW(fixtures::hex_region());
    REQUIRE(fixtures::hex_region().size() == 6);
    REQUIRE(fixtures::cube_hole_13_5().size() == 13 * 13 * 13 - 5 * 5 * 5);
}

TEST_CASE("wrapping: translation by the period is the identity") {
    Region t = fixtures::torus6();
    for (const CellCoord& c : t.cells()) {
        REQUIRE(t.canon(c + IVec3{6, 0, 0}) == c);
        REQUIRE(t.canon(c + IVec3{0, -6, 6}) == c);
    }
    REQUIRE(t.boundary_squares().empty());
}

TEST_CASE("boundary squares") {
    REQUIRE(make_box(2, 2, 1).boundary_squares().size() == 16);
    REQUIRE(make_box(3, 3, 2).boundary_squares().size() == 42);
    auto bs = fixtures::hex_region().boundary_squares();
    REQUIRE(bs.size() == 24);
    size_t black = 0;
    for (auto& b : bs) black += b.color == Color::black;
    REQUIRE(black == 12);
}

TEST_CASE("sharp complex counts") {
    SharpComplex a(make_box(1, 1, 2));
    REQUIRE(a.count(3) == 16);
    SharpComplex b(make_box(2, 2, 1));
    REQUIRE(b.count(3) == 32);
    REQUIRE(b.count(0) == 75);
    REQUIRE(b.count(0) == oracles::half_lattice_vertex_count(make_box(2, 2, 1)));
    REQUIRE(a.count(0) == oracles::half_lattice_vertex_count(make_box(1, 1, 2)));

    SharpComplex t(fixtures::torus6());
    for (int d = 0; d <= 2; ++d)
        for (const SharpCell& c : t.cells(d)) REQUIRE(!t.on_boundary(c));
}

TEST_CASE("boundary of boundary vanishes") {
    for (const Region& r : {fixtures::hex_region(), make_box(2, 2, 2), fixtures::torus6()}) {
        SharpComplex cx(r);
        for (int d : {2, 3}) {
            for (const SharpCell& c : cx.cells(d)) {
                Chain ch(d);
                ch.add(c, 1);
                REQUIRE(boundary_of(boundary_of(ch, cx), cx).empty());
            }
        }
    }
}

TEST_CASE("boundary 2-cells are exactly the subdivided boundary squares") {
    for (const Region& r : {make_box(2, 2, 1), fixtures::hex_region()}) {
        SharpComplex cx(r);
        std::set<SharpCell> from_squares;
        for (const BoundarySquare& b : r.boundary_squares()) {
            int b1 = (b.axis + 1) % 3, b2 = (b.axis + 2) % 3;
            for (int s1 : {-1, +1})
                for (int s2 : {-1, +1}) {
                    SharpCell q = b.center;
                    q[b1] += s1;
                    q[b2] += s2;
                    from_squares.insert(cx.canon(q));
                }
        }
        std::set<SharpCell> marked;
        for (const SharpCell& q : cx.cells(2))
            if (cx.on_boundary(q)) marked.insert(q);
        REQUIRE(marked == from_squares);
    }
}
