#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "tilepipe/linkhel.hpp"

using namespace tilepipe;

namespace {

Polyline rect(IVec3 a, IVec3 b, IVec3 c, IVec3 d) { return Polyline{{a, b, c, d}}; }

// The reference Hopf pair: a square in the z=0 plane and a rectangle through
// its middle.
Polyline hopf1() { return rect({0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {0, 2, 0}); }
Polyline hopf2() { return rect({1, 1, -1}, {1, 1, 1}, {1, 3, 1}, {1, 3, -1}); }

Polyline reversed(Polyline p) {
    std::reverse(p.v.begin(), p.v.end());
    return p;
}

Polyline mirrored_x(Polyline p) {
    for (auto& v : p.v) v.x = -v.x;
    return p;
}

}  // namespace

TEST_CASE("linking number: separated and Hopf-linked curves") {
    Polyline far1 = rect({0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0});
    Polyline far2 = rect({10, 10, 10}, {11, 10, 10}, {11, 11, 10}, {10, 11, 10});
    REQUIRE(linking_number(far1, far2) == 0);

    int64_t lk = linking_number(hopf1(), hopf2());
    REQUIRE((lk == 1 || lk == -1));
}

TEST_CASE("linking number: projection independence") {
    int found = 0;
    for (int k = 0; found < 6 && k < 40; ++k) {
        IVec3 d = detail::projection_candidate(k, 0);
        auto cc = detail::count_crossings(hopf1(), hopf2(), d);
        if (!cc.generic) continue;
        ++found;
        REQUIRE(cc.signed_sum / 2 == linking_number(hopf1(), hopf2()));
    }
    REQUIRE(found == 6);
}

TEST_CASE("linking number: symmetry, reversal, mirror") {
    int64_t lk = linking_number(hopf1(), hopf2());
    REQUIRE(linking_number(hopf2(), hopf1()) == lk);
    REQUIRE(linking_number(reversed(hopf1()), hopf2()) == -lk);
    REQUIRE(linking_number(hopf1(), reversed(hopf2())) == -lk);
    REQUIRE(linking_number(reversed(hopf1()), reversed(hopf2())) == lk);
    REQUIRE(linking_number(mirrored_x(hopf1()), mirrored_x(hopf2())) == -lk);
}

TEST_CASE("intersecting curves are rejected") {
    Polyline a = rect({0, 0, 0}, {2, 0, 0}, {2, 2, 0}, {0, 2, 0});
    Polyline b = rect({1, -1, 0}, {1, 1, 0}, {3, 1, 0}, {3, -1, 0});
    REQUIRE_THROWS_AS(linking_number(a, b), Error);
}

TEST_CASE("gauss integral oracle agrees with the exact values") {
    double g = oracles::gauss_linking_oracle(hopf1(), hopf2());
    REQUIRE(std::abs(g - double(linking_number(hopf1(), hopf2()))) < 1e-6);

    Polyline far1 = rect({0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0});
    Polyline far2 = rect({5, 5, 5}, {6, 5, 5}, {6, 6, 5}, {5, 6, 5});
    REQUIRE(std::abs(oracles::gauss_linking_oracle(far1, far2)) < 1e-6);
}

TEST_CASE("self-linking: planar curve with constant vertical framing") {
    Polyline sq = rect({0, 0, 0}, {4, 0, 0}, {4, 4, 0}, {0, 4, 0});
    Framing f;
    f.vertex_offset = {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}};
    REQUIRE(self_linking(sq, f) == 0);
}

TEST_CASE("self-linking: a full twist of the framing gives slk +-1") {
    // Per-segment normals +z, +x, -z, -x with miter joins: the satellite
    // makes one full turn around the core.
    Polyline sq = rect({0, 0, 0}, {8, 0, 0}, {8, 8, 0}, {0, 8, 0});
    Framing once;
    once.vertex_offset = {{1, 0, 1}, {1, 0, 1}, {1, 0, -1}, {1, 0, -1}};
    int64_t slk = self_linking(sq, once);
    REQUIRE((slk == 1 || slk == -1));

    // The numeric oracle sees the same value on the explicit satellite.
    Polyline sat = satellite_of(sq, once);
    double g = oracles::gauss_linking_oracle(scaled(sq, 2), sat);
    REQUIRE(std::abs(g - double(slk)) < 1e-3);
}

TEST_CASE("degenerate framing is reported") {
    Polyline sq = rect({0, 0, 0}, {4, 0, 0}, {4, 4, 0}, {0, 4, 0});
    Framing f;
    f.vertex_offset = {{0, 0, 0}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}};
    REQUIRE_THROWS_AS(self_linking(sq, f), Error);
}

TEST_CASE("simplicity and disjointness predicates") {
    Polyline good = rect({0, 0, 0}, {4, 0, 0}, {4, 4, 0}, {0, 4, 0});
    REQUIRE(geom::polyline_simple(good));
    Polyline bowtie{{{0, 0, 0}, {4, 4, 0}, {4, 0, 0}, {0, 4, 0}}};
    REQUIRE(!geom::polyline_simple(bowtie));
    REQUIRE(geom::polylines_disjoint(good, Polyline{{{9, 0, 0}, {9, 9, 0}, {9, 0, 9}}}));
    REQUIRE(!geom::polylines_disjoint(good, Polyline{{{4, 0, 0}, {9, 9, 0}, {9, 0, 9}}}));
}
