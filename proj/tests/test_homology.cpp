#include <catch2/catch_amalgamated.hpp>

#include "tilepipe/fixtures.hpp"
#include "tilepipe/homology.hpp"

using namespace tilepipe;

TEST_CASE("domino chain boundary: white centers minus black centers") {
    Region rg = make_box(2, 1, 1);
    SharpComplex cx(rg);
    Tiling t;
    t.dominoes = {fixtures::make_domino(rg, {0, 0, 0}, {1, 0, 0})};
    Chain ch = domino_chain(cx, t);
    REQUIRE(ch.size() == 2);
    Chain b = boundary_of(ch, cx);
    REQUIRE(b.coeff({6, 2, 2}) == 1);   // white center
    REQUIRE(b.coeff({2, 2, 2}) == -1);  // black center
    REQUIRE(b.size() == 2);
}

TEST_CASE("tiling differences are cycles") {
    for (const Region& rg : {fixtures::box221(), fixtures::box222(), fixtures::hex_region()}) {
        SharpComplex cx(rg);
        auto ts = enumerate_tilings(rg);
        Chain b0 = boundary_of(domino_chain(cx, ts[0]), cx);
        for (const Tiling& t : ts) {
            REQUIRE(boundary_of(domino_chain(cx, t), cx) == b0);
        }
    }
}

TEST_CASE("q1 chain: term counts and the boundary identity") {
    Homology h(make_box(1, 1, 2));
    REQUIRE(h.q1().size() == 12);

    // For every tiling t, d(6t - q1) = white boundary square centers minus
    // black ones.
    for (const Region& rg : {fixtures::box221(), fixtures::hex_region()}) {
        Homology hh(rg);
        auto squares = rg.boundary_squares();
        for (const Tiling& t : enumerate_tilings(rg)) {
            Chain c = Rat(6) * domino_chain(hh.complex(), t) - hh.q1();
            Chain b = boundary_of(c, hh.complex());
            REQUIRE(b.size() == squares.size());
            for (const BoundarySquare& s : squares)
                REQUIRE(b.coeff(hh.complex().canon(s.center)) ==
                        (s.color == Color::white ? 1 : -1));
        }
    }
}

TEST_CASE("q1 boundary vanishes on the torus") {
    Region rg = fixtures::torus6();
    Homology h(rg);
    Chain c = Rat(6) * domino_chain(h.complex(), fixtures::torus6_tiling()) - h.q1();
    REQUIRE(boundary_of(c, h.complex()).empty());
}

TEST_CASE("homology ranks of the example regions") {
    Homology box(make_box(2, 2, 2));
    REQUIRE(box.h1_rank() == 0);
    REQUIRE(box.h1_rel_rank() == 0);

    Homology ann(fixtures::annulus442());
    REQUIRE(ann.h1_rank() == 1);
    REQUIRE(ann.h1_rel_rank() == 0);

    Homology hole(fixtures::cube_hole_6_2());
    REQUIRE(hole.h1_rank() == 0);
    REQUIRE(hole.h1_rel_rank() == 1);

    Homology torus(fixtures::torus6());
    REQUIRE(torus.h1_rank() == 3);
    REQUIRE(torus.h1_rel_rank() == 3);
}

TEST_CASE("flux classes: boxes are trivial, the annulus is not") {
    Region rg = fixtures::box222();
    Homology h(rg);
    auto ts = enumerate_tilings(rg);
    for (const Tiling& t : ts) REQUIRE(h.same_flux(t, ts[0]));

    Region ann = fixtures::annulus442();
    Homology ha(ann);
    // Dual section: cut one arm of the ring (plane x = 2 restricted to y >= 3).
    ha.register_flux_dual(ha.slice_in_box(0, 8, {0, 3, 0}, {3, 3, 1}));
    auto ats = enumerate_tilings(ann);
    std::set<std::vector<Rat>> coord_values;
    std::vector<size_t> class_reps;
    for (const Tiling& t : ats) {
        FluxClass fc = ha.flux_diff(t, ats[0]);
        coord_values.insert(fc.coords);
    }
    REQUIRE(coord_values.size() >= 2);

    // Coordinates separate classes exactly as the canonical representatives do.
    for (size_t i = 0; i < ats.size(); i += 37)
        for (size_t j = i; j < ats.size(); j += 53) {
            FluxClass fi = ha.flux_diff(ats[i], ats[0]);
            FluxClass fj = ha.flux_diff(ats[j], ats[0]);
            REQUIRE((fi.rep == fj.rep) == (fi.coords == fj.coords));
            REQUIRE(ha.same_flux(ats[i], ats[j]) == (fi.rep == fj.rep));
        }
}

TEST_CASE("relative flux: zero on boxes and the balanced cube with hole") {
    Region rg = fixtures::box221();
    Homology h(rg);
    for (const Tiling& t : enumerate_tilings(rg)) REQUIRE(h.rflux(t).zero);

    Region hole = fixtures::cube_hole_6_2();
    Homology hh(hole);
    hh.register_rflux_dual(hh.box_shell({1, 1, 1}, {4, 4, 4}));
    RFluxClass rf = hh.rflux(fixtures::cube_hole_tiling(6, 2, 2));
    REQUIRE(rf.zero);
    REQUIRE(rf.coords[0] == 0);
}

TEST_CASE("relative flux is nonzero on the unbalanced cube with hole") {
    Region rg = fixtures::cube_hole_13_5();
    Homology h(rg, 2'000'000, 40'000);  // force the dual-pairing path
    REQUIRE(h.h1_rank() == 0);
    REQUIRE(h.h1_rel_rank() == 1);
    REQUIRE(h.betti(2, false) == 1);
    Chain shell = h.box_shell({3, 3, 3}, {9, 9, 9});
    h.register_rflux_dual(shell);

    // The shell is independent in H2: it pairs +-1 with a straight relative
    // 1-cycle from the hole wall to the outer boundary.
    {
        Chain probe(1);
        // Path along the x axis at cell row y=6, z=6 from the hole wall x=9
        // to the outer face x=13, through cube and face centers.
        for (int64_t x4 = 36; x4 < 52; x4 += 2)
            add_edge(probe, h.complex(), {x4, 26, 26}, {x4 + 2, 26, 26}, 1);
        REQUIRE(h.drop_boundary_cells(boundary_of(probe, h.complex())).empty());
        Rat pairing = h.section_intersection(probe, shell);
        REQUIRE((pairing == 1 || pairing == -1));
    }

    RFluxClass rf = h.rflux(fixtures::cube_hole_tiling(13, 4, 5));
    REQUIRE(!rf.zero);
    // Flux through the shell equals the hole's color imbalance: 63 vs 62.
    REQUIRE(boost::multiprecision::abs(rf.coords[0]) == 1);
}

TEST_CASE("i(Flux) = RFlux(t) - RFlux(t0) on the annulus") {
    Region ann = fixtures::annulus442();
    Homology ha(ann);
    auto ts = enumerate_tilings(ann);
    // Pick two tilings in different flux classes plus the base.
    size_t other = 0;
    for (size_t i = 1; i < ts.size(); ++i)
        if (!ha.same_flux(ts[i], ts[0])) {
            other = i;
            break;
        }
    REQUIRE(other != 0);
    for (size_t i : {size_t(0), other, ts.size() - 1}) {
        RFluxClass ri = ha.rflux(ts[i]);
        RFluxClass r0 = ha.rflux(ts[0]);
        FluxClass fd = ha.flux_diff(ts[i], ts[0]);
        // All relative classes vanish here (H1 rel = 0), so i(Flux) must be 0
        // in relative homology even when the absolute class is not.
        REQUIRE(ri.zero);
        REQUIRE(r0.zero);
        (void)fd;
    }
}

TEST_CASE("section intersection examples") {
    Region rg = make_box(2, 1, 1);
    Homology h(rg);
    Tiling t;
    t.dominoes = {fixtures::make_domino(rg, {0, 0, 0}, {1, 0, 0})};
    Chain ch = domino_chain(h.complex(), t);

    Chain internal = h.full_slice(0, 4);  // plane x = 1
    REQUIRE(h.section_intersection(ch, internal) == 1);

    Chain far = h.full_slice(2, 4);  // plane z = 1, top face: no crossing
    REQUIRE(h.section_intersection(ch, far) == 0);

    // Non-transversal: an edge inside the section plane.
    Chain bad = h.full_slice(0, 2);  // plane x = 1/2 contains the black center
    REQUIRE_THROWS_AS(h.section_intersection(h.q1(), bad), Error);
}

TEST_CASE("net section flux of 6t - q1 vanishes on balanced box halves") {
    Region rg = fixtures::box222();
    Homology h(rg);
    for (const Tiling& t : enumerate_tilings(rg)) {
        Chain c = Rat(6) * domino_chain(h.complex(), t) - h.q1();
        // Direct count oracle: white minus black cells on one side times 6
        // minus face terms; for the balanced 2x2x2 halves everything cancels.
        REQUIRE(h.section_intersection(c, h.full_slice(0, 4)) == 0);
        REQUIRE(h.section_intersection(c, h.full_slice(1, 4)) == 0);
        REQUIRE(h.section_intersection(c, h.full_slice(2, 4)) == 0);
    }
}

TEST_CASE("refinement preserves flux class under the natural chain map") {
    Region rg = fixtures::box221();
    Region rf = refine_region(rg);
    Homology hf(rf);
    auto ts = enumerate_tilings(rg);
    Chain diff = domino_chain(hf.complex(), refine_tiling(rg, ts[1])) -
                 domino_chain(hf.complex(), refine_tiling(rg, ts[0]));
    REQUIRE(boundary_of(diff, hf.complex()).empty());
    // H1 of a box is trivial: the refined difference must bound.
    FluxClass fc = hf.flux_diff(refine_tiling(rg, ts[1]), refine_tiling(rg, ts[0]));
    REQUIRE(fc.zero);
}
