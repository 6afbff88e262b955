#ifndef TILEPIPE_SHELLS_HPP
#define TILEPIPE_SHELLS_HPP

#include "tilepipe/fixtures.hpp"
#include "tilepipe/pipes.hpp"
#include "tilepipe/router.hpp"

namespace tilepipe {

// Shell construction.
//
// Design rule: every pipe connects boundary squares whose normals share an
// axis, and its interior runs use as few transverse directions as possible.
// Pipes confined to one coordinate plane make the tangent path of any curve
// through them a polygon of meridian hops, for which the zero-swirl tube
// framing always closes; the few non-planar pocket pipes of the hex shell
// pair their transverse walks in opposite senses for the same reason. The
// assembly step verifies closure for every curve, so a bad route fails loudly
// rather than silently shifting a self-linking number.

namespace shells {

inline const BoundarySquare& square_at(const std::vector<BoundarySquare>& sq, IVec3 center) {
    for (const auto& s : sq)
        if (s.center == center) return s;
    fail(ErrClass::routing, "no boundary square at " + to_string(center));
}

// Bridge between two squares in one plane sharing a transverse coordinate:
// out along the normal by h quarter-steps, straight across, back in.
inline OpenPath plane_bridge(const BoundarySquare& w, const BoundarySquare& b, int64_t h = 1) {
    IVec3 n = square_outward(w);
    check(square_outward(b) == n && w.center[w.axis] == b.center[b.axis], ErrClass::routing,
          "plane_bridge endpoints must lie in one plane");
    OpenPath p;
    p.pts = {w.center, w.center + h * n, b.center + h * n, b.center};
    return p;
}

// Pipe between squares on opposite parallel faces with the same transverse
// position: out, swing past the region on the `t` side, back along the axis,
// and in. Planar in the axis-t plane.
inline OpenPath wrap_pipe(const BoundarySquare& w, const BoundarySquare& b, IVec3 t,
                          int64_t out_h, int64_t reach) {
    IVec3 nw = square_outward(w), nb = square_outward(b);
    check(nw == -1 * nb && dot(t, nw) == 0, ErrClass::routing,
          "wrap_pipe wants opposite parallel faces and a perpendicular swing");
    OpenPath p;
    IVec3 a1 = w.center + out_h * nw;
    IVec3 b1 = b.center + out_h * nb;
    p.pts = {w.center, a1, a1 + reach * t, b1 + reach * t, b1, b.center};
    return p;
}

}  // namespace shells

// ---------------------------------------------------------------------------
// Built-in shells

// Eight local bridges closing the 2x2x1 box: one per side face, two each on
// top and bottom.
inline Shell shell_box221() {
    Region rg = make_box(2, 2, 1);
    auto sq = rg.boundary_squares();
    auto at = [&](int64_t x, int64_t y, int64_t z) -> const BoundarySquare& {
        return shells::square_at(sq, {x, y, z});
    };
    Shell sh;
    sh.name = "box-2-2-1";
    sh.pipes.push_back(shells::plane_bridge(at(6, 2, 4), at(2, 2, 4)));
    sh.pipes.push_back(shells::plane_bridge(at(2, 6, 4), at(6, 6, 4)));
    sh.pipes.push_back(shells::plane_bridge(at(6, 2, 0), at(2, 2, 0)));
    sh.pipes.push_back(shells::plane_bridge(at(2, 6, 0), at(6, 6, 0)));
    sh.pipes.push_back(shells::plane_bridge(at(0, 6, 2), at(0, 2, 2)));
    sh.pipes.push_back(shells::plane_bridge(at(8, 2, 2), at(8, 6, 2)));
    sh.pipes.push_back(shells::plane_bridge(at(6, 0, 2), at(2, 0, 2)));
    sh.pipes.push_back(shells::plane_bridge(at(2, 8, 2), at(6, 8, 2)));
    validate_shell(rg, sh);
    return sh;
}

// Hex region: outer bridges and wraps plus the three pocket-to-pocket pipes
// closing the ports that face the missing cells.
inline Shell shell_hex() {
    Region rg = fixtures::hex_region();
    auto sq = rg.boundary_squares();
    auto at = [&](int64_t x, int64_t y, int64_t z) -> const BoundarySquare& {
        return shells::square_at(sq, {x, y, z});
    };
    Shell sh;
    sh.name = "hex";

    sh.pipes.push_back(shells::plane_bridge(at(0, 6, 2), at(0, 2, 2)));  // x=0 face
    sh.pipes.push_back(shells::plane_bridge(at(8, 2, 2), at(8, 2, 6)));  // x=2 face
    sh.pipes.push_back(shells::plane_bridge(at(6, 0, 2), at(2, 0, 2)));  // y=0 face
    sh.pipes.push_back(shells::plane_bridge(at(2, 8, 2), at(2, 8, 6)));  // y=2 face
    sh.pipes.push_back(shells::plane_bridge(at(6, 2, 0), at(2, 2, 0)));  // z=0 face
    sh.pipes.push_back(shells::plane_bridge(at(6, 6, 8), at(6, 2, 8)));  // z=2 face

    // Pocket and wrap pipes are found by the lattice router with the local
    // bridges already in place (fixed order keeps the fixture reproducible).
    ShellRouter router(rg, 6);
    for (const OpenPath& p : sh.pipes) router.occupy(p);
    sh.pipes.push_back(router.route(at(6, 6, 4), at(2, 2, 4)));  // w11 -> b4
    sh.pipes.push_back(router.route(at(4, 6, 2), at(4, 2, 6)));  // w6 -> b5
    sh.pipes.push_back(router.route(at(6, 4, 2), at(2, 4, 6)));  // w3 -> b10
    sh.pipes.push_back(router.route(at(8, 6, 6), at(0, 6, 6)));  // w9 -> b9
    sh.pipes.push_back(router.route(at(6, 8, 6), at(6, 0, 6)));  // w10 -> b7
    sh.pipes.push_back(router.route(at(2, 6, 0), at(2, 6, 8)));  // w8 -> b12

    validate_shell(rg, sh);
    return sh;
}

// 3x3x2 box: twelve side bridges pairing the two floors of each side column,
// plus nine column returns joining each column's top and bottom squares
// around the outside, at staggered clearances.
inline Shell shell_box332() {
    Region rg = make_box(3, 3, 2);
    auto sq = rg.boundary_squares();
    Shell sh;
    sh.name = "box-3-3-2";

    for (int64_t k = 0; k < 3; ++k) {
        int64_t c = 4 * k + 2;
        for (IVec3 lo : {IVec3{0, c, 2}, IVec3{12, c, 2}, IVec3{c, 0, 2}, IVec3{c, 12, 2}}) {
            IVec3 hi = lo + IVec3{0, 0, 4};
            const BoundarySquare& s1 = shells::square_at(sq, lo);
            const BoundarySquare& s2 = shells::square_at(sq, hi);
            const BoundarySquare& w = s1.color == Color::white ? s1 : s2;
            const BoundarySquare& b = s1.color == Color::white ? s2 : s1;
            sh.pipes.push_back(shells::plane_bridge(w, b));
        }
    }

    struct Ret {
        int64_t cx, cy;
        IVec3 t;
        int64_t h;
    };
    const std::vector<Ret> rets = {
        {0, 0, {-1, 0, 0}, 2}, {0, 1, {-1, 0, 0}, 3}, {0, 2, {-1, 0, 0}, 4},
        {2, 0, {1, 0, 0}, 5},  {2, 1, {1, 0, 0}, 6},  {2, 2, {1, 0, 0}, 7},
        {1, 0, {0, -1, 0}, 8}, {1, 2, {0, 1, 0}, 9},  {1, 1, {1, 0, 0}, 10},
    };
    for (const Ret& r : rets) {
        const BoundarySquare& top = shells::square_at(sq, {4 * r.cx + 2, 4 * r.cy + 2, 8});
        const BoundarySquare& bot = shells::square_at(sq, {4 * r.cx + 2, 4 * r.cy + 2, 0});
        const BoundarySquare& w = top.color == Color::white ? top : bot;
        const BoundarySquare& b = top.color == Color::white ? bot : top;
        int64_t reach = 0;  // distance along t to the outside descent lane
        for (int a = 0; a < 3; ++a) {
            if (r.t[a] > 0) reach = (12 + r.h) - w.center[a];
            if (r.t[a] < 0) reach = w.center[a] + r.h;
        }
        OpenPath p;
        IVec3 a1 = w.center + r.h * square_outward(w);
        IVec3 b1 = b.center + r.h * square_outward(b);
        p.pts = {w.center, a1, a1 + reach * r.t, b1 + reach * r.t, b1, b.center};
        sh.pipes.push_back(p);
    }
    validate_shell(rg, sh);
    return sh;
}

inline Shell shell_empty(const Region& rg) {
    check(rg.boundary_squares().empty(), ErrClass::usage,
          "empty shell is only valid for closed regions");
    return Shell{{}, "empty"};
}

}  // namespace tilepipe

#endif
