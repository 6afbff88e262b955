#ifndef TILEPIPE_PIPES_HPP
#define TILEPIPE_PIPES_HPP

#include <map>
#include <vector>

#include "tilepipe/linkhel.hpp"
#include "tilepipe/tiling.hpp"

namespace tilepipe {

// Directed open polyline on the x4 quarter lattice.
struct OpenPath {
    std::vector<IVec3> pts;

    IVec3 front() const { return pts.front(); }
    IVec3 back() const { return pts.back(); }
};

// ---------------------------------------------------------------------------
// The five arcs of a domino, oriented from the black cube to the white one.
// Reference domino: black cube at the origin, white at +x. Entry points are
// the centers of the five exposed black-cube faces, exits the matching white
// ones; every arc meets its faces orthogonally.

namespace detail {

inline const std::array<std::vector<IVec3>, 5>& reference_arcs() {
    static const std::array<std::vector<IVec3>, 5> arcs = {{
        {{0, 2, 2}, {8, 2, 2}},
        {{2, 0, 2}, {2, 1, 2}, {6, 1, 2}, {6, 0, 2}},
        {{2, 2, 0}, {2, 2, 1}, {6, 2, 1}, {6, 2, 0}},
        {{2, 4, 2}, {2, 3, 2}, {6, 3, 2}, {6, 4, 2}},
        {{2, 2, 4}, {2, 2, 3}, {6, 2, 3}, {6, 2, 4}},
    }};
    return arcs;
}

// Return pipe of the six-pipe adjustment: a flat closed rectangle running
// forward near one corner lane and back, linking nothing.
inline const std::vector<IVec3>& reference_loop() {
    static const std::vector<IVec3> loop = {{1, 1, 1}, {7, 1, 1}, {7, 3, 1}, {1, 3, 1}};
    return loop;
}

// Orientation-preserving rotations mapping +x onto each axis direction.
inline IVec3 rotate_to(int axis, int dir, IVec3 p) {
    if (axis == 0) return dir > 0 ? p : IVec3{-p.x, -p.y, p.z};
    if (axis == 1) return dir > 0 ? IVec3{-p.y, p.x, p.z} : IVec3{p.y, -p.x, p.z};
    return dir > 0 ? IVec3{-p.z, p.y, p.x} : IVec3{p.z, p.y, -p.x};
}

}  // namespace detail

// Arcs of a domino in x4 coordinates (unwrapped, using the black cell's
// canonical representative).
inline std::vector<OpenPath> domino_pipes(const Region& rg, const Domino& d) {
    auto [axis, dir] = domino_axis(rg, d);
    IVec3 bc = 4 * rg.canon(d.black) + IVec3{2, 2, 2};
    std::vector<OpenPath> out;
    for (const auto& ref : detail::reference_arcs()) {
        OpenPath p;
        for (const IVec3& q : ref)
            p.pts.push_back(detail::rotate_to(axis, dir, q - IVec3{2, 2, 2}) + bc);
        out.push_back(std::move(p));
    }
    return out;
}

inline Polyline six_pipe_loop(const Region& rg, const Domino& d) {
    auto [axis, dir] = domino_axis(rg, d);
    IVec3 bc = 4 * rg.canon(d.black) + IVec3{2, 2, 2};
    Polyline loop;
    for (const IVec3& q : detail::reference_loop())
        loop.v.push_back(detail::rotate_to(axis, dir, q - IVec3{2, 2, 2}) + bc);
    return loop;
}

// ---------------------------------------------------------------------------
// Shells: systems of directed pipes in the complement closing every boundary
// port, each from a white boundary square center to a black one, leaving and
// entering orthogonally.

struct Shell {
    std::vector<OpenPath> pipes;
    std::string name;
};

inline IVec3 square_outward(const BoundarySquare& b) {
    IVec3 n{};
    n[b.axis] = b.side;
    return n;
}

inline void validate_shell(const Region& rg, const Shell& sh) {
    auto squares = rg.boundary_squares();
    std::map<IVec3, const BoundarySquare*> by_center;
    for (const auto& s : squares) by_center[s.center] = &s;
    std::map<IVec3, int> used;
    check(sh.pipes.size() * 2 == squares.size(), ErrClass::validation,
          "shell pipe count does not match boundary squares");
    for (const OpenPath& p : sh.pipes) {
        check(p.pts.size() >= 2, ErrClass::validation, "shell pipe too short");
        auto itw = by_center.find(p.front());
        auto itb = by_center.find(p.back());
        check(itw != by_center.end() && itw->second->color == Color::white,
              ErrClass::validation, "shell pipe must start at a white boundary square");
        check(itb != by_center.end() && itb->second->color == Color::black,
              ErrClass::validation, "shell pipe must end at a black boundary square");
        check(++used[p.front()] == 1 && ++used[p.back()] == 1, ErrClass::validation,
              "boundary square used twice by the shell");
        // Orthogonal departure and arrival.
        IVec3 d0 = p.pts[1] - p.pts[0];
        IVec3 d1 = p.pts.back() - p.pts[p.pts.size() - 2];
        IVec3 nw = square_outward(*itw->second), nb = square_outward(*itb->second);
        check(cross(d0, nw) == IVec3{0, 0, 0} && dot(d0, nw) > 0, ErrClass::validation,
              "shell pipe does not leave its white square orthogonally");
        check(cross(d1, nb) == IVec3{0, 0, 0} && dot(d1, nb) < 0, ErrClass::validation,
              "shell pipe does not enter its black square orthogonally");
    }
}

// ---------------------------------------------------------------------------
// Curve systems

struct CurveSystem {
    std::vector<Polyline> curves;   // x4 coordinates, merged collinear runs
    std::vector<Framing> framings;  // x8 offsets (satellite = 2v + o)
    std::vector<Rat> fluxes;        // per curve; the construction uses phi
    Rat phi{1, 6};
    bool six_pipe = false;
    bool wrapped = false;  // wrapped systems carry no usable geometry
    std::string region_key, shell_name;
};

namespace detail {

inline int seg_axis(IVec3 d) {
    int nz = (d.x != 0) + (d.y != 0) + (d.z != 0);
    check(nz == 1, ErrClass::geometry, "curve segment is not axis-parallel");
    return d.x != 0 ? 0 : (d.y != 0 ? 1 : 2);
}

inline IVec3 unit_dir(IVec3 d) {
    int a = seg_axis(d);
    IVec3 u{};
    u[a] = d[a] > 0 ? 1 : -1;
    return u;
}

// Zero-swirl transport of a unit normal through a right-angle bend u -> w.
inline IVec3 bishop_step(IVec3 n, IVec3 u, IVec3 w) {
    if (n == w) return -1 * u;
    if (n == -1 * w) return u;
    return n;
}

inline IVec3 reference_normal(IVec3 u) {
    if (u.x != 0) return {0, 1, 0};
    if (u.y != 0) return {0, 0, 1};
    return {1, 0, 0};
}

// The tube framing: per-segment normals by zero-swirl transport, per-vertex
// offsets with miter joins. Fails if the transport does not close up, which
// would mean the pipe field has no closed trajectory foliation.
inline Framing bishop_framing(const Polyline& c) {
    size_t n = c.v.size();
    std::vector<IVec3> dirs(n);
    for (size_t i = 0; i < n; ++i) dirs[i] = unit_dir(c.seg_b(i) - c.seg_a(i));

    std::vector<IVec3> normals(n);
    normals[0] = reference_normal(dirs[0]);
    for (size_t i = 1; i < n; ++i) normals[i] = bishop_step(normals[i - 1], dirs[i - 1], dirs[i]);
    IVec3 closed = bishop_step(normals[n - 1], dirs[n - 1], dirs[0]);
    check(closed == normals[0], ErrClass::geometry,
          "tube framing does not close around a curve (holonomy != 0)");

    Framing f;
    f.vertex_offset.resize(n);
    for (size_t i = 0; i < n; ++i) {
        IVec3 prev = normals[(i + n - 1) % n];
        IVec3 cur = normals[i];
        f.vertex_offset[i] = (prev == cur) ? cur : prev + cur;
    }
    return f;
}

}  // namespace detail

// Joins domino arcs and shell pipes into the system of closed curves. Every
// interior face center chains the white-side exit to the black-side entry;
// boundary ports are closed by the shell.
inline CurveSystem assemble_curves(const Region& rg, const Tiling& t, const Shell& shell,
                                   const Rat& phi = Rat(1, 6), bool six_pipe = false) {
    t.validate(rg);
    bool wrapped = rg.wrapped();
    if (!wrapped) validate_shell(rg, shell);
    check(phi > 0, ErrClass::usage, "phi must be positive");

    struct Piece {
        std::vector<IVec3> pts;
        bool used = false;
    };
    std::vector<Piece> pieces;
    std::vector<Polyline> loops;  // six-pipe return loops, already closed

    for (const Domino& d : t.dominoes) {
        for (OpenPath& p : domino_pipes(rg, d)) pieces.push_back({std::move(p.pts), false});
        if (six_pipe) loops.push_back(six_pipe_loop(rg, d));
    }
    size_t n_arcs = pieces.size();
    for (const OpenPath& p : shell.pipes) pieces.push_back({p.pts, false});

    auto canon4 = [&](IVec3 p) {
        for (int a = 0; a < 3; ++a)
            if (rg.wrap()[a]) {
                int64_t m = 4 * *rg.wrap()[a];
                p[a] = ((p[a] % m) + m) % m;
            }
        return p;
    };

    std::map<IVec3, size_t> starts;
    for (size_t i = 0; i < pieces.size(); ++i) {
        auto [it, fresh] = starts.emplace(canon4(pieces[i].pts.front()), i);
        check(fresh, ErrClass::geometry, "two pipes start at the same port");
    }

    CurveSystem sys;
    sys.phi = phi;
    sys.six_pipe = six_pipe;
    sys.wrapped = wrapped;
    {
        std::ostringstream key;
        key << rg.size() << ":" << to_string(rg.min_corner()) << to_string(rg.max_corner());
        CellHash hh;
        uint64_t acc = 0;
        for (const CellCoord& c : rg.cells()) acc = acc * 1099511628211ull + hh(c);
        key << ":" << acc;
        sys.region_key = key.str();
    }
    sys.shell_name = shell.name;

    for (size_t seed = 0; seed < pieces.size(); ++seed) {
        if (pieces[seed].used) continue;
        std::vector<IVec3> walk;
        size_t cur = seed;
        while (!pieces[cur].used) {
            pieces[cur].used = true;
            const auto& pts = pieces[cur].pts;
            size_t from = walk.empty() ? 0 : 1;  // skip the shared junction point
            if (!walk.empty())
                check(canon4(walk.back()) == canon4(pts.front()), ErrClass::geometry,
                      "pipe chain mismatch at a junction");
            for (size_t k = from; k < pts.size(); ++k) walk.push_back(pts[k]);
            auto next = starts.find(canon4(pts.back()));
            check(next != starts.end(), ErrClass::geometry,
                  "dangling pipe end at " + to_string(pts.back()));
            cur = next->second;
        }
        check(cur == seed, ErrClass::geometry, "pipe chain closed onto a foreign curve");
        check(canon4(walk.back()) == canon4(walk.front()), ErrClass::geometry,
              "curve failed to close");
        walk.pop_back();

        // Merge collinear runs.
        Polyline c;
        size_t m = walk.size();
        for (size_t i = 0; i < m; ++i) {
            IVec3 prev = walk[(i + m - 1) % m], cu = walk[i], nxt = walk[(i + 1) % m];
            if (cross(cu - prev, nxt - cu) == IVec3{0, 0, 0} &&
                dot(cu - prev, nxt - cu) > 0)
                continue;
            c.v.push_back(cu);
        }
        // Canonical start: lexicographically smallest vertex.
        size_t best = 0;
        for (size_t i = 1; i < c.v.size(); ++i)
            if (c.v[i] < c.v[best]) best = i;
        std::rotate(c.v.begin(), c.v.begin() + best, c.v.end());
        sys.curves.push_back(std::move(c));
    }
    (void)n_arcs;
    for (Polyline& l : loops) {
        size_t best = 0;
        for (size_t i = 1; i < l.v.size(); ++i)
            if (l.v[i] < l.v[best]) best = i;
        std::rotate(l.v.begin(), l.v.begin() + best, l.v.end());
        sys.curves.push_back(std::move(l));
    }
    std::sort(sys.curves.begin(), sys.curves.end(),
              [](const Polyline& a, const Polyline& b) { return a.v < b.v; });

    if (!wrapped) {
        for (size_t i = 0; i < sys.curves.size(); ++i) {
            check(geom::polyline_simple(sys.curves[i]), ErrClass::geometry,
                  "curve self-intersects");
            for (size_t j = i + 1; j < sys.curves.size(); ++j)
                check(geom::polylines_disjoint(sys.curves[i], sys.curves[j]),
                      ErrClass::geometry, "curves intersect");
        }
        for (const Polyline& c : sys.curves) sys.framings.push_back(detail::bishop_framing(c));
    }
    sys.fluxes.assign(sys.curves.size(), phi);
    return sys;
}

// Signed crossings of all curves through the plane axis = plane4/4 (x4, even),
// evaluated an eighth above the plane so no vertex interferes.
inline int64_t system_plane_crossings(const CurveSystem& sys, int axis, int64_t plane4) {
    check(!sys.wrapped, ErrClass::usage, "plane crossings need unwrapped geometry");
    int64_t total = 0;
    // Work at scale x8: the plane sits at 2*plane4 + 1.
    int64_t h = 2 * plane4 + 1;
    for (const Polyline& c : sys.curves)
        for (size_t i = 0; i < c.segments(); ++i) {
            int64_t a = 2 * c.seg_a(i)[axis], b = 2 * c.seg_b(i)[axis];
            if (a < h && b > h) total += 1;
            if (a > h && b < h) total -= 1;
        }
    return total;
}

}  // namespace tilepipe

#endif
