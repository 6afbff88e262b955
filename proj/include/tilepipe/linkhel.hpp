#ifndef TILEPIPE_LINKHEL_HPP
#define TILEPIPE_LINKHEL_HPP

#include <vector>

#include "tilepipe/base.hpp"

namespace tilepipe {

// Closed polygonal curves with integer vertices (the library keeps pipe cores
// on the x4 quarter lattice and satellites on the x8 lattice). All linking
// computations are exact: crossings are located by integer determinant signs
// in a projection direction that is verified to be generic for the input.

struct Polyline {
    std::vector<IVec3> v;  // cyclic; segment i runs v[i] -> v[(i+1) % n]

    size_t segments() const { return v.size(); }
    IVec3 seg_a(size_t i) const { return v[i]; }
    IVec3 seg_b(size_t i) const { return v[(i + 1) % v.size()]; }

    friend bool operator==(const Polyline&, const Polyline&) = default;
};

inline Polyline scaled(const Polyline& p, int64_t k) {
    Polyline out;
    out.v.reserve(p.v.size());
    for (const IVec3& x : p.v) out.v.push_back(k * x);
    return out;
}

namespace geom {

// Closed-segment intersection test, exact. Touching counts as intersecting.
inline bool segments_touch(IVec3 p0, IVec3 p1, IVec3 q0, IVec3 q1) {
    IVec3 u = p1 - p0, v = q1 - q0, w = q0 - p0;
    IVec3 n = cross(u, v);
    auto within01 = [](int64_t num, int64_t den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return num >= 0 && num <= den;
    };
    if (n == IVec3{0, 0, 0}) {
        // Parallel. Distinct lines cannot touch.
        if (cross(u, w) != IVec3{0, 0, 0}) return false;
        if (u == IVec3{0, 0, 0} && v == IVec3{0, 0, 0}) return p0 == q0;
        // Collinear: 1D overlap along the dominant axis of the direction.
        IVec3 dir = (u == IVec3{0, 0, 0}) ? v : u;
        int ax = 0;
        for (int a = 1; a < 3; ++a)
            if (std::abs(dir[a]) > std::abs(dir[ax])) ax = a;
        int64_t a0 = p0[ax], a1 = p1[ax], b0 = q0[ax], b1 = q1[ax];
        if (a0 > a1) std::swap(a0, a1);
        if (b0 > b1) std::swap(b0, b1);
        return std::max(a0, b0) <= std::min(a1, b1);
    }
    if (det3(u, v, w) != 0) return false;  // skew lines
    // Coplanar with independent directions: solve p0 + s u = q0 + t v.
    //   s * (u x v) = w x v ;  t * (u x v) = w x u
    int64_t den = dot(n, n);
    int64_t sn = dot(cross(w, v), n);
    int64_t tn = dot(cross(w, u), n);
    return within01(sn, den) && within01(tn, den);
}

inline bool polylines_disjoint(const Polyline& a, const Polyline& b) {
    for (size_t i = 0; i < a.segments(); ++i)
        for (size_t j = 0; j < b.segments(); ++j)
            if (segments_touch(a.seg_a(i), a.seg_b(i), b.seg_a(j), b.seg_b(j))) return false;
    return true;
}

// A closed polyline is simple when non-adjacent segments are disjoint and
// adjacent ones share exactly the common vertex.
inline bool polyline_simple(const Polyline& c) {
    size_t n = c.segments();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        IVec3 u = c.seg_b(i) - c.seg_a(i);
        if (u == IVec3{0, 0, 0}) return false;
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) {
                if (segments_touch(c.seg_a(i), c.seg_b(i), c.seg_a(j), c.seg_b(j))) return false;
            } else {
                // Shared vertex only; a fold-back would overlap along a line.
                IVec3 w = c.seg_b(j) - c.seg_a(j);
                IVec3 shared = (j == i + 1) ? c.seg_b(i) : c.seg_a(i);
                IVec3 other1 = c.seg_a(i) == shared ? c.seg_b(i) : c.seg_a(i);
                IVec3 other2 = c.seg_a(j) == shared ? c.seg_b(j) : c.seg_a(j);
                if (cross(u, w) == IVec3{0, 0, 0} &&
                    dot(other1 - shared, other2 - shared) > 0)
                    return false;
            }
        }
    }
    return true;
}

}  // namespace geom

namespace detail {

// Deterministic candidate projection directions: a fixed preamble, then a
// small linear congruential stream.
inline IVec3 projection_candidate(int k, uint64_t seed) {
    static const IVec3 fixed[] = {{3, 5, 7},   {7, 3, 5},   {5, 7, 3},  {2, 9, 5},
                                  {9, 2, 5},   {5, 9, 2},   {11, 4, 7}, {4, 11, 7},
                                  {13, 6, 11}, {6, 13, 11}, {3, 10, 17}, {17, 10, 3}};
    if (k < int(sizeof(fixed) / sizeof(fixed[0]))) return fixed[k];
    uint64_t s = seed * 6364136223846793005ull + 1442695040888963407ull + uint64_t(k) * 0x9e3779b9ull;
    auto next = [&]() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return int64_t((s >> 33) % 37) - 18;
    };
    IVec3 d{0, 0, 0};
    while (cross(d, IVec3{1, 0, 0}) == IVec3{0, 0, 0} || d == IVec3{0, 0, 0})
        d = {next() * 2 + 1, next() * 2 + 1, next() * 2 + 1};
    return d;
}

struct CrossingCount {
    bool generic = false;
    int64_t signed_sum = 0;  // over all crossings between the two curves
    bool intersect = false;
};

inline CrossingCount count_crossings(const Polyline& c1, const Polyline& c2, IVec3 d) {
    CrossingCount out;
    for (const Polyline* c : {&c1, &c2})
        for (size_t i = 0; i < c->segments(); ++i)
            if (cross(c->seg_b(i) - c->seg_a(i), d) == IVec3{0, 0, 0}) return out;

    // Projection plane basis for the parallel-lines overlap test.
    IVec3 probe = cross(d, IVec3{1, 0, 0}) == IVec3{0, 0, 0} ? IVec3{0, 1, 0} : IVec3{1, 0, 0};
    IVec3 e1 = cross(d, probe);
    IVec3 e2 = cross(d, e1);
    auto proj = [&](IVec3 x) { return std::pair<int64_t, int64_t>{dot(x, e1), dot(x, e2)}; };

    int64_t sum = 0;
    for (size_t i = 0; i < c1.segments(); ++i) {
        IVec3 p0 = c1.seg_a(i), u = c1.seg_b(i) - p0;
        for (size_t j = 0; j < c2.segments(); ++j) {
            IVec3 q0 = c2.seg_a(j), v = c2.seg_b(j) - q0;
            IVec3 w = q0 - p0;
            int64_t D = det3(u, -1 * v, -1 * d);
            if (D == 0) {
                // Parallel projections. Distinct projected lines cannot
                // cross; on a shared line, overlapping shadows make the
                // direction unusable.
                if (det3(u, w, d) != 0) continue;
                auto [ux, uy] = proj(u);
                auto a0 = int64_t(0);
                auto a1 = ux * ux + uy * uy;
                auto [wx, wy] = proj(w);
                auto [vx, vy] = proj(v);
                int64_t b0 = wx * ux + wy * uy;
                int64_t b1 = b0 + vx * ux + vy * uy;
                if (b0 > b1) std::swap(b0, b1);
                if (std::max(a0, b0) <= std::min(a1, b1)) return out;
                continue;
            }
            int64_t sN = det3(w, -1 * v, -1 * d);
            int64_t tN = det3(u, w, -1 * d);
            int64_t lN = det3(u, -1 * v, w);
            auto frac_in_01 = [&](int64_t num) {
                int64_t den = D;
                if (den < 0) {
                    num = -num;
                    den = -den;
                }
                if (num > 0 && num < den) return 1;   // strictly interior
                if (num == 0 || num == den) return 2;  // endpoint incidence
                return 0;
            };
            int si = frac_in_01(sN), ti = frac_in_01(tN);
            if (si == 0 || ti == 0) continue;
            if (si == 2 || ti == 2) return out;  // endpoint incidence: not generic
            if (lN == 0) {
                out.intersect = true;
                return out;
            }
            // Over strand: lambda > 0 means the c1 point sits at +d of c2.
            bool c1_over = (lN > 0) == (D > 0);
            int64_t s = det3(u, v, d) > 0 ? 1 : -1;
            sum += c1_over ? s : -s;
        }
    }
    out.generic = true;
    out.signed_sum = sum;
    return out;
}

}  // namespace detail

// Exact Gauss linking number of two disjoint closed polylines.
inline int64_t linking_number_with_direction(const Polyline& c1, const Polyline& c2, IVec3 d) {
    auto cc = detail::count_crossings(c1, c2, d);
    check(!cc.intersect, ErrClass::geometry, "curves intersect");
    check(cc.generic, ErrClass::geometry, "projection direction is not generic");
    check(cc.signed_sum % 2 == 0, ErrClass::geometry, "odd crossing sum");
    return cc.signed_sum / 2;
}

inline int64_t linking_number(const Polyline& c1, const Polyline& c2, uint64_t seed = 0) {
    for (int k = 0; k < 64; ++k) {
        auto cc = detail::count_crossings(c1, c2, detail::projection_candidate(k, seed));
        check(!cc.intersect, ErrClass::geometry, "curves intersect");
        if (!cc.generic) continue;
        check(cc.signed_sum % 2 == 0, ErrClass::geometry, "odd crossing sum");
        return cc.signed_sum / 2;
    }
    fail(ErrClass::geometry, "no generic projection direction found");
}

// A framing assigns every vertex an offset vector; the satellite of a curve
// with vertices v (scale x4) is the closed polyline with vertices 2v + o
// (scale x8, offset magnitude 1/8).
struct Framing {
    std::vector<IVec3> vertex_offset;
};

inline Polyline satellite_of(const Polyline& core, const Framing& f) {
    check(core.v.size() == f.vertex_offset.size(), ErrClass::usage,
          "framing does not match the curve");
    Polyline s;
    s.v.reserve(core.v.size());
    for (size_t i = 0; i < core.v.size(); ++i) s.v.push_back(2 * core.v[i] + f.vertex_offset[i]);
    // Consecutive equal offsets along a straight run can duplicate vertices.
    Polyline out;
    for (const IVec3& p : s.v)
        if (out.v.empty() || out.v.back() != p) out.v.push_back(p);
    while (out.v.size() > 1 && out.v.front() == out.v.back()) out.v.pop_back();
    return out;
}

inline int64_t self_linking(const Polyline& core, const Framing& f, uint64_t seed = 0) {
    Polyline sat = satellite_of(core, f);
    Polyline core2 = scaled(core, 2);
    check(geom::polylines_disjoint(core2, sat), ErrClass::geometry,
          "degenerate framing: satellite touches the curve");
    return linking_number(core2, sat, seed);
}

}  // namespace tilepipe

#endif
