#ifndef TILEPIPE_HELICITY_HPP
#define TILEPIPE_HELICITY_HPP

#include "tilepipe/linkhel.hpp"
#include "tilepipe/pipes.hpp"

namespace tilepipe {

// Symmetric integer matrix of pairwise linking numbers with self-linking
// numbers on the diagonal, over all curves of a system. Trivial curves show
// up as zero rows and need no special-casing anywhere.
struct TabulationMatrix {
    std::vector<std::vector<int64_t>> m;

    size_t size() const { return m.size(); }
    bool row_nonzero(size_t i) const {
        for (int64_t v : m[i])
            if (v != 0) return true;
        return false;
    }
    std::vector<size_t> nontrivial() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < m.size(); ++i)
            if (row_nonzero(i)) out.push_back(i);
        return out;
    }
};

inline TabulationMatrix tabulation_matrix(const CurveSystem& sys, uint64_t seed = 0) {
    check(!sys.wrapped, ErrClass::usage,
          "linking invariants need unwrapped geometry (wrapped regions are out of scope)");
    size_t n = sys.curves.size();
    TabulationMatrix tm;
    tm.m.assign(n, std::vector<int64_t>(n, 0));
    // Satellites must clear every core, not just their own.
    std::vector<Polyline> sats;
    for (size_t i = 0; i < n; ++i) sats.push_back(satellite_of(sys.curves[i], sys.framings[i]));
    for (size_t i = 0; i < n; ++i) {
        Polyline core2 = scaled(sys.curves[i], 2);
        for (size_t j = 0; j < n; ++j)
            check(geom::polylines_disjoint(sats[i], scaled(sys.curves[j], 2)) || i == j,
                  ErrClass::geometry, "satellite touches another curve");
        check(geom::polylines_disjoint(core2, sats[i]), ErrClass::geometry,
              "degenerate framing: satellite touches its curve");
        tm.m[i][i] = linking_number(core2, sats[i], seed);
        for (size_t j = i + 1; j < n; ++j) {
            int64_t lk = linking_number(sys.curves[i], sys.curves[j], seed);
            tm.m[i][j] = tm.m[j][i] = lk;
        }
    }
    return tm;
}

// Exact helicity: 2 sum_{i<j} lk_ij flux_i flux_j + sum_i slk_i flux_i^2.
// For the pipe systems all fluxes equal phi, so this is an integer times
// phi^2; both forms are kept.
struct HelicityValue {
    Rat value;     // the helicity itself
    Rat phi;       // tube flux used
    Rat in_phi2;   // value / phi^2 (integer for the pipe systems)
};

inline HelicityValue helicity_of(const TabulationMatrix& tm, const std::vector<Rat>& fluxes,
                                 const Rat& phi) {
    Rat total = 0;
    size_t n = tm.size();
    for (size_t i = 0; i < n; ++i) {
        total += tm.m[i][i] * fluxes[i] * fluxes[i];
        for (size_t j = i + 1; j < n; ++j) total += 2 * tm.m[i][j] * fluxes[i] * fluxes[j];
    }
    return {total, phi, total / (phi * phi)};
}

inline HelicityValue helicity(const CurveSystem& sys, uint64_t seed = 0) {
    return helicity_of(tabulation_matrix(sys, seed), sys.fluxes, sys.phi);
}

// Helicity difference of two systems over the same region and shell (the
// common-extension requirement; across different shells the difference is not
// defined).
inline Rat relative_helicity(const CurveSystem& a, const CurveSystem& b, uint64_t seed = 0) {
    check(a.phi == b.phi, ErrClass::usage, "relative helicity needs equal tube fluxes");
    check(a.shell_name == b.shell_name && a.region_key == b.region_key, ErrClass::usage,
          "relative helicity is defined only over a common shell");
    return helicity(a, seed).value - helicity(b, seed).value;
}

// Applies a linear lattice map (signed permutation) to a whole system,
// curves and framing offsets alike. Reflections negate every linking number.
inline CurveSystem transform_system(const CurveSystem& sys,
                                    const std::array<IVec3, 3>& image_of_axis,
                                    IVec3 translate4 = {0, 0, 0}) {
    auto apply = [&](IVec3 p) {
        return p.x * image_of_axis[0] + p.y * image_of_axis[1] + p.z * image_of_axis[2];
    };
    CurveSystem out = sys;
    for (size_t i = 0; i < out.curves.size(); ++i) {
        for (IVec3& v : out.curves[i].v) v = apply(v) + translate4;
        if (i < out.framings.size())
            for (IVec3& o : out.framings[i].vertex_offset) o = apply(o);
    }
    return out;
}

}  // namespace tilepipe

#endif
