#ifndef TILEPIPE_HOMOLOGY_HPP
#define TILEPIPE_HOMOLOGY_HPP

#include <optional>

#include "tilepipe/sharp.hpp"
#include "tilepipe/tiling.hpp"

namespace tilepipe {

// A tiling as a 1-chain: per domino, the edge from the black cube center to
// the shared face center and on to the white cube center.
inline Chain domino_chain(const SharpComplex& cx, const Tiling& t) {
    Chain ch(1);
    const Region& rg = cx.region();
    for (const Domino& d : t.dominoes) {
        auto [a, s] = domino_axis(rg, d);
        IVec3 bc = 4 * d.black + IVec3{2, 2, 2};
        IVec3 fc = bc;
        fc[a] += 2 * s;
        IVec3 wc = bc;
        wc[a] += 4 * s;
        add_edge(ch, cx, bc, fc, 1);
        add_edge(ch, cx, fc, wc, 1);
    }
    return ch;
}

// ---------------------------------------------------------------------------
// Exact sparse elimination. Pivots are the lexicographically smallest cells of
// their (normalized) columns, so reduction against the pivot set is a forward
// substitution and residues are canonical.

class Reducer {
  public:
    Chain reduce(Chain c) const {
        auto it = c.terms().begin();
        while (it != c.terms().end()) {
            auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) {
                ++it;
                continue;
            }
            Rat factor = it->second;
            SharpCell cell = it->first;
            // Subtract factor * pivot column; only cells >= the pivot cell
            // change, and the pivot cell itself cancels.
            for (auto& [pc, pq] : piv->second.terms()) c.add(pc, -factor * pq);
            it = c.terms().upper_bound(cell);
        }
        return c;
    }

    // Returns true if the generator was independent (rank grew).
    bool add_generator(Chain g) {
        g = reduce(std::move(g));
        if (g.empty()) return false;
        Rat inv = Rat(1) / g.terms().begin()->second;
        g *= inv;
        SharpCell lead = g.terms().begin()->first;
        pivots_.emplace(lead, std::move(g));
        return true;
    }

    size_t rank() const { return pivots_.size(); }

  private:
    std::map<SharpCell, Chain> pivots_;
};

// ---------------------------------------------------------------------------

struct FluxClass {
    Chain rep{1};             // canonical reduced representative (may be empty)
    std::vector<Rat> coords;  // pairings with the region's registered duals
    bool zero = false;
};

using RFluxClass = FluxClass;

// Per-region homology engine. "Relative" computations use the quotient by the
// boundary subcomplex: boundary cells are dropped from chains and matrices.
class Homology {
  public:
    explicit Homology(Region rg, size_t cell_cap = 2'000'000, size_t reduction_cap = 400'000)
        : cx_(std::move(rg), cell_cap), reduction_cap_(reduction_cap) {}

    Homology(const Homology&) = delete;
    Homology& operator=(const Homology&) = delete;

    const SharpComplex& complex() const { return cx_; }
    const Region& region() const { return cx_.region(); }

    const Chain& q1() {
        if (!q1_) q1_ = color_flow_chain(cx_);
        return *q1_;
    }

    // Betti numbers over Q, via free-face collapse plus exact elimination.
    int betti(int k, bool relative) {
        auto& cache = relative ? betti_rel_ : betti_abs_;
        if (!cache) cache = compute_betti(relative);
        return (*cache)[k];
    }
    int h1_rank() { return betti(1, false); }
    int h1_rel_rank() { return betti(1, true); }

    // Registered dual (co)cycles used for coordinate display: relative 2-cycles
    // pair with absolute flux classes, absolute 2-cycles with relative ones.
    void register_flux_dual(Chain section) {
        check(drop_boundary_cells(boundary_of(section, cx_)).empty(), ErrClass::usage,
              "flux dual is not a relative 2-cycle");
        flux_duals_.push_back(std::move(section));
    }
    void register_rflux_dual(Chain cycle) {
        Chain b = boundary_of(cycle, cx_);
        check(b.empty(), ErrClass::usage, "rflux dual is not a closed 2-cycle");
        rflux_duals_.push_back(std::move(cycle));
    }
    const std::vector<Chain>& rflux_duals() const { return rflux_duals_; }

    FluxClass flux_diff(const Tiling& t, const Tiling& t0) {
        Chain z = domino_chain(cx_, t) - domino_chain(cx_, t0);
        check(boundary_of(z, cx_).empty(), ErrClass::inconsistency,
              "tiling difference is not a cycle");
        FluxClass fc;
        fc.rep = flux_reducer().reduce(z);
        fc.zero = fc.rep.empty();
        for (const Chain& s : flux_duals_) fc.coords.push_back(section_intersection(z, s));
        return fc;
    }

    bool same_flux(const Tiling& t, const Tiling& t0) { return flux_diff(t, t0).zero; }

    // Class of t - q1/6 in H1(R, dR).
    RFluxClass rflux(const Tiling& t) {
        Chain z = domino_chain(cx_, t);
        z += Rat(-1, 6) * q1();
        Chain zi = drop_boundary_cells(z);
        // Relative cycle check: the boundary must be supported on dR.
        check(drop_boundary_cells(boundary_of(z, cx_)).empty(), ErrClass::inconsistency,
              "t - q1/6 is not a relative cycle");
        RFluxClass fc;
        for (const Chain& s : rflux_duals_) fc.coords.push_back(section_intersection(z, s));
        if (cx_.total() <= reduction_cap_) {
            fc.rep = rel_reducer().reduce(zi);
            fc.zero = fc.rep.empty();
        } else {
            check(!rflux_duals_.empty() && int(rflux_duals_.size()) >= h1_rel_rank(),
                  ErrClass::cap_exceeded,
                  "complex too large for exact class reduction and no complete dual set");
            fc.rep = Chain(1);
            fc.zero = true;
            for (const Rat& c : fc.coords)
                if (c != 0) fc.zero = false;
        }
        return fc;
    }

    // Signed transversal intersection count of a 1-chain with a 2-chain
    // section. Crossings are evaluated with the standard quarter push-off: the
    // edge leaving a square's plane through its corner is counted against the
    // upper corner square.
    Rat section_intersection(const Chain& c, const Chain& section) const {
        check(c.dim() == 1 && section.dim() == 2, ErrClass::usage,
              "section pairing needs a 1-chain and a 2-chain");
        Rat total = 0;
        for (auto& [m, lam] : c.terms()) {
            int e = (m.x & 1) ? 0 : ((m.y & 1) ? 1 : 2);
            for (auto& [q, mu] : section.terms()) {
                int a = !(q.x & 1) ? 0 : (!(q.y & 1) ? 1 : 2);
                if (e != a) {
                    // Non-transversality: the edge lies inside the section's
                    // plane and touches the closed square.
                    if (m[a] == q[a]) {
                        int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
                        int64_t elo1 = m[b1] - ((m[b1] & 1) ? 1 : 0);
                        int64_t ehi1 = m[b1] + ((m[b1] & 1) ? 1 : 0);
                        int64_t elo2 = m[b2] - ((m[b2] & 1) ? 1 : 0);
                        int64_t ehi2 = m[b2] + ((m[b2] & 1) ? 1 : 0);
                        if (ehi1 >= q[b1] - 1 && elo1 <= q[b1] + 1 && ehi2 >= q[b2] - 1 &&
                            elo2 <= q[b2] + 1)
                            fail(ErrClass::geometry,
                                 "chain edge lies inside the section; not transversal");
                    }
                    continue;
                }
                int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
                // The canonical orientation of a square with even axis a has
                // geometric normal +x, -y or +z; fold that sign in so the
                // result is the honest intersection number.
                if (q[a] == m[a] - 1 && q[b1] == m[b1] + 1 && q[b2] == m[b2] + 1)
                    total += (a == 1 ? -1 : 1) * lam * mu;
            }
        }
        return total;
    }

    // All region 2-cells lying in the plane axis = coord4/4 (x4 units, even).
    Chain full_slice(int axis, int64_t coord4) const {
        check((coord4 & 1) == 0, ErrClass::usage, "slice plane must be on the half lattice");
        Chain s(2);
        int mu = (axis == 1) ? -1 : 1;  // store so the surface normal is +axis
        for (const SharpCell& q : cx_.cells(2)) {
            int a = !(q.x & 1) ? 0 : (!(q.y & 1) ? 1 : 2);
            if (a == axis && q[axis] == coord4) s.add(q, mu);
        }
        return s;
    }

    // Plane cells restricted to a transverse cell rectangle [tlo, thi]; used
    // for duals that cut only one arm of a region.
    Chain slice_in_box(int axis, int64_t coord4, CellCoord tlo, CellCoord thi) const {
        Chain s(2);
        IVec3 L = 4 * tlo, H = 4 * (thi + IVec3{1, 1, 1});
        for (const SharpCell& q : cx_.cells(2)) {
            int a = !(q.x & 1) ? 0 : (!(q.y & 1) ? 1 : 2);
            if (a != axis || q[axis] != coord4) continue;
            int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
            if (q[b1] > L[b1] && q[b1] < H[b1] && q[b2] > L[b2] && q[b2] < H[b2])
                s.add(q, axis == 1 ? -1 : 1);
        }
        return s;
    }

    // Closed rectangular surface: the boundary of the cell-aligned box
    // [lo, hi] (inclusive cell range), oriented outward.
    Chain box_shell(CellCoord lo, CellCoord hi) const {
        Chain s(2);
        IVec3 L = 4 * lo, H = 4 * (hi + IVec3{1, 1, 1});
        for (const SharpCell& q : cx_.cells(2)) {
            int a = !(q.x & 1) ? 0 : (!(q.y & 1) ? 1 : 2);
            int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
            if (q[b1] < L[b1] || q[b1] > H[b1] || q[b2] < L[b2] || q[b2] > H[b2]) continue;
            int mu = (a == 1) ? -1 : 1;  // outward orientation in canonical terms
            if (q[a] == H[a])
                s.add(q, mu);
            else if (q[a] == L[a])
                s.add(q, -mu);
        }
        return s;
    }

    Chain drop_boundary_cells(const Chain& c) const {
        Chain out(c.dim());
        for (auto& [cell, q] : c.terms())
            if (!cx_.on_boundary(cell)) out.add(cell, q);
        return out;
    }

  private:
    Reducer& flux_reducer() {
        if (!flux_red_) {
            check(cx_.total() <= reduction_cap_, ErrClass::cap_exceeded,
                  "complex too large for exact class reduction");
            flux_red_.emplace();
            for (const SharpCell& q : cx_.cells(2)) {
                Chain col(1);
                for (const SharpTerm& t : cx_.boundary(q)) col.add(t.cell, t.sign);
                flux_red_->add_generator(std::move(col));
            }
        }
        return *flux_red_;
    }

    // Quotient-complex reducer: boundary-subcomplex cells are projected away
    // from both the input chains and the generator columns.
    Reducer& rel_reducer() {
        if (!rel_red_) {
            check(cx_.total() <= reduction_cap_, ErrClass::cap_exceeded,
                  "complex too large for exact class reduction");
            rel_red_.emplace();
            for (const SharpCell& q : cx_.cells(2)) {
                if (cx_.on_boundary(q)) continue;
                Chain col(1);
                for (const SharpTerm& t : cx_.boundary(q)) col.add(t.cell, t.sign);
                rel_red_->add_generator(drop_boundary_cells(col));
            }
        }
        return *rel_red_;
    }

    std::array<int, 4> compute_betti(bool relative) {
        // Free-face collapse on the (quotient) cell set, then exact
        // elimination of what remains.
        std::unordered_map<IVec3, char, CellHash> present;
        for (int d = 0; d <= 3; ++d)
            for (const SharpCell& c : cx_.cells(d))
                if (!relative || !cx_.on_boundary(c)) present.emplace(c, 1);

        auto cofaces = [&](const SharpCell& c) {
            std::vector<SharpCell> out;
            for (int a = 0; a < 3; ++a) {
                if (c[a] & 1) continue;
                for (int s : {-1, +1}) {
                    SharpCell f = c;
                    f[a] += s;
                    f = cx_.canon(f);
                    if (present.count(f)) out.push_back(f);
                }
            }
            return out;
        };

        std::vector<SharpCell> queue;
        for (auto& [c, _] : present) queue.push_back(c);
        while (!queue.empty()) {
            SharpCell c = queue.back();
            queue.pop_back();
            auto it = present.find(c);
            if (it == present.end()) continue;
            if (SharpComplex::dim_of(c) == 3) continue;
            auto cf = cofaces(c);
            if (cf.size() != 1) continue;
            // Free pair (c, cf[0]): drop both, re-examine their neighbors.
            SharpCell top = cf[0];
            present.erase(c);
            present.erase(top);
            for (const SharpTerm& t : cx_.boundary(top))
                if (present.count(t.cell)) queue.push_back(t.cell);
            for (int a = 0; a < 3; ++a) {
                if (!(c[a] & 1)) continue;
                for (int s : {-1, +1}) {
                    SharpCell f = c;
                    f[a] += s;
                    f = cx_.canon(f);
                    if (present.count(f)) queue.push_back(f);
                }
            }
        }

        std::array<size_t, 4> n{};
        std::array<size_t, 4> rank{};
        for (auto& [c, _] : present) n[SharpComplex::dim_of(c)]++;
        for (int d = 1; d <= 3; ++d) {
            Reducer red;
            for (auto& [c, _] : present) {
                if (SharpComplex::dim_of(c) != d) continue;
                Chain col(d - 1);
                for (const SharpTerm& t : cx_.boundary(c))
                    if (present.count(t.cell)) col.add(t.cell, t.sign);
                red.add_generator(std::move(col));
            }
            rank[d] = red.rank();
        }
        std::array<int, 4> b;
        for (int d = 0; d <= 3; ++d)
            b[d] = int(n[d]) - int(rank[d]) - int(d < 3 ? rank[d + 1] : 0);
        return b;
    }

    SharpComplex cx_;
    size_t reduction_cap_;
    std::optional<Chain> q1_;
    std::optional<Reducer> flux_red_, rel_red_;
    std::optional<std::array<int, 4>> betti_abs_, betti_rel_;
    std::vector<Chain> flux_duals_, rflux_duals_;
};

}  // namespace tilepipe

#endif
