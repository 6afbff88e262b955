#ifndef TILEPIPE_SHARP_HPP
#define TILEPIPE_SHARP_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "tilepipe/region.hpp"

namespace tilepipe {

// The refined complex of a region: every unit cube splits into 8 small cubes,
// every square into 4, every edge into 2, with new vertices at cube, face and
// edge centers.
//
// A cell of the refined complex is encoded by its center on the x4 lattice:
// the number of odd coordinates is the cell dimension (all even: vertex; one
// odd: edge; two: square; three: small cube). On wrapped axes centers are
// canonical mod 4*period.
//
// Boundary convention: for a cell c with odd axes l_0 < ... < l_{k-1},
//   d(c) = sum_i (-1)^i [ (c + e_{l_i}) - (c - e_{l_i}) ],
// the standard product-complex signs, so d(d(c)) = 0. An oriented edge from
// vertex u to v = u + 2e is the cell (u+v)/2 with sign +1.

using SharpCell = IVec3;

struct SharpTerm {
    SharpCell cell;
    int sign;  // +1 or -1
};

class SharpComplex {
  public:
    explicit SharpComplex(Region region, size_t cell_cap = 2'000'000)
        : region_(std::move(region)) {
        for (int a = 0; a < 3; ++a)
            wrap4_[a] = region_.wrap()[a] ? std::optional<int64_t>(4 * *region_.wrap()[a])
                                          : std::nullopt;
        build(cell_cap);
    }

    const Region& region() const { return region_; }

    SharpCell canon(SharpCell c) const {
        for (int a = 0; a < 3; ++a)
            if (wrap4_[a]) {
                int64_t p = *wrap4_[a];
                c[a] = ((c[a] % p) + p) % p;
            }
        return c;
    }

    static int dim_of(const SharpCell& c) {
        return int((c.x & 1) != 0) + int((c.y & 1) != 0) + int((c.z & 1) != 0);
    }

    bool contains(SharpCell c) const { return info_.count(canon(c)) != 0; }

    // True for cells of the boundary subcomplex (fewer incident small cubes
    // than an interior cell of the same dimension would have).
    bool on_boundary(SharpCell c) const {
        auto it = info_.find(canon(c));
        check(it != info_.end(), ErrClass::usage, "cell not in complex");
        return it->second.boundary;
    }

    const std::vector<SharpCell>& cells(int dim) const { return by_dim_[dim]; }
    size_t count(int dim) const { return by_dim_[dim].size(); }
    size_t total() const { return info_.size(); }

    // Index of a cell within its dimension's sorted list.
    size_t index(SharpCell c) const {
        auto it = info_.find(canon(c));
        check(it != info_.end(), ErrClass::usage, "cell not in complex");
        return it->second.index;
    }

    std::vector<SharpTerm> boundary(SharpCell c) const {
        c = canon(c);
        std::vector<SharpTerm> out;
        int i = 0;
        for (int a = 0; a < 3; ++a) {
            if ((c[a] & 1) == 0) continue;
            int s = (i % 2 == 0) ? +1 : -1;
            SharpCell up = c, dn = c;
            up[a] += 1;
            dn[a] -= 1;
            out.push_back({canon(up), s});
            out.push_back({canon(dn), -s});
            ++i;
        }
        return out;
    }

  private:
    struct Info {
        size_t index;
        bool boundary;
    };

    // Whether the closed cell lies inside some region cell.
    bool covered(SharpCell c) const {
        std::array<std::array<int64_t, 2>, 3> cand;
        std::array<int, 3> ncand;
        for (int a = 0; a < 3; ++a) {
            int64_t v = c[a];
            if (v & 1) {
                int64_t lo = v - 1;  // span [v-1, v+1]
                cand[a][0] = (lo >= 0) ? lo / 4 : -((-lo + 3) / 4);
                ncand[a] = 1;
            } else if (((v % 4) + 4) % 4 == 2) {
                cand[a][0] = (v - 2) / 4;
                ncand[a] = 1;
            } else {
                cand[a][0] = v / 4;
                cand[a][1] = v / 4 - 1;
                ncand[a] = 2;
            }
        }
        for (int i = 0; i < ncand[0]; ++i)
            for (int j = 0; j < ncand[1]; ++j)
                for (int k = 0; k < ncand[2]; ++k)
                    if (region_.contains({cand[0][i], cand[1][j], cand[2][k]})) return true;
        return false;
    }

    void build(size_t cell_cap) {
        check(region_.size() * 125 <= cell_cap * 8, ErrClass::cap_exceeded,
              "refined complex would exceed the cell cap");
        std::unordered_map<IVec3, Info, CellHash> info;
        for (const CellCoord& rc : region_.cells()) {
            IVec3 base = 4 * rc;
            for (int dx = 0; dx <= 4; ++dx)
                for (int dy = 0; dy <= 4; ++dy)
                    for (int dz = 0; dz <= 4; ++dz) {
                        SharpCell c = canon(base + IVec3{dx, dy, dz});
                        info.emplace(c, Info{0, false});
                    }
        }
        check(info.size() <= cell_cap, ErrClass::cap_exceeded,
              "refined complex exceeds the cell cap");

        for (auto& [c, inf] : info) {
            int d = dim_of(c);
            if (d == 3) continue;
            int expected = 1 << (3 - d);
            int found = 0;
            std::array<std::array<int64_t, 2>, 3> opts;
            std::array<int, 3> n;
            for (int a = 0; a < 3; ++a) {
                if (c[a] & 1) {
                    opts[a][0] = c[a];
                    n[a] = 1;
                } else {
                    opts[a][0] = c[a] - 1;
                    opts[a][1] = c[a] + 1;
                    n[a] = 2;
                }
            }
            for (int i = 0; i < n[0]; ++i)
                for (int j = 0; j < n[1]; ++j)
                    for (int k = 0; k < n[2]; ++k) {
                        SharpCell cube = canon({opts[0][i], opts[1][j], opts[2][k]});
                        if (info.count(cube)) ++found;
                    }
            inf.boundary = (found < expected);
        }

        for (auto& [c, inf] : info) by_dim_[dim_of(c)].push_back(c);
        for (int d = 0; d < 4; ++d) {
            std::sort(by_dim_[d].begin(), by_dim_[d].end());
            for (size_t i = 0; i < by_dim_[d].size(); ++i) info[by_dim_[d][i]].index = i;
        }
        info_ = std::move(info);
    }

    Region region_;
    std::array<std::optional<int64_t>, 3> wrap4_;
    std::unordered_map<IVec3, Info, CellHash> info_;
    std::array<std::vector<SharpCell>, 4> by_dim_;
};

// Sparse formal sum of cells of one dimension with rational coefficients.
class Chain {
  public:
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<SharpCell, Rat>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(SharpCell c, const Rat& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.emplace(c, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(SharpCell c) const {
        auto it = terms_.find(c);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Chain& operator+=(const Chain& o) {
        check(dim_ == o.dim_, ErrClass::usage, "chain dimension mismatch");
        for (auto& [c, q] : o.terms_) add(c, q);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        check(dim_ == o.dim_, ErrClass::usage, "chain dimension mismatch");
        for (auto& [c, q] : o.terms_) add(c, -q);
        return *this;
    }
    Chain& operator*=(const Rat& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [c, q] : terms_) q *= k;
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rat& k, Chain a) { return a *= k; }
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

  private:
    int dim_;
    std::map<SharpCell, Rat> terms_;
};

inline Chain boundary_of(const Chain& ch, const SharpComplex& cx) {
    Chain out(ch.dim() - 1);
    for (auto& [c, q] : ch.terms())
        for (const SharpTerm& t : cx.boundary(c)) out.add(t.cell, t.sign * q);
    return out;
}

// Adds the oriented edge u -> v (x4 vertex coordinates, v = u +- 2e on one
// axis, before wrapping) with the given coefficient.
inline void add_edge(Chain& ch, const SharpComplex& cx, IVec3 u, IVec3 v, const Rat& coeff) {
    IVec3 d = v - u;
    IVec3 m = u + IVec3{d.x / 2, d.y / 2, d.z / 2};
    check(SharpComplex::dim_of(m) == 1, ErrClass::usage, "not a lattice edge");
    int axis = (m.x & 1) ? 0 : ((m.y & 1) ? 1 : 2);
    int sign = d[axis] > 0 ? +1 : -1;
    ch.add(cx.canon(m), sign * coeff);
}

// The fixed 1-chain determined by the coloring alone: for every cell, the six
// edges from its center to its face centers, added for black cells and
// subtracted for white ones.
inline Chain color_flow_chain(const SharpComplex& cx) {
    Chain q1(1);
    const Region& rg = cx.region();
    for (const CellCoord& c : rg.cells()) {
        Rat coeff = rg.color(c) == Color::black ? 1 : -1;
        IVec3 center = 4 * c + IVec3{2, 2, 2};
        for (int a = 0; a < 3; ++a)
            for (int s : {-1, +1}) {
                IVec3 face = center;
                face[a] += 2 * s;
                add_edge(q1, cx, center, face, coeff);
            }
    }
    return q1;
}

}  // namespace tilepipe

#endif
