#ifndef TILEPIPE_REGION_HPP
#define TILEPIPE_REGION_HPP

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "tilepipe/base.hpp"

namespace tilepipe {

// A cubiculated region: a finite set of unit lattice cells, optionally wrapped
// with an even period per axis (quotient regions), with the fixed checkerboard
// coloring "cell (x,y,z) is black iff x+y+z is even".
//
// Coordinate conventions used throughout the library:
//   - cell coordinates are the min corner of the unit cube, in cell units;
//   - all finer geometry (complex cells, face centers, pipe vertices) is kept
//     on the quarter lattice and stored as integers scaled by 4.
//
// Wrapped axes canonicalize coordinates into [0, period). Periods must be even
// so the coloring descends to the quotient.

enum class Color : uint8_t { black = 0, white = 1 };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }

using CellCoord = IVec3;

struct CellHash {
    size_t operator()(const IVec3& v) const {
        uint64_t h = 1469598103934665603ull;
        for (int64_t t : {v.x, v.y, v.z}) {
            h ^= static_cast<uint64_t>(t) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct BoundarySquare {
    CellCoord cell;   // the unique region cell owning this face
    int axis = 0;     // face normal axis
    int side = +1;    // +1: face at cell[axis]+1, -1: face at cell[axis]
    Color color = Color::black;  // color of the owning cell
    IVec3 center;     // face center, x4 coordinates

    friend bool operator==(const BoundarySquare&, const BoundarySquare&) = default;
    friend auto operator<=>(const BoundarySquare&, const BoundarySquare&) = default;
};

class Region {
  public:
    using Wrap = std::array<std::optional<int64_t>, 3>;

    static Region box(int64_t L, int64_t M, int64_t N) {
        check(L >= 1 && M >= 1 && N >= 1, ErrClass::usage, "box dimensions must be positive");
        std::vector<CellCoord> cells;
        cells.reserve(static_cast<size_t>(L * M * N));
        for (int64_t x = 0; x < L; ++x)
            for (int64_t y = 0; y < M; ++y)
                for (int64_t z = 0; z < N; ++z) cells.push_back({x, y, z});
        return Region(std::move(cells), Wrap{});
    }

    static Region make(std::vector<CellCoord> cells, Wrap wrap = Wrap{}) {
        return Region(std::move(cells), wrap);
    }

    const std::vector<CellCoord>& cells() const { return cells_; }
    const Wrap& wrap() const { return wrap_; }
    bool wrapped() const { return wrap_[0] || wrap_[1] || wrap_[2]; }
    size_t size() const { return cells_.size(); }

    // Reduces a coordinate triple to its canonical representative.
    CellCoord canon(CellCoord c) const {
        for (int a = 0; a < 3; ++a)
            if (wrap_[a]) {
                int64_t p = *wrap_[a];
                c[a] = ((c[a] % p) + p) % p;
            }
        return c;
    }

    bool contains(CellCoord c) const { return set_.count(canon(c)) != 0; }

    CellCoord neighbor(CellCoord c, int axis, int dir) const {
        c[axis] += dir;
        return canon(c);
    }

    Color color(CellCoord c) const {
        check(contains(c), ErrClass::usage, "color: cell not in region " + to_string(c));
        c = canon(c);
        return ((c.x + c.y + c.z) % 2 + 2) % 2 == 0 ? Color::black : Color::white;
    }

    size_t count(Color col) const { return col == Color::black ? n_black_ : n_white_; }
    bool balanced() const { return n_black_ == n_white_; }

    size_t cell_index(CellCoord c) const {
        c = canon(c);
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        check(it != cells_.end() && *it == c, ErrClass::usage, "cell not in region");
        return static_cast<size_t>(it - cells_.begin());
    }

    // Inclusive cell-coordinate bounds (meaningless on a wrapped axis, where
    // the range is [0, period)).
    IVec3 min_corner() const { return lo_; }
    IVec3 max_corner() const { return hi_; }

    std::vector<BoundarySquare> boundary_squares() const {
        std::vector<BoundarySquare> out;
        for (const CellCoord& c : cells_) {
            for (int a = 0; a < 3; ++a) {
                for (int s : {-1, +1}) {
                    if (contains(neighbor(c, a, s))) continue;
                    BoundarySquare bs;
                    bs.cell = c;
                    bs.axis = a;
                    bs.side = s;
                    bs.color = color(c);
                    bs.center = 4 * c + IVec3{2, 2, 2};
                    bs.center[a] += 2 * s;
                    out.push_back(bs);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    Region(std::vector<CellCoord> cells, Wrap wrap) : wrap_(wrap) {
        check(!cells.empty(), ErrClass::validation, "region has no cells");
        for (int a = 0; a < 3; ++a)
            if (wrap_[a]) {
                check(*wrap_[a] > 0 && *wrap_[a] % 2 == 0, ErrClass::validation,
                      "wrap period must be a positive even integer");
            }
        for (CellCoord& c : cells) c = canon(c);
        std::sort(cells.begin(), cells.end());
        check(std::adjacent_find(cells.begin(), cells.end()) == cells.end(),
              ErrClass::validation, "duplicate cell after canonicalization");
        cells_ = std::move(cells);
        set_ = std::unordered_set<IVec3, CellHash>(cells_.begin(), cells_.end());

        lo_ = hi_ = cells_[0];
        for (const CellCoord& c : cells_)
            for (int a = 0; a < 3; ++a) {
                lo_[a] = std::min(lo_[a], c[a]);
                hi_[a] = std::max(hi_[a], c[a]);
            }
        for (int a = 0; a < 3; ++a)
            if (wrap_[a])
                check(lo_[a] >= 0 && hi_[a] < *wrap_[a], ErrClass::validation,
                      "wrapped coordinates out of canonical range");

        n_black_ = n_white_ = 0;
        for (const CellCoord& c : cells_)
            (((c.x + c.y + c.z) % 2 + 2) % 2 == 0 ? n_black_ : n_white_)++;

        validate_connected();
        validate_edge_regularity();
    }

    void validate_connected() const {
        std::vector<char> seen(cells_.size(), 0);
        std::vector<size_t> stack{0};
        seen[0] = 1;
        size_t visited = 1;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (int a = 0; a < 3; ++a)
                for (int s : {-1, +1}) {
                    CellCoord n = neighbor(cells_[i], a, s);
                    if (!set_.count(n)) continue;
                    size_t j = cell_index(n);
                    if (!seen[j]) {
                        seen[j] = 1;
                        ++visited;
                        stack.push_back(j);
                    }
                }
        }
        check(visited == cells_.size(), ErrClass::validation, "region is disconnected");
    }

    // Rejects non-manifold edge pinches: a lattice edge whose incident cells
    // are exactly two placed diagonally. (Vertex pinches, as in the six-cell
    // hex region, are tolerated; they do not affect any chain computation.)
    void validate_edge_regularity() const {
        for (const CellCoord& c : cells_) {
            for (int a = 0; a < 3; ++a) {
                int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
                // Edges of cell c along axis a sit at the four transverse
                // corners; enumerate each edge once via its corner offsets.
                for (int o1 : {0, 1})
                    for (int o2 : {0, 1}) {
                        // Edge at transverse position (c[b1]+o1, c[b2]+o2).
                        int present = 0;
                        bool diag[2][2] = {{false, false}, {false, false}};
                        for (int d1 : {0, 1})
                            for (int d2 : {0, 1}) {
                                CellCoord q = c;
                                q[b1] = c[b1] + o1 - d1;
                                q[b2] = c[b2] + o2 - d2;
                                if (set_.count(canon(q))) {
                                    ++present;
                                    diag[d1][d2] = true;
                                }
                            }
                        if (present == 2 && diag[0][0] == diag[1][1] && diag[0][1] == diag[1][0])
                            fail(ErrClass::validation,
                                 "interior irregularity: edge pinched between two diagonal cells near " +
                                     to_string(c));
                    }
            }
        }
    }

    std::vector<CellCoord> cells_;
    std::unordered_set<IVec3, CellHash> set_;
    Wrap wrap_;
    IVec3 lo_, hi_;
    size_t n_black_ = 0, n_white_ = 0;
};

inline Region make_box(int64_t L, int64_t M, int64_t N) { return Region::box(L, M, N); }

inline Region make_region(std::vector<CellCoord> cells, Region::Wrap wrap = {}) {
    return Region::make(std::move(cells), wrap);
}

}  // namespace tilepipe

#endif
