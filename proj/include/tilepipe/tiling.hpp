#ifndef TILEPIPE_TILING_HPP
#define TILEPIPE_TILING_HPP

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "tilepipe/region.hpp"

namespace tilepipe {

struct Domino {
    CellCoord black, white;
    friend bool operator==(const Domino&, const Domino&) = default;
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

// Direction sign s and axis a with white = canon(black + s*e_a).
inline std::pair<int, int> domino_axis(const Region& rg, const Domino& d) {
    for (int a = 0; a < 3; ++a) {
        if (rg.canon(d.black + axis_unit(a)) == d.white) return {a, +1};
        if (rg.canon(d.black - axis_unit(a)) == d.white) return {a, -1};
    }
    fail(ErrClass::validation, "domino cells are not adjacent");
}

struct Tiling {
    std::vector<Domino> dominoes;  // sorted by (black, white)

    friend bool operator==(const Tiling&, const Tiling&) = default;
    friend auto operator<=>(const Tiling&, const Tiling&) = default;

    void normalize() { std::sort(dominoes.begin(), dominoes.end()); }

    void validate(const Region& rg) const {
        std::unordered_set<IVec3, CellHash> seen;
        for (const Domino& d : dominoes) {
            check(rg.contains(d.black) && rg.contains(d.white), ErrClass::validation,
                  "domino cell outside region");
            check(rg.color(d.black) == Color::black && rg.color(d.white) == Color::white,
                  ErrClass::validation, "domino colors are wrong");
            domino_axis(rg, d);
            check(seen.insert(rg.canon(d.black)).second && seen.insert(rg.canon(d.white)).second,
                  ErrClass::validation, "overlapping dominoes");
        }
        check(seen.size() == rg.size(), ErrClass::validation, "tiling does not cover the region");
    }

    const Domino& domino_of(const Region& rg, CellCoord c) const {
        c = rg.canon(c);
        for (const Domino& d : dominoes)
            if (rg.canon(d.black) == c || rg.canon(d.white) == c) return d;
        fail(ErrClass::usage, "cell not covered");
    }
};

// ---------------------------------------------------------------------------
// Enumeration: depth-first search pairing the first uncovered cell (in the
// sorted cell order) with each uncovered neighbor, in a fixed direction order.
// Output is the complete duplicate-free list in canonical order.

inline std::vector<Tiling> enumerate_tilings(const Region& rg, size_t cell_cap = 64) {
    check(rg.size() <= cell_cap, ErrClass::cap_exceeded,
          "region has " + std::to_string(rg.size()) + " cells, enumeration cap is " +
              std::to_string(cell_cap));
    std::vector<Tiling> out;
    if (!rg.balanced()) return out;

    const auto& cells = rg.cells();
    std::vector<char> covered(cells.size(), 0);
    std::vector<Domino> cur;

    auto rec = [&](auto&& self, size_t hint) -> void {
        size_t i = hint;
        while (i < cells.size() && covered[i]) ++i;
        if (i == cells.size()) {
            Tiling t;
            t.dominoes = cur;
            t.normalize();
            out.push_back(std::move(t));
            return;
        }
        covered[i] = 1;
        for (int a = 0; a < 3; ++a)
            for (int s : {+1, -1}) {
                CellCoord n = rg.neighbor(cells[i], a, s);
                if (!rg.contains(n)) continue;
                size_t j = rg.cell_index(n);
                if (covered[j]) continue;
                covered[j] = 1;
                bool black_first = rg.color(cells[i]) == Color::black;
                cur.push_back(black_first ? Domino{cells[i], n} : Domino{n, cells[i]});
                self(self, i + 1);
                cur.pop_back();
                covered[j] = 0;
            }
        covered[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Flips

struct Flip {
    std::array<Domino, 2> before;  // sorted
    std::array<Domino, 2> after;   // sorted

    friend bool operator==(const Flip&, const Flip&) = default;
    friend auto operator<=>(const Flip&, const Flip&) = default;
};

inline std::vector<Flip> list_flips(const Region& rg, const Tiling& t) {
    std::set<Flip> found;
    std::set<Domino> have(t.dominoes.begin(), t.dominoes.end());
    for (const Domino& d : t.dominoes) {
        auto [a, s] = domino_axis(rg, d);
        for (int tr = 0; tr < 3; ++tr) {
            if (tr == a) continue;
            for (int ts : {-1, +1}) {
                // The parallel partner: same domino shifted one step sideways.
                CellCoord b2 = rg.canon(d.black + ts * axis_unit(tr));
                CellCoord w2 = rg.canon(d.white + ts * axis_unit(tr));
                Domino partner{rg.canon(w2), rg.canon(b2)};  // colors swap under the shift
                if (!have.count(partner)) continue;
                Flip f;
                f.before = {std::min(d, partner), std::max(d, partner)};
                // Re-pair the same four cells across the shift direction.
                Domino n1{d.black, b2};   // black stays black, shifted cell is white
                Domino n2{w2, d.white};   // shifted white cell is black
                f.after = {std::min(n1, n2), std::max(n1, n2)};
                found.insert(f);
            }
        }
    }
    return {found.begin(), found.end()};
}

inline Tiling apply_flip(const Region& rg, const Tiling& t, const Flip& f) {
    auto flips = list_flips(rg, t);
    check(std::find(flips.begin(), flips.end(), f) != flips.end(), ErrClass::usage,
          "flip not applicable to this tiling");
    Tiling out = t;
    auto& ds = out.dominoes;
    for (const Domino& d : f.before) ds.erase(std::find(ds.begin(), ds.end(), d));
    for (const Domino& d : f.after) ds.push_back(d);
    out.normalize();
    out.validate(rg);
    return out;
}

// ---------------------------------------------------------------------------
// Trits
//
// A trit acts inside a 2x2x2 block minus two diagonally opposite cells (which
// may be missing from the region or covered by unrelated dominoes): the three
// block dominoes, one per axis direction, are replaced by the unique other
// tiling of the same six cells. The sign is a rotation invariant of the local
// configuration: classifying the ordered (before, after) pair up to the 12
// color-preserving rotations of the block leaves exactly two classes.

struct Trit {
    std::array<Domino, 3> before;  // sorted
    std::array<Domino, 3> after;   // sorted
    int sign = 0;                  // +1 or -1

    friend bool operator==(const Trit&, const Trit&) = default;
    friend auto operator<=>(const Trit&, const Trit&) = default;
};

namespace detail {

// Affine cube symmetries delta' = P(delta): component i taken from axis
// perm[i], flipped when flip[i]. Rotations preserving the coloring are those
// with det = +1 and an even number of flips.
struct CubeRot {
    std::array<int, 3> perm;
    std::array<bool, 3> flip;

    std::array<int64_t, 3> apply(std::array<int64_t, 3> d) const {
        std::array<int64_t, 3> r;
        for (int i = 0; i < 3; ++i) r[i] = flip[i] ? 1 - d[perm[i]] : d[perm[i]];
        return r;
    }
};

inline const std::vector<CubeRot>& color_preserving_rotations() {
    static const std::vector<CubeRot> rots = [] {
        std::vector<CubeRot> out;
        std::array<int, 3> p{0, 1, 2};
        std::sort(p.begin(), p.end());
        do {
            int psign = 1;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (p[i] > p[j]) psign = -psign;
            for (int mask = 0; mask < 8; ++mask) {
                int flips = __builtin_popcount(mask);
                int det = psign * ((flips % 2) ? -1 : 1);
                if (det != 1 || flips % 2 != 0) continue;
                CubeRot r;
                r.perm = p;
                for (int i = 0; i < 3; ++i) r.flip[i] = (mask >> i) & 1;
                out.push_back(r);
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return rots;
}

// Encoding of a local trit configuration on {0,1}^3, in delta coordinates:
// for each corner, its role before and after. Roles: 0 = missing, or
// 1 + linear index of the partner corner.
using TritCode = std::array<int8_t, 16>;

inline TritCode encode_config(const std::array<std::array<int, 8>, 2>& partner) {
    TritCode code{};
    for (int half = 0; half < 2; ++half)
        for (int i = 0; i < 8; ++i) code[half * 8 + i] = static_cast<int8_t>(partner[half][i]);
    return code;
}

// partner[half][corner] = 0 if corner missing, else 1 + partner corner index.
inline TritCode canonical_code(std::array<std::array<int, 8>, 2> partner) {
    auto corner_index = [](std::array<int64_t, 3> d) {
        return int(d[0] * 4 + d[1] * 2 + d[2]);
    };
    auto corner_of = [](int i) {
        return std::array<int64_t, 3>{(i >> 2) & 1, (i >> 1) & 1, i & 1};
    };
    TritCode best{};
    bool first = true;
    for (const CubeRot& r : color_preserving_rotations()) {
        std::array<std::array<int, 8>, 2> img;
        for (int half = 0; half < 2; ++half)
            for (int i = 0; i < 8; ++i) {
                int ni = corner_index(r.apply(corner_of(i)));
                int p = partner[half][i];
                img[half][ni] = (p == 0) ? 0 : 1 + corner_index(r.apply(corner_of(p - 1)));
            }
        TritCode code = encode_config(img);
        if (first || code < best) {
            best = code;
            first = false;
        }
    }
    return best;
}

// The calibration configuration: the six-cell region obtained from a 2x2x2
// block with even-parity min corner by removing corners (1,1,0) and (0,0,1);
// the distinguished positive move goes from the matching
// {(000,100),(101,111),(011,010)} to {(000,010),(011,111),(101,100)}.
inline std::pair<TritCode, TritCode> calibration_codes() {
    auto idx = [](int x, int y, int z) { return x * 4 + y * 2 + z; };
    std::array<std::array<int, 8>, 2> fwd{}, rev{};
    auto set_matching = [&](std::array<int, 8>& row,
                            std::initializer_list<std::pair<int, int>> pairs) {
        row.fill(0);
        for (auto [a, b] : pairs) {
            row[a] = 1 + b;
            row[b] = 1 + a;
        }
    };
    std::array<int, 8> ma{}, mb{};
    set_matching(ma, {{idx(0, 0, 0), idx(1, 0, 0)},
                      {idx(1, 0, 1), idx(1, 1, 1)},
                      {idx(0, 1, 1), idx(0, 1, 0)}});
    set_matching(mb, {{idx(0, 0, 0), idx(0, 1, 0)},
                      {idx(0, 1, 1), idx(1, 1, 1)},
                      {idx(1, 0, 1), idx(1, 0, 0)}});
    fwd = {ma, mb};
    rev = {mb, ma};
    return {canonical_code(fwd), canonical_code(rev)};
}

inline int classify_trit_sign(const std::array<std::array<int, 8>, 2>& partner) {
    static const auto calib = calibration_codes();
    TritCode code = canonical_code(partner);
    if (code == calib.first) return +1;
    if (code == calib.second) return -1;
    fail(ErrClass::inconsistency, "trit configuration matches neither orientation class");
}

}  // namespace detail

inline std::vector<Trit> list_trits(const Region& rg, const Tiling& t) {
    std::map<CellCoord, const Domino*> owner;
    for (const Domino& d : t.dominoes) {
        owner[rg.canon(d.black)] = &d;
        owner[rg.canon(d.white)] = &d;
    }

    // Candidate block min corners.
    std::vector<CellCoord> mins;
    {
        std::set<CellCoord> s;
        IVec3 lo = rg.min_corner(), hi = rg.max_corner();
        for (int a = 0; a < 3; ++a)
            if (!rg.wrap()[a]) lo[a] -= 1;
        for (int64_t x = lo.x; x <= hi.x; ++x)
            for (int64_t y = lo.y; y <= hi.y; ++y)
                for (int64_t z = lo.z; z <= hi.z; ++z) s.insert(rg.canon({x, y, z}));
        mins.assign(s.begin(), s.end());
    }

    static const std::array<std::pair<int, int>, 4> diagonals = {
        std::pair<int, int>{0, 7}, {4, 3}, {2, 5}, {1, 6}};

    std::set<Trit> found;
    for (const CellCoord& m : mins) {
        std::array<CellCoord, 8> corner;
        for (int i = 0; i < 8; ++i)
            corner[i] = rg.canon(m + IVec3{(i >> 2) & 1, (i >> 1) & 1, i & 1});
        for (auto [d0, d1] : diagonals) {
            std::array<int, 8> part_before{};
            std::array<const Domino*, 3> doms{};
            int ndoms = 0;
            bool ok = true;
            std::set<const Domino*> used;
            for (int i = 0; i < 8 && ok; ++i) {
                if (i == d0 || i == d1) continue;
                auto it = owner.find(corner[i]);
                if (it == owner.end()) {
                    ok = false;
                    break;
                }
                const Domino* d = it->second;
                // Partner corner must be inside the block too.
                CellCoord other = rg.canon(d->black) == corner[i] ? rg.canon(d->white)
                                                                  : rg.canon(d->black);
                int j = -1;
                for (int k = 0; k < 8; ++k)
                    if (k != d0 && k != d1 && corner[k] == other) j = k;
                if (j < 0) {
                    ok = false;
                    break;
                }
                part_before[i] = 1 + j;
                if (used.insert(d).second) {
                    if (ndoms == 3) {
                        ok = false;
                        break;
                    }
                    doms[ndoms++] = d;
                }
            }
            if (!ok || ndoms != 3) continue;
            // The six cells must really be three in-block dominoes in three
            // distinct directions.
            std::set<int> axes;
            for (int k = 0; k < 3; ++k) axes.insert(domino_axis(rg, *doms[k]).first);
            if (axes.size() != 3) continue;

            // The unique other matching of the six corners.
            std::array<int, 8> part_after{};
            {
                // Adjacency between block corners that are region cells.
                auto adj = [&](int i, int j) {
                    int diff = i ^ j;
                    return diff == 1 || diff == 2 || diff == 4;
                };
                std::vector<int> cs;
                for (int i = 0; i < 8; ++i)
                    if (i != d0 && i != d1) cs.push_back(i);
                // Enumerate perfect matchings of the 6-cell graph; exactly two.
                std::vector<std::array<int, 8>> matchings;
                std::array<int, 8> cur{};
                auto rec = [&](auto&& self, uint32_t coveredMask) -> void {
                    int i = -1;
                    for (int c : cs)
                        if (!(coveredMask >> c & 1)) {
                            i = c;
                            break;
                        }
                    if (i < 0) {
                        matchings.push_back(cur);
                        return;
                    }
                    for (int j : cs) {
                        if (j == i || (coveredMask >> j & 1) || !adj(i, j)) continue;
                        cur[i] = 1 + j;
                        cur[j] = 1 + i;
                        self(self, coveredMask | (1u << i) | (1u << j));
                        cur[i] = cur[j] = 0;
                    }
                };
                rec(rec, 0);
                check(matchings.size() == 2, ErrClass::inconsistency,
                      "trit block does not have exactly two tilings");
                part_after = (matchings[0] == part_before) ? matchings[1] : matchings[0];
                check(matchings[0] == part_before || matchings[1] == part_before,
                      ErrClass::inconsistency, "trit block matching mismatch");
            }

            Trit tr;
            for (int k = 0; k < 3; ++k) tr.before[k] = *doms[k];
            std::sort(tr.before.begin(), tr.before.end());
            int na = 0;
            for (int i = 0; i < 8; ++i) {
                int p = part_after[i];
                if (p == 0 || p - 1 < i) continue;
                CellCoord c1 = corner[i], c2 = corner[p - 1];
                bool c1_black = rg.color(c1) == Color::black;
                tr.after[na++] = c1_black ? Domino{c1, c2} : Domino{c2, c1};
            }
            check(na == 3, ErrClass::inconsistency, "trit replacement is not three dominoes");
            std::sort(tr.after.begin(), tr.after.end());
            tr.sign = detail::classify_trit_sign({part_before, part_after});
            found.insert(tr);
        }
    }
    return {found.begin(), found.end()};
}

inline Tiling apply_trit(const Region& rg, const Tiling& t, const Trit& tr) {
    auto trits = list_trits(rg, t);
    check(std::find(trits.begin(), trits.end(), tr) != trits.end(), ErrClass::usage,
          "trit not applicable to this tiling");
    Tiling out = t;
    auto& ds = out.dominoes;
    for (const Domino& d : tr.before) ds.erase(std::find(ds.begin(), ds.end(), d));
    for (const Domino& d : tr.after) ds.push_back(d);
    out.normalize();
    out.validate(rg);
    return out;
}

// ---------------------------------------------------------------------------
// Move graph

struct MoveGraph {
    std::vector<Tiling> tilings;                       // canonically sorted
    std::vector<std::pair<size_t, size_t>> flip_edges;  // i < j
    struct TritEdge {
        size_t from, to;  // from < to
        int sign;         // sign of the trit from -> to
    };
    std::vector<TritEdge> trit_edges;
};

inline MoveGraph move_graph(const Region& rg, std::vector<Tiling> tilings) {
    std::sort(tilings.begin(), tilings.end());
    MoveGraph g;
    g.tilings = std::move(tilings);
    auto index_of = [&](const Tiling& t) -> size_t {
        auto it = std::lower_bound(g.tilings.begin(), g.tilings.end(), t);
        check(it != g.tilings.end() && *it == t, ErrClass::inconsistency,
              "move leads outside the given tiling list");
        return static_cast<size_t>(it - g.tilings.begin());
    };
    std::set<std::pair<size_t, size_t>> fseen;
    std::map<std::pair<size_t, size_t>, int> tseen;
    for (size_t i = 0; i < g.tilings.size(); ++i) {
        for (const Flip& f : list_flips(rg, g.tilings[i])) {
            size_t j = index_of(apply_flip(rg, g.tilings[i], f));
            fseen.insert({std::min(i, j), std::max(i, j)});
        }
        for (const Trit& tr : list_trits(rg, g.tilings[i])) {
            size_t j = index_of(apply_trit(rg, g.tilings[i], tr));
            auto key = std::make_pair(std::min(i, j), std::max(i, j));
            int sign_lowhigh = (i < j) ? tr.sign : -tr.sign;
            auto it = tseen.find(key);
            if (it == tseen.end())
                tseen.emplace(key, sign_lowhigh);
            else
                check(it->second == sign_lowhigh, ErrClass::inconsistency,
                      "trit sign is not antisymmetric across an edge");
        }
    }
    g.flip_edges.assign(fseen.begin(), fseen.end());
    for (auto& [k, s] : tseen) g.trit_edges.push_back({k.first, k.second, s});
    return g;
}

// ---------------------------------------------------------------------------
// 5x5x5 refinement

inline Region refine_region(const Region& rg) {
    std::vector<CellCoord> cells;
    cells.reserve(rg.size() * 125);
    for (const CellCoord& c : rg.cells())
        for (int dx = 0; dx < 5; ++dx)
            for (int dy = 0; dy < 5; ++dy)
                for (int dz = 0; dz < 5; ++dz) cells.push_back(5 * c + IVec3{dx, dy, dz});
    Region::Wrap w;
    for (int a = 0; a < 3; ++a)
        if (rg.wrap()[a]) w[a] = 5 * *rg.wrap()[a];
    return Region::make(std::move(cells), w);
}

inline Tiling refine_tiling(const Region& rg, const Tiling& t) {
    Tiling out;
    out.dominoes.reserve(t.dominoes.size() * 125);
    for (const Domino& d : t.dominoes) {
        auto [a, s] = domino_axis(rg, d);
        int b1 = (a + 1) % 3, b2 = (a + 2) % 3;
        for (int t1 = 0; t1 < 5; ++t1)
            for (int t2 = 0; t2 < 5; ++t2)
                for (int j = 0; j < 5; ++j) {
                    // Cells 2j, 2j+1 along the axis counted from the far
                    // (non-shared) face of the black cube.
                    auto line_cell = [&](int k) {
                        CellCoord c = 5 * d.black;
                        c[b1] += t1;
                        c[b2] += t2;
                        c[a] += (s > 0) ? k : 4 - k;
                        return c;
                    };
                    CellCoord c1 = line_cell(2 * j), c2 = line_cell(2 * j + 1);
                    bool c1_black = (((c1.x + c1.y + c1.z) % 2) + 2) % 2 == 0;
                    out.dominoes.push_back(c1_black ? Domino{c1, c2} : Domino{c2, c1});
                }
    }
    out.normalize();
    return out;
}

}  // namespace tilepipe

#endif
