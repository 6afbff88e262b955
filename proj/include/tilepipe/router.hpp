#ifndef TILEPIPE_ROUTER_HPP
#define TILEPIPE_ROUTER_HPP

#include <queue>
#include <unordered_map>

#include "tilepipe/pipes.hpp"

namespace tilepipe {

// Deterministic lattice router for shell pipes.
//
// Paths run on x4 lattice points strictly outside the closed region, so they
// can never touch the interior pipe arcs; distinct pipes use disjoint point
// sets, which for unit lattice steps implies disjoint polylines. Bends are
// penalized to keep routes in few coordinate planes (good for tube-framing
// closure, which assembly verifies exactly).

class ShellRouter {
  public:
    ShellRouter(const Region& rg, int64_t margin = 6, int64_t bend_penalty = 16)
        : rg_(rg), margin_(margin), bend_penalty_(bend_penalty) {
        check(!rg.wrapped(), ErrClass::routing, "router needs an unwrapped region");
        lo_ = 4 * rg.min_corner() - IVec3{margin_, margin_, margin_};
        hi_ = 4 * (rg.max_corner() + IVec3{1, 1, 1}) + IVec3{margin_, margin_, margin_};
        for (const BoundarySquare& s : rg.boundary_squares())
            stub_points_.insert(s.center + square_outward(s));
    }

    // Marks the points of an existing path (e.g. a hand-built pipe) as used.
    void occupy(const OpenPath& p) {
        for (size_t i = 0; i + 1 < p.pts.size(); ++i) {
            IVec3 a = p.pts[i], b = p.pts[i + 1];
            IVec3 step = unit_step(b - a);
            for (IVec3 q = a;; q = q + step) {
                used_.insert(q);
                if (q == b) break;
            }
        }
    }

    // Routes one pipe from the white square to the black square. The first
    // and last unit steps follow the face normals; the interior is a shortest
    // bend-penalized lattice path through free points.
    OpenPath route(const BoundarySquare& w, const BoundarySquare& b) {
        check(w.color == Color::white && b.color == Color::black, ErrClass::routing,
              "route wants a white start and a black end");
        IVec3 start = w.center + square_outward(w);
        IVec3 goal = b.center + square_outward(b);
        check(free_for(start, start) && free_for(goal, goal), ErrClass::routing,
              "a pipe stub is blocked; increase the margin or reroute earlier pipes");

        struct Node {
            int64_t f, g;
            IVec3 p;
            int dir;  // 0..5 arrival direction, 6 = none
            bool operator>(const Node& o) const {
                return std::tie(f, g, p, dir) > std::tie(o.f, o.g, o.p, o.dir);
            }
        };
        auto h = [&](IVec3 p) {
            return std::abs(p.x - goal.x) + std::abs(p.y - goal.y) + std::abs(p.z - goal.z);
        };
        std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
        std::map<std::pair<IVec3, int>, std::pair<int64_t, std::pair<IVec3, int>>> best;
        open.push({h(start), 0, start, 6});
        best[{start, 6}] = {0, {start, 6}};

        auto dir_vec = [](int d) {
            IVec3 v{};
            v[d % 3] = d < 3 ? 1 : -1;
            return v;
        };

        std::pair<IVec3, int> goal_key{{0, 0, 0}, -1};
        while (!open.empty()) {
            Node n = open.top();
            open.pop();
            auto bit = best.find({n.p, n.dir});
            if (bit == best.end() || bit->second.first < n.g) continue;
            if (n.p == goal) {
                goal_key = {n.p, n.dir};
                break;
            }
            for (int d = 0; d < 6; ++d) {
                IVec3 q = n.p + dir_vec(d);
                if (q.x < lo_.x || q.y < lo_.y || q.z < lo_.z || q.x > hi_.x || q.y > hi_.y ||
                    q.z > hi_.z)
                    continue;
                if (!free_for(q, goal)) continue;
                if (n.dir != 6 && dir_vec(n.dir) == -1 * dir_vec(d)) continue;  // no U-turn
                int64_t g2 = n.g + 1 + ((n.dir != 6 && n.dir != d) ? bend_penalty_ : 0);
                auto key = std::make_pair(q, d);
                auto it = best.find(key);
                if (it != best.end() && it->second.first <= g2) continue;
                best[key] = {g2, {n.p, n.dir}};
                open.push({g2 + h(q), g2, q, d});
            }
        }
        check(goal_key.second >= 0, ErrClass::routing,
              "no route from " + to_string(w.center) + " to " + to_string(b.center) +
                  "; increase the margin");

        std::vector<IVec3> rev{goal_key.first};
        auto cur = goal_key;
        while (!(cur.first == start && cur.second == 6)) {
            cur = best[cur].second;
            rev.push_back(cur.first);
        }
        OpenPath p;
        p.pts.push_back(w.center);
        for (auto it = rev.rbegin(); it != rev.rend(); ++it)
            if (p.pts.back() != *it) p.pts.push_back(*it);
        p.pts.push_back(b.center);
        // Drop collinear interior points.
        std::vector<IVec3> clean;
        for (size_t i = 0; i < p.pts.size(); ++i) {
            if (i > 0 && i + 1 < p.pts.size() &&
                cross(p.pts[i] - clean.back(), p.pts[i + 1] - p.pts[i]) == IVec3{0, 0, 0})
                continue;
            clean.push_back(p.pts[i]);
        }
        p.pts = std::move(clean);
        occupy(p);
        return p;
    }

  private:
    static IVec3 unit_step(IVec3 d) {
        int64_t n = std::abs(d.x) + std::abs(d.y) + std::abs(d.z);
        check(n > 0 && (d.x == 0) + (d.y == 0) + (d.z == 0) == 2, ErrClass::routing,
              "path step is not axis-parallel");
        return {d.x / std::max<int64_t>(1, std::abs(d.x)),
                d.y / std::max<int64_t>(1, std::abs(d.y)),
                d.z / std::max<int64_t>(1, std::abs(d.z))};
    }

    bool inside_closed_region(IVec3 p) const {
        // p lies in some closed cell of the region.
        for (int64_t cx : {p.x / 4, p.x / 4 - 1})
            for (int64_t cy : {p.y / 4, p.y / 4 - 1})
                for (int64_t cz : {p.z / 4, p.z / 4 - 1}) {
                    IVec3 c{cx, cy, cz};
                    if (!rg_.contains(c)) continue;
                    IVec3 base = 4 * c;
                    if (p.x >= base.x && p.x <= base.x + 4 && p.y >= base.y &&
                        p.y <= base.y + 4 && p.z >= base.z && p.z <= base.z + 4)
                        return true;
                }
        return false;
    }

    bool free_for(IVec3 p, IVec3 goal) const {
        if (used_.count(p)) return false;
        if (inside_closed_region(p)) return false;
        if (stub_points_.count(p) && !(p == goal)) return false;
        return true;
    }

    const Region& rg_;
    int64_t margin_, bend_penalty_;
    IVec3 lo_, hi_;
    std::unordered_set<IVec3, CellHash> used_;
    std::unordered_set<IVec3, CellHash> stub_points_;
};

// Greedy same-axis matching of boundary squares; the pairing keeps pipe ends
// on parallel faces so assembled curves keep a single port axis.
inline std::vector<std::pair<BoundarySquare, BoundarySquare>> axis_matching(const Region& rg) {
    auto squares = rg.boundary_squares();
    std::vector<std::pair<BoundarySquare, BoundarySquare>> pairs;
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<BoundarySquare> ws, bs;
        for (const auto& s : squares) {
            if (s.axis != axis) continue;
            (s.color == Color::white ? ws : bs).push_back(s);
        }
        check(ws.size() == bs.size(), ErrClass::routing,
              "boundary colors unbalanced within a face axis; no axis-preserving shell");
        std::vector<char> taken(bs.size(), 0);
        for (const auto& w : ws) {
            int64_t bestd = -1;
            size_t besti = 0;
            for (size_t i = 0; i < bs.size(); ++i) {
                if (taken[i]) continue;
                IVec3 d = bs[i].center - w.center;
                int64_t dist = std::abs(d.x) + std::abs(d.y) + std::abs(d.z);
                if (bestd < 0 || dist < bestd) {
                    bestd = dist;
                    besti = i;
                }
            }
            check(bestd >= 0, ErrClass::routing, "matching failed");
            taken[besti] = 1;
            pairs.emplace_back(w, bs[besti]);
        }
    }
    return pairs;
}

// Automatic shell: same-axis matching routed by the lattice router, most
// constrained (longest) pairs first.
inline Shell build_shell_auto(const Region& rg, int64_t margin = 6) {
    auto pairs = axis_matching(rg);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        IVec3 da = a.second.center - a.first.center;
        IVec3 db = b.second.center - b.first.center;
        int64_t la = std::abs(da.x) + std::abs(da.y) + std::abs(da.z);
        int64_t lb = std::abs(db.x) + std::abs(db.y) + std::abs(db.z);
        return la > lb;
    });
    ShellRouter router(rg, margin);
    Shell sh;
    sh.name = "auto";
    for (const auto& [w, b] : pairs) sh.pipes.push_back(router.route(w, b));
    validate_shell(rg, sh);
    return sh;
}

}  // namespace tilepipe

#endif
