#pragma once

#include <algorithm>
#include <queue>

#include "spheresub/complex.hpp"

namespace spheresub {

struct EdgePath {
    std::vector<std::string> vertices; // size = edges.size() + 1 (or 1 for trivial)
    std::vector<SignedEdge> edges;

    bool simple() const {
        std::set<std::string> seen(vertices.begin(), vertices.end());
        return seen.size() == vertices.size();
    }
    bool contains_vertex(const std::string& v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }
};

namespace detail {

/// Index-based peeling engine over a fixed disk complex. Tiles die, edges
/// and vertices of the original complex keep their indices.
class TriArcEngine {
  public:
    explicit TriArcEngine(const DiskComplex& d) : c_(d.complex) {
        size_t nd = c_.num_darts();
        dart_tile_.assign(nd, -1);
        succ_in_tile_.assign(nd, -1);
        tile_darts_.resize(c_.num_tiles());
        tile_verts_.resize(c_.num_tiles());
        for (size_t ti = 0; ti < c_.num_tiles(); ++ti) {
            const auto& b = c_.tiles[ti].boundary;
            std::set<size_t> vs;
            for (size_t i = 0; i < b.size(); ++i) {
                int dd = c_.dart(b[i]);
                if (dart_tile_[size_t(dd)] >= 0)
                    throw Error("not a regular tiling: dart reused");
                dart_tile_[size_t(dd)] = int(ti);
                succ_in_tile_[size_t(dd)] = c_.dart(b[(i + 1) % b.size()]);
                tile_darts_[ti].push_back(dd);
                if (!vs.insert(c_.dart_tail(dd)).second)
                    throw Error("not a regular tiling: tile " + c_.tiles[ti].id +
                                " boundary revisits a vertex");
            }
            tile_verts_[ti] = std::move(vs);
        }
        for (const auto& e : c_.edges)
            if (e.tail == e.head) throw Error("not a regular tiling: loop edge " + e.id);
        dtail_.resize(nd);
        for (size_t dd = 0; dd < nd; ++dd) dtail_[dd] = c_.dart_tail(int(dd));
    }

    EdgePath run(const std::string& u, const std::string& v, const std::string& w) {
        if (u == v || v == w || u == w) throw Error("triarc: vertices not distinct");
        std::vector<char> alive(c_.num_tiles(), 1);
        auto p = solve(alive, c_.vertex_index(u), c_.vertex_index(v), c_.vertex_index(w));
        return to_path(p);
    }

  private:
    const OrientedComplex& c_;
    std::vector<int> dart_tile_, succ_in_tile_;
    std::vector<size_t> dtail_;
    std::vector<std::vector<int>> tile_darts_;
    std::vector<std::set<size_t>> tile_verts_;

    struct IdxPath {
        std::vector<size_t> verts;
        std::vector<int> darts;
    };

    size_t head(int d) const { return dtail_[size_t(OrientedComplex::dart_reverse(d))]; }

    bool dart_alive(int d, const std::vector<char>& alive) const {
        int t = dart_tile_[size_t(d)];
        return t >= 0 && alive[size_t(t)];
    }

    /// Single boundary cycle of the currently alive union of tiles.
    std::vector<int> boundary_cycle(const std::vector<char>& alive) const {
        size_t nd = c_.num_darts();
        std::vector<int> vpred(nd, -1);
        for (size_t d = 0; d < nd; ++d) {
            // vertex successor of out-dart d is the in-tile successor of its reverse
            int rd = OrientedComplex::dart_reverse(int(d));
            if (dart_alive(rd, alive)) vpred[size_t(succ_in_tile_[size_t(rd)])] = int(d);
        }
        int start = -1;
        for (size_t d = 0; d < nd && start < 0; ++d) {
            size_t e = d / 2;
            bool edge_alive = dart_alive(int(2 * e), alive) || dart_alive(int(2 * e + 1), alive);
            if (edge_alive && !dart_alive(int(d), alive)) start = int(d);
        }
        if (start < 0) throw Error("triarc: no boundary found");
        std::vector<int> cyc;
        int d = start;
        do {
            cyc.push_back(d);
            // next boundary dart: start of the corner chain at head(d)
            int x = OrientedComplex::dart_reverse(d);
            size_t guard = 0;
            while (true) {
                // predecessor around the vertex: dart y with vsucc(y) == x,
                // i.e. x == succ_in_tile(reverse(y))
                int y = vpred_at(x, alive, vpred);
                if (y < 0) break;
                x = y;
                if (++guard > nd) throw Error("triarc: boundary walk stuck");
            }
            d = x;
        } while (d != start && cyc.size() <= c_.num_darts());
        if (d != start) throw Error("triarc: boundary is not a single cycle");
        return cyc;
    }

    int vpred_at(int x, const std::vector<char>&, const std::vector<int>& vpred) const {
        return vpred[size_t(x)];
    }

    struct Arc {
        size_t tile;
        std::vector<int> darts;       // contiguous run along the boundary cycle
        std::vector<size_t> verts;    // tails plus final head, along the run
    };

    /// Tiles whose intersection with the boundary is a single arc.
    std::vector<Arc> peelable(const std::vector<char>& alive,
                              const std::vector<int>& bcycle) const {
        std::map<size_t, std::vector<size_t>> runs_by_tile; // tile -> positions
        size_t n = bcycle.size();
        std::vector<size_t> owner(n);
        for (size_t i = 0; i < n; ++i) {
            int rd = OrientedComplex::dart_reverse(bcycle[i]);
            owner[i] = size_t(dart_tile_[size_t(rd)]);
            runs_by_tile[owner[i]].push_back(i);
        }
        std::set<size_t> bverts;
        for (int d : bcycle) bverts.insert(dtail_[size_t(d)]);

        std::vector<Arc> out;
        for (const auto& [ti, positions] : runs_by_tile) {
            if (positions.size() >= tile_darts_[ti].size()) continue; // whole tile on boundary
            // contiguity around the cycle: exactly one "break" in position set
            std::vector<char> at(n, 0);
            for (size_t p : positions) at[p] = 1;
            size_t breaks = 0, first_after_break = 0;
            for (size_t i = 0; i < n; ++i) {
                size_t prev = (i + n - 1) % n;
                if (at[i] && !at[prev]) {
                    ++breaks;
                    first_after_break = i;
                }
            }
            if (breaks != 1) continue;
            Arc arc;
            arc.tile = ti;
            for (size_t k = 0, i = first_after_break; k < positions.size(); ++k, i = (i + 1) % n)
                arc.darts.push_back(bcycle[i]);
            for (int d : arc.darts) arc.verts.push_back(dtail_[size_t(d)]);
            arc.verts.push_back(head(arc.darts.back()));
            // the tile must meet the boundary only along this arc
            std::set<size_t> arcset(arc.verts.begin(), arc.verts.end());
            bool clean = true;
            for (size_t tv : tile_verts_[ti])
                if (bverts.count(tv) && !arcset.count(tv)) clean = false;
            if (!clean) continue;
            out.push_back(std::move(arc));
        }
        std::sort(out.begin(), out.end(), [&](const Arc& a, const Arc& b) {
            return c_.tiles[a.tile].id < c_.tiles[b.tile].id;
        });
        return out;
    }

    IdxPath solve(std::vector<char> alive, size_t u, size_t v, size_t w) {
        if (v == u || v == w) return bfs_path(alive, u, w);

        size_t alive_count = size_t(std::count(alive.begin(), alive.end(), char(1)));
        if (alive_count == 1) {
            size_t ti = 0;
            while (!alive[ti]) ++ti;
            return polygon_case(ti, u, v, w);
        }

        auto bcycle = boundary_cycle(alive);
        auto arcs = peelable(alive, bcycle);
        if (arcs.empty()) throw Error("not a regular tiling: no peelable tile");

        const Arc* chosen = nullptr;
        for (const auto& a : arcs) {
            bool v_interior = false;
            for (size_t i = 1; i + 1 < a.verts.size(); ++i)
                if (a.verts[i] == v) v_interior = true;
            if (!v_interior) {
                chosen = &a;
                break;
            }
        }
        if (!chosen) throw Error("not a regular tiling: every peelable tile swallows v");
        const Arc& A = *chosen;
        alive[A.tile] = 0;

        auto interior_pos = [&](size_t x) -> int {
            for (size_t i = 1; i + 1 < A.verts.size(); ++i)
                if (A.verts[i] == x) return int(i);
            return -1;
        };
        int pu = interior_pos(u), pw = interior_pos(w);
        size_t front = A.verts.front(), back = A.verts.back();

        if (pu < 0 && pw < 0) return solve(std::move(alive), u, v, w);

        // sub-arc of A from position i to position j (either direction)
        auto subarc = [&](size_t i, size_t j) {
            IdxPath p;
            p.verts.push_back(A.verts[i]);
            if (i < j)
                for (size_t k = i; k < j; ++k) {
                    p.darts.push_back(A.darts[k]);
                    p.verts.push_back(A.verts[k + 1]);
                }
            else
                for (size_t k = i; k > j; --k) {
                    p.darts.push_back(OrientedComplex::dart_reverse(A.darts[k - 1]));
                    p.verts.push_back(A.verts[k - 1]);
                }
            return p;
        };

        size_t last = A.verts.size() - 1;
        if (pu >= 0 && pw >= 0) {
            // both endpoints lost: leave through the two distinct ends of the arc
            size_t u1 = (pu < pw) ? front : back;
            size_t w1 = (pu < pw) ? back : front;
            IdxPath mid = solve(std::move(alive), u1, v, w1);
            IdxPath pre = subarc(size_t(pu), (pu < pw) ? 0 : last);
            IdxPath post = subarc((pu < pw) ? last : 0, size_t(pw));
            return concat(concat(pre, mid), post);
        }
        if (pu >= 0) {
            size_t u1 = (front != w) ? front : back;
            // prefer the nearer end when both are admissible
            if (front != w && back != w)
                u1 = (size_t(pu) <= last - size_t(pu)) ? front : back;
            IdxPath rest = solve(std::move(alive), u1, v, w);
            IdxPath pre = subarc(size_t(pu), (u1 == front) ? 0 : last);
            return concat(pre, rest);
        }
        // pw >= 0
        size_t w1 = (front != u) ? front : back;
        if (front != u && back != u) w1 = (size_t(pw) <= last - size_t(pw)) ? front : back;
        IdxPath rest = solve(std::move(alive), u, v, w1);
        IdxPath post = subarc((w1 == front) ? 0 : last, size_t(pw));
        return concat(rest, post);
    }

    IdxPath polygon_case(size_t ti, size_t u, size_t v, size_t w) const {
        const auto& darts = tile_darts_[ti];
        size_t n = darts.size();
        auto pos_of = [&](size_t x) -> size_t {
            for (size_t i = 0; i < n; ++i)
                if (dtail_[size_t(darts[i])] == x) return i;
            throw Error("triarc: vertex not on the polygon");
        };
        size_t iu = pos_of(u);
        for (int dir : {+1, -1}) {
            IdxPath p;
            p.verts.push_back(u);
            bool sawv = false;
            size_t i = iu;
            for (size_t steps = 0; steps < n; ++steps) {
                int d = (dir > 0) ? darts[i]
                                  : OrientedComplex::dart_reverse(darts[(i + n - 1) % n]);
                i = (dir > 0) ? (i + 1) % n : (i + n - 1) % n;
                p.darts.push_back(d);
                size_t vtx = dtail_[size_t(darts[i])];
                p.verts.push_back(vtx);
                if (vtx == v) sawv = true;
                if (vtx == w) break;
            }
            if (sawv && p.verts.back() == w) return p;
        }
        throw Error("triarc: polygon walk failed");
    }

    IdxPath bfs_path(const std::vector<char>& alive, size_t a, size_t b) const {
        // 1-skeleton of alive tiles, deterministic neighbor order by edge index
        std::vector<std::vector<int>> adj(c_.num_vertices());
        for (size_t d = 0; d < c_.num_darts(); ++d) {
            size_t e = d / 2;
            bool edge_alive = dart_alive(int(2 * e), alive) || dart_alive(int(2 * e + 1), alive);
            if (edge_alive) adj[dtail_[d]].push_back(int(d));
        }
        std::vector<int> via(c_.num_vertices(), -2);
        std::queue<size_t> q;
        via[a] = -1;
        q.push(a);
        while (!q.empty()) {
            size_t x = q.front();
            q.pop();
            if (x == b) break;
            for (int d : adj[x]) {
                size_t y = head(d);
                if (via[y] == -2) {
                    via[y] = d;
                    q.push(y);
                }
            }
        }
        if (via[b] == -2) throw Error("triarc: no path in 1-skeleton");
        IdxPath p;
        size_t x = b;
        std::vector<int> rdarts;
        while (via[x] >= 0) {
            rdarts.push_back(via[x]);
            x = dtail_[size_t(via[x])];
        }
        p.verts.push_back(a);
        for (auto it = rdarts.rbegin(); it != rdarts.rend(); ++it) {
            p.darts.push_back(*it);
            p.verts.push_back(head(*it));
        }
        return p;
    }

    static IdxPath concat(IdxPath a, const IdxPath& b) {
        if (a.verts.empty()) return b;
        if (b.verts.empty()) return a;
        if (a.verts.back() != b.verts.front())
            throw Error("triarc: path concatenation mismatch");
        a.darts.insert(a.darts.end(), b.darts.begin(), b.darts.end());
        a.verts.insert(a.verts.end(), b.verts.begin() + 1, b.verts.end());
        return a;
    }

    EdgePath to_path(const IdxPath& p) const {
        EdgePath out;
        for (size_t v : p.verts) out.vertices.push_back(c_.vertices[v].id);
        for (int d : p.darts) out.edges.push_back(c_.dart_signed_edge(d));
        if (!out.simple()) throw Error("triarc: produced a non-simple path");
        return out;
    }
};

} // namespace detail

/// Simple arc in the 1-skeleton of a regularly tiled disk from u to w
/// passing through v, found by peeling boundary tiles.
inline EdgePath triarc(const DiskComplex& d, const std::string& u, const std::string& v,
                       const std::string& w) {
    for (const auto* x : {&u, &v, &w})
        if (!d.complex.has_vertex(*x)) throw Error("triarc: unknown vertex " + *x);
    detail::TriArcEngine engine(d);
    return engine.run(u, v, w);
}

} // namespace spheresub
