#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spheresub/geom.hpp"

namespace spheresub {

enum class CellKind { Vertex, Edge, Tile };

inline const char* cell_kind_name(CellKind k) {
    switch (k) {
        case CellKind::Vertex: return "vertex";
        case CellKind::Edge: return "edge";
        default: return "tile";
    }
}

struct CellRef {
    CellKind kind = CellKind::Vertex;
    std::string id;

    bool operator==(const CellRef&) const = default;
    auto operator<=>(const CellRef&) const = default;
};

inline int cell_dim(CellKind k) {
    return k == CellKind::Vertex ? 0 : (k == CellKind::Edge ? 1 : 2);
}

/// Edge reference with direction: forward means tail -> head.
struct SignedEdge {
    std::string edge;
    bool forward = true;

    SignedEdge reversed() const { return {edge, !forward}; }
    bool operator==(const SignedEdge&) const = default;
    auto operator<=>(const SignedEdge&) const = default;
};

struct VertexRec {
    std::string id;
    std::optional<Vec3> pos;
};

struct EdgeRec {
    std::string id;
    std::string tail, head;
    std::optional<Polyline> geom;
};

struct TileRec {
    std::string id;
    std::vector<SignedEdge> boundary; // cyclic, head of each dart = tail of next
};

/// Polygonal 2-complex given by tile boundary cycles (rotation-system
/// semantics). Immutable once built; construction validates references.
class OrientedComplex {
  public:
    std::vector<VertexRec> vertices;
    std::vector<EdgeRec> edges;
    std::vector<TileRec> tiles;

    void add_vertex(VertexRec v) {
        if (vindex_.count(v.id)) throw Error("duplicate vertex id: " + v.id);
        vindex_[v.id] = vertices.size();
        vertices.push_back(std::move(v));
    }
    void add_edge(EdgeRec e) {
        if (eindex_.count(e.id)) throw Error("duplicate edge id: " + e.id);
        if (!vindex_.count(e.tail)) throw Error("edge " + e.id + ": unknown tail " + e.tail);
        if (!vindex_.count(e.head)) throw Error("edge " + e.id + ": unknown head " + e.head);
        eindex_[e.id] = edges.size();
        edges.push_back(std::move(e));
    }
    void add_tile(TileRec t) {
        if (tindex_.count(t.id)) throw Error("duplicate tile id: " + t.id);
        for (const auto& se : t.boundary)
            if (!eindex_.count(se.edge))
                throw Error("tile " + t.id + ": unknown edge " + se.edge);
        tindex_[t.id] = tiles.size();
        tiles.push_back(std::move(t));
    }

    size_t num_vertices() const { return vertices.size(); }
    size_t num_edges() const { return edges.size(); }
    size_t num_tiles() const { return tiles.size(); }

    bool has_vertex(const std::string& id) const { return vindex_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return eindex_.count(id) > 0; }
    bool has_tile(const std::string& id) const { return tindex_.count(id) > 0; }
    bool has_cell(const CellRef& ref) const {
        switch (ref.kind) {
            case CellKind::Vertex: return has_vertex(ref.id);
            case CellKind::Edge: return has_edge(ref.id);
            default: return has_tile(ref.id);
        }
    }

    size_t vertex_index(const std::string& id) const {
        auto it = vindex_.find(id);
        if (it == vindex_.end()) throw Error("unknown vertex id: " + id);
        return it->second;
    }
    size_t edge_index(const std::string& id) const {
        auto it = eindex_.find(id);
        if (it == eindex_.end()) throw Error("unknown edge id: " + id);
        return it->second;
    }
    size_t tile_index(const std::string& id) const {
        auto it = tindex_.find(id);
        if (it == tindex_.end()) throw Error("unknown tile id: " + id);
        return it->second;
    }

    const VertexRec& vertex(const std::string& id) const { return vertices[vertex_index(id)]; }
    const EdgeRec& edge(const std::string& id) const { return edges[edge_index(id)]; }
    const TileRec& tile(const std::string& id) const { return tiles[tile_index(id)]; }

    // ---- darts: 2*edge_index + (forward ? 0 : 1) ----
    size_t num_darts() const { return 2 * edges.size(); }
    int dart(const SignedEdge& se) const {
        return int(2 * edge_index(se.edge) + (se.forward ? 0 : 1));
    }
    SignedEdge dart_signed_edge(int d) const {
        return {edges[size_t(d) / 2].id, (d % 2) == 0};
    }
    static int dart_reverse(int d) { return d ^ 1; }
    size_t dart_tail(int d) const {
        const EdgeRec& e = edges[size_t(d) / 2];
        return vertex_index((d % 2) == 0 ? e.tail : e.head);
    }
    size_t dart_head(int d) const { return dart_tail(dart_reverse(d)); }

    bool has_full_geometry() const {
        for (const auto& v : vertices)
            if (!v.pos) return false;
        for (const auto& e : edges)
            if (!e.geom) return false;
        return true;
    }

    /// Polyline of a dart, oriented along the dart.
    Polyline dart_polyline(int d) const {
        const EdgeRec& e = edges[size_t(d) / 2];
        if (!e.geom) throw Error("edge " + e.id + " has no geometry");
        Polyline p = *e.geom;
        if (d % 2 == 1) std::reverse(p.pts.begin(), p.pts.end());
        return p;
    }

  private:
    std::map<std::string, size_t> vindex_, eindex_, tindex_;
};

// --------------------------------------------------------------------------

enum class SurfaceExpect { Any, Sphere, ClosedSurface, Disk };

struct ValidationReport {
    std::vector<std::string> violations;
    long V = 0, E = 0, F = 0;
    long euler = 0;
    bool closed = false;
    bool connected = false;
    std::map<std::string, size_t> valences;

    bool valid() const { return violations.empty(); }
    void flag(std::string v) { violations.push_back(std::move(v)); }
};

namespace detail {

/// Tile successor of each dart (the face permutation restricted to darts
/// actually used by tiles); -1 where unused. Flags double-used darts.
inline std::vector<int> face_successor(const OrientedComplex& c, ValidationReport* rep) {
    std::vector<int> succ(c.num_darts(), -1);
    std::vector<int> used(c.num_darts(), 0);
    for (const auto& t : c.tiles) {
        const auto& b = t.boundary;
        for (size_t i = 0; i < b.size(); ++i) {
            int d = c.dart(b[i]);
            int dn = c.dart(b[(i + 1) % b.size()]);
            if (used[size_t(d)]++) {
                if (rep)
                    rep->flag("signed edge reused: (" + b[i].edge + "," +
                              (b[i].forward ? "+" : "-") + ") appears in more than one tile boundary");
                continue;
            }
            succ[size_t(d)] = dn;
        }
    }
    return succ;
}

/// Corner successor around a vertex: for an out-dart d at v, the next
/// out-dart counterclockwise, derived from the tile corner that follows
/// reverse(d). -1 where the corner is missing (boundary gap).
inline std::vector<int> vertex_successor(const OrientedComplex& c, const std::vector<int>& fsucc) {
    std::vector<int> vsucc(c.num_darts(), -1);
    for (size_t d = 0; d < c.num_darts(); ++d) {
        int rd = OrientedComplex::dart_reverse(int(d));
        if (fsucc[size_t(rd)] >= 0) vsucc[d] = fsucc[size_t(rd)];
    }
    return vsucc;
}

} // namespace detail

inline std::map<std::string, size_t> vertex_valences(const OrientedComplex& c) {
    std::map<std::string, size_t> val;
    for (const auto& v : c.vertices) val[v.id] = 0;
    for (const auto& e : c.edges) {
        val[e.tail]++;
        val[e.head]++;
    }
    return val;
}

/// Validates basic complex invariants; returns a report rather than throwing.
inline ValidationReport validate_complex(const OrientedComplex& c,
                                         SurfaceExpect expect = SurfaceExpect::Any,
                                         size_t min_tile_boundary = 1) {
    ValidationReport rep;
    rep.V = long(c.num_vertices());
    rep.E = long(c.num_edges());
    rep.F = long(c.num_tiles());
    rep.euler = rep.V - rep.E + rep.F;
    rep.valences = vertex_valences(c);

    // tile boundary cycles chain head -> tail
    for (const auto& t : c.tiles) {
        if (t.boundary.size() < min_tile_boundary)
            rep.flag("tile " + t.id + ": boundary cycle shorter than " +
                     std::to_string(min_tile_boundary));
        if (t.boundary.empty()) continue;
        for (size_t i = 0; i < t.boundary.size(); ++i) {
            int d = c.dart(t.boundary[i]);
            int dn = c.dart(t.boundary[(i + 1) % t.boundary.size()]);
            if (c.dart_head(d) != c.dart_tail(dn)) {
                rep.flag("tile " + t.id + ": boundary does not chain at position " +
                         std::to_string(i));
                break;
            }
        }
    }

    auto fsucc = detail::face_successor(c, &rep);
    if (!rep.valid()) return rep; // dart reuse poisons the rest

    // every cell supported by a 2-cell
    std::vector<int> edge_sides(c.num_edges(), 0);
    for (size_t d = 0; d < c.num_darts(); ++d)
        if (fsucc[d] >= 0) edge_sides[d / 2]++;
    for (size_t e = 0; e < c.num_edges(); ++e)
        if (edge_sides[e] == 0)
            rep.flag("edge " + c.edges[e].id + ": not on any tile boundary");
    for (const auto& [vid, val] : rep.valences)
        if (val == 0) rep.flag("vertex " + vid + ": isolated");

    size_t boundary_darts = 0;
    for (size_t d = 0; d < c.num_darts(); ++d)
        if (fsucc[d] < 0) ++boundary_darts;
    rep.closed = (boundary_darts == 0);

    // vertex links: darts out of v must form one orbit under the corner map
    auto vsucc = detail::vertex_successor(c, fsucc);
    std::vector<std::vector<int>> outgoing(c.num_vertices());
    for (size_t d = 0; d < c.num_darts(); ++d) outgoing[c.dart_tail(int(d))].push_back(int(d));
    std::vector<int> haspred(c.num_darts(), 0);
    for (size_t d = 0; d < c.num_darts(); ++d)
        if (vsucc[d] >= 0) haspred[size_t(vsucc[d])] = 1;
    for (size_t v = 0; v < c.num_vertices(); ++v) {
        const auto& out = outgoing[v];
        if (out.empty()) continue;
        // count orbit components: chain starts (no predecessor) plus cycles
        std::set<int> seen;
        size_t components = 0;
        for (int d : out)
            if (!haspred[size_t(d)]) {
                ++components;
                int x = d;
                while (x >= 0 && !seen.count(x)) {
                    seen.insert(x);
                    x = vsucc[size_t(x)];
                }
            }
        for (int d : out)
            if (!seen.count(d)) { // residual cycles
                ++components;
                int x = d;
                while (!seen.count(x)) {
                    seen.insert(x);
                    x = vsucc[size_t(x)];
                    if (x < 0) break;
                }
            }
        if (components != 1)
            rep.flag("vertex " + c.vertices[v].id + ": link has " + std::to_string(components) +
                     " components (not a single cycle or arc)");
    }

    // connectivity over the 1-skeleton
    if (!c.vertices.empty()) {
        std::vector<int> mark(c.num_vertices(), 0);
        std::vector<size_t> stack = {0};
        mark[0] = 1;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (int d : outgoing[v]) {
                size_t w = c.dart_head(d);
                if (!mark[w]) {
                    mark[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        rep.connected = true;
        for (size_t v = 0; v < c.num_vertices(); ++v)
            if (!mark[v]) rep.connected = false;
        if (!rep.connected) rep.flag("complex is not connected");
    }

    if (expect == SurfaceExpect::Sphere || expect == SurfaceExpect::ClosedSurface) {
        if (!rep.closed) rep.flag("expected closed surface but free edge sides exist");
        if (expect == SurfaceExpect::Sphere && rep.euler != 2)
            rep.flag("expected sphere but Euler characteristic is " + std::to_string(rep.euler));
    }
    if (expect == SurfaceExpect::Disk) {
        if (rep.closed) rep.flag("expected disk but complex is closed");
        if (rep.euler != 1)
            rep.flag("expected disk but Euler characteristic is " + std::to_string(rep.euler));
    }

    // geometry sanity where present
    for (const auto& v : c.vertices)
        if (v.pos && std::abs(norm(*v.pos) - 1.0) > 1e-9)
            rep.flag("vertex " + v.id + ": position not on unit sphere");
    for (const auto& e : c.edges) {
        if (!e.geom) continue;
        if (e.geom->pts.size() < 2) {
            rep.flag("edge " + e.id + ": polyline needs at least 2 points");
            continue;
        }
        for (const auto& p : e.geom->pts)
            if (std::abs(norm(p) - 1.0) > 1e-9) {
                rep.flag("edge " + e.id + ": polyline point off unit sphere");
                break;
            }
        const auto& tv = c.vertex(e.tail).pos;
        const auto& hv = c.vertex(e.head).pos;
        if (tv && sphere_angle(*tv, e.geom->pts.front()) > 1e-7)
            rep.flag("edge " + e.id + ": polyline start does not match tail vertex");
        if (hv && sphere_angle(*hv, e.geom->pts.back()) > 1e-7)
            rep.flag("edge " + e.id + ": polyline end does not match head vertex");
    }

    return rep;
}

// --------------------------------------------------------------------------
// Rotation systems and face tracing

/// Cyclic counterclockwise order of outgoing darts at each vertex.
struct RotationSystem {
    std::map<std::string, std::vector<SignedEdge>> order;
};

/// Builds the closed oriented surface determined by a rotation system.
/// Faces are traced with the standard next-edge rule (face on the left of
/// its darts); tile ids are generated deterministically as t0, t1, ...
inline OrientedComplex faces_from_rotation_system(const std::vector<VertexRec>& vertices,
                                                  const std::vector<EdgeRec>& edges,
                                                  const RotationSystem& rot) {
    OrientedComplex c;
    for (const auto& v : vertices) c.add_vertex(v);
    for (const auto& e : edges) c.add_edge(e);

    // rotation successor per dart and occurrence validation
    std::vector<int> rnext(c.num_darts(), -1);
    std::vector<int> seen(c.num_darts(), 0);
    for (const auto& [vid, darts] : rot.order) {
        size_t v = c.vertex_index(vid);
        for (size_t i = 0; i < darts.size(); ++i) {
            int d = c.dart(darts[i]);
            if (c.dart_tail(d) != v)
                throw Error("rotation at " + vid + " lists a dart not based there");
            if (seen[size_t(d)]++)
                throw Error("rotation data inconsistent: dart repeated at " + vid);
            rnext[size_t(d)] = c.dart(darts[(i + 1) % darts.size()]);
        }
    }
    for (size_t d = 0; d < c.num_darts(); ++d)
        if (!seen[d])
            throw Error("rotation data inconsistent: missing edge end of " + c.edges[d / 2].id);

    // trace faces: next(d) = rotation successor of reverse(d)
    std::vector<int> visited(c.num_darts(), 0);
    size_t tcount = 0;
    for (size_t d0 = 0; d0 < c.num_darts(); ++d0) {
        if (visited[d0]) continue;
        TileRec t;
        t.id = "t" + std::to_string(tcount++);
        int d = int(d0);
        do {
            visited[size_t(d)] = 1;
            t.boundary.push_back(c.dart_signed_edge(d));
            d = rnext[size_t(OrientedComplex::dart_reverse(d))];
        } while (d != int(d0));
        c.add_tile(std::move(t));
    }
    return c;
}

/// Rotation system of a closed oriented complex (inverse of face tracing).
inline RotationSystem extract_rotation_system(const OrientedComplex& c) {
    auto fsucc = detail::face_successor(c, nullptr);
    for (size_t d = 0; d < c.num_darts(); ++d)
        if (fsucc[d] < 0) throw Error("extract_rotation_system requires a closed complex");
    auto vsucc = detail::vertex_successor(c, fsucc);
    RotationSystem rot;
    std::vector<int> first(c.num_vertices(), -1);
    for (size_t d = 0; d < c.num_darts(); ++d) {
        size_t v = c.dart_tail(int(d));
        if (first[v] < 0) first[v] = int(d);
    }
    for (size_t v = 0; v < c.num_vertices(); ++v) {
        if (first[v] < 0) continue;
        std::vector<SignedEdge> cyc;
        int d = first[v];
        do {
            cyc.push_back(c.dart_signed_edge(d));
            d = vsucc[size_t(d)];
            if (d < 0) throw Error("vertex link broken at " + c.vertices[v].id);
        } while (d != first[v] && cyc.size() <= c.num_darts());
        rot.order[c.vertices[v].id] = std::move(cyc);
    }
    return rot;
}

// --------------------------------------------------------------------------
// Boundary and disk complexes

/// Darts not used by any tile, chained into cycles.
inline std::vector<std::vector<int>> boundary_cycles(const OrientedComplex& c) {
    auto fsucc = detail::face_successor(c, nullptr);
    auto vsucc = detail::vertex_successor(c, fsucc);
    std::vector<int> vpred(c.num_darts(), -1);
    for (size_t d = 0; d < c.num_darts(); ++d)
        if (vsucc[d] >= 0) vpred[size_t(vsucc[d])] = int(d);

    auto next_boundary = [&](int d) {
        // walk to the start of the corner chain containing reverse(d)
        int x = OrientedComplex::dart_reverse(d);
        size_t guard = 0;
        while (vpred[size_t(x)] >= 0) {
            x = vpred[size_t(x)];
            if (++guard > c.num_darts()) throw Error("boundary walk stuck (pinched vertex?)");
        }
        return x;
    };

    std::vector<std::vector<int>> cycles;
    std::vector<int> visited(c.num_darts(), 0);
    for (size_t d0 = 0; d0 < c.num_darts(); ++d0) {
        if (fsucc[d0] >= 0 || visited[d0]) continue;
        std::vector<int> cyc;
        int d = int(d0);
        do {
            visited[size_t(d)] = 1;
            cyc.push_back(d);
            d = next_boundary(d);
            if (fsucc[size_t(d)] >= 0) throw Error("boundary walk entered interior dart");
        } while (d != int(d0) && cyc.size() <= c.num_darts());
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

/// OrientedComplex with a distinguished single boundary cycle; the complex
/// is a closed disk (connected, V - E + F = 1).
struct DiskComplex {
    OrientedComplex complex;
    std::vector<int> boundary; // darts in cyclic order

    std::set<std::string> boundary_vertex_ids() const {
        std::set<std::string> out;
        for (int d : boundary) out.insert(complex.vertices[complex.dart_tail(d)].id);
        return out;
    }
};

inline DiskComplex make_disk_complex(OrientedComplex c) {
    auto rep = validate_complex(c, SurfaceExpect::Disk);
    if (!rep.valid()) {
        std::string msg = "not a disk complex:";
        for (const auto& v : rep.violations) msg += " [" + v + "]";
        throw Error(msg);
    }
    auto cycles = boundary_cycles(c);
    if (cycles.size() != 1) throw Error("disk must have exactly one boundary cycle");
    DiskComplex d;
    d.boundary = cycles[0];
    d.complex = std::move(c);
    return d;
}

// --------------------------------------------------------------------------

/// Sub-complex spanned by a set of tiles (shared ids, inherited geometry).
inline OrientedComplex subcomplex_from_tiles(const OrientedComplex& c,
                                             const std::set<std::string>& tile_ids) {
    std::set<std::string> eids, vids;
    for (const auto& tid : tile_ids)
        for (const auto& se : c.tile(tid).boundary) {
            eids.insert(se.edge);
            vids.insert(c.edge(se.edge).tail);
            vids.insert(c.edge(se.edge).head);
        }
    OrientedComplex out;
    for (const auto& v : c.vertices)
        if (vids.count(v.id)) out.add_vertex(v);
    for (const auto& e : c.edges)
        if (eids.count(e.id)) out.add_edge(e);
    for (const auto& t : c.tiles)
        if (tile_ids.count(t.id)) out.add_tile(t);
    return out;
}

/// Connected components of a tile subset under shared-edge adjacency.
inline std::vector<std::set<std::string>> tile_components(const OrientedComplex& c,
                                                          const std::set<std::string>& tile_ids) {
    // edge id -> incident tiles within the subset
    std::map<std::string, std::vector<std::string>> by_edge;
    for (const auto& tid : tile_ids)
        for (const auto& se : c.tile(tid).boundary) by_edge[se.edge].push_back(tid);
    std::set<std::string> left = tile_ids;
    std::vector<std::set<std::string>> comps;
    while (!left.empty()) {
        std::set<std::string> comp;
        std::vector<std::string> stack = {*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            std::string t = stack.back();
            stack.pop_back();
            comp.insert(t);
            for (const auto& se : c.tile(t).boundary)
                for (const auto& nb : by_edge[se.edge])
                    if (left.count(nb)) {
                        left.erase(nb);
                        stack.push_back(nb);
                    }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Combinatorial isomorphism of closed oriented complexes, by seeding a dart
/// correspondence and propagating through reversal and face successors.
inline bool oriented_isomorphic(const OrientedComplex& a, const OrientedComplex& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.num_tiles() != b.num_tiles())
        return false;
    if (a.num_edges() == 0) return true;
    auto fa = detail::face_successor(a, nullptr);
    auto fb = detail::face_successor(b, nullptr);
    for (size_t d = 0; d < a.num_darts(); ++d)
        if (fa[d] < 0) return false; // closed complexes only
    for (size_t d = 0; d < b.num_darts(); ++d)
        if (fb[d] < 0) return false;

    for (size_t seed = 0; seed < b.num_darts(); ++seed) {
        std::vector<int> m(a.num_darts(), -1);
        std::vector<int> used(b.num_darts(), 0);
        std::vector<int> stack;
        bool ok = true;
        auto assign = [&](int da, int db) {
            if (m[size_t(da)] >= 0) {
                if (m[size_t(da)] != db) ok = false;
                return;
            }
            if (used[size_t(db)]) {
                ok = false;
                return;
            }
            m[size_t(da)] = db;
            used[size_t(db)] = 1;
            stack.push_back(da);
        };
        assign(0, int(seed));
        while (ok && !stack.empty()) {
            int da = stack.back();
            stack.pop_back();
            int db = m[size_t(da)];
            assign(OrientedComplex::dart_reverse(da), OrientedComplex::dart_reverse(db));
            assign(fa[size_t(da)], fb[size_t(db)]);
        }
        if (!ok) continue;
        bool total = true;
        for (size_t d = 0; d < a.num_darts(); ++d)
            if (m[d] < 0) total = false;
        if (!total) continue; // disconnected; single-seed propagation insufficient
        // vertex consistency
        std::vector<int> vmap(a.num_vertices(), -1);
        bool vok = true;
        for (size_t d = 0; d < a.num_darts() && vok; ++d) {
            size_t va = a.dart_tail(int(d));
            size_t vb = b.dart_tail(m[d]);
            if (vmap[va] < 0)
                vmap[va] = int(vb);
            else if (vmap[va] != int(vb))
                vok = false;
        }
        if (vok) return true;
    }
    return false;
}

} // namespace spheresub
