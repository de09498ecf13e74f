#pragma once

#include <functional>
#include <string>

#include "spheresub/complex.hpp"
#include "spheresub/triarc.hpp"

namespace fixtures {

using namespace spheresub;

/// Boundary complex of the tetrahedron: 4 vertices, 6 edges, 4 triangles.
inline OrientedComplex tetrahedron() {
    OrientedComplex c;
    for (std::string v : {"A", "B", "C", "D"}) c.add_vertex({v, std::nullopt});
    c.add_edge({"ab", "A", "B", std::nullopt});
    c.add_edge({"bc", "B", "C", std::nullopt});
    c.add_edge({"ca", "C", "A", std::nullopt});
    c.add_edge({"ad", "A", "D", std::nullopt});
    c.add_edge({"bd", "B", "D", std::nullopt});
    c.add_edge({"cd", "C", "D", std::nullopt});
    // orient all faces as seen from outside
    c.add_tile({"ABC", {{"ab", true}, {"bc", true}, {"ca", true}}});
    c.add_tile({"ABD", {{"ab", false}, {"ad", true}, {"bd", false}}});
    c.add_tile({"BCD", {{"bc", false}, {"bd", true}, {"cd", false}}});
    c.add_tile({"CAD", {{"ca", false}, {"cd", true}, {"ad", false}}});
    return c;
}

/// Single n-gon tile as a disk complex.
inline OrientedComplex polygon_disk(size_t n) {
    OrientedComplex c;
    for (size_t i = 0; i < n; ++i) c.add_vertex({"v" + std::to_string(i), std::nullopt});
    TileRec t{"t", {}};
    for (size_t i = 0; i < n; ++i) {
        c.add_edge({"e" + std::to_string(i), "v" + std::to_string(i),
                    "v" + std::to_string((i + 1) % n), std::nullopt});
        t.boundary.push_back({"e" + std::to_string(i), true});
    }
    c.add_tile(t);
    return c;
}

/// m x n grid of unit squares as a disk complex. Vertices are v_i_j with
/// 0 <= i <= m, 0 <= j <= n.
inline OrientedComplex grid_disk(size_t m, size_t n) {
    OrientedComplex c;
    auto vid = [](size_t i, size_t j) {
        return "v" + std::to_string(i) + "_" + std::to_string(j);
    };
    auto hid = [](size_t i, size_t j) {
        return "h" + std::to_string(i) + "_" + std::to_string(j);
    };
    auto uid = [](size_t i, size_t j) {
        return "u" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (size_t j = 0; j <= n; ++j)
        for (size_t i = 0; i <= m; ++i) c.add_vertex({vid(i, j), std::nullopt});
    for (size_t j = 0; j <= n; ++j)
        for (size_t i = 0; i < m; ++i) c.add_edge({hid(i, j), vid(i, j), vid(i + 1, j), std::nullopt});
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i <= m; ++i) c.add_edge({uid(i, j), vid(i, j), vid(i, j + 1), std::nullopt});
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) {
            TileRec t{"t" + std::to_string(i) + "_" + std::to_string(j),
                      {{hid(i, j), true},
                       {uid(i + 1, j), true},
                       {hid(i, j + 1), false},
                       {uid(i, j), false}}};
            c.add_tile(t);
        }
    return c;
}

/// Independent validity oracle for triarc outputs.
inline bool valid_uvw_path(const OrientedComplex& c, const EdgePath& p, const std::string& u,
                           const std::string& v, const std::string& w) {
    if (p.vertices.size() != p.edges.size() + 1) return false;
    if (p.vertices.empty() || p.vertices.front() != u || p.vertices.back() != w) return false;
    if (!p.simple()) return false;
    if (!p.contains_vertex(v)) return false;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (!c.has_edge(p.edges[i].edge)) return false;
        const auto& e = c.edge(p.edges[i].edge);
        std::string tail = p.edges[i].forward ? e.tail : e.head;
        std::string head = p.edges[i].forward ? e.head : e.tail;
        if (tail != p.vertices[i] || head != p.vertices[i + 1]) return false;
    }
    return true;
}

/// Brute-force check that some simple u -> v -> w path exists (DFS).
inline bool uvw_path_exists(const OrientedComplex& c, const std::string& u, const std::string& v,
                            const std::string& w) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : c.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::set<std::string> onpath;
    std::function<bool(const std::string&, bool)> dfs = [&](const std::string& x, bool seen_v) {
        if (x == w) return seen_v || x == v;
        onpath.insert(x);
        for (const auto& y : adj[x])
            if (!onpath.count(y) && dfs(y, seen_v || x == v)) {
                onpath.erase(x);
                return true;
            }
        onpath.erase(x);
        return false;
    };
    return dfs(u, false);
}

} // namespace fixtures
