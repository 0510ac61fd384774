#pragma once

// Cycle interiors and chord separations.
//
// The interior of a cycle is computed by a flood fill over faces: two faces
// sharing an edge not on the cycle lie on the same side, so everything not
// reachable from the outer face without crossing the cycle is inside.  A
// t-chord is a path with endpoints on the outer boundary, internal vertices
// off it, that splits the graph into two sides sharing exactly the path;
// sides are realised as induced subgraphs (vertex removal keeps the
// inherited embedding and re-anchors the outer face automatically).

#include <map>

#include "planedeg/plane_graph.hpp"

namespace planedeg {

// Vertices embedded strictly inside the cycle (given as a vertex sequence,
// consecutive entries adjacent, closing edge implied).  G must be connected.
inline std::vector<Vertex> cycle_interior(const PlaneGraph& g,
                                          const std::vector<Vertex>& cycle) {
    require(g.is_connected(), "cycle_interior needs a connected graph");
    require(cycle.size() >= 3, "a cycle has at least three vertices");
    std::set<Vertex> cyc_set(cycle.begin(), cycle.end());
    require(cyc_set.size() == cycle.size(), "cycle repeats a vertex");
    std::set<std::pair<Vertex, Vertex>> cyc_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        require(g.has_edge(a, b), "cycle entries must be consecutive edges");
        cyc_edges.insert({std::min(a, b), std::max(a, b)});
    }

    // enumerate faces
    std::map<std::pair<Vertex, Vertex>, int> face_of;
    std::vector<std::vector<Dart>> faces;
    for (Vertex v : g.vertices())
        for (Vertex w : g.rotation(v)) {
            if (face_of.count({v, w})) continue;
            int id = static_cast<int>(faces.size());
            faces.push_back(g.face_walk(Dart{v, w}));
            for (Dart d : faces.back()) face_of[{d.from, d.to}] = id;
        }
    check(!g.outer_darts().empty(), "connected graph with a cycle has edges");
    Dart od = g.outer_darts()[0];
    int outer_id = face_of.at({od.from, od.to});

    // flood over faces, never crossing a cycle edge
    std::vector<char> outside(faces.size(), 0);
    std::vector<int> stack{outer_id};
    outside[outer_id] = 1;
    while (!stack.empty()) {
        int fid = stack.back();
        stack.pop_back();
        for (Dart d : faces[fid]) {
            if (cyc_edges.count({std::min(d.from, d.to), std::max(d.from, d.to)}))
                continue;
            int other = face_of.at({d.to, d.from});
            if (!outside[other]) {
                outside[other] = 1;
                stack.push_back(other);
            }
        }
    }

    std::vector<Vertex> inside;
    for (Vertex v : g.vertices()) {
        if (cyc_set.count(v)) continue;
        // all faces at a vertex off the cycle are on one side
        check(g.degree(v) > 0, "stray isolated vertex in a connected graph");
        Dart d{v, g.rotation(v)[0]};
        if (!outside[face_of.at({d.from, d.to})]) inside.push_back(v);
    }
    return inside;
}

struct Chord {
    std::vector<Vertex> path;  // h0 .. ht, endpoints on the boundary
    PlaneGraph side1, side2;   // side1 carries at least as much of P
    std::vector<Vertex> verts1, verts2;  // sorted vertex sets of the sides
};

namespace detail {

inline int count_in(const std::vector<Vertex>& verts,
                    const std::vector<Vertex>& p) {
    int c = 0;
    for (Vertex v : p)
        if (std::binary_search(verts.begin(), verts.end(), v)) ++c;
    return c;
}

// Splits a 2-connected graph along a boundary-to-boundary path.  Returns the
// two sides (as sorted vertex sets) or nothing when a side has no private
// vertex.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
split_vertex_sets(const PlaneGraph& g, const BoundaryWalk& boundary,
                  const std::vector<Vertex>& path) {
    const std::vector<Vertex>& walk = boundary.walk;
    auto pos = [&](Vertex v) {
        return static_cast<int>(std::find(walk.begin(), walk.end(), v) -
                                walk.begin());
    };
    int pa = pos(path.front()), pb = pos(path.back());
    int n = static_cast<int>(walk.size());
    std::vector<Vertex> arc1, arc2;  // both endpoint-inclusive
    for (int i = pa;; i = (i + 1) % n) {
        arc1.push_back(walk[i]);
        if (i == pb) break;
    }
    for (int i = pb;; i = (i + 1) % n) {
        arc2.push_back(walk[i]);
        if (i == pa) break;
    }

    auto side_set = [&](const std::vector<Vertex>& arc)
        -> std::optional<std::vector<Vertex>> {
        // cycle: the arc followed by the path interior, walked back toward
        // the arc's first vertex
        std::vector<Vertex> cyc = arc;
        if (path.size() > 2) {
            if (arc.front() == path.front())
                for (std::size_t i = path.size() - 2; i >= 1; --i)
                    cyc.push_back(path[i]);
            else
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    cyc.push_back(path[i]);
        }
        if (cyc.size() < 3) return std::nullopt;  // nothing can be enclosed
        std::set<Vertex> distinct(cyc.begin(), cyc.end());
        if (distinct.size() != cyc.size()) return std::nullopt;
        std::vector<Vertex> inside = cycle_interior(g, cyc);
        std::vector<Vertex> side = cyc;
        side.insert(side.end(), inside.begin(), inside.end());
        std::sort(side.begin(), side.end());
        return side;
    };

    auto s1 = side_set(arc1);
    auto s2 = side_set(arc2);
    if (!s1 || !s2) return std::nullopt;
    // private vertices on both sides
    std::vector<Vertex> priv;
    std::set_difference(s1->begin(), s1->end(), s2->begin(), s2->end(),
                        std::back_inserter(priv));
    if (priv.empty()) return std::nullopt;
    priv.clear();
    std::set_difference(s2->begin(), s2->end(), s1->begin(), s1->end(),
                        std::back_inserter(priv));
    if (priv.empty()) return std::nullopt;
    return std::make_pair(*s1, *s2);
}

}  // namespace detail

// Splits g along a chordal path (endpoints on the boundary, interior off
// it).  side1/side2 ordered by the convention against the reference path.
inline std::optional<Chord> split_along_path(
    const PlaneGraph& g, const std::vector<Vertex>& path,
    const std::vector<Vertex>& reference_path = {}) {
    BoundaryWalk boundary = outer_boundary(g);
    auto sets = detail::split_vertex_sets(g, boundary, path);
    if (!sets) return std::nullopt;
    auto [v1, v2] = *sets;
    bool swap = false;
    int c1 = detail::count_in(v1, reference_path);
    int c2 = detail::count_in(v2, reference_path);
    if (c2 > c1)
        swap = true;
    else if (c1 == c2 && v2 < v1)
        swap = true;
    if (swap) std::swap(v1, v2);
    Chord out;
    out.path = path;
    out.verts1 = v1;
    out.verts2 = v2;
    out.side1 = g.induced(v1);
    out.side2 = g.induced(v2);
    return out;
}

// All t-chords, t in {0,1,2,3}, in deterministic (path-lexicographic) order.
// A 0-chord is a cutvertex; each one yields a single split with the
// component containing the smallest vertex opposite the rest.
inline std::vector<Chord> find_chords(const PlaneGraph& g, int t,
                                      const std::vector<Vertex>& reference_path = {}) {
    require(t >= 0 && t <= 3, "chord order must be 0..3");
    std::vector<Chord> out;

    if (t == 0) {
        BoundaryWalk boundary = full_boundary(g);
        for (Vertex u : g.vertices()) {
            if (!boundary.has_vertex(u)) continue;
            PlaneGraph rest = g;
            rest.remove_vertex(u);
            auto comps = rest.components();
            if (comps.size() <= g.components().size()) continue;
            std::vector<Vertex> v2 = comps[0];
            v2.push_back(u);
            std::sort(v2.begin(), v2.end());
            std::vector<Vertex> v1;
            std::vector<char> in2(g.capacity(), 0);
            for (Vertex x : v2) in2[x] = 1;
            for (Vertex x : g.vertices())
                if (!in2[x] || x == u) v1.push_back(x);
            Chord c;
            c.path = {u};
            int c1 = detail::count_in(v1, reference_path);
            int c2 = detail::count_in(v2, reference_path);
            if (c2 > c1 || (c1 == c2 && v2 < v1)) std::swap(v1, v2);
            c.verts1 = v1;
            c.verts2 = v2;
            c.side1 = g.induced(v1);
            c.side2 = g.induced(v2);
            out.push_back(std::move(c));
        }
        return out;
    }

    require(is_2_connected(g), "t-chords with t >= 1 need a 2-connected graph");
    BoundaryWalk boundary = outer_boundary(g);

    std::vector<std::vector<Vertex>> paths;
    if (t == 1) {
        for (auto [u, v] : g.edges())
            if (boundary.has_vertex(u) && boundary.has_vertex(v) &&
                !boundary.has_edge(u, v))
                paths.push_back({u, v});
    } else if (t == 2) {
        for (Vertex y : g.vertices()) {
            if (boundary.has_vertex(y)) continue;
            std::vector<Vertex> nb = g.rotation(y);
            std::sort(nb.begin(), nb.end());
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (boundary.has_vertex(nb[i]) &&
                        boundary.has_vertex(nb[j]))
                        paths.push_back({nb[i], y, nb[j]});
        }
    } else {
        for (Vertex y : g.vertices()) {
            if (boundary.has_vertex(y)) continue;
            for (Vertex z : g.rotation(y)) {
                if (boundary.has_vertex(z)) continue;
                for (Vertex x : g.rotation(y)) {
                    if (!boundary.has_vertex(x)) continue;
                    for (Vertex w : g.rotation(z)) {
                        if (!boundary.has_vertex(w)) continue;
                        if (x >= w) continue;  // reversal found from z's side
                        paths.push_back({x, y, z, w});
                    }
                }
            }
        }
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

    for (const auto& p : paths)
        if (auto c = split_along_path(g, p, reference_path))
            out.push_back(std::move(*c));
    return out;
}

}  // namespace planedeg
