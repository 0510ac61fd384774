#pragma once

// Plane graphs as rotation systems with a designated outer face.
//
// A graph lives on a fixed vertex universe 0..capacity-1; deleting vertices
// leaves the ids of the remaining ones untouched, so operation sequences and
// weight functions stay valid across subgraph-taking.  Faces are traced with
// the fixed convention: after dart (u -> v) the walk continues with (v -> w)
// where w is the predecessor of u in the rotation at v.  The outer face of
// every connected component with at least one edge is tracked as one dart
// whose face walk is that component's outer face; vertex deletion keeps these
// darts up to date by merging the faces incident to the deleted vertex.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planedeg {

using Vertex = int;

// Bad data supplied by a caller (malformed graph, unknown vertex, ...).
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant; callers map this to a diagnostic exit.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invalid_input(msg);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

struct Dart {
    Vertex from = -1;
    Vertex to = -1;
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Girth of a vertex; empty means the vertex lies on no cycle.
using Girth = std::optional<int>;

enum class GirthClass { G3, G4, GE5 };

inline GirthClass girth_class(Girth g) {
    if (!g) return GirthClass::GE5;
    require(*g >= 3, "girth below 3 is impossible in a simple graph");
    if (*g == 3) return GirthClass::G3;
    if (*g == 4) return GirthClass::G4;
    return GirthClass::GE5;
}

class PlaneGraph {
  public:
    PlaneGraph() = default;

    PlaneGraph(int n, std::vector<std::vector<Vertex>> rotations,
               std::optional<Dart> outer)
        : cap_(n), present_(n, 1), rot_(std::move(rotations)) {
        require(n >= 0, "vertex count must be nonnegative");
        require(static_cast<int>(rot_.size()) == n,
                "one rotation per vertex required");
        if (outer) outer_.push_back(*outer);
        check_valid();
    }

    int capacity() const { return cap_; }

    int num_vertices() const {
        int c = 0;
        for (char p : present_) c += p;
        return c;
    }

    bool empty() const { return num_vertices() == 0; }

    bool has_vertex(Vertex v) const {
        return v >= 0 && v < cap_ && present_[v];
    }

    const std::vector<Vertex>& rotation(Vertex v) const {
        require(has_vertex(v), "unknown vertex " + std::to_string(v));
        return rot_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(rotation(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        if (!has_vertex(u) || !has_vertex(v)) return false;
        const auto& r = rot_[u];
        return std::find(r.begin(), r.end(), v) != r.end();
    }

    int num_edges() const {
        int d = 0;
        for (Vertex v = 0; v < cap_; ++v)
            if (present_[v]) d += static_cast<int>(rot_[v].size());
        return d / 2;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < cap_; ++v)
            if (present_[v]) out.push_back(v);
        return out;
    }

    // Normalized (u < v) edge list, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex v = 0; v < cap_; ++v)
            if (present_[v])
                for (Vertex w : rot_[v])
                    if (v < w) out.emplace_back(v, w);
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<Dart>& outer_darts() const { return outer_; }

    // Face walk step: after (u -> v) comes (v -> predecessor of u in rot[v]).
    Dart next_in_face(Dart d) const {
        require(has_edge(d.from, d.to), "dart is not in the graph");
        const auto& r = rot_[d.to];
        auto it = std::find(r.begin(), r.end(), d.from);
        std::size_t i = static_cast<std::size_t>(it - r.begin());
        Vertex w = r[(i + r.size() - 1) % r.size()];
        return Dart{d.to, w};
    }

    std::vector<Dart> face_walk(Dart d) const {
        require(has_edge(d.from, d.to), "dart is not in the graph");
        std::vector<Dart> orbit;
        Dart cur = d;
        do {
            orbit.push_back(cur);
            cur = next_in_face(cur);
            check(orbit.size() <= 4u * static_cast<std::size_t>(num_edges()) + 4u,
                  "face walk did not close");
        } while (!(cur == d));
        return orbit;
    }

    std::vector<std::vector<Vertex>> components() const {
        std::vector<std::vector<Vertex>> comps;
        std::vector<char> seen(cap_, 0);
        for (Vertex s = 0; s < cap_; ++s) {
            if (!present_[s] || seen[s]) continue;
            std::vector<Vertex> comp{s};
            seen[s] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (Vertex w : rot_[comp[i]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const { return components().size() <= 1; }

    // Deletes v and keeps one outer dart per remaining component of v's old
    // component.  The faces incident to v merge into one; any component left
    // without its old outer dart gets a dart on that merged face.
    void remove_vertex(Vertex v) {
        if (!has_vertex(v)) return;
        std::vector<Vertex> comp = component_of(v);
        std::vector<char> in_comp(cap_, 0);
        for (Vertex x : comp) in_comp[x] = 1;

        // candidates: old outer orbit first, then the faces meeting v
        std::vector<Dart> cand;
        int old_outer_idx = -1;
        for (std::size_t i = 0; i < outer_.size(); ++i)
            if (in_comp[outer_[i].from]) {
                old_outer_idx = static_cast<int>(i);
                for (Dart d : face_walk(outer_[i])) cand.push_back(d);
                break;
            }
        for (Vertex u : rot_[v])
            for (Dart d : face_walk(Dart{v, u})) cand.push_back(d);

        for (Vertex u : rot_[v]) {
            auto& r = rot_[u];
            r.erase(std::find(r.begin(), r.end(), v));
        }
        rot_[v].clear();
        present_[v] = 0;
        if (old_outer_idx >= 0) outer_.erase(outer_.begin() + old_outer_idx);

        // reassign outer darts inside the affected region
        std::vector<char> seen(cap_, 0);
        for (Vertex s : comp) {
            if (s == v || seen[s]) continue;
            std::vector<Vertex> sub{s};
            seen[s] = 1;
            bool has_edge_here = false;
            for (std::size_t i = 0; i < sub.size(); ++i) {
                if (!rot_[sub[i]].empty()) has_edge_here = true;
                for (Vertex w : rot_[sub[i]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        sub.push_back(w);
                    }
            }
            if (!has_edge_here) continue;
            std::vector<char> in_sub(cap_, 0);
            for (Vertex x : sub) in_sub[x] = 1;
            bool found = false;
            for (Dart d : cand)
                if (d.from != v && d.to != v && in_sub[d.from]) {
                    outer_.push_back(d);
                    found = true;
                    break;
                }
            check(found, "no outer dart candidate for a split component");
        }
        normalize_outer();
    }

    // Deletes edge uv; the graph must stay connected within its component
    // (callers check).  The two faces at the edge merge.
    void remove_edge(Vertex u, Vertex v) {
        require(has_edge(u, v), "edge not in graph");
        for (std::size_t i = 0; i < outer_.size(); ++i) {
            Dart d = outer_[i];
            if ((d.from == u && d.to == v) || (d.from == v && d.to == u)) {
                Dart repl{-1, -1};
                for (Dart e : face_walk(d))
                    if (!((e.from == u && e.to == v) ||
                          (e.from == v && e.to == u))) {
                        repl = e;
                        break;
                    }
                check(repl.from >= 0, "cannot re-anchor outer face");
                outer_[i] = repl;
            }
        }
        auto& ru = rot_[u];
        ru.erase(std::find(ru.begin(), ru.end(), v));
        auto& rv = rot_[v];
        rv.erase(std::find(rv.begin(), rv.end(), u));
        normalize_outer();
    }

    PlaneGraph minus(const std::vector<Vertex>& xs) const {
        PlaneGraph g = *this;
        std::vector<Vertex> order(xs);
        std::sort(order.begin(), order.end());
        for (Vertex v : order) g.remove_vertex(v);
        return g;
    }

    PlaneGraph induced(const std::vector<Vertex>& keep) const {
        std::vector<char> k(cap_, 0);
        for (Vertex v : keep) k[v] = 1;
        std::vector<Vertex> drop;
        for (Vertex v = 0; v < cap_; ++v)
            if (present_[v] && !k[v]) drop.push_back(v);
        return minus(drop);
    }

    // Structural validation: simple symmetric rotations, outer darts one per
    // component with edges, and Euler's formula v - e + f = 2 per component.
    void check_valid() const {
        for (Vertex v = 0; v < cap_; ++v) {
            if (!present_[v]) {
                require(rot_[v].empty(), "rotation on absent vertex");
                continue;
            }
            std::set<Vertex> seen;
            for (Vertex w : rot_[v]) {
                require(w >= 0 && w < cap_ && present_[w],
                        "rotation of " + std::to_string(v) +
                            " mentions unknown vertex " + std::to_string(w));
                require(w != v, "loop at vertex " + std::to_string(v));
                require(seen.insert(w).second,
                        "parallel edge at vertex " + std::to_string(v));
            }
            for (Vertex w : rot_[v])
                require(has_edge(w, v), "asymmetric adjacency " +
                                            std::to_string(v) + "-" +
                                            std::to_string(w));
        }
        auto comps = components();
        std::vector<int> comp_of(cap_, -1);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
        std::vector<int> darts_for(comps.size(), 0);
        for (const Dart& d : outer_) {
            require(has_edge(d.from, d.to), "outer dart is not an edge");
            darts_for[comp_of[d.from]]++;
        }
        for (std::size_t i = 0; i < comps.size(); ++i) {
            int e = 0;
            for (Vertex v : comps[i]) e += static_cast<int>(rot_[v].size());
            e /= 2;
            if (e == 0) {
                require(darts_for[i] == 0, "outer dart on edgeless component");
                continue;
            }
            require(darts_for[i] == 1,
                    "component needs exactly one outer dart");
            int f = count_faces(comps[i]);
            require(static_cast<int>(comps[i].size()) - e + f == 2,
                    "rotation system fails Euler's formula (not a plane "
                    "embedding)");
        }
    }

  private:
    std::vector<Vertex> component_of(Vertex v) const {
        std::vector<Vertex> comp{v};
        std::vector<char> seen(cap_, 0);
        seen[v] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : rot_[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        return comp;
    }

    int count_faces(const std::vector<Vertex>& comp) const {
        std::set<std::pair<Vertex, Vertex>> visited;
        int faces = 0;
        for (Vertex v : comp)
            for (Vertex w : rot_[v]) {
                if (visited.count({v, w})) continue;
                ++faces;
                for (Dart d : face_walk(Dart{v, w}))
                    visited.insert({d.from, d.to});
            }
        return faces;
    }

    void normalize_outer() {
        std::sort(outer_.begin(), outer_.end());
        outer_.erase(std::unique(outer_.begin(), outer_.end()), outer_.end());
    }

    int cap_ = 0;
    std::vector<char> present_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<Dart> outer_;
};

// Closed walk of one outer face plus membership lookups for the whole
// boundary (all components; isolated vertices count as boundary).
struct BoundaryWalk {
    std::vector<Vertex> walk;  // one cycle/closed walk, no repeated endpoint
    std::vector<char> on_boundary;
    std::set<std::pair<Vertex, Vertex>> edge_set;  // normalized u < v

    bool has_vertex(Vertex v) const {
        return v >= 0 && v < static_cast<int>(on_boundary.size()) &&
               on_boundary[v];
    }
    bool has_edge(Vertex u, Vertex v) const {
        return edge_set.count({std::min(u, v), std::max(u, v)}) > 0;
    }
};

// Boundary of the whole graph: every component's outer face.
inline BoundaryWalk full_boundary(const PlaneGraph& g) {
    BoundaryWalk b;
    b.on_boundary.assign(g.capacity(), 0);
    for (Vertex v : g.vertices())
        if (g.degree(v) == 0) b.on_boundary[v] = 1;
    for (Dart d : g.outer_darts()) {
        auto orbit = g.face_walk(d);
        std::vector<Vertex> walk;
        for (Dart e : orbit) {
            walk.push_back(e.from);
            b.on_boundary[e.from] = 1;
            b.edge_set.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
        }
        if (b.walk.empty()) b.walk = walk;
    }
    return b;
}

// Outer face walk of a connected graph.
inline BoundaryWalk outer_boundary(const PlaneGraph& g) {
    require(g.is_connected(),
            "outer_boundary needs a connected graph; split into components");
    BoundaryWalk b = full_boundary(g);
    if (b.walk.empty() && g.num_vertices() == 1) b.walk = g.vertices();
    return b;
}

// Exact girth of a vertex: min over incident edges vu of 1 + (shortest v-u
// path avoiding that edge).  Empty when v lies on no cycle.
inline Girth girth_of_vertex(const PlaneGraph& g, Vertex v) {
    require(g.has_vertex(v), "unknown vertex");
    std::optional<int> best;
    for (Vertex u : g.rotation(v)) {
        std::vector<int> dist(g.capacity(), -1);
        std::vector<Vertex> queue{v};
        dist[v] = 0;
        for (std::size_t i = 0; i < queue.size() && dist[u] < 0; ++i) {
            Vertex x = queue[i];
            for (Vertex y : g.rotation(x)) {
                if (x == v && y == u) continue;  // skip the edge itself
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[u] >= 0) {
            int len = dist[u] + 1;
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

inline std::optional<Vertex> find_cutvertex(const PlaneGraph& g) {
    std::size_t base = g.components().size();
    for (Vertex v : g.vertices()) {
        if (g.degree(v) < 2) continue;
        // count components after hiding v; v splits its own component into k
        // parts, so the total becomes base - 1 + k
        std::vector<char> seen(g.capacity(), 0);
        seen[v] = 1;
        std::size_t comps = 0;
        for (Vertex s : g.vertices()) {
            if (seen[s]) continue;
            ++comps;
            std::vector<Vertex> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.rotation(x))
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
        }
        if (comps > base) return v;
    }
    return std::nullopt;
}

inline bool is_2_connected(const PlaneGraph& g) {
    return g.num_vertices() >= 3 && g.is_connected() &&
           !find_cutvertex(g).has_value();
}

}  // namespace planedeg
