#pragma once

// Canvases: a plane graph with a pre-removed boundary path P, restricted
// boundary sets A (weight 1, girth >= 5) and B (weight 2, girth 3), and a
// weight function obeying girth-graded lower bounds everywhere else.  The
// three exceptional shapes X1..X3 are the only canvases without a full legal
// removal sequence.
//
// A and B are ambient sets: membership is always intersected with the
// current vertex set, so the same sets can be carried into subgraphs.

#include "planedeg/chords.hpp"
#include "planedeg/exact_search.hpp"
#include "planedeg/weak_degeneracy.hpp"

namespace planedeg {

struct PathSpec {
    std::vector<Vertex> verts;
    bool cycle = false;

    int size() const { return static_cast<int>(verts.size()); }
    bool contains(Vertex v) const {
        return std::find(verts.begin(), verts.end(), v) != verts.end();
    }
};

struct Canvas {
    PlaneGraph g;
    PathSpec p;
    std::set<Vertex> a;  // ambient
    std::set<Vertex> b;  // ambient
    WeightFn f;

    bool in_a(Vertex v) const { return g.has_vertex(v) && a.count(v) > 0; }
    bool in_b(Vertex v) const { return g.has_vertex(v) && b.count(v) > 0; }
};

// A path on <= 4 vertices is acceptable when it is induced and, at four
// vertices, its two internal vertices have girth >= 4 or one of them has
// girth >= 5.
inline bool is_acceptable_path(const PlaneGraph& g,
                               const std::vector<Vertex>& p) {
    if (p.empty() || p.size() > 4) return false;
    std::set<Vertex> distinct(p.begin(), p.end());
    if (distinct.size() != p.size()) return false;
    for (Vertex v : p)
        if (!g.has_vertex(v)) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            bool adj = g.has_edge(p[i], p[j]);
            if (j == i + 1 && !adj) return false;
            if (j > i + 1 && adj) return false;  // must induce exactly a path
        }
    if (p.size() == 4) {
        auto ge = [&](Vertex v, int k) {
            Girth gv = girth_of_vertex(g, v);
            return !gv || *gv >= k;
        };
        bool a3a = ge(p[1], 4) && ge(p[2], 4);
        bool a3b = ge(p[1], 5) || ge(p[2], 5);
        if (!a3a && !a3b) return false;
    }
    return true;
}

// A cycle is acceptable when some rotation/reflection of it, read as a
// spanning path, passes the path conditions up to the cycle's own closing
// edge; equivalently: the cycle is induced and, at four vertices, some two
// consecutive vertices pass the internal-girth test.
inline bool is_acceptable_cycle(const PlaneGraph& g,
                                const std::vector<Vertex>& c) {
    if (c.size() < 3 || c.size() > 4) return false;
    std::set<Vertex> distinct(c.begin(), c.end());
    if (distinct.size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            bool adj = g.has_edge(c[i], c[j]);
            bool consecutive = (j == i + 1) || (i == 0 && j == c.size() - 1);
            if (consecutive && !adj) return false;
            if (!consecutive && adj) return false;  // induced cycle
        }
    if (c.size() == 4) {
        auto girth_ge = [&](Vertex v, int k) {
            Girth gv = girth_of_vertex(g, v);
            return !gv || *gv >= k;
        };
        for (std::size_t i = 0; i < 4; ++i) {
            Vertex x = c[i], y = c[(i + 1) % 4];
            if ((girth_ge(x, 4) && girth_ge(y, 4)) || girth_ge(x, 5) ||
                girth_ge(y, 5))
                return true;
        }
        return false;
    }
    return true;
}

inline bool is_acceptable(const PlaneGraph& g, const PathSpec& p) {
    return p.cycle ? is_acceptable_cycle(g, p.verts)
                   : is_acceptable_path(g, p.verts);
}

enum class CanvasCond { C1, C2, C3, C4a, C4b, C4c, C4d, C4e };

// What exactly broke; IndepEdge violations drive the solver's dispatch.
enum class ViolationKind { Structure, Membership, GirthRange, IndepEdge, Value };

struct Violation {
    CanvasCond cond;
    ViolationKind kind;
    std::vector<Vertex> verts;
    std::string detail;
};

inline std::vector<Violation> validate_canvas(const Canvas& k) {
    std::vector<Violation> out;
    const PlaneGraph& g = k.g;
    BoundaryWalk boundary = full_boundary(g);

    // C1: P lies on the boundary and is acceptable
    for (Vertex v : k.p.verts)
        if (!g.has_vertex(v) || !boundary.has_vertex(v)) {
            out.push_back({CanvasCond::C1, ViolationKind::Membership, {v},
                           "path vertex not on the outer boundary"});
            return out;  // later checks assume a well-placed path
        }
    for (int i = 0; i + 1 < k.p.size(); ++i)
        if (!boundary.has_edge(k.p.verts[i], k.p.verts[i + 1]))
            out.push_back({CanvasCond::C1, ViolationKind::Structure,
                           {k.p.verts[i], k.p.verts[i + 1]},
                           "path edge not a boundary edge"});
    if (k.p.cycle && k.p.size() >= 2 &&
        !boundary.has_edge(k.p.verts.back(), k.p.verts.front()))
        out.push_back({CanvasCond::C1, ViolationKind::Structure,
                       {k.p.verts.back(), k.p.verts.front()},
                       "closing edge not a boundary edge"});
    if (!is_acceptable(g, k.p))
        out.push_back({CanvasCond::C1, ViolationKind::Structure, k.p.verts,
                       "path/cycle not acceptable"});
    if (!out.empty()) return out;

    std::vector<Girth> girth(g.capacity());
    for (Vertex v : g.vertices()) girth[v] = girth_of_vertex(g, v);

    // C2 / C3: placement, girth, and independence of A and B
    auto check_set = [&](const std::set<Vertex>& s, CanvasCond cond,
                         bool want_girth3) {
        std::vector<Vertex> members;
        for (Vertex v : s)
            if (g.has_vertex(v)) members.push_back(v);
        for (Vertex v : members) {
            if (!boundary.has_vertex(v) || k.p.contains(v))
                out.push_back({cond, ViolationKind::Membership, {v},
                               "must lie on the boundary off P"});
            GirthClass gc = girth_class(girth[v]);
            if (want_girth3 && gc != GirthClass::G3)
                out.push_back({cond, ViolationKind::GirthRange, {v},
                               "girth must be exactly 3"});
            if (!want_girth3 && gc != GirthClass::GE5)
                out.push_back({cond, ViolationKind::GirthRange, {v},
                               "girth must be at least 5"});
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.has_edge(members[i], members[j]))
                    out.push_back({cond, ViolationKind::IndepEdge,
                                   {members[i], members[j]},
                                   "set must be independent"});
    };
    check_set(k.a, CanvasCond::C2, false);
    check_set(k.b, CanvasCond::C3, true);

    // C4: weight bounds off P
    for (Vertex v : g.vertices()) {
        if (k.p.contains(v)) continue;
        int fv = k.f[v];
        GirthClass gc = girth_class(girth[v]);
        if (k.in_a(v)) {
            if (fv != 1)
                out.push_back({CanvasCond::C4a, ViolationKind::Value, {v},
                               "weight on A must be exactly 1"});
        } else if (k.in_b(v)) {
            if (fv != 2)
                out.push_back({CanvasCond::C4b, ViolationKind::Value, {v},
                               "weight on B must be exactly 2"});
        } else if (boundary.has_vertex(v)) {
            if (gc != GirthClass::G3 && fv < 2)
                out.push_back({CanvasCond::C4c, ViolationKind::Value, {v},
                               "boundary weight must be >= 2"});
            if (gc == GirthClass::G3 && fv < 3)
                out.push_back({CanvasCond::C4d, ViolationKind::Value, {v},
                               "girth-3 boundary weight must be >= 3"});
        } else {
            int need = gc == GirthClass::G3 ? 4 : gc == GirthClass::G4 ? 3 : 2;
            if (fv < need)
                out.push_back({CanvasCond::C4e, ViolationKind::Value, {v},
                               "interior weight below girth bound"});
        }
    }
    return out;
}

inline bool is_canvas(const Canvas& k) { return validate_canvas(k).empty(); }

// Weights on G - P after charging each vertex for its removed P-neighbours:
// f(v) - |N(v) cap P|.  May be negative.
inline WeightFn residual_weights(const Canvas& k) {
    WeightFn out = k.f;
    for (Vertex v : k.g.vertices()) {
        if (k.p.contains(v)) continue;
        for (Vertex u : k.g.rotation(v))
            if (k.p.contains(u)) out[v] -= 1;
    }
    return out;
}

inline PlaneGraph canvas_rest(const Canvas& k) {
    return k.g.minus(k.p.verts);
}

enum class ExceptionKind { X1, X2, X3 };

struct CanvasException {
    ExceptionKind kind;
    std::vector<Vertex> witnesses;  // X1/X2: {v}; X3: {v1, v2}
    bool reversed = false;          // X3 found against the reversed path
};

inline std::string to_string(ExceptionKind k) {
    switch (k) {
        case ExceptionKind::X1: return "X1";
        case ExceptionKind::X2: return "X2";
        default: return "X3";
    }
}

// Detects the three exceptional shapes, in the fixed order X1 < X2 < X3 and
// with the least witness ids; the input must be a valid canvas.
inline std::optional<CanvasException> classify_exception(const Canvas& k) {
    const PlaneGraph& g = k.g;
    if (k.p.cycle) return std::nullopt;
    int kk = k.p.size();
    const auto& u = k.p.verts;
    if (kk == 3) {
        for (Vertex v : k.b) {
            if (!g.has_vertex(v)) continue;
            if (g.has_edge(v, u[0]) && g.has_edge(v, u[1]) &&
                g.has_edge(v, u[2]))
                return CanvasException{ExceptionKind::X1, {v}, false};
        }
    }
    if (kk == 4) {
        for (Vertex v : k.a) {
            if (!g.has_vertex(v) || k.p.contains(v)) continue;
            if (g.has_edge(v, u[0]) && g.has_edge(v, u[3]))
                return CanvasException{ExceptionKind::X2, {v}, false};
        }
        for (int rev = 0; rev < 2; ++rev) {
            Vertex u1 = rev ? u[3] : u[0];
            Vertex u2 = rev ? u[2] : u[1];
            Vertex u4 = rev ? u[0] : u[3];
            for (Vertex v1 : k.b) {
                if (!g.has_vertex(v1)) continue;
                if (!(g.has_edge(v1, u1) && g.has_edge(v1, u2))) continue;
                for (Vertex v2 : k.a) {
                    if (!g.has_vertex(v2)) continue;
                    if (g.has_edge(v2, u4) && g.has_edge(v2, v1))
                        return CanvasException{ExceptionKind::X3,
                                               {v1, v2},
                                               rev == 1};
                }
            }
        }
    }
    return std::nullopt;
}

// Decision of the canvas's weak degeneracy by exhaustive search on
// (G - P, residual weights).
inline SearchResult canvas_weakly_degenerate(const Canvas& k,
                                             std::uint64_t node_budget,
                                             bool prune = true) {
    return exact_weakly_degenerate(canvas_rest(k), residual_weights(k),
                                   node_budget, prune);
}

// Builds the canvas (g2, p2, A, B, f) a reduction recurses on: vertices of
// the new path leave the ambient sets, and B-members whose girth rose above
// 3 in the subgraph are dropped (their weight 2 then meets the plain
// boundary bound).
inline Canvas make_subcanvas(PlaneGraph g2, PathSpec p2, std::set<Vertex> a,
                             std::set<Vertex> b, WeightFn f) {
    for (Vertex v : p2.verts) {
        a.erase(v);
        b.erase(v);
    }
    for (auto it = b.begin(); it != b.end();) {
        if (g2.has_vertex(*it) &&
            girth_class(girth_of_vertex(g2, *it)) != GirthClass::G3)
            it = b.erase(it);
        else
            ++it;
    }
    return Canvas{std::move(g2), std::move(p2), std::move(a), std::move(b),
                  std::move(f)};
}

}  // namespace planedeg
