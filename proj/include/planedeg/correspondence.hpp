#pragma once

// Correspondence (DP) colouring: per-vertex colour lists plus one matching
// per edge between the endpoint lists; a colouring must avoid matched pairs.
// A legal removal sequence turns into a colouring by colour-and-delete: each
// deleted vertex takes the least colour still available to it, removing the
// matched colour from each remaining neighbour; a save picks a colour whose
// partner the saved neighbour no longer holds, so that neighbour loses
// nothing.  Availability sets are trimmed to exactly f(v)+1 colours, which
// is what makes the save's pick always exist.

#include <map>

#include "planedeg/weak_degeneracy.hpp"

namespace planedeg {

struct CorrespondenceAssignment {
    // sorted distinct colour ids per vertex
    std::map<Vertex, std::vector<int>> lists;
    // key (u, v) with u < v; pairs (colour at u, colour at v)
    std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<int, int>>>
        matchings;

    const std::vector<int>& list_of(Vertex v) const {
        auto it = lists.find(v);
        require(it != lists.end(),
                "no colour list for vertex " + std::to_string(v));
        return it->second;
    }

    // partner of colour c at vertex `from` across edge {from, to}
    std::optional<int> partner(Vertex from, Vertex to, int c) const {
        auto key = std::minmax(from, to);
        auto it = matchings.find({key.first, key.second});
        if (it == matchings.end()) return std::nullopt;
        for (auto [cu, cv] : it->second) {
            if (from < to && cu == c) return cv;
            if (from > to && cv == c) return cu;
        }
        return std::nullopt;
    }
};

using Coloring = std::map<Vertex, int>;

inline std::vector<std::string> validate_assignment(
    const PlaneGraph& g, const CorrespondenceAssignment& a) {
    std::vector<std::string> out;
    for (Vertex v : g.vertices()) {
        auto it = a.lists.find(v);
        if (it == a.lists.end()) {
            out.push_back("vertex " + std::to_string(v) + " has no list");
            continue;
        }
        auto sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            out.push_back("vertex " + std::to_string(v) +
                          " repeats a colour");
    }
    for (auto& [v, l] : a.lists)
        if (!g.has_vertex(v))
            out.push_back("list for unknown vertex " + std::to_string(v));
    std::set<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) edges.insert({u, v});
    for (auto& [e, m] : a.matchings) {
        auto [u, v] = e;
        if (!edges.count(e)) {
            out.push_back("matching on non-edge " + std::to_string(u) + "-" +
                          std::to_string(v));
            continue;
        }
        std::set<int> used_u, used_v;
        for (auto [cu, cv] : m) {
            auto lu = a.lists.count(u) ? a.list_of(u) : std::vector<int>{};
            auto lv = a.lists.count(v) ? a.list_of(v) : std::vector<int>{};
            if (std::find(lu.begin(), lu.end(), cu) == lu.end())
                out.push_back("matched colour " + std::to_string(cu) +
                              " missing from list of " + std::to_string(u));
            if (std::find(lv.begin(), lv.end(), cv) == lv.end())
                out.push_back("matched colour " + std::to_string(cv) +
                              " missing from list of " + std::to_string(v));
            if (!used_u.insert(cu).second || !used_v.insert(cv).second)
                out.push_back("matching on " + std::to_string(u) + "-" +
                              std::to_string(v) + " is not a matching");
        }
    }
    for (auto e : edges)
        if (!a.matchings.count(e))
            out.push_back("edge " + std::to_string(e.first) + "-" +
                          std::to_string(e.second) + " has no matching");
    return out;
}

// List colouring embedded into the correspondence frame: identity matchings
// on the shared colours of each edge.
inline CorrespondenceAssignment from_lists(
    const PlaneGraph& g, const std::map<Vertex, std::vector<int>>& lists) {
    CorrespondenceAssignment a;
    a.lists = lists;
    for (Vertex v : g.vertices())
        require(lists.count(v) > 0,
                "no colour list for vertex " + std::to_string(v));
    for (auto [u, v] : g.edges()) {
        std::vector<std::pair<int, int>> m;
        auto lu = lists.at(u), lv = lists.at(v);
        std::sort(lu.begin(), lu.end());
        std::sort(lv.begin(), lv.end());
        for (int c : lu)
            if (std::binary_search(lv.begin(), lv.end(), c))
                m.emplace_back(c, c);
        a.matchings[{u, v}] = std::move(m);
    }
    return a;
}

inline bool is_valid_coloring(const PlaneGraph& g,
                              const CorrespondenceAssignment& a,
                              const Coloring& phi) {
    for (Vertex v : g.vertices()) {
        auto it = phi.find(v);
        if (it == phi.end()) return false;
        const auto& l = a.list_of(v);
        if (std::find(l.begin(), l.end(), it->second) == l.end()) return false;
    }
    for (auto [u, v] : g.edges()) {
        auto p = a.partner(u, v, phi.at(u));
        if (p && *p == phi.at(v)) return false;
    }
    return true;
}

// Colour-and-delete along a legal sequence that removes every vertex.
// Requires |L(v)| >= f(v) + 1 everywhere.
inline Coloring color_via_sequence(const PlaneGraph& g,
                                   const CorrespondenceAssignment& a,
                                   const WeightFn& f, const OpSeq& ops) {
    {
        auto violations = validate_assignment(g, a);
        require(violations.empty(),
                violations.empty() ? "" : "bad assignment: " + violations[0]);
        require(removes_all(g, f, ops),
                "sequence must be legal and remove every vertex");
    }
    std::map<Vertex, std::vector<int>> avail;
    for (Vertex v : g.vertices()) {
        std::vector<int> l = a.list_of(v);
        std::sort(l.begin(), l.end());
        require(static_cast<int>(l.size()) >= f[v] + 1,
                "list of " + std::to_string(v) + " is smaller than f+1");
        l.resize(static_cast<std::size_t>(f[v] + 1));  // keep the least ids
        avail[v] = std::move(l);
    }

    PlaneGraph cur = g;
    Coloring phi;
    auto drop = [&](Vertex u, std::optional<int> partner) {
        auto& av = avail[u];
        check(!av.empty(), "availability set ran dry");
        if (partner) {
            auto it = std::find(av.begin(), av.end(), *partner);
            if (it != av.end()) {
                av.erase(it);
                return;
            }
        }
        av.pop_back();  // trim: keep the least f+1 colours
    };

    for (const Op& op : ops) {
        if (!cur.has_vertex(op.v)) continue;
        Vertex v = op.v;
        bool save = op.kind == OpKind::DelSave && cur.has_edge(v, op.w);
        int c = -1;
        if (save) {
            for (int cand : avail[v]) {
                auto p = a.partner(v, op.w, cand);
                const auto& aw = avail[op.w];
                if (!p || std::find(aw.begin(), aw.end(), *p) == aw.end()) {
                    c = cand;
                    break;
                }
            }
            check(c >= 0, "no safe colour for a save; trimming broken");
        } else {
            check(!avail[v].empty(), "availability set ran dry");
            c = avail[v][0];
        }
        phi[v] = c;
        for (Vertex u : cur.rotation(v)) {
            if (save && u == op.w) continue;
            drop(u, a.partner(v, u, c));
        }
        cur.remove_vertex(v);
        avail.erase(v);
    }
    check(is_valid_coloring(g, a, phi), "colour-and-delete produced a clash");
    return phi;
}

// Exact number of valid colourings by exhaustive enumeration (desk scale).
inline BigInt count_colorings(const PlaneGraph& g,
                              const CorrespondenceAssignment& a) {
    {
        auto violations = validate_assignment(g, a);
        require(violations.empty(),
                violations.empty() ? "" : "bad assignment: " + violations[0]);
    }
    std::vector<Vertex> order = g.vertices();
    Coloring phi;
    BigInt total = 0;
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            total += 1;
            return;
        }
        Vertex v = order[i];
        for (int c : a.list_of(v)) {
            bool ok = true;
            for (Vertex u : g.rotation(v)) {
                auto it = phi.find(u);
                if (it == phi.end()) continue;
                auto p = a.partner(v, u, c);
                if (p && *p == it->second) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi[v] = c;
            self(self, i + 1);
            phi.erase(v);
        }
    };
    dfs(dfs, 0);
    return total;
}

struct ColoringBound {
    BigInt product;   // product of availabilities = mean^n exactly
    std::size_t n;    // operations = vertices removed
};

// Guaranteed number of distinct colourings of any assignment with
// |L(v)| >= f(v)+1, read off a legal full-removal sequence: the product of
// the step availabilities (the geometric mean to the n-th power).
inline ColoringBound coloring_count_lower_bound(const PlaneGraph& g,
                                                const WeightFn& f,
                                                const OpSeq& ops) {
    require(removes_all(g, f, ops),
            "bound needs a legal sequence removing every vertex");
    require(ops.size() == static_cast<std::size_t>(g.num_vertices()),
            "sequence must remove each vertex exactly once");
    AverageAvailability avg = average_availability(g, f, ops);
    return ColoringBound{avg.product, avg.n};
}

}  // namespace planedeg
