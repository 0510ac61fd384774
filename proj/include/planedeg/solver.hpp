#pragma once

// Constructive solver: given an unexceptional canvas, emit a legal sequence
// of Del/DelSave operations that removes every vertex of G - P, by applying
// the first applicable reduction from a fixed priority list and recursing on
// strictly smaller canvases (measure: (v(G), v(G-P), sum of weights off P),
// lexicographic).  Every level re-checks its emitted sequence with
// run_sequence; a level whose structural assumptions fail falls back to the
// exhaustive search and counts the event as a defect.
//
// The solver normalises each canvas to the pointwise-minimal weights its
// girth profile allows before reducing, and lifts the resulting sequence
// back to the requested weights; the boundary-peeling case analysis is only
// valid at the minimal weights.

#include <functional>

#include "planedeg/canvas.hpp"
#include "planedeg/local_girth.hpp"

namespace planedeg {

struct solver_stuck : internal_error {
    explicit solver_stuck(const std::string& msg) : internal_error(msg) {}
};

enum class BoundaryCase { R1, R2, R3, R4, R5, R6, R7, R8 };

inline const char* to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::R1: return "R1";
        case BoundaryCase::R2: return "R2";
        case BoundaryCase::R3: return "R3";
        case BoundaryCase::R4: return "R4";
        case BoundaryCase::R5: return "R5";
        case BoundaryCase::R6: return "R6";
        case BoundaryCase::R7: return "R7";
        default: return "R8";
    }
}

// The boundary read as P P' P'' u_k: the walk is rotated so P runs from u_k
// to u_1; P' is the single following A-vertex v_0 when there is one; the
// tail is P'' = v_1 .. v_t, and u_k doubles as v_{t+1}.
struct BoundaryDecomposition {
    std::vector<Vertex> p;     // u_k, ..., u_1 in walk order
    std::optional<Vertex> v0;
    std::vector<Vertex> tail;  // v_1 .. v_t
    Vertex uk = -1;
    std::size_t q2_begin = 0, q2_end = 0;  // Q2 = tail[q2_begin, q2_end)
    std::size_t q3_end = 0;                // Q3 = tail[q2_end, q3_end)
};

struct RunChoice {
    BoundaryCase kase = BoundaryCase::R1;
    std::vector<Vertex> run;  // R, in tail order
    std::size_t j = 0;        // 1-based tail index of the last run vertex
};

// State after peeling R: the shrunk graph, weights with the P-charges
// restored, and the two recomputed restricted sets.
struct PeelOutcome {
    PlaneGraph g;           // G - R
    WeightFn f;
    std::set<Vertex> low;   // boundary off P with weight <= 1
    std::set<Vertex> tri;   // boundary off P with weight 2 and girth 3
    OpSeq ops;              // the operations that removed R
};

struct SolveStats {
    std::uint64_t reductions = 0;
    std::uint64_t fallbacks = 0;
    std::uint64_t boundary_peels = 0;
};

struct TraceEvent {
    std::string rule;
    std::vector<Vertex> witness;
};

struct SolveOptions {
    std::function<void(const TraceEvent&)> trace;
    // test hook: fired with the minimal canvas, the chosen case, and the ops
    // that remove R, before they are executed
    std::function<void(const Canvas&, const RunChoice&, const OpSeq&)>
        on_boundary_peel;
    std::uint64_t fallback_budget = 200'000'000;
    SolveStats* stats = nullptr;
};

struct SolveOutcome {
    std::optional<CanvasException> exception;
    OpSeq seq;  // meaningful iff no exception
};

namespace solver_detail {

struct Measure {
    long long verts, rest, weight;
    friend auto operator<=>(const Measure&, const Measure&) = default;
};

inline Measure measure_of(const Canvas& k) {
    Measure m{0, 0, 0};
    for (Vertex v : k.g.vertices()) {
        m.verts++;
        if (!k.p.contains(v)) {
            m.rest++;
            m.weight += k.f[v];
        }
    }
    return m;
}

inline bool girth_ge(const PlaneGraph& g, Vertex v, int bound) {
    Girth gv = girth_of_vertex(g, v);
    return !gv || *gv >= bound;
}

// Pointwise-minimal weights with the same girth/membership profile.
inline Canvas clamp_canvas(const Canvas& k) {
    Canvas out = k;
    BoundaryWalk boundary = full_boundary(k.g);
    for (Vertex v : k.g.vertices()) {
        if (k.p.contains(v)) continue;
        int want;
        if (k.in_a(v)) {
            want = 1;
        } else if (k.in_b(v)) {
            want = 2;
        } else {
            GirthClass gc = girth_class(girth_of_vertex(k.g, v));
            if (boundary.has_vertex(v))
                want = gc == GirthClass::G3 ? 3 : 2;
            else
                want = gc == GirthClass::G3   ? 4
                       : gc == GirthClass::G4 ? 3
                                              : 2;
        }
        check(want <= k.f[v], "clamp would raise a weight");
        out.f[v] = want;
    }
    return out;
}

// P's vertices as a contiguous run of the boundary cycle: returns the walk
// start index of the run, with the walk read so the run is walk[s..s+k).
inline std::size_t locate_path_run(const std::vector<Vertex>& walk,
                                   const PathSpec& p) {
    std::size_t n = walk.size();
    std::vector<char> in_p(n, 0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (p.contains(walk[i])) {
            in_p[i] = 1;
            ++hits;
        }
    check(hits == p.verts.size(), "path not on the boundary cycle");
    check(hits < n, "path covers the whole boundary");
    for (std::size_t s = 0; s < n; ++s)
        if (in_p[s] && !in_p[(s + n - 1) % n]) {
            for (std::size_t i = 0; i < p.verts.size(); ++i)
                check(in_p[(s + i) % n], "path is not contiguous on the "
                                          "boundary");
            return s;
        }
    throw internal_error("path run not found on boundary");
}

inline std::vector<Vertex> boundary_cycle(const PlaneGraph& g) {
    BoundaryWalk b = outer_boundary(g);
    std::set<Vertex> distinct(b.walk.begin(), b.walk.end());
    check(distinct.size() == b.walk.size(),
          "boundary is not a simple cycle (graph not 2-connected)");
    return b.walk;
}

// Ordered restriction of P to a vertex set; must stay contiguous (an arc,
// when P is a cycle).
inline PathSpec restrict_path(const PathSpec& p,
                              const std::vector<Vertex>& verts) {
    std::set<Vertex> s(verts.begin(), verts.end());
    if (p.cycle) {
        std::size_t n = p.verts.size();
        std::vector<char> in(n, 0);
        std::size_t kept = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s.count(p.verts[i])) {
                in[i] = 1;
                ++kept;
            }
        check(kept > 0, "path restriction is empty");
        if (kept == n) return p;
        std::size_t start = n;
        for (std::size_t i = 0; i < n; ++i)
            if (in[i] && !in[(i + n - 1) % n]) start = i;
        check(start < n, "restriction of a cycle must be an arc");
        std::vector<Vertex> arc;
        for (std::size_t i = 0; i < kept; ++i) {
            check(in[(start + i) % n], "restriction of a cycle must be an "
                                       "arc");
            arc.push_back(p.verts[(start + i) % n]);
        }
        return PathSpec{arc, false};
    }
    std::vector<Vertex> kept;
    for (Vertex v : p.verts)
        if (s.count(v)) kept.push_back(v);
    // contiguity in P
    bool in_run = false, done = false;
    for (Vertex v : p.verts) {
        bool here = s.count(v) > 0;
        if (here) {
            check(!done, "path restriction is not contiguous");
            in_run = true;
        } else if (in_run) {
            done = true;
        }
    }
    check(!kept.empty(), "path restriction is empty");
    return PathSpec{kept, false};
}

}  // namespace solver_detail

// --- boundary-peel machinery (exposed for targeted tests) ---

inline BoundaryDecomposition decompose_boundary(const Canvas& k) {
    using namespace solver_detail;
    require(!k.p.cycle && k.p.size() >= 3,
            "decomposition needs a path on at least 3 vertices");
    std::vector<Vertex> walk = boundary_cycle(k.g);
    std::size_t n = walk.size();
    std::size_t s = locate_path_run(walk, k.p);
    BoundaryDecomposition d;
    for (std::size_t i = 0; i < k.p.verts.size(); ++i)
        d.p.push_back(walk[(s + i) % n]);
    d.uk = d.p.front();
    std::size_t idx = (s + k.p.verts.size()) % n;
    if (k.in_a(walk[idx])) {
        d.v0 = walk[idx];
        idx = (idx + 1) % n;
    }
    while (walk[idx] != d.uk) {
        d.tail.push_back(walk[idx]);
        idx = (idx + 1) % n;
    }
    check(!d.tail.empty(), "empty boundary tail");
    check(k.f[d.tail[0]] >= 2 && !k.in_a(d.tail[0]),
          "first tail vertex must have weight at least 2");
    std::size_t t = d.tail.size();
    d.q2_begin = std::min<std::size_t>(2, t);
    d.q2_end = d.q2_begin;
    while (d.q2_end < t && k.f[d.tail[d.q2_end]] == 2) ++d.q2_end;
    d.q3_end = d.q2_end;
    while (d.q3_end < t && k.f[d.tail[d.q3_end]] == 3) ++d.q3_end;
    return d;
}

inline RunChoice choose_run_case(const Canvas& k,
                                 const BoundaryDecomposition& d) {
    const auto& tail = d.tail;
    std::size_t t = tail.size();
    auto take = [&](std::size_t from, std::size_t to) {
        return std::vector<Vertex>(tail.begin() + static_cast<long>(from),
                                   tail.begin() + static_cast<long>(to));
    };
    if (t <= 2) return RunChoice{BoundaryCase::R1, take(0, t), t};
    int f1 = k.f[tail[0]], f2 = k.f[tail[1]], f3 = k.f[tail[2]];
    std::size_t q3len = d.q3_end - d.q2_end;
    if (f1 == 3 && f2 == 3)
        return RunChoice{BoundaryCase::R2, take(0, 2), 2};
    if (f1 == 3 && f2 <= 2 && q3len >= 2)
        return RunChoice{BoundaryCase::R3, take(1, d.q2_end), d.q2_end};
    if (f1 == 3 && f2 <= 2)
        return RunChoice{BoundaryCase::R4, take(1, d.q3_end), d.q3_end};
    check(f1 == 2, "first tail weight out of range after clamping");
    if (f2 == 3 && f3 <= 2)
        return RunChoice{BoundaryCase::R5, take(0, 2), 2};
    if (f2 == 3 && f3 == 3)
        return RunChoice{BoundaryCase::R6, take(0, 1), 1};
    check(f2 <= 2, "second tail weight out of range");
    if (q3len >= 2)
        return RunChoice{BoundaryCase::R7, take(0, d.q2_end), d.q2_end};
    return RunChoice{BoundaryCase::R8, take(0, d.q3_end), d.q3_end};
}

inline OpSeq removal_ops_for_run(const Canvas& k,
                                 const BoundaryDecomposition& d,
                                 const RunChoice& rc) {
    const auto& tail = d.tail;
    std::size_t t = tail.size();
    auto vtx = [&](std::size_t i) { return tail[i - 1]; };  // 1-based
    auto after = [&](std::size_t j) {
        return j < t ? tail[j] : d.uk;  // v_{j+1}
    };
    // a save whose target is missing or pre-removed with P is a plain delete
    auto ds = [&](Vertex v, std::optional<Vertex> target) {
        if (target && !k.p.contains(*target)) return Op::delsave(v, *target);
        return Op::del(v);
    };
    OpSeq ops;
    auto dels_down = [&](std::size_t hi, std::size_t lo) {
        for (std::size_t i = hi; i >= lo; --i) ops.push_back(Op::del(vtx(i)));
    };
    switch (rc.kase) {
        case BoundaryCase::R1:
            if (t == 2) ops.push_back(Op::del(vtx(2)));
            ops.push_back(ds(vtx(1), d.v0));
            break;
        case BoundaryCase::R2:
            ops.push_back(ds(vtx(2), after(2)));
            ops.push_back(ds(vtx(1), d.v0));
            break;
        case BoundaryCase::R3:
            dels_down(rc.j, 2);
            break;
        case BoundaryCase::R4:
            ops.push_back(ds(vtx(rc.j), after(rc.j)));
            if (rc.j > 2) dels_down(rc.j - 1, 2);
            break;
        case BoundaryCase::R5:
            ops.push_back(ds(vtx(2), after(2)));
            ops.push_back(ds(vtx(1), d.v0));
            break;
        case BoundaryCase::R6:
            ops.push_back(ds(vtx(1), d.v0));
            break;
        case BoundaryCase::R7:
            dels_down(rc.j, 2);
            ops.push_back(ds(vtx(1), d.v0));
            break;
        case BoundaryCase::R8:
            ops.push_back(ds(vtx(rc.j), after(rc.j)));
            if (rc.j > 2) dels_down(rc.j - 1, 2);
            ops.push_back(ds(vtx(1), d.v0));
            break;
    }
    return ops;
}

inline PeelOutcome peel_boundary_run(const Canvas& k,
                                     const BoundaryDecomposition& d,
                                     const RunChoice& rc) {
    OpSeq ops = removal_ops_for_run(k, d, rc);
    RunResult r = run_sequence(canvas_rest(k), residual_weights(k), ops);
    check(r.ok(), "boundary-run removal was illegal: " +
                      (r.error ? r.error->reason : std::string{}));
    PeelOutcome out;
    out.ops = std::move(ops);
    out.g = k.g.minus(rc.run);
    out.f = r.state.f;
    for (Vertex v : out.g.vertices()) {
        if (k.p.contains(v)) {
            out.f[v] = k.f[v];
            continue;
        }
        for (Vertex u : out.g.rotation(v))
            if (k.p.contains(u)) out.f[v] += 1;  // restore the P-charge
    }
    BoundaryWalk boundary = full_boundary(out.g);
    for (Vertex v : out.g.vertices()) {
        if (k.p.contains(v) || !boundary.has_vertex(v)) continue;
        if (out.f[v] <= 1) out.low.insert(v);
        if (out.f[v] == 2 &&
            girth_class(girth_of_vertex(out.g, v)) == GirthClass::G3)
            out.tri.insert(v);
    }
    return out;
}

// --- the solver ---

namespace solver_detail {

class Solver {
  public:
    explicit Solver(const SolveOptions& opt) : opt_(opt) {}

    OpSeq solve(const Canvas& k, Measure parent) {
        {
            auto viol = validate_canvas(k);
            check(viol.empty(), "recursion built an invalid canvas: " +
                                    (viol.empty() ? "" : viol[0].detail));
            check(!classify_exception(k).has_value(),
                  "recursion built an exceptional canvas");
        }
        Canvas kmin = clamp_canvas(k);
        Measure m = measure_of(kmin);
        check(m < parent, "recursion measure failed to decrease");
        if (opt_.stats) opt_.stats->reductions++;

        OpSeq seq;
        try {
            seq = reduce(kmin, m);
            check(removes_all(canvas_rest(kmin), residual_weights(kmin), seq),
                  "emitted sequence failed validation");
        } catch (const solver_stuck&) {
            throw;
        } catch (const internal_error& e) {
            seq = rescue(kmin, e);
        }
        if (kmin.f != k.f)
            seq = lift_sequence(canvas_rest(k), residual_weights(kmin),
                                residual_weights(k), seq);
        return seq;
    }

  private:
    const SolveOptions& opt_;

    void trace(const char* rule, std::vector<Vertex> witness) const {
        if (opt_.trace) opt_.trace(TraceEvent{rule, std::move(witness)});
    }

    // A reduction's structural assumptions failed: a defect.  Keep the tool
    // usable by answering from the exhaustive search.
    OpSeq rescue(const Canvas& kmin, const internal_error& e) {
        if (opt_.stats) opt_.stats->fallbacks++;
        trace("fallback", {});
        std::fprintf(stderr,
                     "planedeg: solver defect, falling back to exhaustive "
                     "search: %s\n",
                     e.what());
        auto r = canvas_weakly_degenerate(kmin, opt_.fallback_budget);
        if (r.status == SearchStatus::Found) return r.witness;
        throw solver_stuck(std::string("stuck canvas: ") + e.what());
    }

    OpSeq reduce(const Canvas& k, Measure m) {
        if (canvas_rest(k).empty()) return {};

        auto comps = k.g.components();
        if (comps.size() > 1) return split_components(k, m, comps);
        if (auto cut = find_cutvertex(k.g)) return split_cutvertex(k, m, *cut);
        if (auto s = low_weight(k, m)) return *s;
        if (auto s = small_cycle(k, m)) return *s;
        if (auto s = five_cycle(k, m)) return *s;
        if (auto s = one_chord(k, m)) return *s;
        if (auto s = boundary_only(k, m)) return *s;
        if (auto s = augment(k, m)) return *s;
        if (auto s = extend_path(k, m)) return *s;
        if (auto s = long_chord(k, m)) return *s;
        return boundary_peel(k, m);
    }

    // fresh sub-canvas entry for a component that carries none of P: delete
    // a boundary edge's two ends, then treat them as the new path
    OpSeq fresh_component(const Canvas& k, const std::vector<Vertex>& verts,
                          Measure m) {
        PlaneGraph g = k.g.induced(verts);
        if (verts.size() == 1) return {Op::del(verts[0])};
        auto boundary = full_boundary(g);
        check(!boundary.edge_set.empty(), "component without edges");
        auto [a, b] = *boundary.edge_set.begin();
        Canvas sub =
            make_subcanvas(std::move(g), PathSpec{{a, b}, false}, k.a, k.b,
                           k.f);
        OpSeq seq{Op::del(a), Op::del(b)};
        OpSeq rest = solve(sub, m);
        seq.insert(seq.end(), rest.begin(), rest.end());
        return seq;
    }

    OpSeq split_components(const Canvas& k, Measure m,
                           const std::vector<std::vector<Vertex>>& comps) {
        trace("split-components", {});
        OpSeq seq;
        for (const auto& comp : comps) {
            bool has_p = std::find(comp.begin(), comp.end(), k.p.verts[0]) !=
                         comp.end();
            OpSeq part;
            if (has_p) {
                Canvas sub = make_subcanvas(k.g.induced(comp), k.p, k.a, k.b,
                                            k.f);
                part = solve(sub, m);
            } else {
                part = fresh_component(k, comp, m);
            }
            seq.insert(seq.end(), part.begin(), part.end());
        }
        return seq;
    }

    OpSeq split_cutvertex(const Canvas& k, Measure m, Vertex u) {
        trace("split-cutvertex", {u});
        PlaneGraph rest = k.g;
        rest.remove_vertex(u);
        auto comps = rest.components();
        check(comps.size() > 1, "cutvertex split found one part");

        bool u_in_p = k.p.contains(u);
        // order parts: the one holding the longest piece of P first
        std::vector<std::pair<int, std::size_t>> order;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            int pc = 0;
            for (Vertex v : comps[i])
                if (k.p.contains(v)) ++pc;
            order.emplace_back(-pc, i);
        }
        std::sort(order.begin(), order.end());
        check(u_in_p || -order[0].first > 0, "cutvertex split lost the path");

        OpSeq seq;
        bool first = true;
        for (auto [negpc, idx] : order) {
            std::vector<Vertex> verts = comps[idx];
            verts.push_back(u);
            std::sort(verts.begin(), verts.end());
            PlaneGraph side = k.g.induced(verts);
            // with u on P every part keeps its P-piece through u; otherwise
            // the P-part keeps all of P and the rest anchor on u alone
            PathSpec sub_p = u_in_p
                                 ? solver_detail::restrict_path(k.p, verts)
                                 : (first && -negpc > 0
                                        ? solver_detail::restrict_path(
                                              k.p, comps[idx])
                                        : PathSpec{{u}, false});
            OpSeq part = solve(
                make_subcanvas(std::move(side), sub_p, k.a, k.b, k.f), m);
            seq.insert(seq.end(), part.begin(), part.end());
            first = false;
        }
        return seq;
    }

    std::optional<OpSeq> low_weight(const Canvas& k, Measure m) {
        for (Vertex v : k.g.vertices()) {
            if (k.p.contains(v) || k.f[v] < k.g.degree(v)) continue;
            trace("low-weight", {v});
            PlaneGraph g2 = k.g;
            g2.remove_vertex(v);
            OpSeq seq =
                solve(make_subcanvas(std::move(g2), k.p, k.a, k.b, k.f), m);
            seq.push_back(Op::del(v));
            return seq;
        }
        return std::nullopt;
    }

    // all 3-cycles, then 4-cycles, ascending
    static std::vector<std::vector<Vertex>> short_cycles(const PlaneGraph& g,
                                                         bool fours) {
        std::vector<std::vector<Vertex>> out;
        auto verts = g.vertices();
        if (!fours) {
            for (Vertex a : verts)
                for (Vertex b : g.rotation(a)) {
                    if (b < a) continue;
                    for (Vertex c : g.rotation(b)) {
                        if (c < b) continue;
                        if (g.has_edge(c, a)) out.push_back({a, b, c});
                    }
                }
        } else {
            for (Vertex a : verts) {
                std::vector<Vertex> na = g.rotation(a);
                std::sort(na.begin(), na.end());
                for (Vertex b : na) {
                    if (b < a) continue;
                    for (Vertex d : na) {
                        if (d <= b) continue;
                        for (Vertex c : g.rotation(b)) {
                            if (c <= a || c == d) continue;
                            if (g.has_edge(c, d)) out.push_back({a, b, c, d});
                        }
                    }
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // a 3- or 4-cycle with vertices inside: clear the outside first, then
    // open the cycle with one delete and treat the rest of it as the path
    std::optional<OpSeq> small_cycle(const Canvas& k, Measure m) {
        for (bool fours : {false, true})
            for (const auto& cyc : short_cycles(k.g, fours)) {
                std::vector<Vertex> inside = cycle_interior(k.g, cyc);
                if (inside.empty()) continue;
                trace("small-cycle", cyc);
                return empty_cycle_interior(k, m, cyc, cyc[0], inside,
                                            std::nullopt);
            }
        return std::nullopt;
    }

    // 5-cycle with interior vertices whose ring carries a girth>=5 vertex
    // (w3) or two adjacent girth-4 vertices (w2, w3)
    std::optional<OpSeq> five_cycle(const Canvas& k, Measure m) {
        for (Vertex a : k.g.vertices()) {
            std::vector<Vertex> na = k.g.rotation(a);
            std::sort(na.begin(), na.end());
            for (Vertex b : na) {
                if (b < a) continue;
                for (Vertex e : na) {
                    if (e <= b) continue;
                    std::vector<Vertex> nb = k.g.rotation(b);
                    std::sort(nb.begin(), nb.end());
                    for (Vertex c : nb) {
                        if (c == a || c == e || c < a) continue;
                        std::vector<Vertex> ne = k.g.rotation(e);
                        std::sort(ne.begin(), ne.end());
                        for (Vertex d : ne) {
                            if (d == a || d == b || d == c || d < a) continue;
                            if (!k.g.has_edge(c, d)) continue;
                            std::vector<Vertex> cyc{a, b, c, d, e};
                            auto inside = cycle_interior(k.g, cyc);
                            if (inside.empty()) continue;
                            if (auto s =
                                    five_cycle_oriented(k, m, cyc, inside))
                                return s;
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    std::optional<OpSeq> five_cycle_oriented(const Canvas& k, Measure m,
                                             const std::vector<Vertex>& cyc,
                                             const std::vector<Vertex>& inside) {
        for (int refl = 0; refl < 2; ++refl)
            for (std::size_t rot = 0; rot < 5; ++rot) {
                std::vector<Vertex> w(5);
                for (std::size_t i = 0; i < 5; ++i) {
                    std::size_t at = refl ? (rot + 5 - i) % 5 : (rot + i) % 5;
                    w[i] = cyc[at];
                }
                bool ok = girth_ge(k.g, w[2], 5) ||
                          (girth_of_vertex(k.g, w[1]) == Girth{4} &&
                           girth_of_vertex(k.g, w[2]) == Girth{4});
                if (!ok) continue;
                trace("five-cycle", w);
                // ring order for the sub-path: w1..w4, removing w5
                std::vector<Vertex> ring{w[0], w[1], w[2], w[3], w[4]};
                return empty_cycle_interior(k, m, ring, w[4], inside,
                                            std::vector<Vertex>{w[0], w[1],
                                                                w[2], w[3]});
            }
        return std::nullopt;
    }

    // shared tail of the two cycle-emptying reductions: solve the graph
    // without the interior, then the interior capped by the opened ring
    OpSeq empty_cycle_interior(const Canvas& k, Measure m,
                               const std::vector<Vertex>& ring, Vertex opened,
                               const std::vector<Vertex>& inside,
                               std::optional<std::vector<Vertex>> sub_path) {
        OpSeq seq = solve(
            make_subcanvas(k.g.minus(inside), k.p, k.a, k.b, k.f), m);

        std::vector<Vertex> keep = inside;
        keep.insert(keep.end(), ring.begin(), ring.end());
        PlaneGraph capped = k.g.induced(keep);
        GraphWeights inner = apply_del(capped, k.f, opened);
        std::vector<Vertex> path_verts;
        if (sub_path) {
            path_verts = *sub_path;
        } else {
            // ring minus the opened vertex, starting after it
            std::size_t at = static_cast<std::size_t>(
                std::find(ring.begin(), ring.end(), opened) - ring.begin());
            for (std::size_t i = 1; i < ring.size(); ++i)
                path_verts.push_back(ring[(at + i) % ring.size()]);
        }
        std::set<Vertex> a2;
        BoundaryWalk boundary = full_boundary(inner.g);
        for (Vertex v : inner.g.vertices()) {
            bool on_path = std::find(path_verts.begin(), path_verts.end(),
                                     v) != path_verts.end();
            if (!on_path && boundary.has_vertex(v) && inner.f[v] <= 1)
                a2.insert(v);
        }
        Canvas sub{std::move(inner.g), PathSpec{path_verts, false}, a2, {},
                   inner.f};
        OpSeq tail = solve(sub, m);
        seq.insert(seq.end(), tail.begin(), tail.end());
        return seq;
    }

    std::optional<OpSeq> one_chord(const Canvas& k, Measure m) {
        check(!k.p.cycle, "a cycle path should have been consumed already");
        auto chords = find_chords(k.g, 1, k.p.verts);
        if (chords.empty()) return std::nullopt;
        std::set<Vertex> internals;
        for (int i = 1; i + 1 < k.p.size(); ++i)
            internals.insert(k.p.verts[i]);

        for (const Chord& c : chords) {
            if (internals.count(c.path[0]) || internals.count(c.path[1]))
                continue;
            trace("one-chord", c.path);
            Canvas k1 = make_subcanvas(c.side1, k.p, k.a, k.b, k.f);
            Canvas k2 = make_subcanvas(c.side2, PathSpec{c.path, false}, k.a,
                                       k.b, k.f);
            OpSeq seq = solve(k1, m);
            OpSeq more = solve(k2, m);
            seq.insert(seq.end(), more.begin(), more.end());
            return seq;
        }

        // every 1-chord has a P-internal endpoint: take the one with the
        // smallest far side
        const Chord* best = nullptr;
        for (const Chord& c : chords)
            if (!best || c.verts2.size() < best->verts2.size()) best = &c;
        Vertex u = internals.count(best->path[0]) ? best->path[0]
                                                  : best->path[1];
        Vertex v = u == best->path[0] ? best->path[1] : best->path[0];
        check(!internals.count(v), "both chord ends inside the path");
        trace("one-chord", {u, v});
        PathSpec p1 = solver_detail::restrict_path(k.p, best->verts1);
        PathSpec p2 = solver_detail::restrict_path(k.p, best->verts2);
        check(p2.size() == 2, "far side must hold a 2-piece of the path");
        Vertex w0 = p2.verts[0] == u ? p2.verts[1] : p2.verts[0];

        if (!k.g.has_edge(v, w0)) {
            Canvas k2 = make_subcanvas(best->side2,
                                       PathSpec{{v, u, w0}, false}, k.a, k.b,
                                       k.f);
            check(validate_canvas(k2).empty() &&
                      !classify_exception(k2).has_value(),
                  "grown far-side canvas is unusable");
            Canvas k1 = make_subcanvas(best->side1, p1, k.a, k.b, k.f);
            OpSeq seq = solve(k1, m);
            OpSeq more = solve(k2, m);
            seq.insert(seq.end(), more.begin(), more.end());
            return seq;
        }

        // far side is the bare triangle u, v, w0: fold v into the path
        check(best->verts2.size() == 3, "triangle side should be empty");
        int p1_nbrs = 0;
        for (Vertex x : p1.verts)
            if (k.g.has_edge(v, x)) ++p1_nbrs;
        check(p1_nbrs == 1, "chord vertex sees the path more than once");
        std::vector<Vertex> grown = p1.verts;
        if (grown.front() == u) {
            grown.insert(grown.begin(), v);
        } else {
            check(grown.back() == u, "chord endpoint must end the path piece");
            std::reverse(grown.begin(), grown.end());
            grown.insert(grown.begin(), v);
        }
        Canvas k1 = make_subcanvas(best->side1, PathSpec{grown, false}, k.a,
                                   k.b, k.f);
        check(validate_canvas(k1).empty() &&
                  !classify_exception(k1).has_value(),
              "grown near-side canvas is unusable");
        OpSeq seq{Op::del(v)};
        OpSeq more = solve(k1, m);
        seq.insert(seq.end(), more.begin(), more.end());
        return seq;
    }

    // everything on the boundary: walk the arc off P, restricted ends first
    std::optional<OpSeq> boundary_only(const Canvas& k, Measure m) {
        (void)m;
        BoundaryWalk boundary = full_boundary(k.g);
        for (Vertex v : k.g.vertices())
            if (!boundary.has_vertex(v)) return std::nullopt;
        std::vector<Vertex> walk = solver_detail::boundary_cycle(k.g);
        std::size_t n = walk.size();
        std::size_t s = solver_detail::locate_path_run(walk, k.p);
        std::vector<Vertex> arc;
        for (std::size_t i = s + k.p.verts.size(); i % n != s; ++i)
            arc.push_back(walk[i % n]);
        check(!arc.empty(), "no vertices left beside the path");
        trace("boundary-only", arc);
        OpSeq seq;
        std::set<Vertex> done;
        for (Vertex e : {arc.front(), arc.back()})
            if (k.in_a(e) && !done.count(e)) {
                seq.push_back(Op::del(e));
                done.insert(e);
            }
        for (Vertex v : arc)
            if (!done.count(v)) seq.push_back(Op::del(v));
        return seq;
    }

    // three girth-3 boundary vertices off P and B, or three girth>=5 ones
    // off P and A: pin the middle one into the set at its lowered weight
    std::optional<OpSeq> augment(const Canvas& k, Measure m) {
        std::vector<Vertex> walk = solver_detail::boundary_cycle(k.g);
        std::size_t n = walk.size();
        auto candidates = [&](bool want3) {
            std::vector<std::array<Vertex, 3>> out;
            for (std::size_t i = 0; i < n; ++i) {
                Vertex x = walk[i], y = walk[(i + 1) % n],
                       z = walk[(i + 2) % n];
                if (k.p.contains(x) || k.p.contains(y) || k.p.contains(z))
                    continue;
                if (want3) {
                    if (k.in_b(x) || k.in_b(y) || k.in_b(z)) continue;
                    auto is3 = [&](Vertex v) {
                        return girth_of_vertex(k.g, v) == Girth{3};
                    };
                    if (!is3(x) || !is3(y) || !is3(z)) continue;
                } else {
                    if (k.in_a(x) || k.in_a(y) || k.in_a(z)) continue;
                    if (!solver_detail::girth_ge(k.g, x, 5) ||
                        !solver_detail::girth_ge(k.g, y, 5) ||
                        !solver_detail::girth_ge(k.g, z, 5))
                        continue;
                }
                if (z < x) std::swap(x, z);
                out.push_back({y, x, z});
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        for (bool want3 : {true, false}) {
            auto cand = candidates(want3);
            if (cand.empty()) continue;
            Vertex y = cand[0][0];
            trace(want3 ? "b-augment" : "a-augment", {cand[0][1], y,
                                                      cand[0][2]});
            Canvas k2 = k;
            k2.f[y] = want3 ? 2 : 1;
            (want3 ? k2.b : k2.a).insert(y);
            OpSeq seq = solve(k2, m);
            return lift_sequence(canvas_rest(k), residual_weights(k2),
                                 residual_weights(k), seq);
        }
        return std::nullopt;
    }

    std::optional<OpSeq> extend_path(const Canvas& k, Measure m) {
        if (k.p.size() > 2) return std::nullopt;
        std::vector<Vertex> walk = solver_detail::boundary_cycle(k.g);
        std::size_t n = walk.size();
        std::size_t s = solver_detail::locate_path_run(walk, k.p);
        Vertex v = walk[(s + k.p.verts.size()) % n];
        trace("extend-path", {v});
        std::vector<Vertex> grown;
        for (std::size_t i = 0; i < k.p.verts.size(); ++i)
            grown.push_back(walk[(s + i) % n]);
        grown.push_back(v);
        bool closes = grown.size() >= 3 && k.g.has_edge(v, grown.front());
        Canvas k2 = make_subcanvas(k.g, PathSpec{grown, closes}, k.a, k.b,
                                   k.f);
        check(validate_canvas(k2).empty() &&
                  !classify_exception(k2).has_value(),
              "grown path canvas is unusable");
        OpSeq seq{Op::del(v)};
        OpSeq more = solve(k2, m);
        seq.insert(seq.end(), more.begin(), more.end());
        return seq;
    }

    // 2- and 3-chord splits whose far side is an unexceptional canvas
    std::optional<OpSeq> long_chord(const Canvas& k, Measure m) {
        std::set<Vertex> internals;
        for (int i = 1; i + 1 < k.p.size(); ++i)
            internals.insert(k.p.verts[i]);
        for (int t : {2, 3}) {
            for (const Chord& c : find_chords(k.g, t, k.p.verts)) {
                if (internals.count(c.path.front()) ||
                    internals.count(c.path.back()))
                    continue;
                if (t == 3 && !solver_detail::girth_ge(k.g, c.path[1], 5) &&
                    !solver_detail::girth_ge(k.g, c.path[2], 5))
                    continue;
                Canvas k2 = make_subcanvas(c.side2, PathSpec{c.path, false},
                                           k.a, k.b, k.f);
                if (!validate_canvas(k2).empty()) continue;
                if (classify_exception(k2).has_value()) continue;
                trace(t == 2 ? "two-chord" : "three-chord", c.path);
                Canvas k1 = make_subcanvas(c.side1, k.p, k.a, k.b, k.f);
                OpSeq seq = solve(k1, m);
                OpSeq more = solve(k2, m);
                seq.insert(seq.end(), more.begin(), more.end());
                return seq;
            }
        }
        return std::nullopt;
    }

    OpSeq boundary_peel(const Canvas& k, Measure m) {
        BoundaryDecomposition d = decompose_boundary(k);
        RunChoice rc = choose_run_case(k, d);
        if (opt_.stats) opt_.stats->boundary_peels++;
        trace(std::string("peel-").append(to_string(rc.kase)).c_str(),
              rc.run);
        if (opt_.on_boundary_peel) {
            OpSeq ops = removal_ops_for_run(k, d, rc);
            opt_.on_boundary_peel(k, rc, ops);
        }
        PeelOutcome peel = peel_boundary_run(k, d, rc);
        Canvas kt{peel.g, k.p, peel.low, peel.tri, peel.f};
        auto viol = validate_canvas(kt);
        if (viol.empty()) {
            check(!classify_exception(kt).has_value(),
                  "peeled canvas came out exceptional");
            OpSeq seq = peel.ops;
            OpSeq more = solve(kt, m);
            seq.insert(seq.end(), more.begin(), more.end());
            return seq;
        }
        bool b_edge = false, a_edge = false, other = false;
        for (const auto& vv : viol) {
            if (vv.kind != ViolationKind::IndepEdge)
                other = true;
            else if (vv.cond == CanvasCond::C3)
                b_edge = true;
            else if (vv.cond == CanvasCond::C2)
                a_edge = true;
            else
                other = true;
        }
        check(!other && (b_edge != a_edge),
              "peeled canvas broke something besides one independence");
        return b_edge ? handle_b_edge(k, m, d, rc, peel)
                      : handle_a_edge(k, m, d, rc, peel, viol);
    }

    // the two recomputed triangle-set vertices touch: the only shape is a
    // hat over v1 v2 v3; remove v3, v0, v1 with one save onto v2, solve the
    // rest, then clear the dangling v2
    OpSeq handle_b_edge(const Canvas& k, Measure m,
                        const BoundaryDecomposition& d, const RunChoice& rc,
                        const PeelOutcome&) {
        check(rc.kase == BoundaryCase::R4 && rc.run.size() == 2,
              "triangle-edge shape outside its case");
        Vertex v1 = d.tail[0], v2 = d.tail[1], v3 = d.tail[2];
        check(rc.run == std::vector<Vertex>{v2, v3}, "unexpected run");
        Vertex w = -1;
        for (Vertex cand : k.g.rotation(v2)) {
            if (cand == v1 || cand == v3) continue;
            if (k.g.has_edge(cand, v1) && k.g.has_edge(cand, v3)) {
                check(w < 0, "two hat vertices over the run");
                w = cand;
            }
        }
        check(w >= 0, "no hat vertex over the run");
        check(k.g.degree(v2) == 3, "run middle vertex has extra neighbours");
        trace("b-edge", {v1, w});

        std::optional<Vertex> v4 =
            d.tail.size() >= 4 ? std::optional<Vertex>(d.tail[3])
                               : std::nullopt;  // else u_k, already in P
        OpSeq head;
        head.push_back(v4 ? Op::delsave(v3, *v4) : Op::del(v3));
        if (d.v0) head.push_back(Op::del(*d.v0));
        head.push_back(Op::delsave(v1, v2));

        PlaneGraph rest = canvas_rest(k);
        WeightFn fk = residual_weights(k);
        RunResult r = run_sequence(rest, fk, head);
        check(r.ok(), "hat removal was illegal: " +
                          (r.error ? r.error->reason : std::string{}));
        check(r.state.g.degree(v2) == 1 && r.state.f[v2] == 1,
              "run middle vertex not left dangling at weight 1");

        std::vector<Vertex> gone{v1, v2, v3};
        if (d.v0) gone.push_back(*d.v0);
        Canvas khat = rebuilt_canvas(k, k.g.minus(gone), r.state.f);
        check(validate_canvas(khat).empty(),
              "hat-removal canvas failed validation");
        check(!classify_exception(khat).has_value(),
              "hat-removal canvas came out exceptional");
        OpSeq seq = head;
        OpSeq more = solve(khat, m);
        seq.insert(seq.end(), more.begin(), more.end());
        seq.push_back(Op::del(v2));
        return seq;
    }

    // weights with P-charges restored, then the two value-defined sets
    Canvas rebuilt_canvas(const Canvas& k, PlaneGraph g2,
                          const WeightFn& after) const {
        WeightFn f2 = after;
        for (Vertex v : g2.vertices()) {
            if (k.p.contains(v)) {
                f2[v] = k.f[v];
                continue;
            }
            for (Vertex u : g2.rotation(v))
                if (k.p.contains(u)) f2[v] += 1;
        }
        std::set<Vertex> low, tri;
        BoundaryWalk boundary = full_boundary(g2);
        for (Vertex v : g2.vertices()) {
            if (k.p.contains(v)) continue;
            if (f2[v] <= 1 && boundary.has_vertex(v)) low.insert(v);
            if (f2[v] == 2 && boundary.has_vertex(v) &&
                girth_class(girth_of_vertex(g2, v)) == GirthClass::G3)
                tri.insert(v);
        }
        return Canvas{std::move(g2), k.p, low, tri, f2};
    }

    OpSeq handle_a_edge(const Canvas& k, Measure m,
                        const BoundaryDecomposition& d, const RunChoice& rc,
                        const PeelOutcome& peel,
                        const std::vector<Violation>& viol) {
        check(rc.kase == BoundaryCase::R7 || rc.kase == BoundaryCase::R8,
              "low-pair shape outside its cases");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& vv : viol)
            if (vv.kind == ViolationKind::IndepEdge) {
                check(vv.verts.size() == 2, "bad violation payload");
                edges.emplace_back(vv.verts[0], vv.verts[1]);
            }
        check(edges.size() == 1, "low set induced more than one edge");
        Vertex v1 = d.tail[0], v2 = d.tail[1], v3 = d.tail[2];
        auto [e1, e2] = edges[0];
        Vertex w1, w2;
        if (k.g.has_edge(e1, v1) && k.g.has_edge(e2, v3)) {
            w1 = e1;
            w2 = e2;
        } else {
            check(k.g.has_edge(e2, v1) && k.g.has_edge(e1, v3),
                  "low pair not anchored at the run's ends");
            w1 = e2;
            w2 = e1;
        }
        check(girth_of_vertex(k.g, w1) == Girth{5} &&
                  girth_of_vertex(k.g, w2) == Girth{5},
              "low pair must have girth exactly 5");
        check(k.f[v2] == 1 && k.in_a(v2), "run's second vertex must sit in A");
        trace("a-edge", {w1, w2});

        auto p_nbrs = [&](Vertex w) {
            int c = 0;
            for (Vertex x : k.g.rotation(w))
                if (k.p.contains(x)) ++c;
            return c;
        };
        check(p_nbrs(w1) + p_nbrs(w2) <= 1,
              "low pair touches the path twice");
        Vertex wl = p_nbrs(w2) > 0 ? w2 : w1;
        Vertex wr = wl == w1 ? w2 : w1;

        OpSeq head = peel.ops;
        head.push_back(Op::del(wl));
        head.push_back(Op::del(wr));
        PlaneGraph rest = canvas_rest(k);
        WeightFn fk = residual_weights(k);
        RunResult r = run_sequence(rest, fk, head);
        check(r.ok(), "run+pair removal was illegal: " +
                          (r.error ? r.error->reason : std::string{}));

        std::vector<Vertex> gone = rc.run;
        gone.push_back(w1);
        gone.push_back(w2);
        Canvas khat = rebuilt_canvas(k, k.g.minus(gone), r.state.f);
        // unlike elsewhere, the value-defined sets range over every vertex
        // off P here; interior members would fail validation anyway
        auto viol2 = validate_canvas(khat);
        if (viol2.empty()) {
            check(!classify_exception(khat).has_value(),
                  "pair-removal canvas came out exceptional");
            OpSeq seq = head;
            OpSeq more = solve(khat, m);
            seq.insert(seq.end(), more.begin(), more.end());
            return seq;
        }

        // the new low set still induces edges: split along the enclosing
        // chordal path and recurse on the three pieces
        std::vector<std::pair<Vertex, Vertex>> hat_edges;
        for (const auto& vv : viol2) {
            check(vv.kind == ViolationKind::IndepEdge &&
                      vv.cond == CanvasCond::C2,
                  "pair-removal canvas broke something else");
            hat_edges.emplace_back(vv.verts[0], vv.verts[1]);
        }

        struct Pick {
            std::size_t i;
            Vertex w3, w4;
            bool via_w2;
        };
        std::optional<Pick> best;
        for (auto [a, b] : hat_edges)
            for (int swap = 0; swap < 2; ++swap) {
                Vertex w3 = swap ? b : a, w4 = swap ? a : b;
                bool n1 = k.g.has_edge(w3, w1), n2 = k.g.has_edge(w3, w2);
                if (!n1 && !n2) continue;
                check(!(k.g.has_edge(w4, w1) || k.g.has_edge(w4, w2)),
                      "both low-edge ends touch the removed pair");
                std::optional<std::size_t> hit;
                for (std::size_t i = 0; i < rc.run.size(); ++i)
                    if (k.g.has_edge(w4, rc.run[i])) {
                        check(!hit, "far end touches the run twice");
                        hit = i + 1;  // the run starts at v_1 in these cases
                    }
                check(hit.has_value(), "far end of the low edge misses the "
                                       "run");
                check(*hit >= 4, "far-end anchor too close to the pair");
                if (!best || *hit < best->i)
                    best = Pick{*hit, w3, w4, n2};
            }
        check(best.has_value(), "no oriented low edge found");
        if (best->via_w2) check(best->i > 4, "long chord form needs i > 4");

        std::vector<Vertex> q{v1, w1};
        if (best->via_w2) q.push_back(w2);
        q.push_back(best->w3);
        q.push_back(best->w4);
        q.push_back(d.tail[best->i - 1]);  // v_i
        trace("a-edge-split", q);

        // ring: q followed by v_{i-1} .. v_2
        std::vector<Vertex> ring = q;
        for (std::size_t ix = best->i - 1; ix >= 2; --ix)
            ring.push_back(d.tail[ix - 1]);
        std::vector<Vertex> inside = cycle_interior(k.g, ring);
        std::vector<Vertex> side2 = ring;
        side2.insert(side2.end(), inside.begin(), inside.end());
        std::sort(side2.begin(), side2.end());
        std::set<Vertex> side2_set(side2.begin(), side2.end());
        std::set<Vertex> q_set(q.begin(), q.end());
        std::vector<Vertex> side1;
        for (Vertex v : k.g.vertices())
            if (!side2_set.count(v) || q_set.count(v)) side1.push_back(v);

        Canvas k1 = make_subcanvas(k.g.induced(side1), k.p, k.a, k.b, k.f);
        OpSeq seq = solve(k1, m);

        OpSeq mid;
        for (std::size_t ix = 2; ix <= best->i - 1; ++ix)
            mid.push_back(Op::del(d.tail[ix - 1]));
        seq.insert(seq.end(), mid.begin(), mid.end());

        std::vector<Vertex> g4_verts;
        std::set<Vertex> qprime;  // v_1 .. v_i
        for (std::size_t ix = 1; ix <= best->i; ++ix)
            qprime.insert(d.tail[ix - 1]);
        for (Vertex v : side2)
            if (!qprime.count(v)) g4_verts.push_back(v);
        PlaneGraph g4 = k.g.induced(g4_verts);
        WeightFn f4 = k.f;
        for (Vertex v : g4.vertices()) {
            int drop = 0;
            for (Vertex u : k.g.rotation(v))
                if (qprime.count(u)) ++drop;
            f4[v] -= drop;
        }
        std::vector<Vertex> p4{w1};
        if (best->via_w2) p4.push_back(w2);
        p4.push_back(best->w3);
        p4.push_back(best->w4);
        std::set<Vertex> low4, tri4;
        for (Vertex v : g4.vertices()) {
            if (q_set.count(v)) continue;
            if (f4[v] <= 1) low4.insert(v);
            if (f4[v] == 2 &&
                girth_class(girth_of_vertex(g4, v)) == GirthClass::G3)
                tri4.insert(v);
        }
        Canvas k4{std::move(g4), PathSpec{p4, false}, low4, tri4, f4};
        check(validate_canvas(k4).empty(),
              "inner split canvas failed validation");
        check(!classify_exception(k4).has_value(),
              "inner split canvas came out exceptional");
        OpSeq tail2 = solve(k4, m);
        seq.insert(seq.end(), tail2.begin(), tail2.end());
        return seq;
    }
};

}  // namespace solver_detail

// Emits either the run's exception (only from the root classification) or a
// sequence sigma with run_sequence(G - P, residual weights, sigma) legal and
// emptying G - P.
inline SolveOutcome solve_canvas(const Canvas& k,
                                 const SolveOptions& opt = {}) {
    auto viol = validate_canvas(k);
    require(viol.empty(), "solve_canvas needs a valid canvas: " +
                              (viol.empty() ? "" : viol[0].detail));
    if (auto e = classify_exception(k)) return SolveOutcome{e, {}};
    solver_detail::Solver solver(opt);
    constexpr long long kInf = std::numeric_limits<long long>::max();
    OpSeq seq = solver.solve(k, solver_detail::Measure{kInf, kInf, kInf});
    check(removes_all(canvas_rest(k), residual_weights(k), seq),
          "solver output failed its final validation");
    return SolveOutcome{std::nullopt, std::move(seq)};
}

// Full removal sequence for a connected plane graph at (at least) the
// minimal girth-graded weights: two deletes on a boundary edge, then the
// canvas machinery, lifted to the requested weights at the end.
inline OpSeq solve_local_girth(const PlaneGraph& g,
                               const std::optional<WeightFn>& weights =
                                   std::nullopt,
                               const SolveOptions& opt = {}) {
    require(g.is_connected(), "solver needs a connected graph");
    require(!g.empty(), "empty graph has nothing to solve");
    WeightFn fmin = local_girth_function(g);
    if (weights)
        for (Vertex v : g.vertices())
            require((*weights)[v] >= fmin[v],
                    "weights must dominate the minimal girth-graded ones (at "
                    "vertex " +
                        std::to_string(v) + ")");
    OpSeq seq;
    if (g.num_vertices() == 1) {
        seq.push_back(Op::del(g.vertices()[0]));
    } else {
        auto boundary = full_boundary(g);
        check(!boundary.edge_set.empty(), "connected graph without edges");
        auto [a, b] = *boundary.edge_set.begin();
        Canvas k{g, PathSpec{{a, b}, false}, {}, {}, fmin};
        SolveOutcome out = solve_canvas(k, opt);
        check(!out.exception.has_value(), "two-vertex path cannot except");
        seq.push_back(Op::del(a));
        seq.push_back(Op::del(b));
        seq.insert(seq.end(), out.seq.begin(), out.seq.end());
    }
    check(removes_all(g, fmin, seq), "solver output failed validation");
    if (weights) seq = lift_sequence(g, fmin, *weights, seq);
    return seq;
}

}  // namespace planedeg
