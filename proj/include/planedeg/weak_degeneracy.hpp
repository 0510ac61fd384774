#pragma once

// The delete / delete-with-save calculus on (graph, weight) pairs.
//
// Weights live in a plain vector indexed by vertex id; the domain is the
// paired graph's present vertex set, entries of absent vertices are ignored.
// Operations are total (an op naming an absent vertex is a no-op); legality
// is a separate predicate.  Weights may be negative (they arise when a
// removed path is charged against its neighbours); an operation deleting a
// vertex of negative weight is never legal, which is the unique extension of
// the nonnegative-domain rules under which a pair with a negative weight
// anywhere admits no legal operation at all.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>
#include <variant>

#include "planedeg/plane_graph.hpp"

namespace planedeg {

using WeightFn = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

enum class OpKind { Del, DelSave };

struct Op {
    OpKind kind = OpKind::Del;
    Vertex v = -1;
    Vertex w = -1;  // save target, DelSave only

    static Op del(Vertex v) { return Op{OpKind::Del, v, -1}; }
    static Op delsave(Vertex v, Vertex w) { return Op{OpKind::DelSave, v, w}; }
    friend bool operator==(const Op&, const Op&) = default;
};

using OpSeq = std::vector<Op>;

inline std::string to_string(const Op& op) {
    std::ostringstream s;
    if (op.kind == OpKind::Del)
        s << "del " << op.v;
    else
        s << "delsave " << op.v << " " << op.w;
    return s.str();
}

struct GraphWeights {
    PlaneGraph g;
    WeightFn f;
};

inline GraphWeights apply_del(const PlaneGraph& g, const WeightFn& f, Vertex v) {
    GraphWeights out{g, f};
    if (!g.has_vertex(v)) return out;
    for (Vertex u : g.rotation(v)) out.f[u] -= 1;
    out.g.remove_vertex(v);
    return out;
}

inline GraphWeights apply_delsave(const PlaneGraph& g, const WeightFn& f,
                                  Vertex v, Vertex w) {
    GraphWeights out{g, f};
    if (!g.has_vertex(v)) return out;
    for (Vertex u : g.rotation(v))
        if (u != w) out.f[u] -= 1;
    out.g.remove_vertex(v);
    return out;
}

inline GraphWeights apply_op(const PlaneGraph& g, const WeightFn& f, const Op& op) {
    return op.kind == OpKind::Del ? apply_del(g, f, op.v)
                                  : apply_delsave(g, f, op.v, op.w);
}

// True when the operation only removes a vertex that is safe to remove and
// leaves every remaining weight nonnegative.  Ops on absent vertices are
// trivially legal no-ops; DelSave with a save target that is absent or not a
// neighbour acts as (and is judged like) Del.
inline bool is_legal(const PlaneGraph& g, const WeightFn& f, const Op& op) {
    if (!g.has_vertex(op.v)) return true;
    if (f[op.v] < 0) return false;
    bool save = op.kind == OpKind::DelSave && g.has_edge(op.v, op.w);
    if (save && !(f[op.v] > f[op.w])) return false;
    for (Vertex u : g.vertices()) {
        if (u == op.v) continue;
        int fu = f[u];
        if (g.has_edge(op.v, u) && !(save && u == op.w)) fu -= 1;
        if (fu < 0) return false;
    }
    return true;
}

struct RunError {
    std::size_t index = 0;
    Op op;
    std::string reason;
};

struct RunResult {
    GraphWeights state;
    std::optional<RunError> error;
    std::vector<int> availabilities;  // one per effective legal step

    bool ok() const { return !error.has_value(); }
};

inline std::string illegality_reason(const PlaneGraph& g, const WeightFn& f,
                                     const Op& op) {
    if (!g.has_vertex(op.v)) return "";
    if (f[op.v] < 0)
        return "vertex " + std::to_string(op.v) + " has negative weight";
    bool save = op.kind == OpKind::DelSave && g.has_edge(op.v, op.w);
    if (save && !(f[op.v] > f[op.w]))
        return "save needs f(" + std::to_string(op.v) + ") > f(" +
               std::to_string(op.w) + ")";
    for (Vertex u : g.vertices()) {
        if (u == op.v) continue;
        int fu = f[u];
        if (g.has_edge(op.v, u) && !(save && u == op.w)) fu -= 1;
        if (fu < 0)
            return "weight of neighbour " + std::to_string(u) +
                   " would drop below zero";
    }
    return "";
}

// Availability of a legal, effective operation: choices left for the removed
// vertex.  f(v)+1 for Del (and for DelSave whose target is not a neighbour,
// which acts as Del); f(v)-f(w) for a proper save.
inline int availability(const PlaneGraph& g, const WeightFn& f, const Op& op) {
    require(g.has_vertex(op.v),
            "availability undefined for a no-op (vertex absent)");
    require(is_legal(g, f, op), "availability undefined for an illegal op");
    if (op.kind == OpKind::DelSave && g.has_edge(op.v, op.w))
        return f[op.v] - f[op.w];
    return f[op.v] + 1;
}

// Folds the sequence, stopping at the first illegal step.
inline RunResult run_sequence(const PlaneGraph& g, const WeightFn& f,
                              const OpSeq& ops) {
    RunResult r{GraphWeights{g, f}, std::nullopt, {}};
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Op& op = ops[i];
        if (!is_legal(r.state.g, r.state.f, op)) {
            r.error = RunError{i, op,
                               illegality_reason(r.state.g, r.state.f, op)};
            return r;
        }
        if (r.state.g.has_vertex(op.v))
            r.availabilities.push_back(availability(r.state.g, r.state.f, op));
        r.state = apply_op(r.state.g, r.state.f, op);
    }
    return r;
}

inline bool removes_all(const PlaneGraph& g, const WeightFn& f, const OpSeq& ops) {
    RunResult r = run_sequence(g, f, ops);
    return r.ok() && r.state.g.empty();
}

struct AverageAvailability {
    BigInt product;   // exact product of step availabilities
    std::size_t n;    // number of operations
    double mean() const {
        if (n == 0) return 1.0;
        // product^(1/n) via logs; exact value is carried by (product, n)
        double lg = 0.0;
        BigInt p = product;
        // extract to double in chunks to dodge overflow
        while (p > BigInt(1) << 200) {
            p >>= 200;
            lg += 200.0 * std::log(2.0);
        }
        lg += std::log(p.convert_to<double>());
        return std::exp(lg / static_cast<double>(n));
    }
};

// Exact geometric-mean data of a legal sequence; every step must be
// effective (deleting a present vertex).
inline AverageAvailability average_availability(const PlaneGraph& g,
                                                const WeightFn& f,
                                                const OpSeq& ops) {
    GraphWeights st{g, f};
    AverageAvailability out{1, ops.size()};
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Op& op = ops[i];
        require(st.g.has_vertex(op.v),
                "step " + std::to_string(i) + " is a no-op; average "
                "availability requires effective steps");
        require(is_legal(st.g, st.f, op),
                "sequence illegal at step " + std::to_string(i));
        out.product *= availability(st.g, st.f, op);
        st = apply_op(st.g, st.f, op);
    }
    return out;
}

// Monotone lifting: given sigma legal from (g, f) and f2 >= f pointwise,
// returns the same sequence with every save that the larger weights make
// illegal replaced by a plain delete; the result is legal from (g, f2) and
// removes the same vertices in the same order.
inline OpSeq lift_sequence(const PlaneGraph& g, const WeightFn& f,
                           const WeightFn& f2, const OpSeq& ops) {
    for (Vertex v : g.vertices())
        require(f2[v] >= f[v], "lift target must dominate pointwise at " +
                                   std::to_string(v));
    GraphWeights lo{g, f};
    GraphWeights hi{g, f2};
    OpSeq out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        Op op = ops[i];
        require(is_legal(lo.g, lo.f, op),
                "sequence illegal at step " + std::to_string(i));
        if (op.kind == OpKind::DelSave && !is_legal(hi.g, hi.f, op))
            op = Op::del(op.v);
        check(is_legal(hi.g, hi.f, op), "lifted step is illegal");
        out.push_back(op);
        lo = apply_op(lo.g, lo.f, ops[i]);
        hi = apply_op(hi.g, hi.f, op);
    }
    return out;
}

}  // namespace planedeg
