#pragma once

// Exhaustive backtracking decision of weak degeneracy, plus the classic
// degeneracy number.  This is the reference oracle the constructive solver
// is validated against, so it stays deliberately simple: depth-first over
// all legal operations in a fixed order (deletes by vertex id, then saves by
// (vertex, target)), with two prunings that are switchable off for audits:
//   - memoisation of exhausted states keyed on the remaining abstract graph
//     plus its weights (the embedding is irrelevant to weak degeneracy), and
//   - skipping DelSave(v,w) when Del(v) is legal and f(w) >= deg(w): the
//     saved weight cannot matter once it covers w's remaining degree.

#include <cstdint>
#include <unordered_set>

#include "planedeg/weak_degeneracy.hpp"

namespace planedeg {

enum class SearchStatus { Found, ExhaustedNo, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::ExhaustedNo;
    OpSeq witness;          // set iff status == Found; passes removes_all
    std::uint64_t nodes = 0;
};

namespace detail {

inline std::string state_key(const PlaneGraph& g, const WeightFn& f) {
    std::string key;
    for (Vertex v : g.vertices()) {
        key += std::to_string(v);
        key += ':';
        key += std::to_string(f[v]);
        key += '[';
        std::vector<Vertex> nb = g.rotation(v);
        std::sort(nb.begin(), nb.end());
        for (Vertex w : nb) {
            key += std::to_string(w);
            key += ',';
        }
        key += ']';
    }
    return key;
}

struct SearchCtx {
    std::uint64_t budget;
    bool prune;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::unordered_set<std::string> dead;  // states with no witness
};

// True when a witness was found and appended to `acc`.
inline bool search(const PlaneGraph& g, const WeightFn& f, SearchCtx& ctx,
                   OpSeq& acc) {
    if (g.empty()) return true;
    if (ctx.nodes >= ctx.budget) {
        ctx.out_of_budget = true;
        return false;
    }
    ctx.nodes++;

    std::string key;
    if (ctx.prune) {
        key = state_key(g, f);
        if (ctx.dead.count(key)) return false;
    }

    bool complete = true;  // no subtree was cut off by the budget
    auto try_op = [&](const Op& op) -> bool {
        GraphWeights next = apply_op(g, f, op);
        acc.push_back(op);
        if (search(next.g, next.f, ctx, acc)) return true;
        acc.pop_back();
        if (ctx.out_of_budget) complete = false;
        ctx.out_of_budget = false;
        return false;
    };

    for (Vertex v : g.vertices()) {
        Op op = Op::del(v);
        if (!is_legal(g, f, op)) continue;
        if (try_op(op)) return true;
    }
    for (Vertex v : g.vertices()) {
        bool del_legal = is_legal(g, f, Op::del(v));
        std::vector<Vertex> nb = g.rotation(v);
        std::sort(nb.begin(), nb.end());
        for (Vertex w : nb) {
            if (!(f[v] > f[w])) continue;  // other targets behave like Del
            if (ctx.prune && del_legal && f[w] >= g.degree(w)) continue;
            Op op = Op::delsave(v, w);
            if (!is_legal(g, f, op)) continue;
            if (try_op(op)) return true;
        }
    }

    if (!complete)
        ctx.out_of_budget = true;  // propagate: exhaustion unproven
    else if (ctx.prune)
        ctx.dead.insert(std::move(key));
    return false;
}

}  // namespace detail

// Complete search for a legal sequence removing every vertex.  Budget is in
// search-tree nodes.  A Found result carries a verified witness.
inline SearchResult exact_weakly_degenerate(const PlaneGraph& g,
                                            const WeightFn& f,
                                            std::uint64_t node_budget,
                                            bool prune = true) {
    detail::SearchCtx ctx{node_budget, prune, 0, false, {}};
    SearchResult out;
    OpSeq acc;
    bool found = detail::search(g, f, ctx, acc);
    out.nodes = ctx.nodes;
    if (found) {
        check(removes_all(g, f, acc), "witness failed validation");
        out.status = SearchStatus::Found;
        out.witness = std::move(acc);
    } else if (ctx.out_of_budget) {
        out.status = SearchStatus::BudgetExceeded;
    } else {
        out.status = SearchStatus::ExhaustedNo;
    }
    return out;
}

// Least k such that every subgraph has a vertex of degree <= k, by
// min-degree peeling.
inline int classic_degeneracy(const PlaneGraph& g) {
    PlaneGraph cur = g;
    int best = 0;
    while (!cur.empty()) {
        Vertex arg = -1;
        int mindeg = 0;
        for (Vertex v : cur.vertices())
            if (arg < 0 || cur.degree(v) < mindeg) {
                arg = v;
                mindeg = cur.degree(v);
            }
        best = std::max(best, mindeg);
        cur.remove_vertex(arg);
    }
    return best;
}

struct WeakDegeneracyNumber {
    std::optional<int> value;  // empty: budget exhausted before a proof
    std::uint64_t nodes = 0;
};

// Least d with the constant weight d accepted, by binary search between 0
// and the classic degeneracy (which always admits a delete-only peeling).
inline WeakDegeneracyNumber weak_degeneracy_number(const PlaneGraph& g,
                                                   std::uint64_t node_budget) {
    WeakDegeneracyNumber out;
    if (g.empty()) {
        out.value = 0;
        return out;
    }
    int lo = 0, hi = classic_degeneracy(g);
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        WeightFn f(g.capacity(), mid);
        SearchResult r = exact_weakly_degenerate(g, f, node_budget);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::BudgetExceeded) return out;
        if (r.status == SearchStatus::Found)
            hi = mid;
        else
            lo = mid + 1;
    }
    out.value = lo;
    return out;
}

}  // namespace planedeg
