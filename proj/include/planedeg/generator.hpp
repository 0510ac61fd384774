#pragma once

// Deterministic random plane graphs: grow a triangulation by splitting a
// uniformly chosen internal face with a new vertex, then thin it out by
// deleting non-bridge edges with probability 1 - keep.  The PRNG is a fixed
// splitmix64 so corpora referenced by tests reproduce everywhere.

#include <cstdint>

#include "planedeg/plane_graph.hpp"

namespace planedeg {

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Seed-addressed stream: one generator per (seed, stream) pair.
inline SplitMix64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return SplitMix64{(seed + 1) * 0x9E3779B97F4A7C15ULL +
                      stream * 0xD1B54A32D192ED03ULL};
}

inline PlaneGraph generate_plane_graph(std::uint64_t seed, int n,
                                       double keep_probability) {
    require(n >= 3, "generator needs n >= 3");
    require(keep_probability >= 0.0 && keep_probability <= 1.0,
            "keep probability must be in [0, 1]");
    SplitMix64 rng = seeded_rng(seed);

    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    // internal faces as vertex triples in face-walk order
    std::vector<std::array<Vertex, 3>> faces{{1, 0, 2}};

    auto insert_before = [&](Vertex at, Vertex before, Vertex x) {
        auto& r = rot[at];
        r.insert(std::find(r.begin(), r.end(), before), x);
    };

    for (Vertex x = 3; x < n; ++x) {
        std::size_t pick = static_cast<std::size_t>(rng.below(faces.size()));
        auto [a, b, c] = faces[pick];
        // at each corner the new spoke enters right before the walk's
        // incoming neighbour
        insert_before(a, c, x);
        insert_before(b, a, x);
        insert_before(c, b, x);
        rot[x] = {a, b, c};
        faces[pick] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
    }

    PlaneGraph g(n, std::move(rot), Dart{0, 1});

    if (keep_probability < 1.0) {
        for (auto [u, v] : g.edges()) {
            if (rng.unit() < keep_probability) continue;
            // keep bridges: deletion must not disconnect
            std::vector<char> seen(g.capacity(), 0);
            std::vector<Vertex> stack{u};
            seen[u] = 1;
            bool reach = false;
            while (!stack.empty() && !reach) {
                Vertex x2 = stack.back();
                stack.pop_back();
                for (Vertex y : g.rotation(x2)) {
                    if (x2 == u && y == v) continue;
                    if (y == v) reach = true;
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            if (reach) g.remove_edge(u, v);
        }
    }
    g.check_valid();
    return g;
}

}  // namespace planedeg
