#pragma once

// Girth-dependent weight functions: the pointwise-minimal weights under
// which every plane graph admits a full legal removal sequence, and the
// matching minimal list sizes (one more than the weight).

#include "planedeg/plane_graph.hpp"
#include "planedeg/weak_degeneracy.hpp"

namespace planedeg {

// f(v) = max{7 - g(v), 2}: 4 on girth-3 vertices, 3 on girth-4, 2 otherwise.
inline WeightFn local_girth_function(const PlaneGraph& g) {
    WeightFn f(g.capacity(), 0);
    for (Vertex v : g.vertices()) {
        switch (girth_class(girth_of_vertex(g, v))) {
            case GirthClass::G3: f[v] = 4; break;
            case GirthClass::G4: f[v] = 3; break;
            case GirthClass::GE5: f[v] = 2; break;
        }
    }
    return f;
}

// Minimal list sizes for correspondence colouring: |L(v)| = f(v) + 1.
inline std::vector<int> local_girth_list_sizes(const PlaneGraph& g) {
    std::vector<int> sizes = local_girth_function(g);
    for (Vertex v : g.vertices()) sizes[v] += 1;
    return sizes;
}

}  // namespace planedeg
