#pragma once

// Shared hand-checked embeddings.  Rotations are entered counterclockwise
// (ascending angle); under the predecessor next-dart rule the face walk of
// the listed outer dart is then the outer face.

#include "planedeg/plane_graph.hpp"

namespace fixtures {

using planedeg::Dart;
using planedeg::PlaneGraph;
using planedeg::Vertex;

inline PlaneGraph triangle() {
    return PlaneGraph(3, {{1, 2}, {2, 0}, {0, 1}}, Dart{0, 1});
}

// outer face is the triangle 1,0,2; vertex 3 sits inside
inline PlaneGraph k4() {
    return PlaneGraph(4, {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}},
                      Dart{1, 0});
}

inline PlaneGraph cycle(int n) {
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return PlaneGraph(n, std::move(rot), Dart{0, 1});
}

inline PlaneGraph path(int n) {
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0) rot[i].push_back(i - 1);
        if (i + 1 < n) rot[i].push_back(i + 1);
    }
    return PlaneGraph(n, std::move(rot),
                      n >= 2 ? std::optional<Dart>(Dart{0, 1}) : std::nullopt);
}

// rim 0..4, hub 5
inline PlaneGraph wheel5() {
    std::vector<std::vector<Vertex>> rot(6);
    for (int i = 0; i < 5; ++i)
        rot[i] = {(i + 1) % 5, 5, (i + 4) % 5};
    rot[5] = {4, 0, 1, 2, 3};
    return PlaneGraph(6, std::move(rot), Dart{1, 0});
}

// two triangles 0,1,2 and 0,3,4 glued at 0
inline PlaneGraph bowtie() {
    return PlaneGraph(
        5, {{1, 4, 3, 2}, {0, 2}, {1, 0}, {0, 4}, {3, 0}}, Dart{0, 1});
}

// hexagon 0..5 with the diagonal 0-3
inline PlaneGraph hexagon_with_diagonal() {
    return PlaneGraph(6,
                      {{1, 3, 5}, {2, 0}, {3, 1}, {0, 2, 4}, {5, 3}, {0, 4}},
                      Dart{1, 0});
}

// pentagon 0..4 plus the interior chord path 0-5-6-2
inline PlaneGraph pentagon_with_3chord() {
    return PlaneGraph(7,
                      {{1, 5, 4},         // 0
                       {0, 2},            // 1
                       {3, 6, 1},         // 2
                       {4, 2},            // 3
                       {0, 3},            // 4
                       {0, 6},            // 5
                       {5, 2}},           // 6
                      Dart{1, 0});
}

// path 0-1-2 plus vertex 3 adjacent to all of it (X1 shape)
inline PlaneGraph fan3() {
    return PlaneGraph(4, {{1, 3}, {2, 0, 3}, {1, 3}, {2, 1, 0}}, Dart{0, 1});
}

// path 0-1-2-3, vertex 4 adjacent to 0,1, vertex 5 adjacent to 3,4
// (X3 shape)
inline PlaneGraph x3_shape() {
    return PlaneGraph(6,
                      {{1, 4},            // 0
                       {2, 0, 4},         // 1
                       {3, 1},            // 2
                       {2, 5},            // 3
                       {1, 0, 5},         // 4
                       {3, 4}},           // 5
                      Dart{0, 1});
}

}  // namespace fixtures
