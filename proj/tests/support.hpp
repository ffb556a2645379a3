#pragma once

#include <vector>

#include "signedcolor/embedding.hpp"
#include "signedcolor/graph.hpp"
#include "signedcolor/rng.hpp"

namespace sct {

using namespace signedcolor;

inline SignedGraph make_triangle(int s01 = +1, int s02 = +1, int s12 = +1) {
    return SignedGraph(3, {{0, 1, s01}, {0, 2, s02}, {1, 2, s12}});
}

inline PlaneGraph make_plane_triangle(int s01 = +1, int s02 = +1, int s12 = +1) {
    return PlaneGraph(make_triangle(s01, s02, s12), {{1, 2}, {2, 0}, {0, 1}});
}

/// K4 embedded with vertex 3 inside triangle 0,1,2; the perfect matching
/// {03, 12} is negative, the four remaining edges positive.
inline SignedGraph make_k4_negative_matching() {
    return SignedGraph(4, {{0, 1, +1},
                           {0, 2, +1},
                           {1, 3, +1},
                           {2, 3, +1},
                           {0, 3, -1},
                           {1, 2, -1}});
}

inline RotationSystem k4_rotation() {
    return {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
}

inline PlaneGraph make_plane_k4_negative_matching() {
    return PlaneGraph(make_k4_negative_matching(), k4_rotation(), std::vector<VertexId>{1, 0, 2});
}

/// Wheel on rim 0..k-1 with hub k; rim edges and spokes positive by default.
inline SignedGraph make_wheel(int k, int rim_sign = +1, int spoke_sign = +1) {
    std::vector<SignedEdge> edges;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        edges.push_back({std::min(i, j), std::max(i, j), rim_sign});
        edges.push_back({i, k, spoke_sign});
    }
    return SignedGraph(k + 1, std::move(edges));
}

inline RotationSystem wheel_rotation(int k) {
    RotationSystem rot(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) {
        rot[static_cast<std::size_t>(i)] = {(i + 1) % k, k, (i + k - 1) % k};
    }
    for (int i = 0; i < k; ++i) rot[static_cast<std::size_t>(k)].push_back(i);
    return rot;
}

inline PlaneGraph make_plane_wheel(int k, int rim_sign = +1, int spoke_sign = +1) {
    return PlaneGraph(make_wheel(k, rim_sign, spoke_sign), wheel_rotation(k));
}

/// The three-vertex path with one positive and one negative edge.
inline SignedGraph make_mixed_path() {
    return SignedGraph(3, {{0, 1, +1}, {1, 2, -1}});
}

/// Independent classical proper-coloring check, coded apart from the signed
/// validator on purpose.
inline bool unsigned_proper(const SignedGraph& g, const Coloring& c) {
    for (const auto& e : g.edges()) {
        if (c.at(e.u) == c.at(e.v)) return false;
    }
    return true;
}

/// Random simple signed graph with edge probability num/den.
inline SignedGraph random_graph(int n, SplitMix64& rng, double edge_prob,
                                double negative_probability) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.bernoulli(edge_prob)) continue;
            edges.push_back({u, v, rng.bernoulli(negative_probability) ? -1 : +1});
        }
    }
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph all_positive(const SignedGraph& g) {
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) e.sign = +1;
    return SignedGraph(g.vertex_count(), std::move(edges));
}

}  // namespace sct
