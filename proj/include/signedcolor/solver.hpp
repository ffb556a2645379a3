#pragma once

#include "signedcolor/embedding.hpp"
#include "signedcolor/graph.hpp"

namespace signedcolor {

/// Precoloring-extension instance on a near-triangulation: v1 and v2 are
/// adjacent on the outer cycle and precolored consistently; the remaining
/// outer vertices carry lists of size >= 3, interior vertices >= 5.
struct ExtensionProblem {
    PlaneGraph pg;
    ListAssignment lists;
    VertexId v1 = 0;
    int c1 = 0;
    VertexId v2 = 0;
    int c2 = 0;
};

/// Extends the two-vertex precoloring to a proper list coloring of the whole
/// near-triangulation. Hypothesis violations are reported as precondition
/// errors naming the failed condition; the solver itself cannot fail on
/// valid input.
Coloring extend_precoloring(const ExtensionProblem& problem);

/// Proper list coloring of any plane signed graph from 5-lists: triangulate,
/// precolor two outer vertices from their lists, extend, restrict.
Coloring five_list_color(const PlaneGraph& pg, const ListAssignment& lists,
                         SignPolicy policy = SignPolicy::always_positive);

/// Extends an arbitrary proper precoloring of one edge, re-rooting the
/// embedding so that the edge lies on the outer face. Lists are required
/// only away from u and v.
Coloring two_vertex_extension(const PlaneGraph& pg, VertexId u, VertexId v, int cu, int cv,
                              const ListAssignment& lists);

/// Proper coloring with all values in {-2,-1,0,1,2}.
Coloring symmetric_five_color(const PlaneGraph& pg);

/// Proper list coloring from 3-lists when every vertex lies on the outer
/// face: triangulate the interior and run the extension with no interior
/// vertices.
Coloring outerplanar_three_list_color(const PlaneGraph& pg, const ListAssignment& lists);

/// Smallest d such that every subgraph has a vertex of degree <= d.
int degeneracy(const SignedGraph& g);

/// Sequential coloring along a degeneracy order; needs lists of size at
/// least degeneracy + 1.
Coloring degeneracy_greedy_color(const SignedGraph& g, const ListAssignment& lists);

/// Coloring from 4-lists in which every vertex has at most one conflicting
/// neighbor. The output is checked against that bound before returning.
Coloring defective_four_list_color(const PlaneGraph& pg, const ListAssignment& lists);

}  // namespace signedcolor
