#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "signedcolor/graph.hpp"

namespace signedcolor {

/// Per-vertex cyclic order of neighbors encoding a surface embedding.
/// rotation[v] must be a permutation of the neighbors of v.
using RotationSystem = std::vector<std::vector<VertexId>>;

/// One face of the embedding: the closed walk obtained by the next-dart rule.
struct Face {
    int id = 0;
    std::vector<VertexId> boundary;  // cyclic vertex walk, may revisit vertices

    bool is_simple_cycle() const;
};

enum class SignPolicy { always_positive, always_negative, alternating };

/// Partitions all darts into face walks. The successor of dart (u,v) is
/// (v,w) where w immediately precedes u in rotation[v]. Faces are emitted in
/// order of their smallest starting dart, so ids are deterministic.
std::vector<Face> trace_faces(const SignedGraph& g, const RotationSystem& rotation);

/// True iff V - E + F = 2 for the faces traced from the rotation system.
/// Disconnected input is an error rather than false.
bool validate_plane(const SignedGraph& g, const RotationSystem& rotation);

/// A signed graph together with a validated planar rotation system and a
/// designated outer face.
class PlaneGraph {
public:
    /// Validates connectivity, vertex_count >= 3, and the Euler relation.
    /// If outer_cycle is given it must match a traced face (up to rotation
    /// and reflection); otherwise the face of maximum boundary length is
    /// chosen, ties broken by smallest face id.
    PlaneGraph(SignedGraph graph, RotationSystem rotation,
               std::optional<std::vector<VertexId>> outer_cycle = std::nullopt);

    const SignedGraph& graph() const noexcept { return graph_; }
    const RotationSystem& rotation() const noexcept { return rotation_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    int outer_face() const noexcept { return outer_face_; }
    const Face& outer() const { return faces_[static_cast<std::size_t>(outer_face_)]; }

    /// Same embedding with a different face designated as outer.
    PlaneGraph with_outer_face(int face_id) const;

private:
    SignedGraph graph_;
    RotationSystem rotation_;
    std::vector<Face> faces_;
    int outer_face_ = 0;
};

/// True iff every bounded face is a triangle and the graph is 2-connected.
bool is_near_triangulation(const PlaneGraph& pg);

/// Adds chords until every bounded face is a triangle and the outer face is
/// a triangle containing the first two vertices of the original outer walk.
/// Existing edges and signs are never touched; new edges are signed by the
/// policy.
PlaneGraph triangulate(const PlaneGraph& pg, SignPolicy policy = SignPolicy::always_positive);

/// Interior-only variant: bounded faces become triangles, the outer face is
/// left alone. Used by the outerplanar solver.
PlaneGraph triangulate_interior(const PlaneGraph& pg,
                                SignPolicy policy = SignPolicy::always_positive);

/// Full triangulation that keeps the two named vertices on the outer
/// triangle instead of the first two of the outer walk.
PlaneGraph triangulate_keeping(const PlaneGraph& pg, SignPolicy policy, VertexId keep_a,
                               VertexId keep_b);

/// The outer face boundary as a simple cycle in trace orientation.
/// Errors if the outer walk revisits a vertex (input not 2-connected).
std::vector<VertexId> boundary_cycle(const PlaneGraph& pg);

/// Lexicographically smallest pair of 0-based positions (i, j) into
/// boundary_cycle(pg) such that the boundary vertices at i and j are joined
/// by an edge and are not consecutive on the cycle; absent if chordless.
std::optional<std::pair<int, int>> find_chord(const PlaneGraph& pg);

/// One side of a chord split, relabeled to dense indices, with the map back
/// to the parent graph's vertex ids.
struct ChordSplit {
    PlaneGraph piece;
    std::vector<VertexId> to_parent;  // piece vertex -> parent vertex
};

/// Splits a near-triangulation along a chord of its outer cycle. The pieces
/// share exactly the chord edge and its endpoints; the second piece is the
/// one containing boundary positions 0 and 1.
std::pair<ChordSplit, ChordSplit> split_along_chord(const PlaneGraph& pg,
                                                    std::pair<int, int> chord);

/// Interior neighbors of vp strictly between its boundary neighbors v1 and
/// vprev in rotation order, listed from the v1 side. Errors if a vertex of
/// the arc lies on the outer cycle (a chord at vp).
std::vector<VertexId> fan_neighbors(const PlaneGraph& pg, VertexId vp, VertexId v1,
                                    VertexId vprev);

}  // namespace signedcolor
