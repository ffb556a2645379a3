#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signedcolor/embedding.hpp"
#include "signedcolor/graph.hpp"

namespace signedcolor {

/// In-memory form of the single instance text format. Vertices are dense
/// indices; external names, when present, are resolved at this boundary and
/// kept only for round-tripping.
struct InstanceFile {
    int format_version = 1;
    int vertex_count = 0;
    std::vector<std::string> names;  // empty when vertices are unnamed
    std::vector<SignedEdge> edges;
    std::optional<RotationSystem> rotation;
    std::optional<std::vector<VertexId>> outer_face;
    std::optional<ListAssignment> lists;
    Coloring precoloring;  // empty map when absent

    SignedGraph graph() const;
    /// Requires a rotation system in the file.
    PlaneGraph plane_graph() const;
};

/// Parses the JSON instance format; errors name the offending field and
/// vertex. serialize(parse(text)) is a normal form of text.
InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& instance);

/// Coloring files: {"format_version": 1, "coloring": {"0": 1, ...}}.
Coloring parse_coloring(const std::string& text);
std::string serialize_coloring(const Coloring& coloring);

/// Random stacked triangulation: start from a triangle, repeatedly insert a
/// vertex into a uniformly random bounded face joined to its three corners.
/// Signs are negative independently with the given probability. The output
/// is a near-triangulation with a triangular outer face and 3n-6 edges.
InstanceFile gen_stacked_triangulation(int n, std::uint64_t seed, double negative_probability);

/// Random maximal outerplanar instance: a convex polygon triangulated by a
/// random ear sequence, random signs; every vertex on the outer face.
InstanceFile gen_outerplanar(int n, std::uint64_t seed, double negative_probability);

struct ListProfile {
    enum class Kind { uniform, thomassen } kind = Kind::uniform;
    int uniform_size = 5;

    static ListProfile uniform(int k) { return {Kind::uniform, k}; }
    static ListProfile thomassen() { return {Kind::thomassen, 0}; }
};

/// Random distinct integers from [color_lo, color_hi] per vertex. The
/// thomassen profile sizes outer-face vertices at 3 and interior vertices at
/// 5 and therefore needs an embedding in the instance.
ListAssignment gen_lists(const InstanceFile& instance, const ListProfile& profile, int color_lo,
                         int color_hi, std::uint64_t seed);

}  // namespace signedcolor
