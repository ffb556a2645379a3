#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace signedcolor {

/// Dense vertex index in [0, n).
using VertexId = int;

/// Error classes surfaced by the library; the CLI maps them to exit codes.
enum class errc {
    precondition,  ///< caller violated a documented precondition
    format,        ///< malformed instance or coloring text
    internal,      ///< invariant breach; reaching this is a bug
    unsupported,   ///< instance outside the supported problem class
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct SignedEdge {
    VertexId u = 0;
    VertexId v = 0;
    int sign = +1;  // +1 or -1

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Immutable simple graph with a sign in {+1,-1} on every edge.
///
/// Edges are normalized to u < v and kept sorted; adjacency lists are sorted
/// by neighbor index so iteration order is deterministic everywhere.
class SignedGraph {
public:
    SignedGraph(int vertex_count, std::vector<SignedEdge> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

    /// Neighbors of v with the sign of the connecting edge, sorted by index.
    const std::vector<std::pair<VertexId, int>>& neighbors(VertexId v) const;

    bool has_edge(VertexId u, VertexId v) const;

    /// Sign of edge uv. Querying a non-edge is an error, not a default.
    int sign(VertexId u, VertexId v) const;

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

private:
    void check_vertex(VertexId v) const;

    int vertex_count_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<std::pair<VertexId, int>>> adjacency_;
};

/// Per-vertex finite color sets. Every vertex of the associated graph has an
/// entry (possibly empty); entries are kept sorted and duplicate-free.
class ListAssignment {
public:
    explicit ListAssignment(int vertex_count);
    ListAssignment(int vertex_count, std::vector<std::vector<int>> lists);

    void assign(VertexId v, std::vector<int> values);
    const std::vector<int>& at(VertexId v) const;
    bool contains(VertexId v, int color) const;
    int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
    int min_list_size() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<int>> lists_;
};

/// Partial or total coloring: a map from vertices to integers.
class Coloring {
public:
    Coloring() = default;

    void set(VertexId v, int color) { colors_[v] = color; }
    void unset(VertexId v) { colors_.erase(v); }
    std::optional<int> get(VertexId v) const;
    bool has(VertexId v) const { return colors_.count(v) != 0; }
    int at(VertexId v) const;
    std::size_t size() const noexcept { return colors_.size(); }
    bool empty() const noexcept { return colors_.empty(); }
    bool is_total_on(const SignedGraph& g) const;
    const std::map<VertexId, int>& values() const noexcept { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::map<VertexId, int> colors_;
};

/// Outcome of checking a coloring against the signed constraint
/// c(u) != sign(uv) * c(v). Vertices absent from per_vertex_defect have
/// defect zero.
struct ViolationReport {
    std::vector<SignedEdge> violating_edges;
    std::map<VertexId, int> per_vertex_defect;
    std::vector<VertexId> list_violations;  // filled by validate_list_coloring

    bool clean() const { return violating_edges.empty() && list_violations.empty(); }
};

/// Lists exactly the edges whose endpoints are both colored and in conflict.
/// Partial colorings are legal input; uncolored endpoints never violate.
ViolationReport validate_coloring(const SignedGraph& g, const Coloring& c);

/// True iff c is total, conflict-free, and c(v) is in L(v) for every vertex.
/// The report additionally names vertices whose color misses their list.
std::pair<bool, ViolationReport> validate_list_coloring(const SignedGraph& g,
                                                        const ListAssignment& lists,
                                                        const Coloring& c);

/// Largest per-vertex defect in the report; 0 for an empty report.
int max_defect(const ViolationReport& report);

/// Vertex sets of the connected components, each sorted, ordered by smallest
/// member.
std::vector<std::vector<VertexId>> connected_components(const SignedGraph& g);

}  // namespace signedcolor
