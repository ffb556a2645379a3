#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "signedcolor/graph.hpp"

namespace signedcolor {

/// Vertex subset at which a switch is performed.
struct SwitchSet {
    std::vector<VertexId> members;  // sorted, duplicate-free after normalize()

    void normalize();
    bool contains(VertexId v) const;
};

/// Constructive answer to the balance question: either a vertex set whose
/// switch makes every edge positive, or a simple cycle of sign -1.
struct BalanceWitness {
    bool balanced = false;
    SwitchSet balancing_set;               // meaningful iff balanced
    std::vector<VertexId> negative_cycle;  // meaningful iff !balanced
};

/// Negates the sign of every edge with exactly one endpoint in the set.
SignedGraph switch_graph(const SignedGraph& g, const SwitchSet& set);

/// Flips every edge sign.
SignedGraph negate_all_signs(const SignedGraph& g);

/// Product of edge signs along the walk; a single vertex yields +1.
/// Consecutive walk vertices must be adjacent.
int walk_sign(const SignedGraph& g, const std::vector<VertexId>& walk);

/// Sign of the closed walk cycle[0] .. cycle.back() cycle[0].
int cycle_sign(const SignedGraph& g, const std::vector<VertexId>& cycle);

/// Balance test with a constructive witness in both branches. Disconnected
/// graphs are handled per component; the balancing sets are unioned.
BalanceWitness is_balanced(const SignedGraph& g);

/// If balanced, a bipartition (V1, V2) with positive edges inside a side and
/// negative edges across; absent otherwise.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> harary_bipartition(
    const SignedGraph& g);

/// True iff the sign-negated graph is balanced.
bool is_antibalanced(const SignedGraph& g);

/// Negates list entries on the switched set; sizes are preserved.
ListAssignment transport_lists(const ListAssignment& lists, const SwitchSet& set);

/// Negates colors on the switched set. Carries proper colorings of a graph to
/// proper colorings of the switched graph and back.
Coloring transport_coloring(const Coloring& c, const SwitchSet& set);

}  // namespace signedcolor
