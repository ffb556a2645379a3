#pragma once

#include <optional>
#include <vector>

#include "signedcolor/graph.hpp"

namespace signedcolor {

enum class OracleStatus { sat, unsat, budget_exhausted };

/// Which edges constrain the search: all of them, or positive edges only.
enum class OracleMode { signed_all, positive_only };

struct OracleResult {
    OracleStatus status = OracleStatus::unsat;
    std::optional<Coloring> witness;  // present iff sat
    long long nodes_explored = 0;
};

/// Exhaustive backtracking search for a proper list coloring, with
/// minimum-remaining-values vertex ordering and forward checking. A zero
/// node budget means unbounded search, so unsat answers are exhaustive.
OracleResult brute_force_l_coloring(const SignedGraph& g, const ListAssignment& lists,
                                    OracleMode mode = OracleMode::signed_all,
                                    long long node_budget = 0);

struct ChoosabilityResult {
    bool choosable = false;                    // over the given universe only
    std::optional<ListAssignment> refutation;  // first unsatisfiable assignment found
    long long assignments_checked = 0;
};

/// Sweeps every assignment of k-subsets of the universe over the vertices.
/// The verdict is relative to the universe; it is not a certificate of true
/// k-choosability. Instances past a small size bound are rejected.
ChoosabilityResult check_choosability(const SignedGraph& g, int k,
                                      const std::vector<int>& universe);

/// True iff every coloring from the lists that uses positive values only and
/// is proper in the unsigned sense also passes the signed validator.
bool sandwich_check(const SignedGraph& g, const ListAssignment& lists);

}  // namespace signedcolor
