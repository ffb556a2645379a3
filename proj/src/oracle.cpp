#include "signedcolor/oracle.hpp"

#include <algorithm>

namespace signedcolor {

namespace {

struct Searcher {
    const SignedGraph& g;
    OracleMode mode;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<int>> live;
    std::vector<std::optional<int>> assigned;

    Searcher(const SignedGraph& graph, const ListAssignment& lists, OracleMode m, long long b)
        : g(graph), mode(m), budget(b) {
        live.reserve(static_cast<std::size_t>(g.vertex_count()));
        for (VertexId v = 0; v < g.vertex_count(); ++v) live.push_back(lists.at(v));
        assigned.resize(static_cast<std::size_t>(g.vertex_count()));
    }

    bool edge_active(int sign) const {
        return mode == OracleMode::signed_all || sign == +1;
    }

    int pick_vertex() const {
        int best = -1;
        std::size_t best_size = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (assigned[v]) continue;
            if (best == -1 || live[v].size() < best_size) {
                best = v;
                best_size = live[v].size();
            }
        }
        return best;
    }

    bool search() {
        int v = pick_vertex();
        if (v == -1) return true;
        // Iterate over a copy: forward checking rewrites neighbors, not v.
        const std::vector<int> candidates = live[static_cast<std::size_t>(v)];
        for (int x : candidates) {
            ++nodes;
            if (budget > 0 && nodes > budget) {
                out_of_budget = true;
                return false;
            }
            assigned[static_cast<std::size_t>(v)] = x;
            std::vector<std::pair<VertexId, int>> trail;
            bool dead = false;
            for (auto [w, s] : g.neighbors(v)) {
                if (assigned[static_cast<std::size_t>(w)] || !edge_active(s)) continue;
                int forbidden = s * x;
                auto& lw = live[static_cast<std::size_t>(w)];
                auto it = std::lower_bound(lw.begin(), lw.end(), forbidden);
                if (it != lw.end() && *it == forbidden) {
                    lw.erase(it);
                    trail.push_back({w, forbidden});
                    if (lw.empty()) dead = true;
                }
            }
            if (!dead && search()) return true;
            if (out_of_budget) return false;
            for (auto [w, value] : trail) {
                auto& lw = live[static_cast<std::size_t>(w)];
                lw.insert(std::lower_bound(lw.begin(), lw.end(), value), value);
            }
            assigned[static_cast<std::size_t>(v)] = std::nullopt;
        }
        return false;
    }
};

}  // namespace

OracleResult brute_force_l_coloring(const SignedGraph& g, const ListAssignment& lists,
                                    OracleMode mode, long long node_budget) {
    if (lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    OracleResult result;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (lists.at(v).empty()) {
            result.status = OracleStatus::unsat;
            return result;
        }
    }
    Searcher searcher(g, lists, mode, node_budget);
    bool sat = searcher.search();
    result.nodes_explored = searcher.nodes;
    if (searcher.out_of_budget) {
        result.status = OracleStatus::budget_exhausted;
        return result;
    }
    if (!sat) {
        result.status = OracleStatus::unsat;
        return result;
    }
    Coloring witness;
    for (VertexId v = 0; v < g.vertex_count(); ++v) witness.set(v, *searcher.assigned[v]);
    for (const auto& e : g.edges()) {
        if (!searcher.edge_active(e.sign)) continue;
        if (witness.at(e.u) == e.sign * witness.at(e.v)) {
            throw Error(errc::internal, "oracle produced an invalid witness");
        }
    }
    result.status = OracleStatus::sat;
    result.witness = std::move(witness);
    return result;
}

namespace {

std::vector<std::vector<int>> k_subsets(const std::vector<int>& universe, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t t = start; t < universe.size(); ++t) {
            pick.push_back(universe[t]);
            self(self, t + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Pairs whose transposition is a sign-preserving automorphism.
std::vector<std::pair<VertexId, VertexId>> twin_pairs(const SignedGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> twins;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            bool twin = true;
            for (VertexId w = 0; w < g.vertex_count() && twin; ++w) {
                if (w == u || w == v) continue;
                bool eu = g.has_edge(u, w);
                bool ev = g.has_edge(v, w);
                if (eu != ev) twin = false;
                else if (eu && g.sign(u, w) != g.sign(v, w)) twin = false;
            }
            if (twin) twins.push_back({u, v});
        }
    }
    return twins;
}

}  // namespace

ChoosabilityResult check_choosability(const SignedGraph& g, int k,
                                      const std::vector<int>& universe) {
    if (k < 1) throw Error(errc::precondition, "k must be positive");
    std::vector<int> uni = universe;
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    if (static_cast<int>(uni.size()) < k) {
        throw Error(errc::precondition, "universe smaller than the requested list size");
    }
    const int n = g.vertex_count();
    std::vector<std::vector<int>> subsets = k_subsets(uni, k);
    double total = 1.0;
    for (int v = 0; v < n; ++v) total *= static_cast<double>(subsets.size());
    if (n > 6 || static_cast<int>(uni.size()) > 10 || total > 5e6) {
        throw Error(errc::precondition,
                    "instance too large for exhaustive choosability (need n <= 6, "
                    "|universe| <= 10, and |subsets|^n <= 5e6)");
    }

    const auto twins = twin_pairs(g);
    ChoosabilityResult result;
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    while (true) {
        bool canonical = true;
        for (auto [u, v] : twins) {
            if (digit[static_cast<std::size_t>(u)] > digit[static_cast<std::size_t>(v)]) {
                canonical = false;
                break;
            }
        }
        if (canonical) {
            ListAssignment lists(n);
            for (int v = 0; v < n; ++v) {
                lists.assign(v, subsets[digit[static_cast<std::size_t>(v)]]);
            }
            ++result.assignments_checked;
            OracleResult verdict = brute_force_l_coloring(g, lists, OracleMode::signed_all, 0);
            if (verdict.status == OracleStatus::unsat) {
                result.choosable = false;
                result.refutation = std::move(lists);
                return result;
            }
        }
        int pos = n - 1;
        while (pos >= 0) {
            if (++digit[static_cast<std::size_t>(pos)] < subsets.size()) break;
            digit[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    result.choosable = true;
    return result;
}

namespace {

bool sandwich_search(const SignedGraph& g, const ListAssignment& lists, Coloring& partial,
                     VertexId v) {
    if (v == g.vertex_count()) {
        return validate_coloring(g, partial).violating_edges.empty();
    }
    for (int x : lists.at(v)) {
        if (x <= 0) continue;
        bool clash = false;
        for (auto [w, _] : g.neighbors(v)) {
            auto cw = partial.get(w);
            if (cw && *cw == x) clash = true;
        }
        if (clash) continue;
        partial.set(v, x);
        if (!sandwich_search(g, lists, partial, v + 1)) return false;
        partial.unset(v);
    }
    return true;
}

}  // namespace

bool sandwich_check(const SignedGraph& g, const ListAssignment& lists) {
    if (lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    Coloring partial;
    return sandwich_search(g, lists, partial, 0);
}

}  // namespace signedcolor
