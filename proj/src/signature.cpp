#include "signedcolor/signature.hpp"

#include <algorithm>

namespace signedcolor {

void SwitchSet::normalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool SwitchSet::contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

namespace {

std::vector<char> membership_mask(const SignedGraph& g, const SwitchSet& set) {
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : set.members) {
        if (v < 0 || v >= g.vertex_count()) {
            throw Error(errc::precondition,
                        "switch set mentions vertex " + std::to_string(v) + " outside the graph");
        }
        in_set[v] = 1;
    }
    return in_set;
}

}  // namespace

SignedGraph switch_graph(const SignedGraph& g, const SwitchSet& set) {
    auto in_set = membership_mask(g, set);
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) {
        if (in_set[e.u] != in_set[e.v]) e.sign = -e.sign;
    }
    return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph negate_all_signs(const SignedGraph& g) {
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) e.sign = -e.sign;
    return SignedGraph(g.vertex_count(), std::move(edges));
}

int walk_sign(const SignedGraph& g, const std::vector<VertexId>& walk) {
    if (walk.empty()) {
        throw Error(errc::precondition, "walk must contain at least one vertex");
    }
    int product = +1;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        product *= g.sign(walk[i], walk[i + 1]);  // throws on non-adjacent pair
    }
    return product;
}

int cycle_sign(const SignedGraph& g, const std::vector<VertexId>& cycle) {
    if (cycle.size() < 3) {
        throw Error(errc::precondition, "cycle must have at least three vertices");
    }
    std::vector<VertexId> closed = cycle;
    closed.push_back(cycle.front());
    return walk_sign(g, closed);
}

BalanceWitness is_balanced(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> label(static_cast<std::size_t>(n), 0);  // f(v) in {+1,-1}, 0 = unvisited

    // Breadth-first spanning forest; roots are the lowest-index vertex of
    // each component, neighbors expand in ascending order.
    for (VertexId root = 0; root < n; ++root) {
        if (label[root] != 0) continue;
        label[root] = +1;
        std::vector<VertexId> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId u = queue[head];
            for (auto [w, s] : g.neighbors(u)) {
                if (label[w] == 0) {
                    label[w] = label[u] * s;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }

    auto is_tree_edge = [&](VertexId u, VertexId v) { return parent[v] == u || parent[u] == v; };

    for (const auto& e : g.edges()) {
        if (is_tree_edge(e.u, e.v)) continue;
        if (e.sign == label[e.u] * label[e.v]) continue;

        // The non-tree edge closes a negative cycle through the tree paths.
        auto path_to_root = [&](VertexId v) {
            std::vector<VertexId> path{v};
            while (parent[path.back()] != -1) path.push_back(parent[path.back()]);
            return path;
        };
        std::vector<VertexId> pu = path_to_root(e.u);
        std::vector<VertexId> pv = path_to_root(e.v);
        // Strip the shared prefix on the root side, keeping the meet vertex.
        while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 1] == pv[pv.size() - 1] &&
               pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
        }
        BalanceWitness witness;
        witness.balanced = false;
        witness.negative_cycle = pu;  // e.u .. meet
        for (std::size_t i = pv.size() - 1; i-- > 0;) witness.negative_cycle.push_back(pv[i]);
        if (cycle_sign(g, witness.negative_cycle) != -1) {
            throw Error(errc::internal, "constructed cycle is not negative");
        }
        return witness;
    }

    BalanceWitness witness;
    witness.balanced = true;
    for (VertexId v = 0; v < n; ++v) {
        if (label[v] == -1) witness.balancing_set.members.push_back(v);
    }
    return witness;
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> harary_bipartition(
    const SignedGraph& g) {
    BalanceWitness witness = is_balanced(g);
    if (!witness.balanced) return std::nullopt;
    std::vector<VertexId> side1;
    std::vector<VertexId> side2 = witness.balancing_set.members;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!witness.balancing_set.contains(v)) side1.push_back(v);
    }
    return std::make_pair(std::move(side1), std::move(side2));
}

bool is_antibalanced(const SignedGraph& g) {
    return is_balanced(negate_all_signs(g)).balanced;
}

ListAssignment transport_lists(const ListAssignment& lists, const SwitchSet& set) {
    SwitchSet norm = set;
    norm.normalize();
    ListAssignment out(lists.vertex_count());
    for (VertexId v = 0; v < lists.vertex_count(); ++v) {
        std::vector<int> values = lists.at(v);
        if (norm.contains(v)) {
            for (int& x : values) x = -x;
        }
        out.assign(v, std::move(values));
    }
    return out;
}

Coloring transport_coloring(const Coloring& c, const SwitchSet& set) {
    SwitchSet norm = set;
    norm.normalize();
    Coloring out;
    for (const auto& [v, color] : c.values()) {
        out.set(v, norm.contains(v) ? -color : color);
    }
    return out;
}

}  // namespace signedcolor
