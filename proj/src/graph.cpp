#include "signedcolor/graph.hpp"

#include <algorithm>
#include <set>

namespace signedcolor {

SignedGraph::SignedGraph(int vertex_count, std::vector<SignedEdge> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0) {
        throw Error(errc::precondition, "vertex count must be nonnegative");
    }
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
            throw Error(errc::precondition,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") references a vertex outside [0," + std::to_string(vertex_count) + ")");
        }
        if (e.u == e.v) {
            throw Error(errc::precondition, "loop at vertex " + std::to_string(e.u));
        }
        if (e.sign != +1 && e.sign != -1) {
            throw Error(errc::precondition, "sign must be +1 or -1");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second) {
            throw Error(errc::precondition, "duplicate edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.sign});
        adjacency_[e.v].push_back({e.u, e.sign});
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

void SignedGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count_) {
        throw Error(errc::precondition, "vertex " + std::to_string(v) + " out of range");
    }
}

const std::vector<std::pair<VertexId, int>>& SignedGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool SignedGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<VertexId, int>{v, -2});
    return it != adj.end() && it->first == v;
}

int SignedGraph::sign(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<VertexId, int>{v, -2});
    if (it == adj.end() || it->first != v) {
        throw Error(errc::precondition,
                    "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    }
    return it->second;
}

ListAssignment::ListAssignment(int vertex_count) {
    if (vertex_count < 0) {
        throw Error(errc::precondition, "vertex count must be nonnegative");
    }
    lists_.resize(static_cast<std::size_t>(vertex_count));
}

ListAssignment::ListAssignment(int vertex_count, std::vector<std::vector<int>> lists)
    : ListAssignment(vertex_count) {
    if (static_cast<int>(lists.size()) != vertex_count) {
        throw Error(errc::precondition, "list assignment must cover every vertex");
    }
    for (int v = 0; v < vertex_count; ++v) assign(v, std::move(lists[v]));
}

void ListAssignment::assign(VertexId v, std::vector<int> values) {
    if (v < 0 || v >= vertex_count()) {
        throw Error(errc::precondition, "vertex " + std::to_string(v) + " out of range");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    lists_[v] = std::move(values);
}

const std::vector<int>& ListAssignment::at(VertexId v) const {
    if (v < 0 || v >= vertex_count()) {
        throw Error(errc::precondition, "vertex " + std::to_string(v) + " out of range");
    }
    return lists_[v];
}

bool ListAssignment::contains(VertexId v, int color) const {
    const auto& l = at(v);
    return std::binary_search(l.begin(), l.end(), color);
}

int ListAssignment::min_list_size() const {
    int m = lists_.empty() ? 0 : static_cast<int>(lists_[0].size());
    for (const auto& l : lists_) m = std::min(m, static_cast<int>(l.size()));
    return m;
}

std::optional<int> Coloring::get(VertexId v) const {
    auto it = colors_.find(v);
    if (it == colors_.end()) return std::nullopt;
    return it->second;
}

int Coloring::at(VertexId v) const {
    auto it = colors_.find(v);
    if (it == colors_.end()) {
        throw Error(errc::precondition, "vertex " + std::to_string(v) + " is uncolored");
    }
    return it->second;
}

bool Coloring::is_total_on(const SignedGraph& g) const {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!colors_.count(v)) return false;
    }
    return true;
}

ViolationReport validate_coloring(const SignedGraph& g, const Coloring& c) {
    for (const auto& [v, _] : c.values()) {
        if (v < 0 || v >= g.vertex_count()) {
            throw Error(errc::precondition,
                        "coloring mentions vertex " + std::to_string(v) + " outside the graph");
        }
    }
    ViolationReport report;
    for (const auto& e : g.edges()) {
        auto cu = c.get(e.u);
        auto cv = c.get(e.v);
        if (cu && cv && *cu == e.sign * *cv) {
            report.violating_edges.push_back(e);
            report.per_vertex_defect[e.u] += 1;
            report.per_vertex_defect[e.v] += 1;
        }
    }
    return report;
}

std::pair<bool, ViolationReport> validate_list_coloring(const SignedGraph& g,
                                                        const ListAssignment& lists,
                                                        const Coloring& c) {
    if (lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    if (!c.is_total_on(g)) {
        throw Error(errc::precondition, "coloring not total");
    }
    ViolationReport report = validate_coloring(g, c);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!lists.contains(v, c.at(v))) report.list_violations.push_back(v);
    }
    return {report.clean(), report};
}

int max_defect(const ViolationReport& report) {
    int best = 0;
    for (const auto& [_, d] : report.per_vertex_defect) best = std::max(best, d);
    return best;
}

std::vector<std::vector<VertexId>> connected_components(const SignedGraph& g) {
    std::vector<std::vector<VertexId>> components;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        std::vector<VertexId> comp{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (auto [w, _] : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

}  // namespace signedcolor
