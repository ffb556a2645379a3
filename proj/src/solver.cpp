#include "signedcolor/solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <variant>

namespace signedcolor {

namespace {

enum class Mode { strict, defective };

/// Iterative worker for the boundary extension. Pieces are represented by
/// their outer cycles in pinned-first order (the precolored pair at the
/// front); the direction flag records whether that order agrees with the
/// trace orientation of the embedding, which determines the inside sector
/// at each boundary vertex.
class Extender {
public:
    Extender(const PlaneGraph& pg, const ListAssignment& lists, Mode mode)
        : g_(pg.graph()), rot_(pg.rotation()), mode_(mode) {
        const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
        live_.reserve(n);
        for (VertexId v = 0; v < g_.vertex_count(); ++v) live_.push_back(lists.at(v));
        color_.resize(n);
        defect_.assign(n, 0);
        pos_.assign(n, -1);
        stamp_.assign(n, 0);
        removed_.assign(n, 0);
    }

    Coloring run(std::vector<VertexId> cycle, bool forward, int c1, int c2) {
        forward_ = forward;
        color_[static_cast<std::size_t>(cycle[0])] = c1;
        color_[static_cast<std::size_t>(cycle[1])] = c2;
        stack_.push_back(SolveTask{std::move(cycle)});
        while (!stack_.empty()) {
            WorkItem item = std::move(stack_.back());
            stack_.pop_back();
            if (std::holds_alternative<SolveTask>(item)) {
                solve(std::get<SolveTask>(item).cycle);
            } else {
                finish(std::get<FinishTask>(item));
            }
        }
        Coloring out;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (!color_[static_cast<std::size_t>(v)]) {
                throw Error(errc::internal, "extension left vertex " + std::to_string(v) + " uncolored");
            }
            out.set(v, *color_[static_cast<std::size_t>(v)]);
        }
        return out;
    }

private:
    struct SolveTask {
        std::vector<VertexId> cycle;
    };
    struct FinishTask {
        VertexId vp;
        int x;
        int y;
    };
    using WorkItem = std::variant<SolveTask, FinishTask>;

    int color_of(VertexId v) const {
        const auto& c = color_[static_cast<std::size_t>(v)];
        if (!c) throw Error(errc::internal, "pinned vertex " + std::to_string(v) + " is uncolored");
        return *c;
    }

    /// Successor-direction arc of rotation(v) strictly between from and to.
    std::vector<VertexId> rot_arc(VertexId v, VertexId from, VertexId to) const {
        const auto& rot = rot_[static_cast<std::size_t>(v)];
        int start = -1;
        for (std::size_t k = 0; k < rot.size(); ++k) {
            if (rot[k] == from) start = static_cast<int>(k);
        }
        if (start < 0) throw Error(errc::internal, "rotation arc start is not a neighbor");
        std::vector<VertexId> arc;
        const int m = static_cast<int>(rot.size());
        for (int s = 1; s < m; ++s) {
            VertexId w = rot[static_cast<std::size_t>((start + s) % m)];
            if (w == to) return arc;
            arc.push_back(w);
        }
        throw Error(errc::internal, "rotation arc never reached its endpoint");
    }

    /// Interior fan of the removal vertex cycle.back(), ordered from the
    /// pinned side (cycle[0]) toward cycle[p-2].
    std::vector<VertexId> fan_of(const std::vector<VertexId>& cycle) const {
        const std::size_t p = cycle.size();
        VertexId vp = cycle[p - 1];
        if (forward_) {
            std::vector<VertexId> arc = rot_arc(vp, cycle[p - 2], cycle[0]);
            std::reverse(arc.begin(), arc.end());
            return arc;
        }
        return rot_arc(vp, cycle[0], cycle[p - 2]);
    }

    std::optional<std::pair<int, int>> scan_chord(const std::vector<VertexId>& cycle) {
        const int p = static_cast<int>(cycle.size());
        ++cur_stamp_;
        for (int i = 0; i < p; ++i) {
            pos_[static_cast<std::size_t>(cycle[i])] = i;
            stamp_[static_cast<std::size_t>(cycle[i])] = cur_stamp_;
        }
        for (int i = 0; i < p; ++i) {
            int best = -1;
            for (auto [w, s] : g_.neighbors(cycle[static_cast<std::size_t>(i)])) {
                if (stamp_[static_cast<std::size_t>(w)] != cur_stamp_) continue;
                int j = pos_[static_cast<std::size_t>(w)];
                if (j < i + 2) continue;
                if (i == 0 && j == p - 1) continue;
                if (best == -1 || j < best) best = j;
            }
            if (best != -1) return std::make_pair(i, best);
        }
        return std::nullopt;
    }

    void solve(const std::vector<VertexId>& cycle) {
        const int p = static_cast<int>(cycle.size());
        if (p < 3) throw Error(errc::internal, "piece boundary degenerated below a triangle");
        if (p == 3) {
            std::vector<VertexId> fan = fan_of(cycle);
            if (fan.empty()) {
                base_case(cycle);
            } else {
                remove_boundary_vertex(cycle, fan);
            }
            return;
        }
        if (auto chord = scan_chord(cycle)) {
            split(cycle, chord->first, chord->second);
            return;
        }
        std::vector<VertexId> fan = fan_of(cycle);
        if (fan.empty()) {
            throw Error(errc::internal, "chordless boundary vertex has no interior fan");
        }
        remove_boundary_vertex(cycle, fan);
    }

    void base_case(const std::vector<VertexId>& cycle) {
        VertexId v3 = cycle[2];
        if (color_[static_cast<std::size_t>(v3)]) {
            throw Error(errc::internal, "base case reached an already colored vertex");
        }
        const int f1 = g_.sign(cycle[0], v3) * color_of(cycle[0]);
        const int f2 = g_.sign(cycle[1], v3) * color_of(cycle[1]);
        for (int value : live_[static_cast<std::size_t>(v3)]) {
            if (value != f1 && value != f2) {
                color_[static_cast<std::size_t>(v3)] = value;
                return;
            }
        }
        throw Error(errc::internal, "base case found no admissible color");
    }

    void split(const std::vector<VertexId>& cycle, int i, int j) {
        const int p = static_cast<int>(cycle.size());
        std::vector<VertexId> with_start;   // piece keeping the pinned pair
        std::vector<VertexId> other;        // piece pinned at the chord
        if (i == 0) {
            with_start.assign(cycle.begin(), cycle.begin() + j + 1);
            other.push_back(cycle[0]);
            other.insert(other.end(), cycle.begin() + j, cycle.end());
        } else {
            with_start.assign(cycle.begin(), cycle.begin() + i + 1);
            with_start.insert(with_start.end(), cycle.begin() + j, cycle.end());
            other.push_back(cycle[static_cast<std::size_t>(j)]);
            other.insert(other.end(), cycle.begin() + i, cycle.begin() + j);
        }
        if (static_cast<int>(with_start.size()) >= p || static_cast<int>(other.size()) >= p ||
            with_start.size() < 3 || other.size() < 3) {
            throw Error(errc::internal, "chord split did not shrink both pieces");
        }
        // The chord piece runs after the pinned piece has colored its ends.
        stack_.push_back(SolveTask{std::move(other)});
        stack_.push_back(SolveTask{std::move(with_start)});
    }

    void remove_boundary_vertex(const std::vector<VertexId>& cycle,
                                const std::vector<VertexId>& fan) {
        const std::size_t p = cycle.size();
        ++cur_stamp_;
        for (VertexId v : cycle) stamp_[static_cast<std::size_t>(v)] = cur_stamp_;
        const VertexId vp = cycle[p - 1];
        const VertexId v1 = cycle[0];
        auto& live_vp = live_[static_cast<std::size_t>(vp)];
        const int barred = g_.sign(v1, vp) * color_of(v1);
        int x = 0;
        int y = 0;
        int found = 0;
        for (int value : live_vp) {
            if (value == barred) continue;
            (found == 0 ? x : y) = value;
            if (++found == 2) break;
        }
        if (found < 2) {
            throw Error(errc::internal, "reserve pool at the removal vertex is too small");
        }
        for (VertexId u : fan) {
            auto& lu = live_[static_cast<std::size_t>(u)];
            if (removed_[static_cast<std::size_t>(u)] ||
                stamp_[static_cast<std::size_t>(u)] == cur_stamp_ ||
                color_[static_cast<std::size_t>(u)]) {
                throw Error(errc::internal, "fan of the removal vertex left the piece interior");
            }
            const std::size_t before = lu.size();
            if (before < (mode_ == Mode::strict ? 5u : 4u)) {
                throw Error(errc::internal, "interior fan vertex has a short list");
            }
            const int s = g_.sign(vp, u);
            erase_value(lu, s * x);
            if (mode_ == Mode::strict) erase_value(lu, s * y);
            if (lu.size() < 3) {
                throw Error(errc::internal, "fan deletion dropped a list below size 3");
            }
        }
        removed_[static_cast<std::size_t>(vp)] = 1;
        std::vector<VertexId> next(cycle.begin(), cycle.end() - 1);
        next.insert(next.end(), fan.rbegin(), fan.rend());
        stack_.push_back(FinishTask{vp, x, y});
        stack_.push_back(SolveTask{std::move(next)});
    }

    static void erase_value(std::vector<int>& sorted, int value) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
        if (it != sorted.end() && *it == value) sorted.erase(it);
    }

    std::vector<VertexId> conflicts(VertexId v, int value) const {
        std::vector<VertexId> out;
        for (auto [w, s] : g_.neighbors(v)) {
            const auto& cw = color_[static_cast<std::size_t>(w)];
            if (cw && *cw == s * value) out.push_back(w);
        }
        return out;
    }

    void finish(const FinishTask& task) {
        if (color_[static_cast<std::size_t>(task.vp)]) {
            throw Error(errc::internal, "removal vertex was colored twice");
        }
        if (mode_ == Mode::strict) {
            for (int value : {task.x, task.y}) {
                if (conflicts(task.vp, value).empty()) {
                    color_[static_cast<std::size_t>(task.vp)] = value;
                    return;
                }
            }
            throw Error(errc::internal, "both reserve colors are blocked");
        }
        finish_defective(task);
    }

    void finish_defective(const FinishTask& task) {
        std::vector<int> candidates{task.x, task.y};
        for (int value : live_[static_cast<std::size_t>(task.vp)]) {
            if (value != task.x && value != task.y) candidates.push_back(value);
        }
        for (int value : candidates) {
            if (conflicts(task.vp, value).empty()) {
                color_[static_cast<std::size_t>(task.vp)] = value;
                return;
            }
        }
        for (int value : candidates) {
            std::vector<VertexId> bad = conflicts(task.vp, value);
            if (bad.size() != 1) continue;
            VertexId w = bad[0];
            if (defect_[static_cast<std::size_t>(task.vp)] == 0 &&
                defect_[static_cast<std::size_t>(w)] == 0) {
                defect_[static_cast<std::size_t>(task.vp)] = 1;
                defect_[static_cast<std::size_t>(w)] += 1;
                color_[static_cast<std::size_t>(task.vp)] = value;
                return;
            }
        }
        throw Error(errc::internal, "defect budget exhausted at the removal vertex");
    }

    const SignedGraph& g_;
    const RotationSystem& rot_;
    Mode mode_;
    bool forward_ = true;
    std::vector<std::vector<int>> live_;
    std::vector<std::optional<int>> color_;
    std::vector<int> defect_;
    std::vector<int> pos_;
    std::vector<int> stamp_;
    std::vector<char> removed_;
    int cur_stamp_ = 0;
    std::vector<WorkItem> stack_;
};

/// Locates the pinned pair on the outer walk and returns the cycle in
/// pinned-first order together with the orientation flag.
std::pair<std::vector<VertexId>, bool> orient_entry(const PlaneGraph& pg, VertexId v1,
                                                    VertexId v2) {
    std::vector<VertexId> walk = boundary_cycle(pg);
    const int p = static_cast<int>(walk.size());
    int a = -1;
    for (int i = 0; i < p; ++i) {
        if (walk[static_cast<std::size_t>(i)] == v1) a = i;
    }
    if (a < 0) {
        throw Error(errc::precondition, "v1 must lie on the outer cycle");
    }
    if (walk[static_cast<std::size_t>((a + 1) % p)] == v2) {
        std::vector<VertexId> cycle;
        for (int t = 0; t < p; ++t) cycle.push_back(walk[static_cast<std::size_t>((a + t) % p)]);
        return {std::move(cycle), true};
    }
    if (walk[static_cast<std::size_t>((a - 1 + p) % p)] == v2) {
        std::vector<VertexId> cycle;
        for (int t = 0; t < p; ++t) cycle.push_back(walk[static_cast<std::size_t>((a - t + p) % p)]);
        return {std::move(cycle), false};
    }
    throw Error(errc::precondition, "v1 and v2 must be consecutive on the outer cycle");
}

void check_extension_hypotheses(const ExtensionProblem& prob) {
    const SignedGraph& g = prob.pg.graph();
    if (prob.lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    if (!is_near_triangulation(prob.pg)) {
        throw Error(errc::precondition, "extension input must be a near-triangulation");
    }
    if (!g.has_edge(prob.v1, prob.v2)) {
        throw Error(errc::precondition, "hypothesis (i) violated: v1 and v2 are not adjacent");
    }
    if (!prob.lists.contains(prob.v1, prob.c1) || !prob.lists.contains(prob.v2, prob.c2)) {
        throw Error(errc::precondition,
                    "hypothesis (i) violated: a precolor is missing from its list");
    }
    if (prob.c1 == g.sign(prob.v1, prob.v2) * prob.c2) {
        throw Error(errc::precondition,
                    "hypothesis (i) violated: the precoloring conflicts on edge v1v2");
    }
    std::vector<VertexId> walk = boundary_cycle(prob.pg);
    std::vector<char> on_boundary(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : walk) on_boundary[static_cast<std::size_t>(v)] = 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int size = static_cast<int>(prob.lists.at(v).size());
        if (v == prob.v1 || v == prob.v2) continue;
        if (on_boundary[static_cast<std::size_t>(v)]) {
            if (size < 3) {
                throw Error(errc::precondition, "hypothesis (ii) violated at vertex " +
                                                    std::to_string(v) + ": boundary list has size " +
                                                    std::to_string(size) + " < 3");
            }
        } else if (size < 5) {
            throw Error(errc::precondition, "hypothesis (iii) violated at vertex " +
                                                std::to_string(v) + ": interior list has size " +
                                                std::to_string(size) + " < 5");
        }
    }
}

Coloring run_extension(const ExtensionProblem& prob, Mode mode) {
    auto [cycle, forward] = orient_entry(prob.pg, prob.v1, prob.v2);
    Extender extender(prob.pg, prob.lists, mode);
    return extender.run(std::move(cycle), forward, prob.c1, prob.c2);
}

int smallest(const std::vector<int>& values) {
    if (values.empty()) throw Error(errc::internal, "expected a nonempty list");
    return values.front();
}

int smallest_avoiding(const std::vector<int>& values, int barred) {
    for (int v : values) {
        if (v != barred) return v;
    }
    throw Error(errc::internal, "no admissible second precolor");
}

}  // namespace

Coloring extend_precoloring(const ExtensionProblem& problem) {
    check_extension_hypotheses(problem);
    Coloring out = run_extension(problem, Mode::strict);
    auto [ok, report] = validate_list_coloring(problem.pg.graph(), problem.lists, out);
    if (!ok || out.at(problem.v1) != problem.c1 || out.at(problem.v2) != problem.c2) {
        throw Error(errc::internal, "extension produced an invalid coloring");
    }
    return out;
}

Coloring five_list_color(const PlaneGraph& pg, const ListAssignment& lists, SignPolicy policy) {
    if (lists.vertex_count() != pg.graph().vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    for (VertexId v = 0; v < pg.graph().vertex_count(); ++v) {
        if (lists.at(v).size() < 5) {
            throw Error(errc::precondition, "vertex " + std::to_string(v) +
                                                " has a list of size " +
                                                std::to_string(lists.at(v).size()) + " < 5");
        }
    }
    PlaneGraph tri = triangulate(pg, policy);
    std::vector<VertexId> outer = boundary_cycle(tri);
    const VertexId v1 = outer[0];
    const VertexId v2 = outer[1];
    const int c1 = smallest(lists.at(v1));
    const int c2 = smallest_avoiding(lists.at(v2), tri.graph().sign(v1, v2) * c1);
    Coloring out = extend_precoloring({tri, lists, v1, c1, v2, c2});
    auto [ok, report] = validate_list_coloring(pg.graph(), lists, out);
    if (!ok) throw Error(errc::internal, "five-list coloring failed validation");
    return out;
}

Coloring two_vertex_extension(const PlaneGraph& pg, VertexId u, VertexId v, int cu, int cv,
                              const ListAssignment& lists) {
    const SignedGraph& g = pg.graph();
    if (!g.has_edge(u, v)) {
        throw Error(errc::precondition, "precolored pair must span an edge");
    }
    if (cu == g.sign(u, v) * cv) {
        throw Error(errc::precondition, "improper precoloring on the pinned edge");
    }
    if (lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (w == u || w == v) continue;
        if (lists.at(w).size() < 5) {
            throw Error(errc::precondition, "vertex " + std::to_string(w) +
                                                " has a list of size " +
                                                std::to_string(lists.at(w).size()) + " < 5");
        }
    }
    // Re-root the sphere embedding so some face with the edge uv is outer.
    int face = -1;
    for (const auto& f : pg.faces()) {
        const auto& b = f.boundary;
        for (std::size_t t = 0; t < b.size() && face < 0; ++t) {
            VertexId x = b[t];
            VertexId y = b[(t + 1) % b.size()];
            if ((x == u && y == v) || (x == v && y == u)) face = f.id;
        }
        if (face >= 0) break;
    }
    if (face < 0) throw Error(errc::internal, "edge missing from every face walk");
    PlaneGraph rerooted = pg.with_outer_face(face);
    PlaneGraph tri = triangulate_keeping(rerooted, SignPolicy::always_positive, u, v);
    ListAssignment pinned = lists;
    pinned.assign(u, {cu});
    pinned.assign(v, {cv});
    Coloring out = extend_precoloring({tri, pinned, u, cu, v, cv});
    auto [ok, report] = validate_list_coloring(g, pinned, out);
    if (!ok) throw Error(errc::internal, "two-vertex extension failed validation");
    return out;
}

Coloring symmetric_five_color(const PlaneGraph& pg) {
    ListAssignment palette(pg.graph().vertex_count());
    for (VertexId v = 0; v < pg.graph().vertex_count(); ++v) {
        palette.assign(v, {-2, -1, 0, 1, 2});
    }
    return five_list_color(pg, palette);
}

Coloring outerplanar_three_list_color(const PlaneGraph& pg, const ListAssignment& lists) {
    const SignedGraph& g = pg.graph();
    if (lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    const Face& outer = pg.outer();
    std::vector<char> on_outer(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : outer.boundary) on_outer[static_cast<std::size_t>(v)] = 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!on_outer[static_cast<std::size_t>(v)]) {
            throw Error(errc::precondition, "not an outerplanar embedding: vertex " +
                                                std::to_string(v) + " is off the outer face");
        }
        if (lists.at(v).size() < 3) {
            throw Error(errc::precondition, "vertex " + std::to_string(v) +
                                                " has a list of size " +
                                                std::to_string(lists.at(v).size()) + " < 3");
        }
    }
    if (!outer.is_simple_cycle()) {
        throw Error(errc::precondition,
                    "outerplanar solver requires a 2-connected embedding (simple outer cycle)");
    }
    PlaneGraph tri = triangulate_interior(pg);
    std::vector<VertexId> walk = boundary_cycle(tri);
    const VertexId v1 = walk[0];
    const VertexId v2 = walk[1];
    const int c1 = smallest(lists.at(v1));
    const int c2 = smallest_avoiding(lists.at(v2), tri.graph().sign(v1, v2) * c1);
    Coloring out = extend_precoloring({tri, lists, v1, c1, v2, c2});
    auto [ok, report] = validate_list_coloring(g, lists, out);
    if (!ok) throw Error(errc::internal, "outerplanar coloring failed validation");
    return out;
}

int degeneracy(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, VertexId>> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.insert({deg[static_cast<std::size_t>(v)], v});
    }
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    int d = 0;
    while (!queue.empty()) {
        auto [dv, v] = *queue.begin();
        queue.erase(queue.begin());
        gone[static_cast<std::size_t>(v)] = 1;
        d = std::max(d, dv);
        for (auto [w, _] : g.neighbors(v)) {
            if (gone[static_cast<std::size_t>(w)]) continue;
            queue.erase({deg[static_cast<std::size_t>(w)], w});
            deg[static_cast<std::size_t>(w)] -= 1;
            queue.insert({deg[static_cast<std::size_t>(w)], w});
        }
    }
    return d;
}

Coloring degeneracy_greedy_color(const SignedGraph& g, const ListAssignment& lists) {
    const int n = g.vertex_count();
    if (lists.vertex_count() != n) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    const int d = degeneracy(g);
    for (VertexId v = 0; v < n; ++v) {
        if (static_cast<int>(lists.at(v).size()) < d + 1) {
            throw Error(errc::precondition,
                        "vertex " + std::to_string(v) + " has a list of size " +
                            std::to_string(lists.at(v).size()) + " < degeneracy+1 = " +
                            std::to_string(d + 1));
        }
    }
    // Removal order by repeated minimum degree, smallest index first.
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, VertexId>> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.insert({deg[static_cast<std::size_t>(v)], v});
    }
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [dv, v] = *queue.begin();
        queue.erase(queue.begin());
        gone[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
        for (auto [w, _] : g.neighbors(v)) {
            if (gone[static_cast<std::size_t>(w)]) continue;
            queue.erase({deg[static_cast<std::size_t>(w)], w});
            deg[static_cast<std::size_t>(w)] -= 1;
            queue.insert({deg[static_cast<std::size_t>(w)], w});
        }
    }
    Coloring out;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        std::set<int> forbidden;
        for (auto [w, s] : g.neighbors(v)) {
            if (auto cw = out.get(w)) forbidden.insert(s * *cw);
        }
        bool done = false;
        for (int value : lists.at(v)) {
            if (!forbidden.count(value)) {
                out.set(v, value);
                done = true;
                break;
            }
        }
        if (!done) {
            throw Error(errc::internal, "greedy step ran out of colors despite the size bound");
        }
    }
    auto [ok, report] = validate_list_coloring(g, lists, out);
    if (!ok) throw Error(errc::internal, "greedy coloring failed validation");
    return out;
}

Coloring defective_four_list_color(const PlaneGraph& pg, const ListAssignment& lists) {
    const SignedGraph& g = pg.graph();
    if (lists.vertex_count() != g.vertex_count()) {
        throw Error(errc::precondition, "list assignment does not match the graph");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (lists.at(v).size() < 4) {
            throw Error(errc::precondition, "vertex " + std::to_string(v) +
                                                " has a list of size " +
                                                std::to_string(lists.at(v).size()) + " < 4");
        }
    }
    PlaneGraph tri = triangulate(pg);
    auto [cycle, forward] = [&] {
        std::vector<VertexId> walk = boundary_cycle(tri);
        return orient_entry(tri, walk[0], walk[1]);
    }();
    const VertexId v1 = cycle[0];
    const VertexId v2 = cycle[1];
    const int c1 = smallest(lists.at(v1));
    const int c2 = smallest_avoiding(lists.at(v2), tri.graph().sign(v1, v2) * c1);
    Extender extender(tri, lists, Mode::defective);
    Coloring out = extender.run(std::move(cycle), forward, c1, c2);

    // Membership plus the defect bound, on the original graph.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!lists.contains(v, out.at(v))) {
            throw Error(errc::internal, "defective coloring left a list");
        }
    }
    if (max_defect(validate_coloring(g, out)) > 1) {
        throw Error(errc::internal, "defective coloring exceeded one violation at a vertex");
    }
    return out;
}

}  // namespace signedcolor
