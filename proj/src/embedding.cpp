#include "signedcolor/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace signedcolor {

bool Face::is_simple_cycle() const {
    std::vector<VertexId> sorted = boundary;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

int position_of(const std::vector<VertexId>& rotation, VertexId w) {
    for (std::size_t k = 0; k < rotation.size(); ++k) {
        if (rotation[k] == w) return static_cast<int>(k);
    }
    return -1;
}

/// Face walks of a rotation system, independent of any graph validation.
std::vector<Face> trace_rotation(const RotationSystem& rotation) {
    const int n = static_cast<int>(rotation.size());
    std::vector<int> base(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) base[v + 1] = base[v] + static_cast<int>(rotation[v].size());
    const int dart_count = base[n];

    // position of u inside rotation[v], for O(log d) next-dart steps
    std::vector<std::vector<std::pair<VertexId, int>>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        pos[v].reserve(rotation[v].size());
        for (std::size_t k = 0; k < rotation[v].size(); ++k) {
            pos[v].push_back({rotation[v][k], static_cast<int>(k)});
        }
        std::sort(pos[v].begin(), pos[v].end());
    }
    auto pos_in = [&](VertexId v, VertexId u) {
        auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::pair<VertexId, int>{u, -1});
        if (it == pos[v].end() || it->first != u) {
            throw Error(errc::precondition, "rotation of vertex " + std::to_string(v) +
                                                " does not list neighbor " + std::to_string(u));
        }
        return it->second;
    };

    std::vector<char> visited(static_cast<std::size_t>(dart_count), 0);
    std::vector<Face> faces;
    for (int u = 0; u < n; ++u) {
        for (std::size_t k = 0; k < rotation[u].size(); ++k) {
            if (visited[base[u] + static_cast<int>(k)]) continue;
            Face face;
            face.id = static_cast<int>(faces.size());
            int cu = u;
            int ck = static_cast<int>(k);
            do {
                visited[base[cu] + ck] = 1;
                face.boundary.push_back(cu);
                VertexId cv = rotation[cu][static_cast<std::size_t>(ck)];
                int j = pos_in(cv, cu);
                int deg = static_cast<int>(rotation[cv].size());
                cu = cv;
                ck = (j - 1 + deg) % deg;
            } while (!(cu == u && ck == static_cast<int>(k)));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

void check_rotation_matches(const SignedGraph& g, const RotationSystem& rotation) {
    if (static_cast<int>(rotation.size()) != g.vertex_count()) {
        throw Error(errc::precondition, "rotation system must cover every vertex");
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<VertexId> listed = rotation[v];
        std::sort(listed.begin(), listed.end());
        std::vector<VertexId> expected;
        expected.reserve(g.neighbors(v).size());
        for (auto [w, _] : g.neighbors(v)) expected.push_back(w);
        if (listed != expected) {
            throw Error(errc::precondition, "rotation of vertex " + std::to_string(v) +
                                                " is not a permutation of its neighbors");
        }
    }
}

void check_connected(const SignedGraph& g) {
    if (g.vertex_count() > 0 && connected_components(g).size() != 1) {
        throw Error(errc::precondition, "graph must be connected; split the instance first");
    }
}

bool cyclic_equal_one_direction(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t m = a.size();
    for (std::size_t offset = 0; offset < m; ++offset) {
        bool ok = true;
        for (std::size_t t = 0; t < m; ++t) {
            if (a[(offset + t) % m] != b[t]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool cyclic_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    if (cyclic_equal_one_direction(a, b)) return true;
    std::vector<VertexId> reversed(a.rbegin(), a.rend());
    return cyclic_equal_one_direction(reversed, b);
}

/// Successor-direction arc of rotation strictly between `from` and `to`.
std::vector<VertexId> rotation_arc(const std::vector<VertexId>& rotation, VertexId from,
                                   VertexId to) {
    int start = position_of(rotation, from);
    if (start < 0 || position_of(rotation, to) < 0) {
        throw Error(errc::precondition, "arc endpoints must be rotation neighbors");
    }
    std::vector<VertexId> out;
    const int m = static_cast<int>(rotation.size());
    for (int s = 1; s < m; ++s) {
        VertexId w = rotation[static_cast<std::size_t>((start + s) % m)];
        if (w == to) return out;
        out.push_back(w);
    }
    throw Error(errc::internal, "rotation arc never reached its endpoint");
}

}  // namespace

std::vector<Face> trace_faces(const SignedGraph& g, const RotationSystem& rotation) {
    check_rotation_matches(g, rotation);
    check_connected(g);
    return trace_rotation(rotation);
}

bool validate_plane(const SignedGraph& g, const RotationSystem& rotation) {
    std::vector<Face> faces = trace_faces(g, rotation);
    const long long euler = static_cast<long long>(g.vertex_count()) - g.edge_count() +
                            static_cast<long long>(faces.size());
    return euler == 2;
}

PlaneGraph::PlaneGraph(SignedGraph graph, RotationSystem rotation,
                       std::optional<std::vector<VertexId>> outer_cycle)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    if (graph_.vertex_count() < 3) {
        throw Error(errc::precondition, "plane graph needs at least three vertices");
    }
    faces_ = trace_faces(graph_, rotation_);
    const long long euler = static_cast<long long>(graph_.vertex_count()) - graph_.edge_count() +
                            static_cast<long long>(faces_.size());
    if (euler != 2) {
        throw Error(errc::precondition,
                    "rotation system is not planar: V - E + F = " + std::to_string(euler));
    }
    if (outer_cycle) {
        int found = -1;
        for (const auto& f : faces_) {
            if (cyclic_equal(f.boundary, *outer_cycle)) {
                found = f.id;
                break;
            }
        }
        if (found < 0) {
            throw Error(errc::precondition, "outer face does not match any traced face");
        }
        outer_face_ = found;
    } else {
        // Largest boundary wins; ties go to the smallest face id.
        std::size_t best_len = 0;
        for (const auto& f : faces_) {
            if (f.boundary.size() > best_len) {
                best_len = f.boundary.size();
                outer_face_ = f.id;
            }
        }
    }
}

PlaneGraph PlaneGraph::with_outer_face(int face_id) const {
    if (face_id < 0 || face_id >= static_cast<int>(faces_.size())) {
        throw Error(errc::precondition, "face id out of range");
    }
    PlaneGraph out = *this;
    out.outer_face_ = face_id;
    return out;
}

bool is_near_triangulation(const PlaneGraph& pg) {
    for (const auto& f : pg.faces()) {
        if (!f.is_simple_cycle()) return false;  // connected + all faces simple = 2-connected
        if (f.id != pg.outer_face() && f.boundary.size() != 3) return false;
    }
    return true;
}

std::vector<VertexId> boundary_cycle(const PlaneGraph& pg) {
    const Face& outer = pg.outer();
    if (!outer.is_simple_cycle()) {
        throw Error(errc::precondition, "outer boundary is not a simple cycle; requires 2-connected input");
    }
    return outer.boundary;
}

std::optional<std::pair<int, int>> find_chord(const PlaneGraph& pg) {
    std::vector<VertexId> cycle = boundary_cycle(pg);
    const int p = static_cast<int>(cycle.size());
    std::vector<int> pos(static_cast<std::size_t>(pg.graph().vertex_count()), -1);
    for (int i = 0; i < p; ++i) pos[cycle[i]] = i;
    for (int i = 0; i < p; ++i) {
        int best_j = -1;
        for (auto [w, _] : pg.graph().neighbors(cycle[i])) {
            int j = pos[w];
            if (j < i + 2) continue;
            if (i == 0 && j == p - 1) continue;
            if (best_j == -1 || j < best_j) best_j = j;
        }
        if (best_j != -1) return std::make_pair(i, best_j);
    }
    return std::nullopt;
}

std::vector<VertexId> fan_neighbors(const PlaneGraph& pg, VertexId vp, VertexId v1,
                                    VertexId vprev) {
    std::vector<VertexId> cycle = boundary_cycle(pg);
    const int p = static_cast<int>(cycle.size());
    int k = -1;
    for (int i = 0; i < p; ++i) {
        if (cycle[i] == vp) k = i;
    }
    if (k < 0) {
        throw Error(errc::precondition, "vp must lie on the outer cycle");
    }
    VertexId before = cycle[static_cast<std::size_t>((k - 1 + p) % p)];
    VertexId after = cycle[static_cast<std::size_t>((k + 1) % p)];
    if (!((before == v1 && after == vprev) || (before == vprev && after == v1))) {
        throw Error(errc::precondition, "v1 and vprev must be the boundary neighbors of vp");
    }

    const auto& rot = pg.rotation()[static_cast<std::size_t>(vp)];
    std::vector<VertexId> arc_a = rotation_arc(rot, v1, vprev);
    std::vector<VertexId> arc_b = rotation_arc(rot, vprev, v1);
    std::vector<VertexId> fan;
    if (arc_b.empty()) {
        fan = arc_a;
    } else if (arc_a.empty()) {
        fan.assign(arc_b.rbegin(), arc_b.rend());
    } else {
        throw Error(errc::precondition, "rotation at vp is inconsistent with the outer cycle");
    }
    std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
    for (VertexId u : fan) {
        if (on_cycle.count(u)) {
            throw Error(errc::precondition, "outer cycle has a chord at vp through vertex " +
                                                std::to_string(u) + "; split chords first");
        }
    }
    return fan;
}

std::pair<ChordSplit, ChordSplit> split_along_chord(const PlaneGraph& pg,
                                                    std::pair<int, int> chord) {
    std::vector<VertexId> cycle = boundary_cycle(pg);
    const int p = static_cast<int>(cycle.size());
    auto [i, j] = chord;
    if (i < 0 || j >= p || i >= j || j - i < 2 || (i == 0 && j == p - 1)) {
        throw Error(errc::precondition, "chord positions must be non-consecutive cycle indices");
    }
    const VertexId a = cycle[static_cast<std::size_t>(i)];
    const VertexId b = cycle[static_cast<std::size_t>(j)];
    if (!pg.graph().has_edge(a, b)) {
        throw Error(errc::precondition, "designated chord is not an edge");
    }

    // Bounded faces fall into exactly two groups once the chord is removed
    // from the dual adjacency.
    const auto& faces = pg.faces();
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_faces;
    for (const auto& f : faces) {
        const auto& w = f.boundary;
        for (std::size_t t = 0; t < w.size(); ++t) {
            VertexId x = w[t];
            VertexId y = w[(t + 1) % w.size()];
            edge_faces[{std::min(x, y), std::max(x, y)}].push_back(f.id);
        }
    }
    const std::pair<VertexId, VertexId> chord_key{std::min(a, b), std::max(a, b)};
    const auto& chord_incident = edge_faces.at(chord_key);
    if (chord_incident.size() != 2 || chord_incident[0] == pg.outer_face() ||
        chord_incident[1] == pg.outer_face()) {
        throw Error(errc::precondition, "chord must be an interior edge");
    }

    std::vector<int> side(faces.size(), -1);
    side[static_cast<std::size_t>(pg.outer_face())] = 2;  // neither piece
    std::vector<int> queue{chord_incident[0]};
    side[static_cast<std::size_t>(chord_incident[0])] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto& w = faces[static_cast<std::size_t>(queue[head])].boundary;
        for (std::size_t t = 0; t < w.size(); ++t) {
            VertexId x = w[t];
            VertexId y = w[(t + 1) % w.size()];
            std::pair<VertexId, VertexId> key{std::min(x, y), std::max(x, y)};
            if (key == chord_key) continue;
            for (int fid : edge_faces.at(key)) {
                if (side[static_cast<std::size_t>(fid)] == -1) {
                    side[static_cast<std::size_t>(fid)] = 0;
                    queue.push_back(fid);
                }
            }
        }
    }
    if (side[static_cast<std::size_t>(chord_incident[1])] == 0) {
        throw Error(errc::precondition, "chord does not separate the bounded faces");
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (side[f] == -1) side[f] = 1;
    }

    // Boundary arcs of the two pieces, in parent trace orientation.
    std::vector<VertexId> arc_a(cycle.begin() + i, cycle.begin() + j + 1);
    std::vector<VertexId> arc_b;
    for (int t = j; t != i; t = (t + 1) % p) arc_b.push_back(cycle[static_cast<std::size_t>(t)]);
    arc_b.push_back(a);

    auto build_piece = [&](int want_side, std::vector<VertexId> outer) {
        std::vector<SignedEdge> piece_edges;
        for (const auto& e : pg.graph().edges()) {
            std::pair<VertexId, VertexId> key{e.u, e.v};
            if (key == chord_key) {
                piece_edges.push_back(e);
                continue;
            }
            bool in_piece = false;
            for (int fid : edge_faces.at(key)) {
                if (side[static_cast<std::size_t>(fid)] == want_side) in_piece = true;
            }
            if (in_piece) piece_edges.push_back(e);
        }
        std::set<VertexId> vertex_set;
        for (const auto& e : piece_edges) {
            vertex_set.insert(e.u);
            vertex_set.insert(e.v);
        }
        std::vector<VertexId> to_parent(vertex_set.begin(), vertex_set.end());
        std::vector<int> to_local(static_cast<std::size_t>(pg.graph().vertex_count()), -1);
        for (std::size_t t = 0; t < to_parent.size(); ++t) to_local[to_parent[t]] = static_cast<int>(t);

        std::vector<SignedEdge> local_edges;
        local_edges.reserve(piece_edges.size());
        std::set<std::pair<VertexId, VertexId>> incident;
        for (const auto& e : piece_edges) {
            local_edges.push_back({to_local[e.u], to_local[e.v], e.sign});
            incident.insert({e.u, e.v});
            incident.insert({e.v, e.u});
        }
        RotationSystem rot(to_parent.size());
        for (std::size_t t = 0; t < to_parent.size(); ++t) {
            for (VertexId w : pg.rotation()[static_cast<std::size_t>(to_parent[t])]) {
                if (incident.count({to_parent[t], w})) rot[t].push_back(to_local[w]);
            }
        }
        for (VertexId& v : outer) v = to_local[v];
        ChordSplit split{PlaneGraph(SignedGraph(static_cast<int>(to_parent.size()),
                                                std::move(local_edges)),
                                    std::move(rot), outer),
                         std::move(to_parent)};
        return split;
    };

    // Decide which arc belongs to which dual side via a vertex strictly
    // inside arc_a; then hand back (G1, G2) with G2 holding positions 0, 1.
    VertexId probe = cycle[static_cast<std::size_t>(i + 1)];
    int side_of_arc_a = -1;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (side[f] == 2) continue;
        for (VertexId w : faces[f].boundary) {
            if (w == probe) side_of_arc_a = side[f];
        }
        if (side_of_arc_a != -1) break;
    }
    if (side_of_arc_a == -1) {
        throw Error(errc::internal, "could not locate the arc side of the chord split");
    }

    ChordSplit piece_a = build_piece(side_of_arc_a, arc_a);
    ChordSplit piece_b = build_piece(1 - side_of_arc_a, arc_b);
    const bool a_holds_start = (i == 0);  // arc_a contains positions 0 and 1 iff i == 0
    if (a_holds_start) {
        return {std::move(piece_b), std::move(piece_a)};
    }
    return {std::move(piece_a), std::move(piece_b)};
}

namespace {

class Triangulator {
public:
    Triangulator(const PlaneGraph& pg, SignPolicy policy, VertexId keep_a, VertexId keep_b)
        : policy_(policy), keep_a_(keep_a), keep_b_(keep_b) {
        n_ = pg.graph().vertex_count();
        edges_ = pg.graph().edges();
        rotation_ = pg.rotation();
        outer_walk_ = pg.outer().boundary;
        for (const auto& e : edges_) edge_set_.insert({e.u, e.v});
    }

    PlaneGraph run(bool exterior) {
        bool changed = true;
        while (changed) {
            changed = false;
            changed |= triangulate_bounded_faces();
            if (exterior) changed |= shrink_outer();
        }
        if (exterior && outer_walk_.size() != 3) {
            throw Error(errc::unsupported, "could not reduce the outer face to a triangle");
        }
        PlaneGraph out(SignedGraph(n_, edges_), rotation_, outer_walk_);
        return out;
    }

private:
    bool has_edge(VertexId u, VertexId v) const {
        return edge_set_.count({std::min(u, v), std::max(u, v)}) != 0;
    }

    int next_sign() {
        switch (policy_) {
            case SignPolicy::always_positive: return +1;
            case SignPolicy::always_negative: return -1;
            case SignPolicy::alternating: return (added_++ % 2 == 0) ? +1 : -1;
        }
        return +1;
    }

    void insert_after(VertexId u, VertexId anchor, VertexId added) {
        auto& rot = rotation_[static_cast<std::size_t>(u)];
        int k = position_of(rot, anchor);
        if (k < 0) throw Error(errc::internal, "rotation anchor missing during triangulation");
        rot.insert(rot.begin() + k + 1, added);
    }

    /// Adds the chord between walk positions s and t of one face walk.
    /// The new edge is placed in the angular sector of that face corner.
    void add_chord(const std::vector<VertexId>& walk, std::size_t s, std::size_t t) {
        const std::size_t len = walk.size();
        VertexId u = walk[s];
        VertexId v = walk[t];
        insert_after(u, walk[(s + 1) % len], v);
        insert_after(v, walk[(t + 1) % len], u);
        edges_.push_back({std::min(u, v), std::max(u, v), next_sign()});
        edge_set_.insert({std::min(u, v), std::max(u, v)});
    }

    /// Fan root candidate: all other walk vertices distinct, no fan chord
    /// already present as an edge.
    bool fan_valid(const std::vector<VertexId>& walk, std::size_t s) const {
        const std::size_t len = walk.size();
        std::set<VertexId> seen{walk[s]};
        for (std::size_t d = 1; d < len; ++d) {
            if (!seen.insert(walk[(s + d) % len]).second) return false;
        }
        for (std::size_t d = 2; d + 1 < len; ++d) {
            if (has_edge(walk[s], walk[(s + d) % len])) return false;
        }
        return true;
    }

    bool triangulate_bounded_faces() {
        bool did_work = false;
        bool more = true;
        while (more) {
            more = false;
            std::vector<Face> faces = trace_rotation(rotation_);
            int outer_id = locate_outer(faces);
            for (const auto& f : faces) {
                if (f.id == outer_id || f.boundary.size() <= 3) continue;
                if (split_face(f.boundary)) {
                    did_work = true;
                    more = true;
                    break;  // retrace after every facial change
                }
                throw Error(errc::unsupported,
                            "bounded face cannot be triangulated (no legal chord)");
            }
        }
        return did_work;
    }

    bool split_face(const std::vector<VertexId>& walk) {
        const std::size_t len = walk.size();
        // Fan from the lowest-index vertex whose fan is fully legal.
        std::vector<std::size_t> order(len);
        for (std::size_t s = 0; s < len; ++s) order[s] = s;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return std::make_pair(walk[x], x) < std::make_pair(walk[y], y);
        });
        for (std::size_t s : order) {
            if (!fan_valid(walk, s)) continue;
            for (std::size_t d = 2; d + 1 < len; ++d) add_fan_chord(walk, s, (s + d) % len, d);
            return true;
        }
        // Fall back to a single legal chord.
        for (std::size_t s = 0; s < len; ++s) {
            for (std::size_t d = 2; d + 1 < len; ++d) {
                std::size_t t = (s + d) % len;
                if (walk[s] == walk[t]) continue;
                if (has_edge(walk[s], walk[t])) continue;
                if (walk[(s + 1) % len] == walk[t] || walk[(t + 1) % len] == walk[s]) continue;
                add_chord(walk, s, t);
                return true;
            }
        }
        return false;
    }

    /// Chord of a fan being laid down in one pass: at the root the chords
    /// stack up in walk order inside the original corner.
    void add_fan_chord(const std::vector<VertexId>& walk, std::size_t root, std::size_t t,
                       std::size_t d) {
        const std::size_t len = walk.size();
        VertexId u = walk[root];
        VertexId v = walk[t];
        VertexId root_anchor = (d == 2) ? walk[(root + 1) % len] : walk[(t - 1 + len) % len];
        insert_after(u, root_anchor, v);
        insert_after(v, walk[(t + 1) % len], u);
        edges_.push_back({std::min(u, v), std::max(u, v), next_sign()});
        edge_set_.insert({std::min(u, v), std::max(u, v)});
    }

    int locate_outer(const std::vector<Face>& faces) const {
        VertexId w0 = outer_walk_[0];
        VertexId w1 = outer_walk_[1];
        for (const auto& f : faces) {
            const auto& b = f.boundary;
            for (std::size_t t = 0; t < b.size(); ++t) {
                if (b[t] == w0 && b[(t + 1) % b.size()] == w1) return f.id;
            }
        }
        throw Error(errc::internal, "lost track of the outer face during triangulation");
    }

    bool shrink_outer() {
        bool did_work = false;
        while (outer_walk_.size() > 3) {
            if (cut_outer_ear()) {
                did_work = true;
                continue;
            }
            if (cut_outer_chord()) {
                did_work = true;
                // The far side became a bounded face that may need fanning.
                return did_work;
            }
            throw Error(errc::unsupported, "outer face cannot be reduced further (no legal chord)");
        }
        return did_work;
    }

    /// The precolored pair must stay adjacent on the outer walk all the way
    /// down to the final triangle.
    bool dart_survives(const std::vector<VertexId>& walk) const {
        for (std::size_t p = 0; p < walk.size(); ++p) {
            VertexId x = walk[p];
            VertexId y = walk[(p + 1) % walk.size()];
            if ((x == keep_a_ && y == keep_b_) || (x == keep_b_ && y == keep_a_)) return true;
        }
        return false;
    }

    bool cut_outer_ear() {
        const std::size_t len = outer_walk_.size();
        for (std::size_t k = 0; k < len; ++k) {
            VertexId mid = outer_walk_[k];
            VertexId a = outer_walk_[(k - 1 + len) % len];
            VertexId c = outer_walk_[(k + 1) % len];
            if (a == c || a == mid || c == mid) continue;
            if (has_edge(a, c)) continue;
            std::vector<VertexId> next = outer_walk_;
            next.erase(next.begin() + static_cast<long>(k));
            if (!dart_survives(next)) continue;
            // Ear chord drawn through the outer region.
            insert_after(a, mid, c);
            insert_after(c, outer_walk_[(k + 2) % len], a);
            edges_.push_back({std::min(a, c), std::max(a, c), next_sign()});
            edge_set_.insert({std::min(a, c), std::max(a, c)});
            outer_walk_ = std::move(next);
            return true;
        }
        return false;
    }

    /// General outer chord: split the outer walk and keep the side where the
    /// precolored pair stays adjacent; the far side becomes a bounded face.
    bool cut_outer_chord() {
        const std::size_t len = outer_walk_.size();
        for (std::size_t s = 0; s < len; ++s) {
            for (std::size_t d = 2; d + 2 <= len; ++d) {
                std::size_t t = (s + d) % len;
                VertexId a = outer_walk_[s];
                VertexId b = outer_walk_[t];
                if (a == b || has_edge(a, b)) continue;
                std::vector<VertexId> kept;
                for (std::size_t p = s; p != (t + 1) % len; p = (p + 1) % len) {
                    kept.push_back(outer_walk_[p]);
                }
                if (!dart_survives(kept)) continue;
                insert_after(a, outer_walk_[(s + 1) % len], b);
                insert_after(b, outer_walk_[(t + 1) % len], a);
                edges_.push_back({std::min(a, b), std::max(a, b), next_sign()});
                edge_set_.insert({std::min(a, b), std::max(a, b)});
                outer_walk_ = std::move(kept);
                return true;
            }
        }
        return false;
    }

    SignPolicy policy_;
    VertexId keep_a_;
    VertexId keep_b_;
    int n_ = 0;
    int added_ = 0;
    std::vector<SignedEdge> edges_;
    RotationSystem rotation_;
    std::vector<VertexId> outer_walk_;
    std::set<std::pair<VertexId, VertexId>> edge_set_;
};

}  // namespace

PlaneGraph triangulate(const PlaneGraph& pg, SignPolicy policy) {
    const auto& walk = pg.outer().boundary;
    Triangulator tri(pg, policy, walk[0], walk[1]);
    return tri.run(true);
}

PlaneGraph triangulate_interior(const PlaneGraph& pg, SignPolicy policy) {
    const auto& walk = pg.outer().boundary;
    Triangulator tri(pg, policy, walk[0], walk[1]);
    return tri.run(false);
}

PlaneGraph triangulate_keeping(const PlaneGraph& pg, SignPolicy policy, VertexId keep_a,
                               VertexId keep_b) {
    Triangulator tri(pg, policy, keep_a, keep_b);
    return tri.run(true);
}

}  // namespace signedcolor
