#include "signedcolor/instance.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <map>
#include <set>

#include "signedcolor/rng.hpp"

namespace signedcolor {

using nlohmann::json;

namespace {

constexpr long long kMaxColor = 1LL << 30;

[[noreturn]] void fail(const std::string& msg) { throw Error(errc::format, msg); }

long long checked_color(const json& value, const std::string& where) {
    if (!value.is_number_integer()) fail(where + ": colors must be integers");
    long long x = value.get<long long>();
    if (x > kMaxColor || x < -kMaxColor) {
        fail(where + ": color " + std::to_string(x) + " exceeds the supported range (|c| <= 2^30)");
    }
    return x;
}

}  // namespace

SignedGraph InstanceFile::graph() const { return SignedGraph(vertex_count, edges); }

PlaneGraph InstanceFile::plane_graph() const {
    if (!rotation) {
        throw Error(errc::precondition, "instance has no rotation system; this operation needs an embedding");
    }
    return PlaneGraph(graph(), *rotation, outer_face);
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) {
        json doc = json::parse(text, nullptr, false);
        if (doc.is_discarded()) fail("instance is not valid JSON");
        if (!doc.is_object()) fail("instance must be a single JSON object");
        doc_ = std::move(doc);
    }

    InstanceFile run() {
        static const std::set<std::string> known{"format_version", "vertices", "edges",
                                                 "rotation",       "outer_face", "lists",
                                                 "precoloring"};
        for (const auto& [key, _] : doc_.items()) {
            if (!known.count(key)) fail("unknown field \"" + key + "\"");
        }
        if (doc_.contains("format_version")) {
            const auto& fv = doc_["format_version"];
            if (!fv.is_number_integer() || fv.get<int>() != 1) {
                fail("unsupported format_version (expected 1)");
            }
        }
        parse_vertices();
        parse_edges();
        parse_rotation();
        parse_outer_face();
        parse_lists();
        parse_precoloring();
        return std::move(out_);
    }

private:
    VertexId resolve(const json& ref, const std::string& where) const {
        if (ref.is_number_integer()) {
            long long v = ref.get<long long>();
            if (v < 0 || v >= out_.vertex_count) {
                fail(where + ": vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(out_.vertex_count) + ")");
            }
            return static_cast<VertexId>(v);
        }
        if (ref.is_string()) {
            auto it = name_index_.find(ref.get<std::string>());
            if (it == name_index_.end()) {
                fail(where + ": unknown vertex name \"" + ref.get<std::string>() + "\"");
            }
            return it->second;
        }
        fail(where + ": vertex references must be integers or names");
    }

    VertexId resolve_key(const std::string& key, const std::string& where) const {
        auto it = name_index_.find(key);
        if (it != name_index_.end()) return it->second;
        try {
            std::size_t used = 0;
            long long v = std::stoll(key, &used);
            if (used == key.size()) return resolve(json(v), where);
        } catch (const std::exception&) {
        }
        fail(where + ": unknown vertex name \"" + key + "\"");
    }

    void parse_vertices() {
        if (!doc_.contains("vertices")) fail("missing field \"vertices\"");
        const auto& v = doc_["vertices"];
        if (v.is_number_integer()) {
            long long count = v.get<long long>();
            if (count < 0 || count > 10'000'000) fail("\"vertices\" count out of range");
            out_.vertex_count = static_cast<int>(count);
            return;
        }
        if (v.is_array()) {
            for (const auto& name : v) {
                if (!name.is_string()) fail("\"vertices\" must be a count or an array of names");
                std::string s = name.get<std::string>();
                if (name_index_.count(s)) fail("duplicate vertex name \"" + s + "\"");
                name_index_[s] = static_cast<VertexId>(out_.names.size());
                out_.names.push_back(std::move(s));
            }
            out_.vertex_count = static_cast<int>(out_.names.size());
            return;
        }
        fail("\"vertices\" must be a count or an array of names");
    }

    void parse_edges() {
        if (!doc_.contains("edges")) fail("missing field \"edges\"");
        const auto& edges = doc_["edges"];
        if (!edges.is_array()) fail("\"edges\" must be an array");
        std::set<std::pair<VertexId, VertexId>> seen;
        for (const auto& entry : edges) {
            if (!entry.is_array() || entry.size() != 3) {
                fail("each edge must be [u, v, sign]");
            }
            VertexId u = resolve(entry[0], "edges");
            VertexId v = resolve(entry[1], "edges");
            if (u == v) fail("edges: loop at vertex " + std::to_string(u));
            if (!entry[2].is_number_integer() ||
                (entry[2].get<int>() != 1 && entry[2].get<int>() != -1)) {
                fail("edges: sign must be +1 or -1");
            }
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) {
                fail("edges: duplicate edge (" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + ")");
            }
            out_.edges.push_back({key.first, key.second, entry[2].get<int>()});
        }
    }

    void parse_rotation() {
        if (!doc_.contains("rotation")) return;
        const auto& rot = doc_["rotation"];
        RotationSystem rotation(static_cast<std::size_t>(out_.vertex_count));
        auto fill = [&](VertexId v, const json& seq) {
            if (!seq.is_array()) fail("rotation of vertex " + std::to_string(v) + " must be an array");
            for (const auto& ref : seq) rotation[static_cast<std::size_t>(v)].push_back(resolve(ref, "rotation"));
        };
        if (rot.is_array()) {
            if (static_cast<int>(rot.size()) != out_.vertex_count) {
                fail("\"rotation\" must list every vertex exactly once");
            }
            for (int v = 0; v < out_.vertex_count; ++v) fill(v, rot[static_cast<std::size_t>(v)]);
        } else if (rot.is_object()) {
            std::vector<char> covered(static_cast<std::size_t>(out_.vertex_count), 0);
            for (const auto& [key, seq] : rot.items()) {
                VertexId v = resolve_key(key, "rotation");
                if (covered[static_cast<std::size_t>(v)]) {
                    fail("rotation lists vertex " + std::to_string(v) + " twice");
                }
                covered[static_cast<std::size_t>(v)] = 1;
                fill(v, seq);
            }
            for (int v = 0; v < out_.vertex_count; ++v) {
                if (!covered[static_cast<std::size_t>(v)]) {
                    fail("rotation is missing vertex " + std::to_string(v));
                }
            }
        } else {
            fail("\"rotation\" must be an array or an object");
        }
        // Permutation check against the edge list, naming the vertex.
        SignedGraph g(out_.vertex_count, out_.edges);
        for (VertexId v = 0; v < out_.vertex_count; ++v) {
            std::vector<VertexId> listed = rotation[static_cast<std::size_t>(v)];
            std::sort(listed.begin(), listed.end());
            std::vector<VertexId> expected;
            for (auto [w, _] : g.neighbors(v)) expected.push_back(w);
            if (listed != expected) {
                fail("rotation of vertex " + std::to_string(v) +
                     " is not a permutation of its neighbors");
            }
        }
        out_.rotation = std::move(rotation);
    }

    void parse_outer_face() {
        if (!doc_.contains("outer_face")) return;
        const auto& outer = doc_["outer_face"];
        if (!outer.is_array() || outer.empty()) fail("\"outer_face\" must be a nonempty array");
        std::vector<VertexId> cycle;
        for (const auto& ref : outer) cycle.push_back(resolve(ref, "outer_face"));
        out_.outer_face = std::move(cycle);
    }

    void parse_lists() {
        if (!doc_.contains("lists")) return;
        const auto& lists = doc_["lists"];
        ListAssignment out(out_.vertex_count);
        auto fill = [&](VertexId v, const json& seq) {
            if (!seq.is_array()) fail("list of vertex " + std::to_string(v) + " must be an array");
            std::vector<int> values;
            for (const auto& x : seq) values.push_back(static_cast<int>(checked_color(x, "lists")));
            out.assign(v, std::move(values));
        };
        if (lists.is_array()) {
            if (static_cast<int>(lists.size()) != out_.vertex_count) {
                fail("\"lists\" must cover every vertex");
            }
            for (int v = 0; v < out_.vertex_count; ++v) fill(v, lists[static_cast<std::size_t>(v)]);
        } else if (lists.is_object()) {
            std::vector<char> covered(static_cast<std::size_t>(out_.vertex_count), 0);
            for (const auto& [key, seq] : lists.items()) {
                VertexId v = resolve_key(key, "lists");
                covered[static_cast<std::size_t>(v)] = 1;
                fill(v, seq);
            }
            for (int v = 0; v < out_.vertex_count; ++v) {
                if (!covered[static_cast<std::size_t>(v)]) {
                    fail("lists missing vertex " + std::to_string(v));
                }
            }
        } else {
            fail("\"lists\" must be an array or an object");
        }
        out_.lists = std::move(out);
    }

    void parse_precoloring() {
        if (!doc_.contains("precoloring")) return;
        const auto& pre = doc_["precoloring"];
        if (!pre.is_object()) fail("\"precoloring\" must be an object");
        for (const auto& [key, value] : pre.items()) {
            VertexId v = resolve_key(key, "precoloring");
            out_.precoloring.set(v, static_cast<int>(checked_color(value, "precoloring")));
        }
    }

    json doc_;
    InstanceFile out_;
    std::map<std::string, VertexId> name_index_;
};

}  // namespace

InstanceFile parse_instance(const std::string& text) { return Parser(text).run(); }

std::string serialize_instance(const InstanceFile& instance) {
    json doc;
    doc["format_version"] = 1;
    if (instance.names.empty()) {
        doc["vertices"] = instance.vertex_count;
    } else {
        doc["vertices"] = instance.names;
    }
    json edges = json::array();
    std::vector<SignedEdge> sorted = instance.edges;
    for (auto& e : sorted) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(sorted.begin(), sorted.end());
    for (const auto& e : sorted) edges.push_back({e.u, e.v, e.sign});
    doc["edges"] = std::move(edges);
    if (instance.rotation) {
        json rot = json::array();
        for (const auto& seq : *instance.rotation) rot.push_back(seq);
        doc["rotation"] = std::move(rot);
    }
    if (instance.outer_face) doc["outer_face"] = *instance.outer_face;
    if (instance.lists) {
        json lists = json::array();
        for (VertexId v = 0; v < instance.lists->vertex_count(); ++v) {
            lists.push_back(instance.lists->at(v));
        }
        doc["lists"] = std::move(lists);
    }
    if (!instance.precoloring.empty()) {
        json pre = json::object();
        for (const auto& [v, c] : instance.precoloring.values()) pre[std::to_string(v)] = c;
        doc["precoloring"] = std::move(pre);
    }
    return doc.dump(2) + "\n";
}

Coloring parse_coloring(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail("coloring is not valid JSON");
    if (!doc.is_object() || !doc.contains("coloring") || !doc["coloring"].is_object()) {
        fail("coloring file must be an object with a \"coloring\" object");
    }
    Coloring out;
    for (const auto& [key, value] : doc["coloring"].items()) {
        long long v = -1;
        try {
            v = std::stoll(key);
        } catch (const std::exception&) {
            fail("coloring keys must be vertex indices");
        }
        if (v < 0) fail("coloring keys must be vertex indices");
        out.set(static_cast<VertexId>(v), static_cast<int>(checked_color(value, "coloring")));
    }
    return out;
}

std::string serialize_coloring(const Coloring& coloring) {
    json doc;
    doc["format_version"] = 1;
    json values = json::object();
    for (const auto& [v, c] : coloring.values()) values[std::to_string(v)] = c;
    doc["coloring"] = std::move(values);
    return doc.dump(2) + "\n";
}

namespace {

int random_sign(SplitMix64& rng, double negative_probability) {
    return rng.bernoulli(negative_probability) ? -1 : +1;
}

void insert_before(std::vector<VertexId>& rotation, VertexId anchor, VertexId added) {
    for (std::size_t k = 0; k < rotation.size(); ++k) {
        if (rotation[k] == anchor) {
            rotation.insert(rotation.begin() + static_cast<long>(k), added);
            return;
        }
    }
    throw Error(errc::internal, "generator lost a rotation anchor");
}

}  // namespace

InstanceFile gen_stacked_triangulation(int n, std::uint64_t seed, double negative_probability) {
    if (n < 3) throw Error(errc::precondition, "stacked triangulation needs n >= 3");
    SplitMix64 rng(seed);
    InstanceFile out;
    out.vertex_count = n;
    RotationSystem rotation{{1, 2}, {2, 0}, {0, 1}};
    rotation.resize(static_cast<std::size_t>(n));
    out.edges = {{0, 1, random_sign(rng, negative_probability)},
                 {0, 2, random_sign(rng, negative_probability)},
                 {1, 2, random_sign(rng, negative_probability)}};
    // Oriented bounded faces in trace order; the outer walk stays (1, 0, 2).
    std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}};
    for (VertexId k = 3; k < n; ++k) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(faces.size()));
        const auto [a, b, c] = faces[pick];
        rotation[static_cast<std::size_t>(k)] = {a, b, c};
        insert_before(rotation[static_cast<std::size_t>(a)], c, k);
        insert_before(rotation[static_cast<std::size_t>(b)], a, k);
        insert_before(rotation[static_cast<std::size_t>(c)], b, k);
        out.edges.push_back({std::min(a, k), std::max(a, k), random_sign(rng, negative_probability)});
        out.edges.push_back({std::min(b, k), std::max(b, k), random_sign(rng, negative_probability)});
        out.edges.push_back({std::min(c, k), std::max(c, k), random_sign(rng, negative_probability)});
        faces[pick] = {a, b, k};
        faces.push_back({b, c, k});
        faces.push_back({c, a, k});
    }
    out.rotation = std::move(rotation);
    out.outer_face = std::vector<VertexId>{1, 0, 2};
    return out;
}

InstanceFile gen_outerplanar(int n, std::uint64_t seed, double negative_probability) {
    if (n < 3) throw Error(errc::precondition, "outerplanar generator needs n >= 3");
    SplitMix64 rng(seed);
    InstanceFile out;
    out.vertex_count = n;
    for (VertexId v = 0; v < n; ++v) {
        VertexId w = (v + 1) % n;
        out.edges.push_back({std::min(v, w), std::max(v, w), random_sign(rng, negative_probability)});
    }
    std::vector<VertexId> active(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) active[static_cast<std::size_t>(v)] = v;
    while (active.size() > 3) {
        const std::size_t k = static_cast<std::size_t>(rng.below(active.size()));
        const VertexId a = active[(k + active.size() - 1) % active.size()];
        const VertexId c = active[(k + 1) % active.size()];
        out.edges.push_back({std::min(a, c), std::max(a, c), random_sign(rng, negative_probability)});
        active.erase(active.begin() + static_cast<long>(k));
    }
    // Convex position makes the rotation combinatorial: neighbors of i in
    // ascending circular distance (j - i) mod n.
    RotationSystem rotation(static_cast<std::size_t>(n));
    SignedGraph g(n, out.edges);
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> around;
        for (auto [w, _] : g.neighbors(v)) around.push_back(w);
        std::sort(around.begin(), around.end(), [&](VertexId x, VertexId y) {
            return (x - v + n) % n < (y - v + n) % n;
        });
        rotation[static_cast<std::size_t>(v)] = std::move(around);
    }
    out.rotation = std::move(rotation);
    std::vector<VertexId> outer(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) outer[static_cast<std::size_t>(v)] = v;
    out.outer_face = std::move(outer);
    return out;
}

ListAssignment gen_lists(const InstanceFile& instance, const ListProfile& profile, int color_lo,
                         int color_hi, std::uint64_t seed) {
    if (color_hi < color_lo) throw Error(errc::precondition, "empty color range");
    const int n = instance.vertex_count;
    std::vector<int> sizes(static_cast<std::size_t>(n), 0);
    if (profile.kind == ListProfile::Kind::uniform) {
        if (profile.uniform_size < 0) throw Error(errc::precondition, "list size must be nonnegative");
        std::fill(sizes.begin(), sizes.end(), profile.uniform_size);
    } else {
        PlaneGraph pg = instance.plane_graph();
        std::fill(sizes.begin(), sizes.end(), 5);
        for (VertexId v : pg.outer().boundary) sizes[static_cast<std::size_t>(v)] = 3;
    }
    const int range = color_hi - color_lo + 1;
    for (int s : sizes) {
        if (s > range) {
            throw Error(errc::precondition, "color range too small for the requested list sizes");
        }
    }
    SplitMix64 rng(seed);
    ListAssignment lists(n);
    for (VertexId v = 0; v < n; ++v) {
        std::set<int> draw;
        while (static_cast<int>(draw.size()) < sizes[static_cast<std::size_t>(v)]) {
            draw.insert(rng.range(color_lo, color_hi));
        }
        lists.assign(v, std::vector<int>(draw.begin(), draw.end()));
    }
    return lists;
}

}  // namespace signedcolor
