#include <doctest.h>

#include <algorithm>

#include "signedcolor/oracle.hpp"
#include "signedcolor/signature.hpp"
#include "support.hpp"

using namespace signedcolor;

namespace {

bool all_edges_positive(const SignedGraph& g) {
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [](const SignedEdge& e) { return e.sign == +1; });
}

SwitchSet random_switch_set(int n, SplitMix64& rng) {
    SwitchSet set;
    for (int v = 0; v < n; ++v) {
        if (rng.bernoulli(0.5)) set.members.push_back(v);
    }
    return set;
}

}  // namespace

TEST_CASE("switching at the empty set is the identity") {
    SignedGraph g = sct::make_k4_negative_matching();
    CHECK(switch_graph(g, {}).edges() == g.edges());
}

TEST_CASE("switching one endpoint flips a single edge") {
    SignedGraph g(2, {{0, 1, +1}});
    CHECK(switch_graph(g, {{0}}).sign(0, 1) == -1);
    CHECK_THROWS_AS(switch_graph(g, {{5}}), Error);
}

TEST_CASE("all-negative bipartite graph switches positive at one side") {
    // C4 with all edges negative, bipartition {0,2} / {1,3}.
    SignedGraph g(4, {{0, 1, -1}, {1, 2, -1}, {2, 3, -1}, {0, 3, -1}});
    CHECK(all_edges_positive(switch_graph(g, {{0, 2}})));
}

TEST_CASE("switching is an involution and composes by symmetric difference") {
    SplitMix64 rng(21);
    for (int iter = 0; iter < 30; ++iter) {
        SignedGraph g = sct::random_graph(8, rng, 0.5, 0.5);
        SwitchSet u = random_switch_set(8, rng);
        SwitchSet w = random_switch_set(8, rng);
        CHECK(switch_graph(switch_graph(g, u), u).edges() == g.edges());
        SwitchSet sym;
        for (int v = 0; v < 8; ++v) {
            if (u.contains(v) != w.contains(v)) sym.members.push_back(v);
        }
        CHECK(switch_graph(switch_graph(g, u), w).edges() == switch_graph(g, sym).edges());
    }
}

TEST_CASE("walk sign multiplies edge signs; single vertex gives +1") {
    SignedGraph g = sct::make_mixed_path();
    CHECK(walk_sign(g, {1}) == +1);
    CHECK(walk_sign(g, {0, 1}) == +1);
    CHECK(walk_sign(g, {0, 1, 2}) == -1);
    CHECK(walk_sign(g, {0, 1, 0, 1, 2}) == -1);
    CHECK_THROWS_AS(walk_sign(g, {0, 2}), Error);
    CHECK_THROWS_AS(walk_sign(g, {}), Error);
}

TEST_CASE("every triangle of the negative-matching k4 is negative") {
    SignedGraph g = sct::make_k4_negative_matching();
    const VertexId triangles[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& t : triangles) {
        CHECK(cycle_sign(g, {t[0], t[1], t[2]}) == -1);
    }
}

TEST_CASE("cycle signs are invariant under every switch on small graphs") {
    SplitMix64 rng(22);
    for (int n = 4; n <= 6; ++n) {
        SignedGraph g = sct::random_graph(n, rng, 0.8, 0.5);
        // A closed walk through vertices 0..n-1 may not exist; use triangles.
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int c = b + 1; c < n; ++c) {
                    if (!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))) continue;
                    int reference = cycle_sign(g, {a, b, c});
                    for (unsigned mask = 0; mask < (1u << n); ++mask) {
                        SwitchSet set;
                        for (int v = 0; v < n; ++v) {
                            if (mask & (1u << v)) set.members.push_back(v);
                        }
                        CHECK(cycle_sign(switch_graph(g, set), {a, b, c}) == reference);
                    }
                }
            }
        }
    }
}

TEST_CASE("all-positive graphs are balanced with an empty balancing set") {
    SignedGraph g = sct::make_wheel(5);
    BalanceWitness witness = is_balanced(g);
    REQUIRE(witness.balanced);
    CHECK(witness.balancing_set.members.empty());
}

TEST_CASE("negative-matching k4 is unbalanced with a negative triangle") {
    SignedGraph g = sct::make_k4_negative_matching();
    BalanceWitness witness = is_balanced(g);
    REQUIRE_FALSE(witness.balanced);
    CHECK(witness.negative_cycle.size() == 3);
    CHECK(cycle_sign(g, witness.negative_cycle) == -1);
    // The witness is a simple cycle.
    std::vector<VertexId> sorted = witness.negative_cycle;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("balance detection round-trips a planted switch") {
    SplitMix64 rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        SignedGraph base = sct::all_positive(sct::random_graph(9, rng, 0.4, 0.0));
        SwitchSet planted = random_switch_set(9, rng);
        SignedGraph g = switch_graph(base, planted);
        BalanceWitness witness = is_balanced(g);
        REQUIRE(witness.balanced);
        CHECK(all_edges_positive(switch_graph(g, witness.balancing_set)));
    }
}

TEST_CASE("balance handles disconnected graphs per component") {
    // Two all-negative 4-cycles, disjoint.
    std::vector<SignedEdge> edges;
    for (int base : {0, 4}) {
        for (int i = 0; i < 4; ++i) {
            int u = base + i;
            int v = base + (i + 1) % 4;
            edges.push_back({std::min(u, v), std::max(u, v), -1});
        }
    }
    SignedGraph g(8, edges);
    BalanceWitness witness = is_balanced(g);
    REQUIRE(witness.balanced);
    CHECK(all_edges_positive(switch_graph(g, witness.balancing_set)));
}

TEST_CASE("harary bipartition exists exactly for balanced graphs") {
    SignedGraph positive = sct::make_wheel(4);
    auto split = harary_bipartition(positive);
    REQUIRE(split.has_value());
    CHECK(split->first.size() == 5);
    CHECK(split->second.empty());

    // All-negative even cycle: alternating sides.
    SignedGraph c4(4, {{0, 1, -1}, {1, 2, -1}, {2, 3, -1}, {0, 3, -1}});
    auto alt = harary_bipartition(c4);
    REQUIRE(alt.has_value());
    for (const auto& e : c4.edges()) {
        bool same_side =
            (std::binary_search(alt->first.begin(), alt->first.end(), e.u) ==
             std::binary_search(alt->first.begin(), alt->first.end(), e.v));
        CHECK(same_side == (e.sign == +1));
    }

    CHECK_FALSE(harary_bipartition(sct::make_k4_negative_matching()).has_value());
}

TEST_CASE("antibalance checks the negated signature") {
    // Trees are vacuously balanced under any signature.
    SignedGraph tree(4, {{0, 1, -1}, {1, 2, -1}, {1, 3, -1}});
    CHECK(is_antibalanced(tree));

    SignedGraph odd_cycle(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, +1}});
    CHECK_FALSE(is_antibalanced(odd_cycle));
    CHECK(cycle_sign(negate_all_signs(odd_cycle), {0, 1, 2}) == -1);

    SignedGraph even_cycle(4, {{0, 1, +1}, {1, 2, +1}, {2, 3, +1}, {0, 3, +1}});
    CHECK(is_antibalanced(even_cycle));
}

TEST_CASE("list transport negates on the set and is an involution") {
    ListAssignment lists(2, {{1, 2, 3}, {4, 5}});
    SwitchSet set{{0}};
    ListAssignment moved = transport_lists(lists, set);
    CHECK(moved.at(0) == std::vector<int>{-3, -2, -1});
    CHECK(moved.at(1) == std::vector<int>{4, 5});
    CHECK(transport_lists(moved, set) == lists);
    CHECK(transport_lists(lists, {}) == lists);
}

TEST_CASE("coloring transport preserves propriety in both directions") {
    SplitMix64 rng(24);
    SignedGraph g = sct::make_mixed_path();
    ListAssignment lists(3, {{1, 2}, {1, 2}, {-1, -2}});
    // Exhaust all switch sets and all colorings from the lists.
    for (unsigned mask = 0; mask < 8; ++mask) {
        SwitchSet set;
        for (int v = 0; v < 3; ++v) {
            if (mask & (1u << v)) set.members.push_back(v);
        }
        SignedGraph switched = switch_graph(g, set);
        ListAssignment moved_lists = transport_lists(lists, set);
        for (int a : lists.at(0)) {
            for (int b : lists.at(1)) {
                for (int c : lists.at(2)) {
                    Coloring col;
                    col.set(0, a);
                    col.set(1, b);
                    col.set(2, c);
                    Coloring moved = transport_coloring(col, set);
                    bool ok_before = validate_list_coloring(g, lists, col).first;
                    bool ok_after = validate_list_coloring(switched, moved_lists, moved).first;
                    CHECK(ok_before == ok_after);
                }
            }
        }
    }
    // Zero stays zero under transport.
    Coloring zero;
    zero.set(0, 0);
    CHECK(transport_coloring(zero, {{0}}).at(0) == 0);
}

TEST_CASE("switching preserves oracle satisfiability") {
    SplitMix64 rng(25);
    for (int iter = 0; iter < 20; ++iter) {
        SignedGraph g = sct::random_graph(6, rng, 0.6, 0.5);
        ListAssignment lists(6);
        for (int v = 0; v < 6; ++v) {
            std::vector<int> values;
            int size = rng.range(1, 2);
            while (static_cast<int>(values.size()) < size) {
                int x = rng.range(-2, 2);
                if (std::find(values.begin(), values.end(), x) == values.end()) {
                    values.push_back(x);
                }
            }
            lists.assign(v, values);
        }
        SwitchSet set = random_switch_set(6, rng);
        OracleResult before = brute_force_l_coloring(g, lists);
        OracleResult after =
            brute_force_l_coloring(switch_graph(g, set), transport_lists(lists, set));
        CHECK(before.status == after.status);
        if (before.status == OracleStatus::sat) {
            Coloring moved = transport_coloring(*before.witness, set);
            CHECK(validate_list_coloring(switch_graph(g, set), transport_lists(lists, set), moved)
                      .first);
        }
    }
}
