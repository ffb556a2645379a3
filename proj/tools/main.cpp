#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "signedcolor/bench.hpp"
#include "signedcolor/instance.hpp"
#include "signedcolor/oracle.hpp"
#include "signedcolor/signature.hpp"
#include "signedcolor/solver.hpp"

using namespace signedcolor;

namespace {

// Exit codes: 0 ok / positive answer, 1 failed verification or UNSAT,
// 2 precondition violation, 3 malformed input, 4 budget exhausted,
// 5 usage error, 6 internal invariant breach.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitFormat = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUsage = 5;
constexpr int kExitInternal = 6;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::format, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(errc::format, "cannot write " + path);
    out << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SIGNEDCOLOR_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

VertexId resolve_vertex(const InstanceFile& inst, const std::string& token) {
    for (std::size_t i = 0; i < inst.names.size(); ++i) {
        if (inst.names[i] == token) return static_cast<VertexId>(i);
    }
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used == token.size() && v >= 0 && v < inst.vertex_count) {
            return static_cast<VertexId>(v);
        }
    } catch (const std::exception&) {
    }
    throw Error(errc::format, "unknown vertex \"" + token + "\"");
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) out.push_back(token);
    }
    return out;
}

struct SubInstance {
    std::vector<VertexId> to_parent;
    InstanceFile inst;
};

/// Induced sub-instance on one connected component, vertices relabeled.
SubInstance restrict_to(const InstanceFile& inst, const std::vector<VertexId>& members) {
    SubInstance sub;
    sub.to_parent = members;
    std::vector<int> local(static_cast<std::size_t>(inst.vertex_count), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    sub.inst.vertex_count = static_cast<int>(members.size());
    for (const auto& e : inst.edges) {
        if (local[e.u] >= 0 && local[e.v] >= 0) {
            sub.inst.edges.push_back({local[e.u], local[e.v], e.sign});
        }
    }
    if (inst.rotation) {
        RotationSystem rot(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (VertexId w : (*inst.rotation)[static_cast<std::size_t>(members[i])]) {
                rot[i].push_back(local[w]);
            }
        }
        sub.inst.rotation = std::move(rot);
    }
    if (inst.outer_face) {
        bool all_here = true;
        for (VertexId v : *inst.outer_face) {
            if (local[v] < 0) all_here = false;
        }
        if (all_here) {
            std::vector<VertexId> outer;
            for (VertexId v : *inst.outer_face) outer.push_back(local[v]);
            sub.inst.outer_face = std::move(outer);
        }
    }
    if (inst.lists) {
        ListAssignment lists(sub.inst.vertex_count);
        for (std::size_t i = 0; i < members.size(); ++i) {
            lists.assign(static_cast<VertexId>(i), inst.lists->at(members[i]));
        }
        sub.inst.lists = std::move(lists);
    }
    return sub;
}

ListAssignment require_lists(const InstanceFile& inst) {
    if (!inst.lists) {
        throw Error(errc::precondition, "instance has no lists; this mode needs them");
    }
    return *inst.lists;
}

SignPolicy parse_policy(const std::string& name) {
    if (name == "always_positive") return SignPolicy::always_positive;
    if (name == "always_negative") return SignPolicy::always_negative;
    if (name == "alternating") return SignPolicy::alternating;
    throw Error(errc::format, "sign policy must be always_positive, always_negative or alternating");
}

int cmd_color(const std::string& input, const std::string& mode, const std::string& output,
              const std::string& policy_name) {
    InstanceFile inst = parse_instance(slurp(input));
    SignPolicy policy = parse_policy(policy_name);
    Coloring merged;

    if (mode == "degeneracy") {
        SignedGraph g = inst.graph();
        merged = degeneracy_greedy_color(g, require_lists(inst));
    } else {
        SignedGraph whole = inst.graph();
        for (const auto& members : connected_components(whole)) {
            SubInstance sub = restrict_to(inst, members);
            PlaneGraph pg = sub.inst.plane_graph();
            Coloring local;
            if (mode == "five") {
                local = five_list_color(pg, require_lists(sub.inst), policy);
            } else if (mode == "symmetric") {
                local = symmetric_five_color(pg);
            } else if (mode == "outerplanar") {
                local = outerplanar_three_list_color(pg, require_lists(sub.inst));
            } else if (mode == "defective") {
                local = defective_four_list_color(pg, require_lists(sub.inst));
            } else {
                throw Error(errc::format, "unknown mode \"" + mode + "\"");
            }
            for (const auto& [v, c] : local.values()) merged.set(sub.to_parent[v], c);
        }
    }
    spit(output, serialize_coloring(merged));
    std::cout << "colored " << merged.size() << " vertices (" << mode << ")\n";
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& coloring_path) {
    InstanceFile inst = parse_instance(slurp(input));
    Coloring coloring = parse_coloring(slurp(coloring_path));
    SignedGraph g = inst.graph();

    ViolationReport report;
    if (inst.lists && coloring.is_total_on(g)) {
        report = validate_list_coloring(g, *inst.lists, coloring).second;
    } else {
        report = validate_coloring(g, coloring);
        if (inst.lists) {
            for (const auto& [v, c] : coloring.values()) {
                if (!inst.lists->contains(v, c)) report.list_violations.push_back(v);
            }
        }
    }
    if (report.clean()) {
        std::cout << "proper\n";
        return kExitOk;
    }
    for (const auto& e : report.violating_edges) {
        std::cout << "violated edge (" << e.u << ", " << e.v << ", " << (e.sign > 0 ? "+1" : "-1")
                  << ")\n";
    }
    for (VertexId v : report.list_violations) {
        std::cout << "color of vertex " << v << " is not in its list\n";
    }
    std::cout << "max defect " << max_defect(report) << "\n";
    return kExitNegative;
}

int cmd_balance(const std::string& input) {
    InstanceFile inst = parse_instance(slurp(input));
    BalanceWitness witness = is_balanced(inst.graph());
    if (witness.balanced) {
        std::cout << "BALANCED switch_set:";
        for (VertexId v : witness.balancing_set.members) std::cout << " " << v;
        std::cout << "\n";
    } else {
        std::cout << "UNBALANCED negative_cycle:";
        for (VertexId v : witness.negative_cycle) std::cout << " " << v;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_switch(const std::string& input, const std::string& set_text, const std::string& output) {
    InstanceFile inst = parse_instance(slurp(input));
    SwitchSet set;
    for (const std::string& token : split_csv(set_text)) {
        set.members.push_back(resolve_vertex(inst, token));
    }
    set.normalize();
    SignedGraph switched = switch_graph(inst.graph(), set);
    InstanceFile out = inst;
    out.edges = switched.edges();
    if (inst.lists) out.lists = transport_lists(*inst.lists, set);
    if (!inst.precoloring.empty()) out.precoloring = transport_coloring(inst.precoloring, set);
    spit(output, serialize_instance(out));
    std::cout << "switched at " << set.members.size() << " vertices\n";
    return kExitOk;
}

int cmd_triangulate(const std::string& input, const std::string& policy_name,
                    const std::string& output) {
    InstanceFile inst = parse_instance(slurp(input));
    PlaneGraph result = triangulate(inst.plane_graph(), parse_policy(policy_name));
    InstanceFile out = inst;
    out.edges = result.graph().edges();
    out.rotation = result.rotation();
    out.outer_face = result.outer().boundary;
    spit(output, serialize_instance(out));
    std::cout << "triangulated: " << inst.edges.size() << " -> " << out.edges.size() << " edges\n";
    return kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& mode, long long budget,
               const std::string& output) {
    InstanceFile inst = parse_instance(slurp(input));
    ListAssignment lists = require_lists(inst);
    // A precoloring pins vertices by shrinking their lists to singletons.
    for (const auto& [v, c] : inst.precoloring.values()) lists.assign(v, {c});
    OracleMode oracle_mode;
    if (mode == "signed") {
        oracle_mode = OracleMode::signed_all;
    } else if (mode == "positive") {
        oracle_mode = OracleMode::positive_only;
    } else {
        throw Error(errc::format, "oracle mode must be signed or positive");
    }
    OracleResult result = brute_force_l_coloring(inst.graph(), lists, oracle_mode, budget);
    switch (result.status) {
        case OracleStatus::sat:
            std::cout << "SAT\n";
            if (!output.empty()) spit(output, serialize_coloring(*result.witness));
            return kExitOk;
        case OracleStatus::unsat:
            std::cout << "UNSAT\n";
            return kExitNegative;
        case OracleStatus::budget_exhausted:
            std::cout << "BUDGET\n";
            return kExitBudget;
    }
    return kExitInternal;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, double negative_probability,
            const std::string& lists_spec, int color_lo, int color_hi, const std::string& output) {
    InstanceFile inst;
    if (kind == "stacked") {
        inst = gen_stacked_triangulation(n, seed, negative_probability);
    } else if (kind == "outerplanar") {
        inst = gen_outerplanar(n, seed, negative_probability);
    } else {
        throw Error(errc::format, "gen kind must be stacked or outerplanar");
    }
    if (!lists_spec.empty()) {
        ListProfile profile;
        if (lists_spec == "thomassen") {
            profile = ListProfile::thomassen();
        } else if (lists_spec.rfind("uniform:", 0) == 0) {
            profile = ListProfile::uniform(std::stoi(lists_spec.substr(8)));
        } else {
            throw Error(errc::format, "lists profile must be uniform:<k> or thomassen");
        }
        inst.lists = gen_lists(inst, profile, color_lo, color_hi, seed + 0x9E37ull);
    }
    std::string text = serialize_instance(inst);
    if (output.empty()) {
        std::cout << text;
    } else {
        spit(output, text);
        std::cout << "generated " << kind << " instance with " << n << " vertices\n";
    }
    return kExitOk;
}

int cmd_bench(const std::string& sizes_text, int trials, std::uint64_t seed,
              const std::string& report_path) {
    std::vector<int> sizes;
    for (const std::string& token : split_csv(sizes_text)) sizes.push_back(std::stoi(token));
    BenchReport report = run_bench(sizes, trials, seed);
    for (const auto& row : report.rows) {
        std::cout << "n=" << row.n << " mean=" << row.mean_runtime_s << "s trials=" << row.trials
                  << "\n";
    }
    std::cout << "fitted exponent " << report.fitted_exponent << "\n";
    spit(report_path, serialize_bench_report(report));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed planar graph list coloring toolkit"};
    app.require_subcommand(1);

    std::string input, output, coloring_path, report_path;
    std::string mode = "five";
    std::string policy = "always_positive";
    std::string set_text, lists_spec, sizes_text, kind;
    std::string oracle_mode = "signed";
    long long budget = 0;
    int n = 0;
    int trials = 5;
    int color_lo = -10;
    int color_hi = 10;
    double negative_probability = 0.5;
    std::uint64_t seed = default_seed();

    auto* color = app.add_subcommand("color", "run a coloring solver on an instance");
    color->add_option("--input", input)->required();
    color->add_option("--mode", mode)->check(CLI::IsMember({"five", "outerplanar", "defective", "degeneracy", "symmetric"}));
    color->add_option("--output", output)->required();
    color->add_option("--sign-policy", policy);

    auto* verify = app.add_subcommand("verify", "check a coloring file against an instance");
    verify->add_option("--input", input)->required();
    verify->add_option("--coloring", coloring_path)->required();

    auto* balance = app.add_subcommand("balance", "report balance with a constructive witness");
    balance->add_option("--input", input)->required();

    auto* switch_cmd = app.add_subcommand("switch", "switch the signature at a vertex set");
    switch_cmd->add_option("--input", input)->required();
    switch_cmd->add_option("--set", set_text)->required();
    switch_cmd->add_option("--output", output)->required();

    auto* tri = app.add_subcommand("triangulate", "augment to a near-triangulation");
    tri->add_option("--input", input)->required();
    tri->add_option("--sign-policy", policy);
    tri->add_option("--output", output)->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive list-coloring search");
    oracle->add_option("--input", input)->required();
    oracle->add_option("--mode", oracle_mode)->check(CLI::IsMember({"signed", "positive"}));
    oracle->add_option("--budget", budget);
    oracle->add_option("--output", output);

    auto* gen = app.add_subcommand("gen", "generate random instances");
    gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"stacked", "outerplanar"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--negative-probability,--neg-prob", negative_probability);
    gen->add_option("--lists", lists_spec);
    gen->add_option("--color-lo", color_lo);
    gen->add_option("--color-hi", color_hi);
    gen->add_option("--output", output);

    auto* bench = app.add_subcommand("bench", "time the 5-list solver across sizes");
    bench->add_option("--sizes", sizes_text)->required();
    bench->add_option("--trials", trials);
    bench->add_option("--seed", seed);
    bench->add_option("--report", report_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*color) return cmd_color(input, mode, output, policy);
        if (*verify) return cmd_verify(input, coloring_path);
        if (*balance) return cmd_balance(input);
        if (*switch_cmd) return cmd_switch(input, set_text, output);
        if (*tri) return cmd_triangulate(input, policy, output);
        if (*oracle) return cmd_oracle(input, oracle_mode, budget, output);
        if (*gen) return cmd_gen(kind, n, seed, negative_probability, lists_spec, color_lo,
                                 color_hi, output);
        if (*bench) return cmd_bench(sizes_text, trials, seed, report_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::precondition:
            case errc::unsupported:
                return kExitPrecondition;
            case errc::format:
                return kExitFormat;
            case errc::internal:
                return kExitInternal;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
