// Command-line front end: solve structured QAP instances, maximize tree
// Wiener indices, run the exhaustive oracles, generate inputs, benchmark.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wqap/dp_solver.hpp"
#include "wqap/gen.hpp"
#include "wqap/io.hpp"
#include "wqap/oracle.hpp"
#include "wqap/wiener_tree.hpp"

namespace {

using nlohmann::json;
using namespace wqap;

int exit_category(const Error& e) {
    switch (e.code()) {
        case ErrorCode::Overflow:
        case ErrorCode::StateInvalid:
        case ErrorCode::InconsistentTables:
            return 3;  // solver error
        default:
            return 2;  // invalid input
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Malformed, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int default_oracle_cap() {
    if (const char* env = std::getenv("WQAP_ORACLE_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadParams,
                        "WQAP_ORACLE_CAP must be an integer");
        }
    }
    return kDefaultOracleCap;
}

class Stopwatch {
public:
    double ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void emit(const json& payload, const std::string& format) {
    if (format == "text") {
        for (auto it = payload.begin(); it != payload.end(); ++it) {
            std::cout << it.key() << ": ";
            if (it.value().is_string())
                std::cout << it.value().get<std::string>();
            else
                std::cout << it.value().dump();
            std::cout << "\n";
        }
    } else {
        std::cout << payload.dump() << "\n";
    }
}

json perm_json(const Permutation& perm) {
    return json(perm);
}

struct SolveOptions {
    std::string sense;
    std::string file;
    std::string format = "json";
    bool no_reconstruct = false;
};

void run_solve(const SolveOptions& opt) {
    Stopwatch watch;
    std::string bytes = read_file(opt.file);
    auto loaded = parse_instance(bytes);
    const auto& inst = loaded.instance;
    bool maximize = opt.sense == "max";

    json payload;
    payload["command"] = "solve-" + opt.sense;
    payload["input_digest"] = digest_hex(bytes);
    payload["input_format"] = loaded.meta.format;
    payload["alpha_order"] = loaded.meta.alpha_order;
    payload["beta_order"] = loaded.meta.beta_order;
    payload["n"] = inst.size();
    payload["sum_alpha"] = inst.alpha_sum();
    if (opt.no_reconstruct) {
        auto ctx = maximize ? SolveContext::for_max(inst)
                            : SolveContext::for_min(inst);
        ctx.solve();
        payload["optimum"] = wide_json(ctx.optimum());
        payload["states_visited"] = ctx.states_visited();
    } else {
        auto result = maximize ? solve_max(inst) : solve_min(inst);
        payload["optimum"] = wide_json(result.optimum);
        payload["assignment"] = perm_json(result.assignment.perm);
        payload["shape"] = shape_name(result.assignment.shape);
        payload["states_visited"] = result.states_visited;
    }
    payload["wall_ms"] = watch.ms();
    emit(payload, opt.format);
}

struct TreeMaxOptions {
    std::string file;
    std::string format = "json";
    bool emit_tree = false;
    bool count_optima = false;
    int cap = kDefaultOracleCap;
};

void run_tree_max(const TreeMaxOptions& opt) {
    Stopwatch watch;
    std::string bytes = read_file(opt.file);
    auto d = validate_degree_sequence(parse_integer_list(bytes));
    auto result = solve_max_wiener(d);
    const auto& cat = result.caterpillar;

    json payload;
    payload["command"] = "tree-max";
    payload["input_digest"] = digest_hex(bytes);
    payload["r"] = cat.r;
    payload["n"] = cat.n;
    payload["wiener"] = wide_json(cat.wiener);
    payload["ell"] = json(cat.ell);
    payload["backbone_degrees"] = json(cat.backbone_degrees);
    payload["states_visited"] = result.states_visited;
    if (opt.emit_tree) {
        json edges = json::array();
        for (auto [u, v] : cat.edges) edges.push_back(json::array({u, v}));
        payload["edges"] = edges;
    }
    if (opt.count_optima && d.backbone_count() <= opt.cap) {
        CaterpillarEnumerator en(d, opt.cap);
        std::uint64_t optimal = 0;
        while (auto p = en.next())
            if (p->wiener == cat.wiener) ++optimal;
        payload["optimal_profile_count"] = optimal;
    }
    payload["wall_ms"] = watch.ms();
    emit(payload, opt.format);
}

struct OracleQapOptions {
    std::string file;
    std::string sense;
    std::string format = "json";
    int cap = kDefaultOracleCap;
};

void run_oracle_qap(const OracleQapOptions& opt) {
    Stopwatch watch;
    std::string bytes = read_file(opt.file);
    auto loaded = parse_instance(bytes);
    auto result = brute_force(loaded.instance,
                              opt.sense == "max" ? Sense::Max : Sense::Min,
                              opt.cap);
    json payload;
    payload["command"] = "oracle-qap-" + opt.sense;
    payload["input_digest"] = digest_hex(bytes);
    payload["n"] = loaded.instance.size();
    payload["optimum"] = wide_json(result.optimum);
    payload["optimal_count"] = result.optimal_count;
    payload["witness"] = perm_json(result.witness.perm);
    payload["witness_shape"] = shape_name(result.witness.shape);
    payload["wall_ms"] = watch.ms();
    emit(payload, opt.format);
}

struct OracleFileOptions {
    std::string file;
    std::string format = "json";
    int cap = kDefaultOracleCap;
};

void run_oracle_trees(const OracleFileOptions& opt) {
    Stopwatch watch;
    std::string bytes = read_file(opt.file);
    auto d = validate_degree_sequence(parse_integer_list(bytes));
    TreeEnumerator en(d, opt.cap);
    std::uint64_t count = 0;
    Wide best = -1, worst = -1;
    while (auto t = en.next()) {
        Wide w = wiener_index(*t);
        if (count == 0 || w > best) best = w;
        if (count == 0 || w < worst) worst = w;
        ++count;
    }
    json payload;
    payload["command"] = "oracle-trees";
    payload["input_digest"] = digest_hex(bytes);
    payload["r"] = d.r();
    payload["count"] = count;
    payload["max_wiener"] = wide_json(best);
    payload["min_wiener"] = wide_json(worst);
    payload["wall_ms"] = watch.ms();
    emit(payload, opt.format);
}

void run_oracle_caterpillars(const OracleFileOptions& opt) {
    Stopwatch watch;
    std::string bytes = read_file(opt.file);
    auto d = validate_degree_sequence(parse_integer_list(bytes));
    CaterpillarEnumerator en(d, opt.cap);
    std::uint64_t count = 0, optimal = 0;
    Wide best = -1;
    std::vector<std::int64_t> best_ell;
    while (auto p = en.next()) {
        if (count == 0 || p->wiener > best) {
            best = p->wiener;
            best_ell = p->ell;
            optimal = 1;
        } else if (p->wiener == best) {
            ++optimal;
        }
        ++count;
    }
    json payload;
    payload["command"] = "oracle-caterpillars";
    payload["input_digest"] = digest_hex(bytes);
    payload["r"] = d.r();
    payload["n"] = d.backbone_count();
    payload["profile_count"] = count;
    payload["max_wiener"] = wide_json(best);
    payload["best_ell"] = json(best_ell);
    payload["optimal_profile_count"] = optimal;
    payload["wall_ms"] = watch.ms();
    emit(payload, opt.format);
}

struct GenQapOptions {
    int n = 5;
    std::int64_t alpha_max = 10;
    std::int64_t beta_max = 15;
    std::uint64_t seed = 0;
};

struct GenDegseqOptions {
    int r = 8;
    std::uint64_t seed = 0;
};

struct ReduceOptions {
    std::string file;
};

void run_reduce_partition(const ReduceOptions& opt) {
    std::string bytes = read_file(opt.file);
    PartitionInstance p(parse_integer_list(bytes));
    auto reduction = reduce_partition(p);
    json payload;
    payload["alphas"] = reduction.instance.alphas();
    payload["betas"] = reduction.instance.betas();
    payload["threshold"] = wide_json(reduction.threshold);
    payload["k"] = p.half_count();
    payload["Q"] = p.half_sum();
    std::cout << payload.dump() << "\n";
}

struct BenchQapOptions {
    std::vector<int> n_list;
    std::int64_t alpha_max = 10;
    std::int64_t beta_max = 15;
    std::uint64_t seed = 0;
    int reps = 1;
};

void run_bench_qap(const BenchQapOptions& opt) {
    std::cout << "command,n_or_r,sum_alpha,states,millis\n";
    for (int n : opt.n_list)
        for (int rep = 0; rep < opt.reps; ++rep) {
            auto inst = generate_qap(n, opt.alpha_max, opt.beta_max,
                                     opt.seed + std::uint64_t(rep));
            Stopwatch watch;
            auto ctx = SolveContext::for_max(inst);
            ctx.solve();
            (void)ctx.optimum();
            std::cout << "solve-max," << n << "," << inst.alpha_sum() << ","
                      << ctx.states_visited() << "," << watch.ms() << "\n";
        }
}

struct BenchTreeOptions {
    std::vector<int> r_list;
    std::uint64_t seed = 0;
    int reps = 1;
};

void run_bench_tree(const BenchTreeOptions& opt) {
    std::cout << "command,n_or_r,sum_alpha,states,millis\n";
    for (int r : opt.r_list)
        for (int rep = 0; rep < opt.reps; ++rep) {
            auto d = validate_degree_sequence(
                generate_degree_sequence(r, opt.seed + std::uint64_t(rep)));
            Stopwatch watch;
            auto result = solve_max_wiener(d);
            std::cout << "tree-max," << r << "," << r << ","
                      << result.states_visited << "," << watch.ms() << "\n";
        }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for the structured max/min QAP and for "
                 "maximizing the Wiener index over trees with a prescribed "
                 "degree sequence"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand(
        "solve", "Solve an instance exactly via the pseudo-polynomial DP");
    solve_cmd
        ->add_option("sense", solve_opt.sense, "max or min")
        ->required()
        ->check(CLI::IsMember({"max", "min"}));
    solve_cmd->add_option("file", solve_opt.file, "instance file")->required();
    solve_cmd->add_option("--format", solve_opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    solve_cmd->add_flag("--no-reconstruct", solve_opt.no_reconstruct,
                        "report the optimum only");

    TreeMaxOptions tree_opt;
    auto* tree_cmd = app.add_subcommand(
        "tree-max",
        "Find a tree maximizing the Wiener index for a degree sequence");
    tree_cmd->add_option("file", tree_opt.file, "degree sequence file")
        ->required();
    tree_cmd->add_option("--format", tree_opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    tree_cmd->add_flag("--emit-tree", tree_opt.emit_tree,
                       "include the explicit edge list");
    tree_cmd->add_flag("--count-optima", tree_opt.count_optima,
                       "count optimal leaf profiles when the backbone is "
                       "within the oracle cap");
    auto* tree_cap =
        tree_cmd->add_option("--cap", tree_opt.cap, "oracle enumeration cap");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "Exhaustive ground-truth enumerations");
    oracle_cmd->require_subcommand(1);

    OracleQapOptions oq_opt;
    auto* oq_cmd = oracle_cmd->add_subcommand(
        "qap", "Enumerate all permutations of an instance");
    oq_cmd->add_option("file", oq_opt.file, "instance file")->required();
    oq_cmd->add_option("--sense", oq_opt.sense, "max or min")
        ->required()
        ->check(CLI::IsMember({"max", "min"}));
    oq_cmd->add_option("--format", oq_opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    auto* oq_cap = oq_cmd->add_option("--cap", oq_opt.cap, "enumeration cap");

    OracleFileOptions ot_opt;
    auto* ot_cmd = oracle_cmd->add_subcommand(
        "trees", "Enumerate all labeled trees with the degree sequence");
    ot_cmd->add_option("file", ot_opt.file, "degree sequence file")
        ->required();
    ot_cmd->add_option("--format", ot_opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    auto* ot_cap = ot_cmd->add_option("--cap", ot_opt.cap, "enumeration cap");

    OracleFileOptions oc_opt;
    auto* oc_cmd = oracle_cmd->add_subcommand(
        "caterpillars", "Enumerate all caterpillar leaf profiles");
    oc_cmd->add_option("file", oc_opt.file, "degree sequence file")
        ->required();
    oc_cmd->add_option("--format", oc_opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    auto* oc_cap = oc_cmd->add_option("--cap", oc_opt.cap, "enumeration cap");

    auto* gen_cmd = app.add_subcommand("gen", "Generate random valid inputs");
    gen_cmd->require_subcommand(1);

    GenQapOptions gq_opt;
    auto* gq_cmd = gen_cmd->add_subcommand("qap", "Random instance (JSON)");
    gq_cmd->add_option("--n", gq_opt.n, "instance size")->required();
    gq_cmd->add_option("--alpha-max", gq_opt.alpha_max, "weight range cap");
    gq_cmd->add_option("--beta-max", gq_opt.beta_max, "point range cap");
    gq_cmd->add_option("--seed", gq_opt.seed, "PRNG seed");

    GenDegseqOptions gd_opt;
    auto* gd_cmd =
        gen_cmd->add_subcommand("degseq", "Random tree degree sequence");
    gd_cmd->add_option("--r", gd_opt.r, "vertex count")->required();
    gd_cmd->add_option("--seed", gd_opt.seed, "PRNG seed");

    auto* reduce_cmd =
        app.add_subcommand("reduce", "Hardness-reduction constructions");
    reduce_cmd->require_subcommand(1);
    ReduceOptions red_opt;
    auto* rp_cmd = reduce_cmd->add_subcommand(
        "partition",
        "Build the instance and threshold for a partition sequence");
    rp_cmd->add_option("file", red_opt.file, "partition file")->required();

    auto* bench_cmd =
        app.add_subcommand("bench", "Timed sweeps, CSV on standard output");
    bench_cmd->require_subcommand(1);

    BenchQapOptions bq_opt;
    auto* bq_cmd = bench_cmd->add_subcommand("qap", "QAP solver sweep");
    bq_cmd->add_option("--n-list", bq_opt.n_list, "instance sizes")
        ->required()
        ->delimiter(',');
    bq_cmd->add_option("--alpha-max", bq_opt.alpha_max, "weight range cap");
    bq_cmd->add_option("--beta-max", bq_opt.beta_max, "point range cap");
    bq_cmd->add_option("--seed", bq_opt.seed, "PRNG seed");
    bq_cmd->add_option("--reps", bq_opt.reps, "repetitions per size");

    BenchTreeOptions bt_opt;
    auto* bt_cmd = bench_cmd->add_subcommand("tree", "tree solver sweep");
    bt_cmd->add_option("--r-list", bt_opt.r_list, "vertex counts")
        ->required()
        ->delimiter(',');
    bt_cmd->add_option("--seed", bt_opt.seed, "PRNG seed");
    bt_cmd->add_option("--reps", bt_opt.reps, "repetitions per size");

    try {
        app.parse(argc, argv);

        int env_cap = default_oracle_cap();
        if (!*tree_cap) tree_opt.cap = env_cap;
        if (!*oq_cap) oq_opt.cap = env_cap;
        if (!*ot_cap) ot_opt.cap = env_cap;
        if (!*oc_cap) oc_opt.cap = env_cap;

        if (*solve_cmd) run_solve(solve_opt);
        if (*tree_cmd) run_tree_max(tree_opt);
        if (*oq_cmd) run_oracle_qap(oq_opt);
        if (*ot_cmd) run_oracle_trees(ot_opt);
        if (*oc_cmd) run_oracle_caterpillars(oc_opt);
        if (*gq_cmd)
            std::cout << instance_to_json(generate_qap(
                gq_opt.n, gq_opt.alpha_max, gq_opt.beta_max, gq_opt.seed));
        if (*gd_cmd) {
            auto degrees = generate_degree_sequence(gd_opt.r, gd_opt.seed);
            for (std::size_t i = 0; i < degrees.size(); ++i)
                std::cout << degrees[i] << (i + 1 < degrees.size() ? " " : "\n");
        }
        if (*rp_cmd) run_reduce_partition(red_opt);
        if (*bq_cmd) run_bench_qap(bq_opt);
        if (*bt_cmd) run_bench_tree(bt_opt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_category(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
