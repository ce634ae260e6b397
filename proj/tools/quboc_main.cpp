// quboc: compile polynomial optimization problems to QUBO form, solve them
// with classical solvers, decode the results, and run the demo problems.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quboc/compile.hpp"
#include "quboc/logreg.hpp"
#include "quboc/num_format.hpp"
#include "quboc/qubo.hpp"
#include "quboc/ratio_cut.hpp"
#include "quboc/solve.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSizeLimit = 4;

using nlohmann::json;
using namespace quboc;

struct ProblemDescription {
    std::map<Var, DomainSpec> domains;
    Polynomial objective;
};

// JSON schema:
//   { "variables": [ {"name": ..., "domain": {"kind": "set", "values": [...]}
//                     | {"kind": "fixed_point", "r_min": .., "r_max": .., "signed": ..}} ],
//     "objective": [ {"coeff": ..., "powers": {"x": 2, ...}} ] }
ProblemDescription parse_problem(const json& doc) {
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("objective")) {
        throw std::invalid_argument("problem: need top-level 'variables' and 'objective'");
    }
    ProblemDescription problem;
    for (const auto& entry : doc.at("variables")) {
        std::string name = entry.at("name").get<std::string>();
        const json& domain = entry.at("domain");
        std::string kind = domain.at("kind").get<std::string>();
        Var var = continuous_var(name);
        if (problem.domains.contains(var)) {
            throw std::invalid_argument("problem: duplicate variable '" + name + "'");
        }
        if (kind == "set") {
            ExplicitSet set;
            for (const auto& v : domain.at("values")) set.values.push_back(v.get<double>());
            validate_domain(DomainSpec{set});
            problem.domains[var] = set;
        } else if (kind == "fixed_point") {
            FixedPoint fp;
            fp.r_min = domain.at("r_min").get<int>();
            fp.r_max = domain.at("r_max").get<int>();
            fp.sign_bit_block = domain.value("signed", false);
            validate_domain(DomainSpec{fp});
            problem.domains[var] = fp;
        } else {
            throw std::invalid_argument("problem: unknown domain kind '" + kind + "'");
        }
    }

    PolynomialBuilder acc;
    for (const auto& term : doc.at("objective")) {
        double coeff = term.at("coeff").get<double>();
        PowerMap powers;
        if (term.contains("powers")) {
            for (const auto& [name, exponent] : term.at("powers").items()) {
                Var var = continuous_var(name);
                if (!problem.domains.contains(var)) {
                    throw std::invalid_argument("problem: undeclared variable '" + name +
                                                "' in objective");
                }
                powers[var] = exponent.get<int>();
            }
        }
        acc.add_term(coeff, std::move(powers));
    }
    problem.objective = acc.build();
    return problem;
}

// Search-range exponent for the variable-count bound: r_min + r_max for
// fixed-point domains, half the bit count otherwise.
int bound_range(const std::map<Var, DomainSpec>& domains) {
    int r = 1;
    for (const auto& [v, domain] : domains) {
        if (const auto* fp = std::get_if<FixedPoint>(&domain)) {
            r = std::max(r, fp->r_min + fp->r_max);
        } else if (const auto* set = std::get_if<ExplicitSet>(&domain)) {
            r = std::max(r, (static_cast<int>(set->values.size()) + 1) / 2);
        } else if (const auto* base = std::get_if<CustomBase>(&domain)) {
            r = std::max(r, (static_cast<int>(base->weights.size()) + 1) / 2);
        }
    }
    return r;
}

int cmd_compile(const std::string& input_path, const std::string& output_path,
                const std::string& map_path) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return kExitParse;
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    ProblemDescription problem;
    CompileArtifacts artifacts;
    try {
        problem = parse_problem(doc);
        artifacts = compile(problem.objective, problem.domains);
    } catch (const json::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }

    QuboMatrix q = assemble(artifacts);
    {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "error: cannot write '" << output_path << "'\n";
            return kExitValidation;
        }
        q.write(out);
    }
    if (!map_path.empty()) {
        std::ofstream map_out(map_path);
        if (!map_out) {
            std::cerr << "error: cannot write '" << map_path << "'\n";
            return kExitValidation;
        }
        artifacts.registry.write_map(map_out);
    }

    int p = problem.objective.degree();
    int n = static_cast<int>(problem.objective.variables().size());
    int arity = problem.objective.max_product_arity();
    int r = bound_range(problem.domains);
    std::cout << "variables " << q.size() << "\n";
    std::cout << "aux " << artifacts.registry.aux_count() << "\n";
    std::cout << "penalty_weight " << report_repr(artifacts.weight) << "\n";
    std::cout << "bound " << aux_upper_bound(p, n, arity, r)
              << "  (p=" << p << " n=" << n << " q=" << arity << " r=" << r << ")\n";
    return kExitOk;
}

int cmd_solve(const std::string& qubo_path, const std::string& method,
              const AnnealParams& params, const std::string& map_path) {
    QuboMatrix q;
    try {
        std::ifstream in(qubo_path);
        if (!in) throw std::runtime_error("cannot open '" + qubo_path + "'");
        q = QuboMatrix::read(in);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    Solution sol;
    try {
        if (method == "brute") {
            sol = brute_force(q);
        } else {
            sol = simulated_anneal(q, params);
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    }

    std::cout << "energy " << report_repr(sol.energy) << "\n";
    std::cout << "bits " << sol.bitstring() << "\n";
    if (!map_path.empty()) {
        DecodeRegistry registry;
        try {
            std::ifstream map_in(map_path);
            if (!map_in) throw std::runtime_error("cannot open '" + map_path + "'");
            registry = DecodeRegistry::read_map(map_in);
        } catch (const std::exception& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return kExitParse;
        }
        sol = with_decoding(std::move(sol), registry);
        for (const auto& [var, value] : sol.decoded) {
            std::cout << "  " << var.name() << " = " << report_repr(value) << "\n";
        }
        std::cout << "consistent " << (sol.consistent ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_demo_ratio_cut(const std::string& graph_path, const RatioCutConfig& cfg,
                       const AnnealParams& params) {
    Graph graph;
    try {
        if (graph_path.empty()) {
            graph = demo_graph();
        } else {
            std::ifstream in(graph_path);
            if (!in) throw std::runtime_error("cannot open '" + graph_path + "'");
            graph = read_graph(in);
        }
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    RatioCutSolution sol = solve_ratio_cut(graph, cfg, params);
    std::cout << "objective " << report_repr(sol.objective_energy) << "\n";
    std::ostringstream side_a, side_b;
    for (int v = 0; v < graph.vertex_count; ++v) {
        auto& os = sol.side[static_cast<std::size_t>(v)] == 0 ? side_a : side_b;
        if (os.tellp() > 0) os << " ";
        os << v;
    }
    std::cout << "partition A [" << side_a.str() << "]\n";
    std::cout << "partition B [" << side_b.str() << "]\n";
    if (sol.rcut) {
        std::cout << "rcut " << report_repr(*sol.rcut) << "\n";
    } else if (!sol.raw.consistent) {
        std::cout << "rcut undefined (constraints violated; raise --sweeps or --restarts)\n";
    } else {
        std::cout << "rcut undefined (one side is empty)\n";
    }
    return kExitOk;
}

int cmd_demo_logreg(const std::vector<double>& p_values, LogRegConfig cfg, int runs,
                    const AnnealParams& params, const std::string& export_path) {
    std::cout << "p mu sigma\n";
    for (double p : p_values) {
        cfg.label_fidelity = p;
        EvalReport report = run_logreg_experiment(cfg, runs, params);
        std::cout << report_repr(p) << " " << report_repr(report.accuracy_mean) << " "
                  << report_repr(report.accuracy_std) << "\n";
    }
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) {
            std::cerr << "error: cannot write '" << export_path << "'\n";
            return kExitValidation;
        }
        write_dataset(generate_logreg_dataset(cfg), out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quboc: polynomial-to-QUBO compiler and classical solvers"};
    app.require_subcommand(1);

    // compile
    std::string compile_input, compile_output, compile_map;
    auto* compile_cmd = app.add_subcommand("compile", "compile a problem description to a QUBO file");
    compile_cmd->add_option("input", compile_input, "problem description (JSON)")->required();
    compile_cmd->add_option("-o,--output", compile_output, "QUBO output path")->required();
    compile_cmd->add_option("--map", compile_map, "decode-map sidecar path");

    // solve
    std::string solve_input, solve_method = "brute", solve_map;
    AnnealParams solve_params;
    auto* solve_cmd = app.add_subcommand("solve", "minimize a QUBO file");
    solve_cmd->add_option("input", solve_input, "QUBO file")->required();
    solve_cmd->add_option("--method", solve_method, "brute|anneal")
        ->check(CLI::IsMember({"brute", "anneal"}));
    solve_cmd->add_option("--seed", solve_params.seed, "random seed (default 0)");
    solve_cmd->add_option("--restarts", solve_params.restarts, "annealer restarts");
    solve_cmd->add_option("--sweeps", solve_params.sweeps, "annealer sweeps per restart");
    solve_cmd->add_option("--t0", solve_params.t_initial, "initial temperature (0 = auto)");
    solve_cmd->add_option("--t1", solve_params.t_final, "final temperature");
    solve_cmd->add_option("--map", solve_map, "decode-map sidecar");

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "run a showcase problem");
    demo_cmd->require_subcommand(1);

    std::string demo_graph_path;
    RatioCutConfig rcut_cfg;
    AnnealParams rcut_params;
    auto* rcut_cmd = demo_cmd->add_subcommand("ratio-cut", "graph partitioning demo");
    rcut_cmd->add_option("--graph", demo_graph_path, "edge-list file (default: built-in 8-vertex graph)");
    rcut_cmd->add_option("--c1", rcut_cfg.c1, "cut log-shift scale");
    rcut_cmd->add_option("--c2", rcut_cfg.c2, "|A| log-shift scale");
    rcut_cmd->add_option("--c3", rcut_cfg.c3, "|B| log-shift scale");
    rcut_cmd->add_option("--d1", rcut_cfg.d1, "cut log-shift offset");
    rcut_cmd->add_option("--d2", rcut_cfg.d2, "|A| log-shift offset");
    rcut_cmd->add_option("--d3", rcut_cfg.d3, "|B| log-shift offset");
    rcut_cmd->add_option("--weight", rcut_cfg.constraint_weight, "one-side-per-vertex weight");
    rcut_cmd->add_option("--seed", rcut_params.seed, "random seed (default 0)");
    rcut_cmd->add_option("--restarts", rcut_params.restarts, "annealer restarts");
    rcut_cmd->add_option("--sweeps", rcut_params.sweeps, "annealer sweeps per restart");

    std::vector<double> logreg_p{1.0, 0.9, 0.8, 0.7, 0.6, 0.5};
    LogRegConfig logreg_cfg;
    AnnealParams logreg_params;
    int logreg_runs = 20;
    std::string logreg_export;
    auto* logreg_cmd = demo_cmd->add_subcommand("logreg", "logistic regression demo");
    logreg_cmd->add_option("--p", logreg_p, "label-fidelity values");
    logreg_cmd->add_option("--dims", logreg_cfg.dims, "input dimensions");
    logreg_cmd->add_option("--outputs", logreg_cfg.outputs, "output dimensions");
    logreg_cmd->add_option("--points", logreg_cfg.n_points, "points per run");
    logreg_cmd->add_option("--runs", logreg_runs, "test runs per p");
    logreg_cmd->add_option("--seed", logreg_cfg.seed, "random seed (default 0)");
    logreg_cmd->add_option("--export-dataset", logreg_export,
                           "write a sample dataset for the last p (seeded)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile_cmd->parsed()) {
            return cmd_compile(compile_input, compile_output, compile_map);
        }
        if (solve_cmd->parsed()) {
            return cmd_solve(solve_input, solve_method, solve_params, solve_map);
        }
        if (rcut_cmd->parsed()) {
            return cmd_demo_ratio_cut(demo_graph_path, rcut_cfg, rcut_params);
        }
        if (logreg_cmd->parsed()) {
            return cmd_demo_logreg(logreg_p, logreg_cfg, logreg_runs, logreg_params,
                                   logreg_export);
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
