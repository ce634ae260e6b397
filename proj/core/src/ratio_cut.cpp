#include "quboc/ratio_cut.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quboc/approx.hpp"
#include "quboc/qubo.hpp"

namespace quboc {

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("graph: edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ") out of range");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{vertex_count, std::move(edges)};
}

Graph read_graph(std::istream& is) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::string line;
    while (std::getline(is, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) {
            throw std::runtime_error("graph file: malformed edge line '" + line + "'");
        }
        if (u < 0 || v < 0) throw std::runtime_error("graph file: negative vertex id");
        edges.push_back({u, v});
        max_id = std::max({max_id, u, v});
    }
    if (edges.empty()) throw std::runtime_error("graph file: no edges");
    return make_graph(max_id + 1, std::move(edges));
}

void write_graph(const Graph& g, std::ostream& os) {
    for (const auto& [u, v] : g.edges) os << u << " " << v << "\n";
}

Graph demo_graph() {
    return make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                          {3, 4},
                          {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

double rcut_value(const Graph& g, const std::vector<int>& side) {
    if (static_cast<int>(side.size()) != g.vertex_count) {
        throw std::invalid_argument("rcut_value: side assignment size mismatch");
    }
    int size_a = 0;
    for (int s : side) size_a += (s == 0);
    int size_b = g.vertex_count - size_a;
    if (size_a == 0 || size_b == 0) {
        throw std::invalid_argument("rcut_value: a partition side is empty");
    }
    int cut = 0;
    for (const auto& [u, v] : g.edges) {
        cut += (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]);
    }
    return static_cast<double>(cut) / size_a + static_cast<double>(cut) / size_b;
}

std::pair<double, std::vector<int>> rcut_minimum(const Graph& g) {
    if (g.vertex_count < 2 || g.vertex_count > 20) {
        throw std::invalid_argument("rcut_minimum: vertex count out of range");
    }
    double best = 0.0;
    std::vector<int> best_side;
    std::uint64_t total = 1ULL << g.vertex_count;
    for (std::uint64_t mask = 1; mask + 1 < total; ++mask) {  // both sides nonempty
        std::vector<int> side(static_cast<std::size_t>(g.vertex_count));
        for (int v = 0; v < g.vertex_count; ++v) side[static_cast<std::size_t>(v)] = mask >> v & 1;
        double value = rcut_value(g, side);
        if (best_side.empty() || value < best) {
            best = value;
            best_side = std::move(side);
        }
    }
    return {best, best_side};
}

RatioCutModel ratio_cut_objective(const Graph& g, const RatioCutConfig& cfg) {
    if (g.vertex_count < 2) throw std::invalid_argument("ratio_cut_objective: need >= 2 vertices");
    if (cfg.c1 == 0 || cfg.c2 == 0 || cfg.c3 == 0 || cfg.d1 == 0 || cfg.d2 == 0 || cfg.d3 == 0) {
        throw std::invalid_argument("ratio_cut_objective: C and D constants must be nonzero");
    }
    if (cfg.constraint_weight <= 0) {
        throw std::invalid_argument("ratio_cut_objective: constraint weight must be positive");
    }

    RatioCutModel model;
    for (int v = 0; v < g.vertex_count; ++v) {
        model.vertex_bits.push_back({binary_var("x" + std::to_string(v) + "_0"),
                                     binary_var("x" + std::to_string(v) + "_1")});
    }

    // cut over edges: both orientations of each crossing
    Polynomial cut;
    for (const auto& [u, v] : g.edges) {
        const auto& [u0, u1] = model.vertex_bits[static_cast<std::size_t>(u)];
        const auto& [v0, v1] = model.vertex_bits[static_cast<std::size_t>(v)];
        cut += Polynomial::monomial(1.0, {{u0, 1}, {v1, 1}});
        cut += Polynomial::monomial(1.0, {{v0, 1}, {u1, 1}});
    }
    Polynomial size_a, size_b;
    for (const auto& [b0, b1] : model.vertex_bits) {
        size_a += Polynomial::variable(b0);
        size_b += Polynomial::variable(b1);
    }

    // ln(x) ~ 2x/(CD) - x^2/(2 C^2 D^2), additive constants dropped
    auto quad_log = [](const Polynomial& x, double c, double d) {
        return x * (2.0 / (c * d)) - x * x * (1.0 / (2.0 * c * c * d * d));
    };

    PolynomialBuilder obj;
    obj.add(quad_log(cut, cfg.c1, cfg.d1));
    obj.add_scaled(quad_log(size_a, cfg.c2, cfg.d2), -1.0);
    obj.add_scaled(quad_log(size_b, cfg.c3, cfg.d3), -1.0);
    Polynomial pre_constraint = obj.build();
    model.gadget_weight = penalty_weight(pre_constraint);

    PolynomialBuilder acc;
    acc.add(pre_constraint);
    for (const auto& [b0, b1] : model.vertex_bits) {
        acc.add_scaled(penalty_exactly_one({b0, b1}), cfg.constraint_weight);
    }
    model.objective = acc.build();
    return model;
}

RatioCutSolution decode_partition(const Graph& g, const RatioCutModel& model,
                                  const DecodeRegistry& registry, Solution solution) {
    RatioCutSolution out;
    out.raw = with_decoding(std::move(solution), registry);

    bool onehot_ok = true;
    int size_a = 0, size_b = 0;
    for (const auto& [b0, b1] : model.vertex_bits) {
        double v0 = out.raw.decoded.at(b0);
        double v1 = out.raw.decoded.at(b1);
        if (v0 + v1 != 1.0) onehot_ok = false;
        out.side.push_back(v1 > v0 ? 1 : 0);
        (v1 > v0 ? size_b : size_a) += 1;
    }
    out.valid_partition = onehot_ok && size_a > 0 && size_b > 0;
    if (out.valid_partition) out.rcut = rcut_value(g, out.side);
    return out;
}

RatioCutSolution solve_ratio_cut(const Graph& g, const RatioCutConfig& cfg,
                                 const AnnealParams& params) {
    RatioCutModel model = ratio_cut_objective(g, cfg);
    CompileArtifacts artifacts = quadratize(model.objective, model.gadget_weight);
    QuboMatrix q = assemble(artifacts);

    AnnealParams tuned = params;
    if (tuned.t_initial == 0.0) tuned.t_initial = artifacts.weight;
    Solution sol = simulated_anneal(q, tuned);
    RatioCutSolution out = decode_partition(g, model, artifacts.registry, std::move(sol));
    // Report the objective value with the gadget penalties stripped out: the
    // pre-quadratization polynomial evaluated at the decoded bits.
    std::map<Var, double> bits_only;
    for (const auto& [b0, b1] : model.vertex_bits) {
        bits_only[b0] = out.raw.decoded.at(b0);
        bits_only[b1] = out.raw.decoded.at(b1);
    }
    out.objective_energy = model.objective.evaluate(bits_only);
    return out;
}

}  // namespace quboc
