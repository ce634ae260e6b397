#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "quboc/polynomial.hpp"
#include "quboc/solve.hpp"

namespace quboc {

/// Undirected simple graph; vertex ids are 0..vertex_count-1.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique
};

/// Validates and normalizes the edge list; throws on self-loops or ids out
/// of range.
Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

/// Edge-list text: one "u v" pair per line, '#' comments. Vertex count is
/// max id + 1.
Graph read_graph(std::istream& is);
void write_graph(const Graph& g, std::ostream& os);

/// The 8-vertex two-clique demonstration graph (K4 + K4 with one bridge).
Graph demo_graph();

/// cut(A,B)/|A| + cut(A,B)/|B| for side[v] in {0,1}. Throws
/// std::invalid_argument when either side is empty.
double rcut_value(const Graph& g, const std::vector<int>& side);

/// Minimum of rcut over all bipartitions with both sides nonempty, by
/// direct enumeration (vertex_count <= 20).
std::pair<double, std::vector<int>> rcut_minimum(const Graph& g);

/// Log-shift constants of the quadratic ln approximations plus the
/// partition-constraint weight.
struct RatioCutConfig {
    double c1 = 2.0, c2 = 8.0, c3 = 8.0;
    double d1 = 1.0, d2 = 1.0, d3 = 1.0;
    double constraint_weight = 100.0;
};

struct RatioCutModel {
    Polynomial objective;                        // quartic, over the x_{v,side} bits
    std::vector<std::pair<Var, Var>> vertex_bits;  // (x_{v,0}, x_{v,1}) per vertex
    double gadget_weight = 1.0;  // penalty weight from the pre-constraint part
};

/// Quadratic-log approximation of the ratio-cut objective over one-hot
/// side bits, with cut counted over edges and the exactly-one-side penalty
/// weighted by cfg.constraint_weight.
RatioCutModel ratio_cut_objective(const Graph& g, const RatioCutConfig& cfg = {});

struct RatioCutSolution {
    std::vector<int> side;          // decoded side per vertex
    bool valid_partition = false;   // one-hot satisfied and both sides nonempty
    std::optional<double> rcut;     // set when the partition is valid
    Solution raw;
    double objective_energy = 0.0;  // compiled-objective value of the solution
};

/// Compiles the model and minimizes it with the annealer. When
/// params.t_initial is 0 the starting temperature defaults to the gadget
/// weight.
RatioCutSolution solve_ratio_cut(const Graph& g, const RatioCutConfig& cfg,
                                 const AnnealParams& params);

/// Decodes vertex sides from a solution of the compiled model.
RatioCutSolution decode_partition(const Graph& g, const RatioCutModel& model,
                                  const DecodeRegistry& registry, Solution solution);

}  // namespace quboc
