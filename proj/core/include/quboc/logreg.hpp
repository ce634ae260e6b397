#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/solve.hpp"

namespace quboc {

/// Synthetic classification experiment parameters. p is the probability
/// that a label matches the side assigned by the sampled separating
/// hyperplane, independently per output dimension.
struct LogRegConfig {
    int dims = 5;
    int outputs = 3;
    int n_points = 200;
    double label_fidelity = 1.0;  // p
    double train_fraction = 0.6;
    std::uint64_t seed = 0;
    DomainSpec theta_domain = FixedPoint{1, 1, true};
};

struct LogRegDataset {
    std::vector<std::vector<double>> x;        // n_points rows of dims features
    std::vector<std::vector<std::uint8_t>> y;  // n_points rows of outputs labels
};

/// Samples one separating function (c, b) and n points uniform on [-1,1]
/// per coordinate, then labels each point by the side of the hyperplane,
/// flipped with probability 1 - p independently per output dimension.
/// Deterministic for a given seed.
LogRegDataset generate_logreg_dataset(const LogRegConfig& cfg);

/// Delimited text, one row per point: features then labels.
void write_dataset(const LogRegDataset& dataset, std::ostream& os);

struct LogRegObjective {
    Polynomial objective;
    std::vector<std::vector<Var>> theta;  // [feature][output]
};

/// Cross-entropy surrogate summed over points and output columns:
///   sum_i (1 - y_i) theta^T x_i - 1/2 theta^T x_i + 1/8 (theta^T x_i)^2,
/// quadratic in theta.
LogRegObjective logreg_objective(const LogRegDataset& dataset);

struct EvalReport {
    double accuracy_mean = 0.0;
    double accuracy_std = 0.0;
    int runs = 0;
};

/// Per run: sample a dataset, split train/test, compile the surrogate on
/// the train split (features augmented with a constant-1 intercept column),
/// solve with the annealer, and score sign(theta^T x) on the test split.
/// Run r derives its seed from cfg.seed and r; reports are deterministic.
EvalReport run_logreg_experiment(const LogRegConfig& cfg, int runs,
                                 const AnnealParams& solver = {});

}  // namespace quboc
