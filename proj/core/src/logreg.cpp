#include "quboc/logreg.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "quboc/num_format.hpp"
#include "quboc/qubo.hpp"

namespace quboc {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x243f6a8885a308d3ULL)) {}
    std::uint64_t next() {
        state_ = mix64(state_);
        return state_;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform_pm1() { return 2.0 * uniform() - 1.0; }

  private:
    std::uint64_t state_;
};

void validate(const LogRegConfig& cfg) {
    if (cfg.dims < 1 || cfg.outputs < 1 || cfg.n_points < 1) {
        throw std::invalid_argument("logreg: dims, outputs and n_points must be >= 1");
    }
    if (cfg.label_fidelity < 0.0 || cfg.label_fidelity > 1.0) {
        throw std::invalid_argument("logreg: label fidelity must be in [0, 1]");
    }
    if (cfg.train_fraction <= 0.0 || cfg.train_fraction >= 1.0) {
        throw std::invalid_argument("logreg: train fraction must be in (0, 1)");
    }
}

}  // namespace

LogRegDataset generate_logreg_dataset(const LogRegConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    // separating function f(x) = c . x + b, coordinates uniform on [-1, 1]
    std::vector<double> c(static_cast<std::size_t>(cfg.dims));
    for (auto& ci : c) ci = rng.uniform_pm1();
    double b = rng.uniform_pm1();

    LogRegDataset data;
    data.x.reserve(static_cast<std::size_t>(cfg.n_points));
    data.y.reserve(static_cast<std::size_t>(cfg.n_points));
    for (int i = 0; i < cfg.n_points; ++i) {
        std::vector<double> x(static_cast<std::size_t>(cfg.dims));
        double f = b;
        for (std::size_t d = 0; d < x.size(); ++d) {
            x[d] = rng.uniform_pm1();
            f += c[d] * x[d];
        }
        std::uint8_t true_side = f > 0.0 ? 1 : 0;
        std::vector<std::uint8_t> labels(static_cast<std::size_t>(cfg.outputs));
        for (auto& label : labels) {
            bool keep = rng.uniform() < cfg.label_fidelity;
            label = keep ? true_side : static_cast<std::uint8_t>(1 - true_side);
        }
        data.x.push_back(std::move(x));
        data.y.push_back(std::move(labels));
    }
    return data;
}

void write_dataset(const LogRegDataset& dataset, std::ostream& os) {
    for (std::size_t i = 0; i < dataset.x.size(); ++i) {
        bool first = true;
        for (double v : dataset.x[i]) {
            if (!first) os << "\t";
            first = false;
            os << shortest_repr(v);
        }
        for (std::uint8_t label : dataset.y[i]) os << "\t" << int(label);
        os << "\n";
    }
}

LogRegObjective logreg_objective(const LogRegDataset& dataset) {
    if (dataset.x.empty()) throw std::invalid_argument("logreg_objective: empty dataset");
    std::size_t dims = dataset.x[0].size();
    std::size_t outputs = dataset.y.empty() ? 0 : dataset.y[0].size();

    LogRegObjective out;
    out.theta.resize(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        for (std::size_t j = 0; j < outputs; ++j) {
            out.theta[d].push_back(
                continuous_var("t" + std::to_string(d) + "_" + std::to_string(j)));
        }
    }

    PolynomialBuilder acc;
    for (std::size_t i = 0; i < dataset.x.size(); ++i) {
        if (dataset.x[i].size() != dims || dataset.y[i].size() != outputs) {
            throw std::invalid_argument("logreg_objective: ragged dataset");
        }
        for (std::size_t j = 0; j < outputs; ++j) {
            // margin m = theta_j . x_i; contribution:
            //   (1 - y) m - m/2 + m^2/8  =  (1/2 - y) m + m^2/8
            double linear_factor = 0.5 - static_cast<double>(dataset.y[i][j]);
            for (std::size_t d = 0; d < dims; ++d) {
                double xd = dataset.x[i][d];
                if (xd == 0.0) continue;
                acc.add_term(linear_factor * xd, PowerMap{{out.theta[d][j], 1}});
                for (std::size_t e = 0; e < dims; ++e) {
                    double xe = dataset.x[i][e];
                    if (xe == 0.0) continue;
                    PowerMap powers;
                    powers[out.theta[d][j]] += 1;
                    powers[out.theta[e][j]] += 1;
                    acc.add_term(0.125 * xd * xe, std::move(powers));
                }
            }
        }
    }
    out.objective = acc.build();
    return out;
}

namespace {

LogRegDataset augmented(const LogRegDataset& data) {
    LogRegDataset out = data;
    for (auto& row : out.x) row.push_back(1.0);  // intercept column
    return out;
}

}  // namespace

EvalReport run_logreg_experiment(const LogRegConfig& cfg, int runs, const AnnealParams& solver) {
    validate(cfg);
    if (runs < 1) throw std::invalid_argument("run_logreg_experiment: runs must be >= 1");

    std::vector<double> accuracies;
    accuracies.reserve(static_cast<std::size_t>(runs));
    for (int run = 0; run < runs; ++run) {
        std::uint64_t run_seed = mix64(cfg.seed + 0x9e3779b97f4a7c15ULL * (run + 1));
        LogRegConfig run_cfg = cfg;
        run_cfg.seed = run_seed;
        LogRegDataset data = augmented(generate_logreg_dataset(run_cfg));

        std::size_t n_train =
            static_cast<std::size_t>(cfg.train_fraction * static_cast<double>(cfg.n_points));
        n_train = std::min(std::max<std::size_t>(n_train, 1), data.x.size() - 1);

        LogRegDataset train;
        train.x.assign(data.x.begin(), data.x.begin() + static_cast<long>(n_train));
        train.y.assign(data.y.begin(), data.y.begin() + static_cast<long>(n_train));

        LogRegObjective objective = logreg_objective(train);
        std::map<Var, DomainSpec> domains;
        for (const auto& row : objective.theta) {
            for (const Var& v : row) domains[v] = cfg.theta_domain;
        }
        CompileArtifacts artifacts = compile(objective.objective, domains);
        QuboMatrix q = assemble(artifacts);

        AnnealParams params = solver;
        params.seed = solver.seed ^ run_seed;
        if (params.t_initial == 0.0) params.t_initial = artifacts.weight;
        Solution sol = with_decoding(simulated_anneal(q, params), artifacts.registry);

        std::size_t dims = data.x[0].size();
        std::size_t outputs = data.y[0].size();
        std::vector<std::vector<double>> theta(dims, std::vector<double>(outputs, 0.0));
        for (std::size_t d = 0; d < dims; ++d) {
            for (std::size_t j = 0; j < outputs; ++j) {
                theta[d][j] = sol.decoded.at(objective.theta[d][j]);
            }
        }

        // prediction: sigma(theta^T x) > 0.5  <=>  theta^T x > 0
        std::uint64_t correct = 0, total = 0;
        for (std::size_t i = n_train; i < data.x.size(); ++i) {
            for (std::size_t j = 0; j < outputs; ++j) {
                double margin = 0.0;
                for (std::size_t d = 0; d < dims; ++d) margin += theta[d][j] * data.x[i][d];
                std::uint8_t predicted = margin > 0.0 ? 1 : 0;
                correct += (predicted == data.y[i][j]);
                ++total;
            }
        }
        accuracies.push_back(static_cast<double>(correct) / static_cast<double>(total));
    }

    EvalReport report;
    report.runs = runs;
    double sum = 0.0;
    for (double a : accuracies) sum += a;
    report.accuracy_mean = sum / static_cast<double>(runs);
    double var = 0.0;
    for (double a : accuracies) var += (a - report.accuracy_mean) * (a - report.accuracy_mean);
    report.accuracy_std = std::sqrt(var / static_cast<double>(runs));
    return report;
}

}  // namespace quboc
