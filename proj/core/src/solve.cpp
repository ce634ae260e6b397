#include "quboc/solve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace quboc {

std::string Solution::bitstring() const {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

namespace {

// Adjacency view of the matrix for O(deg) flip deltas.
struct Couplings {
    std::vector<double> linear;                             // diagonal
    std::vector<std::vector<std::pair<int, double>>> adj;   // off-diagonal

    explicit Couplings(const QuboMatrix& q)
        : linear(static_cast<std::size_t>(q.size()), 0.0),
          adj(static_cast<std::size_t>(q.size())) {
        for (const auto& [ij, c] : q.entries()) {
            auto [i, j] = ij;
            if (i == j) {
                linear[static_cast<std::size_t>(i)] += c;
            } else {
                adj[static_cast<std::size_t>(i)].push_back({j, c});
                adj[static_cast<std::size_t>(j)].push_back({i, c});
            }
        }
    }

    double flip_delta(const std::vector<std::uint8_t>& z, int i) const {
        double field = linear[static_cast<std::size_t>(i)];
        for (const auto& [j, c] : adj[static_cast<std::size_t>(i)]) {
            if (z[static_cast<std::size_t>(j)]) field += c;
        }
        return z[static_cast<std::size_t>(i)] ? -field : field;
    }
};

// bit 0 most significant
bool lex_less(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// splitmix64, used to decorrelate derived seeds
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// xoshiro-free, self-contained generator so seeded runs are reproducible
// across standard libraries
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

    std::uint64_t next() {
        state_ = mix64(state_);
        return state_;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  private:
    std::uint64_t state_;
};

}  // namespace

Solution brute_force(const QuboMatrix& q, int max_vars) {
    int n = q.size();
    if (n > max_vars) {
        throw SizeLimitError("brute_force: " + std::to_string(n) + " variables exceed the limit of " +
                             std::to_string(max_vars));
    }
    Solution best;
    best.bits.assign(static_cast<std::size_t>(n), 0);
    best.energy = q.offset();
    if (n == 0) return best;

    Couplings couplings(q);
    std::vector<std::uint8_t> z(static_cast<std::size_t>(n), 0);
    double energy = q.offset();

    // Reflected Gray code: step k flips bit ctz(k); visits every bitstring.
    std::uint64_t total = 1ULL << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        int flip = std::countr_zero(k);
        energy += couplings.flip_delta(z, flip);
        z[static_cast<std::size_t>(flip)] ^= 1;
        if (energy < best.energy ||
            (energy == best.energy && lex_less(z, best.bits))) {
            best.energy = energy;
            best.bits = z;
        }
    }
    return best;
}

Solution simulated_anneal(const QuboMatrix& q, const AnnealParams& params) {
    int n = q.size();
    if (params.restarts < 1 || params.sweeps < 1) {
        throw std::invalid_argument("simulated_anneal: restarts and sweeps must be >= 1");
    }
    if (params.t_final <= 0.0 || (params.t_initial != 0.0 && params.t_initial < params.t_final)) {
        throw std::invalid_argument("simulated_anneal: need t_initial >= t_final > 0");
    }
    Solution best;
    best.bits.assign(static_cast<std::size_t>(n), 0);
    best.energy = q.offset();
    if (n == 0) return best;

    Couplings couplings(q);
    double t0 = params.t_initial;
    if (t0 == 0.0) {
        for (const auto& [ij, c] : q.entries()) t0 = std::max(t0, std::abs(c));
        if (t0 == 0.0) t0 = 1.0;
    }
    t0 = std::max(t0, params.t_final);
    double cooling = params.sweeps > 1
                         ? std::pow(params.t_final / t0, 1.0 / (params.sweeps - 1))
                         : 1.0;

    bool have_best = false;
    for (int r = 0; r < params.restarts; ++r) {
        Rng rng(params.seed ^ static_cast<std::uint64_t>(r));
        std::vector<std::uint8_t> z(static_cast<std::size_t>(n));
        for (auto& b : z) b = static_cast<std::uint8_t>(rng.next() & 1);
        double energy = q.energy(z);

        std::vector<std::uint8_t> run_best = z;
        double run_best_energy = energy;

        double temperature = t0;
        for (int sweep = 0; sweep < params.sweeps; ++sweep) {
            for (int step = 0; step < n; ++step) {
                int i = rng.below(n);
                double delta = couplings.flip_delta(z, i);
                if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
                    z[static_cast<std::size_t>(i)] ^= 1;
                    energy += delta;
                    if (energy < run_best_energy ||
                        (energy == run_best_energy && lex_less(z, run_best))) {
                        run_best_energy = energy;
                        run_best = z;
                    }
                }
            }
            temperature *= cooling;
        }

        if (!have_best || run_best_energy < best.energy ||
            (run_best_energy == best.energy && lex_less(run_best, best.bits))) {
            best.energy = run_best_energy;
            best.bits = std::move(run_best);
            have_best = true;
        }
    }
    return best;
}

Solution with_decoding(Solution solution, const DecodeRegistry& registry) {
    DecodeResult decoded = registry.decode(solution.bits);
    solution.decoded = std::move(decoded.assignment);
    solution.consistent = decoded.consistent;
    return solution;
}

DecodeResult decode(const std::vector<std::uint8_t>& bits, const DecodeRegistry& registry) {
    return registry.decode(bits);
}

EquivalenceReport verify_min_preservation(const Polynomial& p,
                                  const std::map<Var, DomainSpec>& domains,
                                  double tolerance,
                                  std::uint64_t max_candidates,
                                  int max_vars) {
    CompileArtifacts artifacts = compile(p, domains);
    const DecodeRegistry& registry = artifacts.registry;

    // Direct minimum over the candidate set L (cartesian product of the
    // per-variable admissible values).
    std::vector<const std::vector<double>*> factors;
    std::vector<Var> originals;
    std::uint64_t candidate_count = 1;
    for (std::size_t i = 0; i < registry.encodings().size(); ++i) {
        originals.push_back(registry.encodings()[i].source);
        const auto& values = registry.candidate_values(i);
        if (values.empty()) {
            throw SizeLimitError("verify_min_preservation: candidate set of '" +
                                 registry.encodings()[i].source.name() +
                                 "' is too large to enumerate");
        }
        factors.push_back(&values);
        if (candidate_count > max_candidates / values.size() + 1) {
            throw SizeLimitError("verify_min_preservation: candidate set exceeds limit");
        }
        candidate_count *= values.size();
    }
    if (candidate_count > max_candidates) {
        throw SizeLimitError("verify_min_preservation: candidate set exceeds limit");
    }

    double min_p = 0.0;
    bool first = true;
    std::vector<std::size_t> counter(factors.size(), 0);
    std::map<Var, double> assignment;
    for (std::uint64_t it = 0; it < candidate_count; ++it) {
        for (std::size_t v = 0; v < factors.size(); ++v) {
            assignment[originals[v]] = (*factors[v])[counter[v]];
        }
        double value = p.evaluate(assignment);
        if (first || value < min_p) {
            min_p = value;
            first = false;
        }
        for (std::size_t v = 0; v < counter.size(); ++v) {
            if (++counter[v] < factors[v]->size()) break;
            counter[v] = 0;
        }
    }

    // Brute-force the QUBO side, collecting every argmin.
    QuboMatrix q = assemble(artifacts);
    int n = q.size();
    if (n > max_vars) {
        throw SizeLimitError("verify_min_preservation: " + std::to_string(n) +
                             " QUBO variables exceed the limit of " + std::to_string(max_vars));
    }

    double min_qubo = q.offset();
    std::vector<std::vector<std::uint8_t>> argmins;
    {
        std::vector<std::uint8_t> z(static_cast<std::size_t>(n), 0);
        double energy = q.offset();
        min_qubo = energy;
        argmins.push_back(z);
        if (n > 0) {
            Couplings couplings(q);
            std::uint64_t total = 1ULL << n;
            for (std::uint64_t k = 1; k < total; ++k) {
                int flip = std::countr_zero(k);
                energy += couplings.flip_delta(z, flip);
                z[static_cast<std::size_t>(flip)] ^= 1;
                if (energy < min_qubo) {
                    min_qubo = energy;
                    argmins.clear();
                    argmins.push_back(z);
                } else if (energy == min_qubo) {
                    argmins.push_back(z);
                }
            }
        }
    }

    EquivalenceReport report;
    report.min_p = min_p;
    report.min_qubo = min_qubo;
    report.equal = std::abs(min_p - min_qubo) <= tolerance;
    report.candidate_count = candidate_count;
    report.bitstring_count = n >= 64 ? 0 : (1ULL << n);
    report.n_prime = n;
    report.aux_count = registry.aux_count();

    report.argmin_decodes = true;
    for (const auto& z : argmins) {
        DecodeResult decoded = registry.decode(z);
        if (!decoded.consistent) {
            report.argmin_decodes = false;
            break;
        }
        if (std::abs(p.evaluate(decoded.assignment) - min_p) > tolerance) {
            report.argmin_decodes = false;
            break;
        }
    }
    return report;
}

}  // namespace quboc
