// Shared test helpers: deterministic generators and independent oracles.
// Oracles here are written against the definitions, not the library paths
// they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/qubo.hpp"

namespace testsupport {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x13198a2e03707344ULL)) {}
    std::uint64_t next() {
        state_ = mix64(state_);
        return state_;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

// Naive exhaustive QUBO minimizer, independent of the solver module: full
// energy recomputation per bitstring, plain integer enumeration, same
// tie-break rule (lexicographically smallest, bit 0 most significant).
struct NaiveBest {
    std::vector<std::uint8_t> bits;
    double energy = 0.0;
};

inline NaiveBest naive_qubo_minimum(const quboc::QuboMatrix& q) {
    int n = q.size();
    NaiveBest best;
    best.bits.assign(static_cast<std::size_t>(n), 0);
    best.energy = q.energy(best.bits);
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        std::vector<std::uint8_t> z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        double e = q.energy(z);
        if (e < best.energy ||
            (e == best.energy && std::lexicographical_compare(z.begin(), z.end(),
                                                              best.bits.begin(), best.bits.end()))) {
            best.energy = e;
            best.bits = z;
        }
    }
    return best;
}

// Random polynomial with integer coefficients in [-5, 5] over dyadic-valued
// domains, sized so the compiled QUBO stays brute-forceable.
struct DyadicInstance {
    quboc::Polynomial p;
    std::map<quboc::Var, quboc::DomainSpec> domains;
};

inline DyadicInstance random_dyadic_instance(Rng& rng) {
    using namespace quboc;
    int n_vars = rng.range(1, 3);
    std::vector<Var> vars;
    for (int i = 0; i < n_vars; ++i) vars.push_back(continuous_var("x" + std::to_string(i + 1)));

    DyadicInstance inst;
    for (const Var& v : vars) {
        switch (rng.range(0, 2)) {
            case 0: {  // explicit dyadic set, 2..5 values from {-2,-1.5,...,2}
                ExplicitSet set;
                int count = rng.range(2, 5);
                while (static_cast<int>(set.values.size()) < count) {
                    double value = 0.5 * rng.range(-4, 4);
                    bool dup = false;
                    for (double existing : set.values) dup |= existing == value;
                    if (!dup) set.values.push_back(value);
                }
                inst.domains[v] = set;
                break;
            }
            case 1:  // unsigned fixed point, 1-3 bits
                inst.domains[v] = FixedPoint{rng.range(0, 1), rng.range(0, 1), false};
                break;
            default:  // signed fixed point, <= 8 values
                inst.domains[v] = FixedPoint{0, rng.range(0, 1), true};
                break;
        }
    }

    PolynomialBuilder acc;
    int n_monomials = rng.range(1, 5);
    for (int m = 0; m < n_monomials; ++m) {
        int coeff = 0;
        while (coeff == 0) coeff = rng.range(-5, 5);
        PowerMap powers;
        int budget = rng.range(0, 4);
        while (budget > 0) {
            const Var& v = vars[static_cast<std::size_t>(rng.range(0, n_vars - 1))];
            int e = rng.range(1, budget);
            powers[v] += e;
            budget -= e;
            if (rng.range(0, 1) == 0) break;
        }
        acc.add_term(coeff, std::move(powers));
    }
    inst.p = acc.build();
    return inst;
}

// Instance with a brute-forceable compiled size; resamples until it fits.
inline DyadicInstance random_dyadic_instance_bounded(Rng& rng, int max_bits = 22) {
    for (;;) {
        DyadicInstance inst = random_dyadic_instance(rng);
        if (inst.p.is_constant()) continue;
        quboc::CompileArtifacts artifacts = quboc::compile(inst.p, inst.domains);
        if (static_cast<int>(artifacts.registry.bit_count()) <= max_bits) return inst;
    }
}

inline bool approx_equal(double a, double b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

}  // namespace testsupport
