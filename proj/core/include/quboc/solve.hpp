#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "quboc/compile.hpp"
#include "quboc/qubo.hpp"

namespace quboc {

/// Raised when a problem exceeds an exhaustive-search size limit.
class SizeLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Solution {
    std::vector<std::uint8_t> bits;
    double energy = 0.0;
    std::map<Var, double> decoded;  // empty when no registry was attached
    bool consistent = true;

    std::string bitstring() const;
};

struct AnnealParams {
    int restarts = 20;
    int sweeps = 2000;
    double t_initial = 0.0;  // 0 = auto: max |matrix entry|
    double t_final = 1e-3;
    std::uint64_t seed = 0;
};

/// Exhaustive minimization via Gray-code enumeration with incremental energy
/// updates. Ties resolve to the lexicographically smallest bitstring (bit 0
/// most significant). Throws SizeLimitError above max_vars.
Solution brute_force(const QuboMatrix& q, int max_vars = 26);

/// Single-bit-flip Metropolis search with geometric cooling from t_initial
/// to t_final, best state kept per restart; restart r derives its seed as
/// seed ^ r. Best-of-restarts by (energy, lexicographic bits). Deterministic
/// for a given seed.
Solution simulated_anneal(const QuboMatrix& q, const AnnealParams& params = {});

/// Attaches the decoded original-variable assignment and the consistency
/// flag to a solution.
Solution with_decoding(Solution solution, const DecodeRegistry& registry);

/// Reads out original-variable values from a bitstring.
DecodeResult decode(const std::vector<std::uint8_t>& bits, const DecodeRegistry& registry);

struct EquivalenceReport {
    double min_p = 0.0;
    double min_qubo = 0.0;
    bool equal = false;
    bool argmin_decodes = false;
    std::uint64_t candidate_count = 0;  // |L|
    std::uint64_t bitstring_count = 0;  // 2^n'
    int n_prime = 0;
    std::size_t aux_count = 0;
};

/// Executable minimum-preservation check: enumerates the candidate set L
/// directly, compiles to QUBO, brute-forces all bitstrings, compares minima
/// at the given tolerance and verifies that every QUBO argmin decodes into
/// a P-argmin. Throws SizeLimitError when |L| > max_candidates or the QUBO
/// exceeds the brute-force limit.
EquivalenceReport verify_min_preservation(const Polynomial& p,
                                  const std::map<Var, DomainSpec>& domains,
                                  double tolerance = 0.0,
                                  std::uint64_t max_candidates = 1000000,
                                  int max_vars = 26);

}  // namespace quboc
