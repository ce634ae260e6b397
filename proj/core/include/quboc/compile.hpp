#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/polynomial.hpp"

namespace quboc {

/// Auxiliary product variable: aux == left * right, enforced by a gadget.
struct AuxDef {
    Var aux;
    Var left;
    Var right;
};

struct DecodeResult {
    std::map<Var, double> assignment;  // original variable -> value
    bool consistent = true;            // gadgets and one-hot groups satisfied
};

/// Maps QUBO bitstrings back to original-variable assignments. Holds the
/// per-variable encodings, the auxiliary definitions, the full bit label
/// order and the candidate value sets of the original variables.
class DecodeRegistry {
  public:
    DecodeRegistry() = default;

    void add_encoding(Encoding enc, std::vector<double> candidate_values);
    void add_aux(const AuxDef& def);

    const std::vector<Encoding>& encodings() const { return encodings_; }
    const std::vector<AuxDef>& aux_defs() const { return aux_defs_; }
    const std::vector<Var>& labels() const { return labels_; }
    std::size_t bit_count() const { return labels_.size(); }
    std::size_t aux_count() const { return aux_defs_.size(); }

    /// Candidate set factor of encodings()[i] (the admissible values).
    const std::vector<double>& candidate_values(std::size_t i) const {
        return candidate_values_[i];
    }

    int index_of(const Var& v) const;  // -1 when absent

    /// Reads out original-variable values and checks consistency: each aux
    /// bit must equal the product of its factors and each one-hot group must
    /// have exactly one bit set.
    DecodeResult decode(const std::vector<std::uint8_t>& bits) const;

    void write_map(std::ostream& os) const;
    static DecodeRegistry read_map(std::istream& is);

  private:
    std::vector<Encoding> encodings_;
    std::vector<std::vector<double>> candidate_values_;
    std::vector<AuxDef> aux_defs_;
    std::vector<Var> labels_;
    std::map<Var, int> index_;
};

/// Eq-style penalty weight: 1 + sum over monomial coefficients of 2|a|,
/// the constant term included.
double penalty_weight(const Polynomial& p);

/// Product-constraint penalty 4q - 3q x1 - 3q x2 + 2 x1 x2. Value 0 iff
/// q == x1 * x2, and >= 1 otherwise (all three variables binary).
Polynomial gadget(const Var& q, const Var& x1, const Var& x2);

struct BinarizeResult {
    Polynomial binary_form;   // binarized objective plus weighted one-hot penalties
    DecodeRegistry registry;  // encodings only (no aux yet)
    double weight = 1.0;      // penalty weight computed from the pre-penalty objective
    Polynomial objective;     // binarized objective without penalties
};

/// Substitutes every continuous variable by its encoding and appends the
/// one-hot penalties, weighted by the penalty weight of the pre-penalty
/// binarized objective. Throws std::invalid_argument when a continuous
/// variable has no domain.
BinarizeResult binarize(const Polynomial& p, const std::map<Var, DomainSpec>& domains);

struct CompileArtifacts {
    Polynomial binary_form;     // binary polynomial before degree reduction
    Polynomial quadratic_form;  // quadratic QUBO-form polynomial
    double weight = 1.0;        // penalty weight A applied to every gadget
    std::vector<AuxDef> aux_defs;
    DecodeRegistry registry;    // encodings plus aux labels
};

/// Reduces every monomial of arity > 2 by recursively splitting its sorted
/// variable set in half and replacing each half of size > 1 by a cached
/// auxiliary variable constrained by a weighted gadget. When no weight is
/// given it is computed from the input polynomial. Throws if the input has
/// non-binary variables.
CompileArtifacts quadratize(const Polynomial& binary_form,
                            std::optional<double> weight = std::nullopt);

/// Full pipeline: binarize, then quadratize with the uniform penalty weight
/// computed during binarization.
CompileArtifacts compile(const Polynomial& p, const std::map<Var, DomainSpec>& domains);

/// Upper bound (n * 2r)^ceil(p*q/2) on the binary variable count, with
/// p = degree, n = variable count, q = max multiplication arity and
/// r = search range exponent.
std::uint64_t aux_upper_bound(int p, int n, int q, int r);

}  // namespace quboc
