#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quboc/polynomial.hpp"

namespace quboc {

/// Finite admissible value set given explicitly. Values are sorted and
/// deduplicated on construction; the set must be nonempty.
struct ExplicitSet {
    std::vector<double> values;
};

/// Power-of-two weights 2^-r_min .. 2^r_max; when signed, the same weights
/// are mirrored with negative sign.
struct FixedPoint {
    int r_min = 0;
    int r_max = 0;
    bool sign_bit_block = false;  // signed encoding
};

/// Arbitrary weight list; the variable ranges over all subset sums.
struct CustomBase {
    std::vector<double> weights;
};

using DomainSpec = std::variant<ExplicitSet, FixedPoint, CustomBase>;

/// Throws std::invalid_argument if the spec violates its invariants.
void validate_domain(const DomainSpec& domain);

/// True when the admissible value set is small enough to enumerate
/// (fixed-point and custom bases are capped at 2^20 values).
bool domain_enumerable(const DomainSpec& domain);

/// The admissible value set of the domain, sorted ascending, deduplicated.
/// For CustomBase this enumerates all subset sums. Throws when the domain
/// is not enumerable.
std::vector<double> domain_values(const DomainSpec& domain);

struct EncodingBit {
    Var bit;
    double weight = 0.0;
};

/// Weighted binary expansion of one source variable: value = sum w_b q_b
/// over the bit mask. One-hot encodings carry the exactly-one penalty.
struct Encoding {
    Var source;
    std::vector<EncodingBit> bits;
    std::optional<Polynomial> penalty;  // raw exactly-one term, unweighted
    std::string representable;          // description of the reachable set

    bool is_onehot() const { return penalty.has_value(); }

    /// value of the mask under this encoding (mask.size() == bits.size())
    double decode_mask(const std::vector<std::uint8_t>& mask) const;

    /// sum_b w_b q_b as a polynomial over the bit variables
    Polynomial substitution() const;
};

/// One bit per admissible value plus the (sum q - 1)^2 penalty.
Encoding encode_onehot(const Var& var, const ExplicitSet& values);

/// Fixed-point binary expansion per the domain parameters; no penalty.
Encoding encode_fixed_point(const Var& var, int r_min, int r_max, bool sign_bit_block);

/// One bit per custom weight; no penalty.
Encoding encode_custom_base(const Var& var, const CustomBase& base);

/// Identity encoding for a variable that is already binary.
Encoding encode_identity(const Var& var);

/// Dispatch on the domain alternative.
Encoding make_encoding(const Var& var, const DomainSpec& domain);

}  // namespace quboc
