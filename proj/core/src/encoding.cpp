#include "quboc/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "quboc/num_format.hpp"

namespace quboc {

void validate_domain(const DomainSpec& domain) {
    if (const auto* set = std::get_if<ExplicitSet>(&domain)) {
        if (set->values.empty()) throw std::invalid_argument("explicit value set is empty");
    } else if (const auto* fp = std::get_if<FixedPoint>(&domain)) {
        if (fp->r_min < 0 || fp->r_max < 0) {
            throw std::invalid_argument("fixed-point r_min and r_max must be >= 0");
        }
    } else if (const auto* base = std::get_if<CustomBase>(&domain)) {
        if (base->weights.empty()) throw std::invalid_argument("custom base has no weights");
    }
}

bool domain_enumerable(const DomainSpec& domain) {
    if (const auto* fp = std::get_if<FixedPoint>(&domain)) {
        return fp->r_min + fp->r_max + 1 <= 20;
    }
    if (const auto* base = std::get_if<CustomBase>(&domain)) {
        return base->weights.size() <= 20;
    }
    return true;
}

namespace {

std::vector<double> sorted_unique(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<double> fixed_point_weights(const FixedPoint& fp) {
    std::vector<double> weights;
    for (int j = -fp.r_min; j <= fp.r_max; ++j) {
        weights.push_back(std::ldexp(1.0, j));
    }
    if (fp.sign_bit_block) {
        std::size_t n = weights.size();
        for (std::size_t i = 0; i < n; ++i) weights.push_back(-weights[i]);
    }
    return weights;
}

}  // namespace

std::vector<double> domain_values(const DomainSpec& domain) {
    validate_domain(domain);
    if (!domain_enumerable(domain)) {
        throw std::invalid_argument("domain value set too large to enumerate");
    }
    if (const auto* set = std::get_if<ExplicitSet>(&domain)) {
        return sorted_unique(set->values);
    }
    if (const auto* fp = std::get_if<FixedPoint>(&domain)) {
        // All integer multiples of 2^-r_min in the reachable range.
        double step = std::ldexp(1.0, -fp->r_min);
        long long max_k = (1LL << (fp->r_min + fp->r_max + 1)) - 1;
        long long min_k = fp->sign_bit_block ? -max_k : 0;
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(max_k - min_k + 1));
        for (long long k = min_k; k <= max_k; ++k) values.push_back(k * step);
        return values;
    }
    const auto& base = std::get<CustomBase>(domain);
    std::set<double> sums;
    std::size_t n = base.weights.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        double v = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            if (mask >> b & 1) v += base.weights[b];
        }
        sums.insert(v);
    }
    return {sums.begin(), sums.end()};
}

double Encoding::decode_mask(const std::vector<std::uint8_t>& mask) const {
    if (mask.size() != bits.size()) {
        throw std::invalid_argument("decode_mask: mask length does not match encoding");
    }
    double value = 0.0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (mask[i]) value += bits[i].weight;
    }
    return value;
}

Polynomial Encoding::substitution() const {
    PolynomialBuilder acc;
    for (const auto& [bit, weight] : bits) {
        acc.add_term(weight, PowerMap{{bit, 1}});
    }
    return acc.build();
}

Encoding encode_onehot(const Var& var, const ExplicitSet& values) {
    validate_domain(values);
    Encoding enc;
    enc.source = var;
    auto sorted = sorted_unique(values.values);
    std::vector<Var> bit_vars;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        Var bit = binary_var(var.name() + "[" + std::to_string(k) + "]");
        enc.bits.push_back({bit, sorted[k]});
        bit_vars.push_back(bit);
    }
    // exactly-one term; weighting is applied by the compiler
    Polynomial sum;
    for (const Var& b : bit_vars) sum += Polynomial::variable(b);
    sum -= Polynomial::constant(1.0);
    enc.penalty = sum * sum;

    std::string desc = "{";
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k) desc += ", ";
        desc += shortest_repr(sorted[k]);
    }
    enc.representable = desc + "}";
    return enc;
}

Encoding encode_fixed_point(const Var& var, int r_min, int r_max, bool sign_bit_block) {
    FixedPoint fp{r_min, r_max, sign_bit_block};
    validate_domain(DomainSpec{fp});
    Encoding enc;
    enc.source = var;
    auto weights = fixed_point_weights(fp);
    std::size_t positive = static_cast<std::size_t>(r_min + r_max + 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        int j = static_cast<int>(i % positive) - r_min;
        std::string suffix = (i < positive ? ".b" : ".n") + std::to_string(j + r_min);
        enc.bits.push_back({binary_var(var.name() + suffix), weights[i]});
    }
    long long max_k = (1LL << (r_min + r_max + 1)) - 1;
    double step = std::ldexp(1.0, -r_min);
    enc.representable = "{k*" + shortest_repr(step) + " : k in [" +
                        std::to_string(sign_bit_block ? -max_k : 0) + ", " +
                        std::to_string(max_k) + "]}";
    return enc;
}

Encoding encode_custom_base(const Var& var, const CustomBase& base) {
    validate_domain(DomainSpec{base});
    Encoding enc;
    enc.source = var;
    for (std::size_t k = 0; k < base.weights.size(); ++k) {
        enc.bits.push_back({binary_var(var.name() + "[" + std::to_string(k) + "]"),
                            base.weights[k]});
    }
    enc.representable = "subset sums of " + std::to_string(base.weights.size()) + " weights";
    return enc;
}

Encoding encode_identity(const Var& var) {
    if (!is_binary_valued(var.kind())) {
        throw std::invalid_argument("identity encoding requires a binary variable: " + var.name());
    }
    Encoding enc;
    enc.source = var;
    enc.bits.push_back({var, 1.0});
    enc.representable = "{0, 1}";
    return enc;
}

Encoding make_encoding(const Var& var, const DomainSpec& domain) {
    validate_domain(domain);
    if (const auto* set = std::get_if<ExplicitSet>(&domain)) {
        return encode_onehot(var, *set);
    }
    if (const auto* fp = std::get_if<FixedPoint>(&domain)) {
        return encode_fixed_point(var, fp->r_min, fp->r_max, fp->sign_bit_block);
    }
    return encode_custom_base(var, std::get<CustomBase>(domain));
}

}  // namespace quboc
