#include "quboc/compile.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quboc/num_format.hpp"

namespace quboc {

void DecodeRegistry::add_encoding(Encoding enc, std::vector<double> candidate_values) {
    for (const auto& [bit, w] : enc.bits) {
        if (index_.contains(bit)) {
            throw std::invalid_argument("duplicate bit label: " + bit.name());
        }
        index_[bit] = static_cast<int>(labels_.size());
        labels_.push_back(bit);
    }
    encodings_.push_back(std::move(enc));
    candidate_values_.push_back(std::move(candidate_values));
}

void DecodeRegistry::add_aux(const AuxDef& def) {
    if (index_.contains(def.aux)) {
        throw std::invalid_argument("duplicate aux label: " + def.aux.name());
    }
    index_[def.aux] = static_cast<int>(labels_.size());
    labels_.push_back(def.aux);
    aux_defs_.push_back(def);
}

int DecodeRegistry::index_of(const Var& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

DecodeResult DecodeRegistry::decode(const std::vector<std::uint8_t>& bits) const {
    if (bits.size() != labels_.size()) {
        throw std::invalid_argument("decode: bitstring length " + std::to_string(bits.size()) +
                                    " does not match registry (" +
                                    std::to_string(labels_.size()) + ")");
    }
    DecodeResult result;
    for (const auto& enc : encodings_) {
        double value = 0.0;
        int set_count = 0;
        for (const auto& [bit, weight] : enc.bits) {
            int idx = index_of(bit);
            if (bits[static_cast<std::size_t>(idx)]) {
                value += weight;
                ++set_count;
            }
        }
        if (enc.is_onehot() && set_count != 1) result.consistent = false;
        result.assignment[enc.source] = value;
    }
    for (const auto& def : aux_defs_) {
        auto bit = [&](const Var& v) {
            return bits[static_cast<std::size_t>(index_of(v))];
        };
        if (bit(def.aux) != (bit(def.left) & bit(def.right))) result.consistent = false;
    }
    return result;
}

void DecodeRegistry::write_map(std::ostream& os) const {
    os << "DECODEMAP 1\n";
    os << "BITS " << labels_.size() << "\n";
    for (const auto& enc : encodings_) {
        os << "VAR " << enc.source.name() << (enc.is_onehot() ? " onehot" : " sum");
        for (const auto& [bit, weight] : enc.bits) {
            os << " " << index_of(bit) << ":" << shortest_repr(weight);
        }
        os << "\n";
    }
    for (const auto& def : aux_defs_) {
        os << "AUX " << def.aux.name() << " " << index_of(def.aux) << " "
           << index_of(def.left) << " " << index_of(def.right) << "\n";
    }
}

DecodeRegistry DecodeRegistry::read_map(std::istream& is) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header) || header.rfind("DECODEMAP 1", 0) != 0) {
        throw std::runtime_error("decode map: missing DECODEMAP 1 header");
    }
    std::string bits_line;
    if (!next_line(bits_line)) throw std::runtime_error("decode map: missing BITS line");
    std::istringstream bs(bits_line);
    std::string tag;
    std::size_t n_bits = 0;
    if (!(bs >> tag >> n_bits) || tag != "BITS") {
        throw std::runtime_error("decode map: malformed BITS line");
    }

    // Reconstruct into flat tables first; labels are named by position.
    std::vector<Var> labels(n_bits);
    std::vector<bool> seen(n_bits, false);
    DecodeRegistry reg;
    struct PendingAux { std::string name; int idx, left, right; };
    std::vector<Encoding> pending;
    std::vector<PendingAux> pending_aux;

    std::string entry;
    while (next_line(entry)) {
        std::istringstream ls(entry);
        std::string kind;
        ls >> kind;
        if (kind == "VAR") {
            std::string name, mode;
            if (!(ls >> name >> mode) || (mode != "onehot" && mode != "sum")) {
                throw std::runtime_error("decode map: malformed VAR line");
            }
            Encoding enc;
            enc.source = continuous_var(name);
            std::vector<Var> bit_vars;
            std::string pair;
            while (ls >> pair) {
                auto colon = pair.find(':');
                if (colon == std::string::npos) {
                    throw std::runtime_error("decode map: malformed bit entry '" + pair + "'");
                }
                std::size_t idx = std::stoul(pair.substr(0, colon));
                double weight = parse_double(pair.substr(colon + 1));
                if (idx >= n_bits) throw std::runtime_error("decode map: bit index out of range");
                Var bit = binary_var(name + "#" + std::to_string(idx));
                labels[idx] = bit;
                seen[idx] = true;
                enc.bits.push_back({bit, weight});
                bit_vars.push_back(bit);
            }
            if (enc.bits.empty()) throw std::runtime_error("decode map: VAR with no bits");
            if (mode == "onehot") {
                Polynomial sum;
                for (const Var& b : bit_vars) sum += Polynomial::variable(b);
                sum -= Polynomial::constant(1.0);
                enc.penalty = sum * sum;
            }
            pending.push_back(std::move(enc));
        } else if (kind == "AUX") {
            PendingAux aux;
            if (!(ls >> aux.name >> aux.idx >> aux.left >> aux.right)) {
                throw std::runtime_error("decode map: malformed AUX line");
            }
            if (aux.idx < 0 || static_cast<std::size_t>(aux.idx) >= n_bits ||
                aux.left < 0 || static_cast<std::size_t>(aux.left) >= n_bits ||
                aux.right < 0 || static_cast<std::size_t>(aux.right) >= n_bits) {
                throw std::runtime_error("decode map: AUX index out of range");
            }
            Var v = aux_var(aux.name);
            labels[static_cast<std::size_t>(aux.idx)] = v;
            seen[static_cast<std::size_t>(aux.idx)] = true;
            pending_aux.push_back(aux);
        } else {
            throw std::runtime_error("decode map: unknown entry '" + kind + "'");
        }
    }
    for (std::size_t i = 0; i < n_bits; ++i) {
        if (!seen[i]) throw std::runtime_error("decode map: bit " + std::to_string(i) +
                                               " has no entry");
    }

    // Rebuild the registry with the file's exact index order. Encodings were
    // written in label order, so re-adding them in order reproduces it; aux
    // indices always follow the encoding bits.
    for (auto& enc : pending) reg.add_encoding(std::move(enc), {});
    for (const auto& aux : pending_aux) {
        reg.add_aux(AuxDef{labels[static_cast<std::size_t>(aux.idx)],
                           labels[static_cast<std::size_t>(aux.left)],
                           labels[static_cast<std::size_t>(aux.right)]});
    }
    if (reg.bit_count() != n_bits) {
        throw std::runtime_error("decode map: entries do not cover BITS count");
    }
    for (std::size_t i = 0; i < n_bits; ++i) {
        if (!(reg.labels()[i] == labels[i])) {
            throw std::runtime_error("decode map: bit order is not contiguous");
        }
    }
    return reg;
}

double penalty_weight(const Polynomial& p) {
    double sum = 0.0;
    for (const auto& [powers, coeff] : p.terms()) sum += 2.0 * std::abs(coeff);
    return 1.0 + sum;
}

Polynomial gadget(const Var& q, const Var& x1, const Var& x2) {
    for (const Var& v : {q, x1, x2}) {
        if (!is_binary_valued(v.kind())) {
            throw std::invalid_argument("gadget: variable '" + v.name() + "' is not binary");
        }
    }
    PolynomialBuilder acc;
    acc.add_term(4.0, {{q, 1}});
    acc.add_term(-3.0, {{q, 1}, {x1, 1}});
    acc.add_term(-3.0, {{q, 1}, {x2, 1}});
    acc.add_term(2.0, {{x1, 1}, {x2, 1}});
    return acc.build();
}

BinarizeResult binarize(const Polynomial& p, const std::map<Var, DomainSpec>& domains) {
    BinarizeResult result;
    Polynomial binarized = p;
    std::vector<const Encoding*> onehot;

    for (const Var& v : p.variables()) {
        Encoding enc;
        std::vector<double> values;
        if (is_binary_valued(v.kind())) {
            enc = encode_identity(v);
            values = {0.0, 1.0};
        } else {
            auto it = domains.find(v);
            if (it == domains.end()) {
                throw std::invalid_argument("binarize: continuous variable '" + v.name() +
                                            "' has no domain");
            }
            enc = make_encoding(v, it->second);
            // candidate values feed the minimum-preservation verifier only; skip them
            // for domains too large to enumerate
            if (domain_enumerable(it->second)) values = domain_values(it->second);
            binarized = binarized.substitute(v, enc.substitution());
        }
        result.registry.add_encoding(std::move(enc), std::move(values));
    }

    result.objective = binarized;
    result.weight = penalty_weight(result.objective);

    PolynomialBuilder acc;
    acc.add(result.objective);
    for (const auto& enc : result.registry.encodings()) {
        if (enc.penalty) acc.add_scaled(*enc.penalty, result.weight);
    }
    result.binary_form = acc.build();
    return result;
}

namespace {

// Degree reducer with an auxiliary cache keyed by the flattened original
// variable set, so repeated subproducts share one auxiliary and one gadget.
class Quadratizer {
  public:
    Quadratizer(double weight, DecodeRegistry& registry)
        : weight_(weight), registry_(registry) {}

    // Returns the single variable representing the product of `vars`
    // (sorted, distinct), creating cached auxiliaries as needed.
    Var reduce(const std::vector<Var>& vars) {
        if (vars.size() == 1) return vars[0];
        if (auto it = cache_.find(vars); it != cache_.end()) return it->second;
        std::size_t half = (vars.size() + 1) / 2;
        Var left = reduce({vars.begin(), vars.begin() + static_cast<long>(half)});
        Var right = reduce({vars.begin() + static_cast<long>(half), vars.end()});
        Var aux = aux_var("aux" + std::to_string(counter_++));
        defs_.push_back({aux, left, right});
        registry_.add_aux(defs_.back());
        penalty_.add_scaled(gadget(aux, left, right), weight_);
        cache_.emplace(vars, aux);
        return aux;
    }

    std::vector<AuxDef> take_defs() { return std::move(defs_); }
    Polynomial take_penalty() { return penalty_.build(); }

  private:
    double weight_;
    DecodeRegistry& registry_;
    std::map<std::vector<Var>, Var> cache_;
    std::vector<AuxDef> defs_;
    PolynomialBuilder penalty_;
    int counter_ = 0;
};

CompileArtifacts quadratize_into(const Polynomial& binary_form, double weight,
                                 DecodeRegistry registry) {
    if (!binary_form.all_binary()) {
        throw std::invalid_argument("quadratize: polynomial has non-binary variables");
    }
    Quadratizer reducer(weight, registry);
    PolynomialBuilder reduced;
    for (const auto& [powers, coeff] : binary_form.terms()) {
        if (powers.size() <= 2) {
            reduced.add_term(coeff, powers);
            continue;
        }
        std::vector<Var> vars;
        vars.reserve(powers.size());
        for (const auto& [v, e] : powers) vars.push_back(v);  // exponents are 1
        std::size_t half = (vars.size() + 1) / 2;
        Var left = reducer.reduce({vars.begin(), vars.begin() + static_cast<long>(half)});
        Var right = reducer.reduce({vars.begin() + static_cast<long>(half), vars.end()});
        reduced.add_term(coeff, PowerMap{{left, 1}, {right, 1}});
    }

    CompileArtifacts artifacts;
    artifacts.binary_form = binary_form;
    artifacts.weight = weight;
    artifacts.aux_defs = reducer.take_defs();
    artifacts.quadratic_form = reduced.build() + reducer.take_penalty();
    artifacts.registry = std::move(registry);
    return artifacts;
}

}  // namespace

CompileArtifacts quadratize(const Polynomial& binary_form, std::optional<double> weight) {
    DecodeRegistry registry;
    for (const Var& v : binary_form.variables()) {
        registry.add_encoding(encode_identity(v), {0.0, 1.0});
    }
    return quadratize_into(binary_form, weight.value_or(penalty_weight(binary_form)),
                           std::move(registry));
}

CompileArtifacts compile(const Polynomial& p, const std::map<Var, DomainSpec>& domains) {
    BinarizeResult binarized = binarize(p, domains);
    return quadratize_into(binarized.binary_form, binarized.weight, std::move(binarized.registry));
}

std::uint64_t aux_upper_bound(int p, int n, int q, int r) {
    if (p < 0 || n < 0 || q < 0 || r < 0) {
        throw std::invalid_argument("aux_upper_bound: arguments must be >= 0");
    }
    std::uint64_t base = static_cast<std::uint64_t>(n) * 2u * static_cast<std::uint64_t>(r);
    int m = (p * q + 1) / 2;
    std::uint64_t bound = 1;
    for (int i = 0; i < m; ++i) bound *= base;
    return bound;
}

}  // namespace quboc
