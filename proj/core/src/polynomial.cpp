#include "quboc/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace quboc {

const char* var_kind_name(VarKind k) {
    switch (k) {
        case VarKind::Continuous: return "continuous";
        case VarKind::Binary: return "binary";
        case VarKind::Auxiliary: return "auxiliary";
    }
    return "?";
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : powers) d += e;
    return d;
}

namespace {

int total_degree_of(const PowerMap& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Clamp exponents of binary-valued variables to 1; reject non-positive ones.
void normalize_powers(PowerMap& powers) {
    for (auto& [v, e] : powers) {
        if (e <= 0) throw std::invalid_argument("monomial exponent must be positive");
        if (is_binary_valued(v.kind())) e = 1;
    }
}

void check_universe(const Polynomial::TermMap& terms) {
    std::unordered_map<std::string, VarKind> kinds;
    for (const auto& [powers, c] : terms) {
        for (const auto& [v, e] : powers) {
            auto [it, inserted] = kinds.emplace(v.name(), v.kind());
            if (!inserted && it->second != v.kind()) {
                throw std::invalid_argument("variable '" + v.name() +
                                            "' used with conflicting kinds (" +
                                            var_kind_name(it->second) + " vs " +
                                            var_kind_name(v.kind()) + ")");
            }
        }
    }
}

}  // namespace

bool GradedLexLess::operator()(const PowerMap& a, const PowerMap& b) const {
    int da = total_degree_of(a);
    int db = total_degree_of(b);
    if (da != db) return da < db;
    return a < b;
}

void PolynomialBuilder::add_term(double coefficient, PowerMap powers) {
    if (coefficient == 0.0) return;
    normalize_powers(powers);
    terms_[std::move(powers)] += coefficient;
}

void PolynomialBuilder::add(const Polynomial& p) {
    for (const auto& [powers, c] : p.terms()) terms_[powers] += c;
}

void PolynomialBuilder::add_scaled(const Polynomial& p, double scalar) {
    if (scalar == 0.0) return;
    for (const auto& [powers, c] : p.terms()) terms_[powers] += c * scalar;
}

Polynomial PolynomialBuilder::build() {
    Polynomial out;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < Polynomial::kCoeffZeroTolerance) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    check_universe(terms_);
    out.terms_ = std::move(terms_);
    out.degree_ = 0;
    for (const auto& [powers, c] : out.terms_) {
        out.degree_ = std::max(out.degree_, total_degree_of(powers));
    }
    terms_.clear();
    return out;
}

Polynomial Polynomial::constant(double c) {
    PolynomialBuilder b;
    b.add_term(c, {});
    return b.build();
}

Polynomial Polynomial::variable(const Var& v) {
    PolynomialBuilder b;
    b.add_term(1.0, PowerMap{{v, 1}});
    return b.build();
}

Polynomial Polynomial::monomial(double coefficient, const PowerMap& powers) {
    PolynomialBuilder b;
    b.add_term(coefficient, powers);
    return b.build();
}

Polynomial Polynomial::from_monomials(const std::vector<Monomial>& monomials) {
    PolynomialBuilder b;
    for (const auto& m : monomials) b.add_term(m.coefficient, m.powers);
    return b.build();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    PolynomialBuilder b;
    b.add(*this);
    b.add(rhs);
    return b.build();
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    PolynomialBuilder b;
    b.add(*this);
    b.add_scaled(rhs, -1.0);
    return b.build();
}

Polynomial Polynomial::operator-() const {
    PolynomialBuilder b;
    b.add_scaled(*this, -1.0);
    return b.build();
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    PolynomialBuilder b;
    for (const auto& [pa, ca] : terms_) {
        for (const auto& [pb, cb] : rhs.terms_) {
            PowerMap powers = pa;
            for (const auto& [v, e] : pb) powers[v] += e;
            b.add_term(ca * cb, std::move(powers));
        }
    }
    return b.build();
}

Polynomial Polynomial::operator*(double scalar) const {
    PolynomialBuilder b;
    b.add_scaled(*this, scalar);
    return b.build();
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
    Polynomial result = Polynomial::constant(1.0);
    for (int i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

Polynomial Polynomial::substitute(const Var& var, const Polynomial& replacement) const {
    // Cache powers of the replacement up to the highest exponent used.
    std::vector<Polynomial> powers{Polynomial::constant(1.0)};
    auto replacement_pow = [&](int e) -> const Polynomial& {
        while (static_cast<int>(powers.size()) <= e) {
            powers.push_back(powers.back() * replacement);
        }
        return powers[static_cast<std::size_t>(e)];
    };

    PolynomialBuilder b;
    for (const auto& [pm, c] : terms_) {
        auto it = pm.find(var);
        if (it == pm.end()) {
            b.add_term(c, pm);
            continue;
        }
        int e = it->second;
        PowerMap rest = pm;
        rest.erase(var);
        b.add_scaled(Polynomial::monomial(c, rest) * replacement_pow(e), 1.0);
    }
    return b.build();
}

double Polynomial::evaluate(const std::map<Var, double>& assignment) const {
    double total = 0.0;
    for (const auto& [pm, c] : terms_) {
        double term = c;
        for (const auto& [v, e] : pm) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw std::invalid_argument("evaluate: no value for variable '" + v.name() + "'");
            }
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

int Polynomial::max_product_arity() const {
    int arity = 0;
    for (const auto& [pm, c] : terms_) {
        arity = std::max(arity, static_cast<int>(pm.size()));
    }
    return arity;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

double Polynomial::constant_value() const {
    auto it = terms_.find(PowerMap{});
    return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::coefficient(const PowerMap& powers) const {
    auto it = terms_.find(powers);
    return it == terms_.end() ? 0.0 : it->second;
}

std::set<Var> Polynomial::variables() const {
    std::set<Var> out;
    for (const auto& [pm, c] : terms_) {
        for (const auto& [v, e] : pm) out.insert(v);
    }
    return out;
}

bool Polynomial::all_binary() const {
    for (const auto& [pm, c] : terms_) {
        for (const auto& [v, e] : pm) {
            if (!is_binary_valued(v.kind())) return false;
        }
    }
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pm, c] : terms_) {
        double coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            coeff = std::abs(coeff);
        }
        first = false;
        bool unit = coeff == 1.0 && !pm.empty();
        if (!unit) os << coeff;
        bool leading = unit;
        for (const auto& [v, e] : pm) {
            if (!leading) os << "*";
            leading = false;
            os << v.name();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace quboc
