#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "quboc/variable.hpp"

namespace quboc {

/// Exponent map of one monomial. Exponents are always >= 1; the constant
/// term is the empty map. Exponents of binary-valued variables are clamped
/// to 1 on construction (x^k = x for x in {0,1}).
using PowerMap = std::map<Var, int>;

struct Monomial {
    double coefficient = 0.0;
    PowerMap powers;

    int total_degree() const;
    int arity() const { return static_cast<int>(powers.size()); }
};

/// Graded lexicographic order: total degree first, then the power maps
/// compared entry-wise. Keeps serialization and iteration deterministic.
struct GradedLexLess {
    bool operator()(const PowerMap& a, const PowerMap& b) const;
};

/// Canonical multivariate polynomial over named variables.
///
/// Invariants: no two monomials share a power map, no coefficient magnitude
/// is below kCoeffZeroTolerance, binary idempotence is applied, and no two
/// distinct variables share a name. Values are immutable after construction
/// and safe to share across threads.
class Polynomial {
  public:
    /// Coefficients below this magnitude are dropped during canonicalization.
    static constexpr double kCoeffZeroTolerance = 1e-12;

    using TermMap = std::map<PowerMap, double, GradedLexLess>;

    Polynomial() = default;

    static Polynomial constant(double c);
    static Polynomial variable(const Var& v);
    static Polynomial monomial(double coefficient, const PowerMap& powers);
    static Polynomial from_monomials(const std::vector<Monomial>& monomials);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double scalar) const;
    friend Polynomial operator*(double scalar, const Polynomial& p) { return p * scalar; }

    Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
    Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial pow(int exponent) const;

    /// Replaces every occurrence of `var` by `replacement`, expanding and
    /// re-canonicalizing. Evaluation commutes with substitution.
    Polynomial substitute(const Var& var, const Polynomial& replacement) const;

    /// Exact sum-of-products evaluation. Throws std::invalid_argument naming
    /// the first variable missing from the assignment.
    double evaluate(const std::map<Var, double>& assignment) const;

    /// Max total exponent over monomials (0 for constants and zero).
    int degree() const { return degree_; }

    /// Max count of distinct variables in one monomial (0 for constants).
    int max_product_arity() const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    double constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    double coefficient(const PowerMap& powers) const;

    std::set<Var> variables() const;

    /// True when every variable is binary-valued.
    bool all_binary() const;

    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

  private:
    friend class PolynomialBuilder;
    TermMap terms_;
    int degree_ = 0;
};

/// Accumulates terms and produces a canonical Polynomial. Applies binary
/// idempotence, merges duplicate power maps, drops near-zero coefficients
/// and validates that no name is used with two different kinds.
class PolynomialBuilder {
  public:
    void add_term(double coefficient, PowerMap powers);
    void add(const Polynomial& p);
    void add_scaled(const Polynomial& p, double scalar);
    Polynomial build();

  private:
    Polynomial::TermMap terms_;
};

}  // namespace quboc
