#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "quboc/polynomial.hpp"
#include "support.hpp"

using namespace quboc;
using testsupport::Rng;

namespace {

Var x = continuous_var("x");
Var y = continuous_var("y");

Polynomial px() { return Polynomial::variable(x); }
Polynomial py() { return Polynomial::variable(y); }

// Random polynomial over a fixed small universe.
Polynomial random_poly(Rng& rng, const std::vector<Var>& vars) {
    PolynomialBuilder acc;
    int n = rng.range(1, 6);
    for (int i = 0; i < n; ++i) {
        PowerMap powers;
        for (const Var& v : vars) {
            int e = rng.range(0, 2);
            if (e > 0) powers[v] = e;
        }
        acc.add_term(0.5 * rng.range(-8, 8), std::move(powers));
    }
    return acc.build();
}

std::map<Var, double> random_assignment(Rng& rng, const std::vector<Var>& vars) {
    std::map<Var, double> a;
    for (const Var& v : vars) a[v] = 0.25 * rng.range(-8, 8);
    return a;
}

}  // namespace

TEST_CASE("addition cancels and keeps canonical form") {
    // (x^2 + 1) + (-1) = x^2
    Polynomial p = px() * px() + Polynomial::constant(1.0);
    Polynomial sum = p + Polynomial::constant(-1.0);
    CHECK(sum == px() * px());

    // P + 0 = P
    CHECK(p + Polynomial() == p);

    // (x + x^2) + (x - x^2) = 2x, checked against evaluation at 3 points
    Polynomial left = px() + px() * px();
    Polynomial right = px() - px() * px();
    Polynomial total = left + right;
    for (double v : {0.75, -2.0, 3.5}) {
        std::map<Var, double> a{{x, v}};
        CHECK(total.evaluate(a) == doctest::Approx(left.evaluate(a) + right.evaluate(a)));
    }
    CHECK(total == px() * 2.0);
}

TEST_CASE("multiplication expands and applies binary idempotence") {
    Polynomial diff = (px() + Polynomial::constant(1.0)) * (px() - Polynomial::constant(1.0));
    CHECK(diff == px() * px() - Polynomial::constant(1.0));

    Var b = binary_var("b");
    CHECK(Polynomial::variable(b) * Polynomial::variable(b) == Polynomial::variable(b));

    Polynomial square = (px() + py()) * (px() + py());
    CHECK(square == px() * px() + px() * py() * 2.0 + py() * py());
}

TEST_CASE("substitute is homomorphic over evaluation") {
    Var q0 = binary_var("q0");
    Var q1 = binary_var("q1");
    Polynomial replacement = Polynomial::variable(q0) * 2.0 + Polynomial::variable(q1);

    Polynomial substituted = (px() * px()).substitute(x, replacement);
    // 4 q0 + 4 q0 q1 + q1 after idempotence
    Polynomial expected = Polynomial::variable(q0) * 4.0 +
                          Polynomial::variable(q0) * Polynomial::variable(q1) * 4.0 +
                          Polynomial::variable(q1);
    CHECK(substituted == expected);
    for (int mask = 0; mask < 4; ++mask) {
        std::map<Var, double> bits{{q0, double(mask & 1)}, {q1, double(mask >> 1)}};
        double encoded = replacement.evaluate(bits);
        CHECK(substituted.evaluate(bits) == doctest::Approx(encoded * encoded));
    }

    CHECK(px().substitute(x, px()) == px());
    CHECK((px() + py()).substitute(x, Polynomial()) == py());
}

TEST_CASE("evaluate") {
    CHECK((px() + px() * px()).evaluate({{x, 2.0}}) == 6.0);
    CHECK(Polynomial::constant(7.0).evaluate({}) == 7.0);
    CHECK((px() * py()).evaluate({{x, 3.0}, {y, -2.0}}) == -6.0);

    CHECK_THROWS_WITH_AS((void)(px() + py()).evaluate({{x, 1.0}}),
                         doctest::Contains("'y'"), std::invalid_argument);
}

TEST_CASE("degree and max product arity") {
    Var x1 = continuous_var("x1");
    Var x2 = continuous_var("x2");
    Var x3 = continuous_var("x3");
    Polynomial p = Polynomial::monomial(1.0, {{x3, 3}}) +
                   Polynomial::monomial(1.0, {{x1, 1}, {x2, 1}}) + Polynomial::constant(-1.0);
    CHECK(p.degree() == 3);
    CHECK(p.max_product_arity() == 2);

    CHECK(Polynomial::constant(4.0).degree() == 0);
    CHECK(Polynomial::constant(4.0).max_product_arity() == 0);

    Polynomial xy = Polynomial::monomial(1.0, {{x, 2}, {y, 3}});
    CHECK(xy.degree() == 5);
    CHECK(xy.max_product_arity() == 2);
}

TEST_CASE("conflicting kinds for one name are rejected") {
    Polynomial cont = Polynomial::variable(continuous_var("v"));
    Polynomial bin = Polynomial::variable(binary_var("v"));
    CHECK_THROWS_AS((void)(cont + bin), std::invalid_argument);
}

TEST_CASE("canonicalization soundness on random pairs") {
    std::vector<Var> vars{x, y, continuous_var("z")};
    Rng rng(17);
    for (int round = 0; round < 40; ++round) {
        Polynomial a = random_poly(rng, vars);
        Polynomial b = random_poly(rng, vars);
        Polynomial sum = a + b;
        Polynomial product = a * b;
        for (int k = 0; k < 10; ++k) {
            auto point = random_assignment(rng, vars);
            double av = a.evaluate(point);
            double bv = b.evaluate(point);
            CHECK(testsupport::approx_equal(sum.evaluate(point), av + bv));
            CHECK(testsupport::approx_equal(product.evaluate(point), av * bv, 1e-9));
        }
    }
}

TEST_CASE("binary idempotence agrees with the unreduced form exhaustively") {
    // 8 binary variables; monomials with exponents up to 3 before reduction
    std::vector<Var> bits;
    for (int i = 0; i < 8; ++i) bits.push_back(binary_var("b" + std::to_string(i)));

    Rng rng(99);
    struct RawTerm {
        double coeff;
        std::vector<std::pair<int, int>> powers;  // (bit, exponent)
    };
    std::vector<RawTerm> raw;
    PolynomialBuilder acc;
    for (int t = 0; t < 12; ++t) {
        RawTerm term;
        term.coeff = 0.5 * rng.range(-6, 6);
        PowerMap powers;
        for (int v = 0; v < 8; ++v) {
            int e = rng.range(0, 3);
            if (e > 0) {
                term.powers.push_back({v, e});
                powers[bits[static_cast<std::size_t>(v)]] = e;
            }
        }
        raw.push_back(term);
        acc.add_term(term.coeff, std::move(powers));
    }
    Polynomial reduced = acc.build();

    for (int mask = 0; mask < 256; ++mask) {
        std::map<Var, double> a;
        for (int v = 0; v < 8; ++v) a[bits[static_cast<std::size_t>(v)]] = (mask >> v) & 1;
        double direct = 0.0;
        for (const auto& term : raw) {
            double value = term.coeff;
            for (auto [v, e] : term.powers) {
                for (int k = 0; k < e; ++k) value *= (mask >> v) & 1;
            }
            direct += value;
        }
        CHECK(reduced.evaluate(a) == doctest::Approx(direct));
    }
}

TEST_CASE("substitute(p, x, x) is the identity structurally") {
    Rng rng(5);
    std::vector<Var> vars{x, y};
    for (int round = 0; round < 20; ++round) {
        Polynomial p = random_poly(rng, vars);
        CHECK(p.substitute(x, px()) == p);
    }
}

TEST_CASE("str renders graded-lex order deterministically") {
    Polynomial p = px() * px() + px() * -1.0 + Polynomial::constant(2.0);
    CHECK(p.str() == "2 - x + x^2");
    CHECK(Polynomial().str() == "0");
}
