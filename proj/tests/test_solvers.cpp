#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quboc/solve.hpp"
#include "support.hpp"

using namespace quboc;
using testsupport::Rng;

namespace {

QuboMatrix random_qubo(Rng& rng, int n, int terms) {
    QuboMatrix::Entries entries;
    for (int t = 0; t < terms; ++t) {
        int i = rng.range(0, n - 1);
        int j = rng.range(0, n - 1);
        if (i > j) std::swap(i, j);
        entries[{i, j}] += 0.5 * rng.range(-8, 8);
    }
    for (auto it = entries.begin(); it != entries.end();) {
        it = it->second == 0.0 ? entries.erase(it) : std::next(it);
    }
    return QuboMatrix(n, std::move(entries), 0.25 * rng.range(-4, 4), {});
}

}  // namespace

TEST_CASE("brute force basics") {
    SUBCASE("tie-break picks the lexicographically smallest bitstring") {
        QuboMatrix q(2, {{{0, 0}, -1.0}, {{1, 1}, -1.0}, {{0, 1}, 4.0}}, 0.0, {});
        Solution sol = brute_force(q);
        CHECK(sol.energy == -1.0);
        CHECK(sol.bitstring() == "01");
    }
    SUBCASE("empty matrix returns the offset") {
        QuboMatrix q(0, {}, 7.0, {});
        Solution sol = brute_force(q);
        CHECK(sol.energy == 7.0);
        CHECK(sol.bits.empty());
    }
    SUBCASE("all-positive diagonal keeps everything off") {
        QuboMatrix q(4, {{{0, 0}, 1.0}, {{1, 1}, 2.0}, {{2, 2}, 0.5}, {{3, 3}, 3.0}}, 1.5, {});
        Solution sol = brute_force(q);
        CHECK(sol.energy == 1.5);
        CHECK(sol.bitstring() == "0000");
    }
    SUBCASE("size limit") {
        QuboMatrix q(30, {}, 0.0, {});
        CHECK_THROWS_AS((void)brute_force(q), SizeLimitError);
        CHECK_NOTHROW((void)brute_force(q, 30));
    }
}

TEST_CASE("brute force matches an independent naive enumeration") {
    Rng rng(29);
    for (int round = 0; round < 40; ++round) {
        int n = rng.range(1, 12);
        QuboMatrix q = random_qubo(rng, n, 3 * n);
        Solution sol = brute_force(q);
        auto naive = testsupport::naive_qubo_minimum(q);
        CHECK(sol.energy == naive.energy);
        CHECK(sol.bits == naive.bits);
    }
    // a few full-width instances at the documented oracle size
    for (int round = 0; round < 3; ++round) {
        QuboMatrix q = random_qubo(rng, 16, 48);
        Solution sol = brute_force(q);
        auto naive = testsupport::naive_qubo_minimum(q);
        CHECK(sol.energy == naive.energy);
        CHECK(sol.bits == naive.bits);
    }
}

TEST_CASE("simulated annealing") {
    SUBCASE("single-variable instance always lands at the downhill bit") {
        QuboMatrix q(1, {{{0, 0}, -3.0}}, 0.0, {});
        for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
            AnnealParams params;
            params.seed = seed;
            params.restarts = 1;
            params.sweeps = 10;
            Solution sol = simulated_anneal(q, params);
            CHECK(sol.bitstring() == "1");
            CHECK(sol.energy == -3.0);
        }
    }
    SUBCASE("same seed gives identical solutions") {
        Rng rng(57);
        QuboMatrix q = random_qubo(rng, 14, 40);
        AnnealParams params;
        params.seed = 1234;
        Solution a = simulated_anneal(q, params);
        Solution b = simulated_anneal(q, params);
        CHECK(a.bits == b.bits);
        CHECK(a.energy == b.energy);
    }
    SUBCASE("annealed energy is never below the brute-force optimum") {
        Rng rng(31);
        for (int round = 0; round < 15; ++round) {
            int n = rng.range(2, 14);
            QuboMatrix q = random_qubo(rng, n, 4 * n);
            Solution exact = brute_force(q);
            AnnealParams params;
            params.seed = rng.next();
            params.restarts = 5;
            params.sweeps = 300;
            Solution sol = simulated_anneal(q, params);
            CHECK(sol.energy >= exact.energy);
            CHECK(sol.energy == q.energy(sol.bits));
        }
    }
    SUBCASE("parameter validation") {
        QuboMatrix q(1, {}, 0.0, {});
        AnnealParams params;
        params.restarts = 0;
        CHECK_THROWS_AS((void)simulated_anneal(q, params), std::invalid_argument);
        params.restarts = 1;
        params.t_final = 0.0;
        CHECK_THROWS_AS((void)simulated_anneal(q, params), std::invalid_argument);
    }
}

TEST_CASE("decode") {
    SUBCASE("unsigned fixed-point bits 011 give 6") {
        Var x = continuous_var("x");
        DecodeRegistry registry;
        registry.add_encoding(encode_fixed_point(x, 0, 2, false),
                              domain_values(FixedPoint{0, 2, false}));
        DecodeResult result = registry.decode({0, 1, 1});
        CHECK(result.assignment.at(x) == 6.0);
        CHECK(result.consistent);
    }
    SUBCASE("all-zero bits decode to zero and break one-hot groups") {
        Var x = continuous_var("x");
        DecodeRegistry registry;
        registry.add_encoding(encode_onehot(x, ExplicitSet{{2.0, 4.0}}), {2.0, 4.0});
        DecodeResult result = registry.decode({0, 0});
        CHECK(result.assignment.at(x) == 0.0);
        CHECK_FALSE(result.consistent);
    }
    SUBCASE("aux bit disagreeing with its factors is inconsistent") {
        Var a = binary_var("a"), b = binary_var("b");
        DecodeRegistry registry;
        registry.add_encoding(encode_identity(a), {0.0, 1.0});
        registry.add_encoding(encode_identity(b), {0.0, 1.0});
        registry.add_aux({aux_var("aux0"), a, b});
        // gadget truth-table row (q=1, x1=1, x2=0)
        CHECK_FALSE(registry.decode({1, 0, 1}).consistent);
        CHECK(registry.decode({1, 1, 1}).consistent);
    }
    SUBCASE("length mismatch is an error") {
        DecodeRegistry registry;
        registry.add_encoding(encode_identity(binary_var("a")), {0.0, 1.0});
        CHECK_THROWS_AS((void)registry.decode({1, 0}), std::invalid_argument);
    }
}

TEST_CASE("minimum-preservation verifier") {
    SUBCASE("perfect square over a one-hot domain") {
        Var x = continuous_var("x");
        Polynomial p = Polynomial::monomial(1.0, {{x, 2}});
        EquivalenceReport report =
            verify_min_preservation(p, {{x, ExplicitSet{{-2.0, -1.0, 0.0, 1.0, 2.0}}}});
        CHECK(report.min_p == 0.0);
        CHECK(report.min_qubo == 0.0);
        CHECK(report.equal);
        CHECK(report.argmin_decodes);
        CHECK(report.candidate_count == 5);
    }
    SUBCASE("the cubic example polynomial over small fixed-point domains") {
        Var x1 = continuous_var("x1"), x2 = continuous_var("x2"), x3 = continuous_var("x3");
        Polynomial p = Polynomial::monomial(1.0, {{x3, 3}}) +
                       Polynomial::monomial(1.0, {{x1, 1}, {x2, 1}}) + Polynomial::constant(-1.0);
        std::map<Var, DomainSpec> domains{{x1, FixedPoint{0, 1, true}},
                                          {x2, FixedPoint{0, 1, false}},
                                          {x3, FixedPoint{0, 1, false}}};
        EquivalenceReport report = verify_min_preservation(p, domains);
        // direct check: min over L of x3^3 + x1 x2 - 1 with x1 in [-3,3],
        // x2, x3 in [0,3]: x3=0, x1 x2 minimal at -3*3
        CHECK(report.min_p == -10.0);
        CHECK(report.equal);
        CHECK(report.argmin_decodes);
    }
    SUBCASE("random dyadic instances preserve minima exactly") {
        Rng rng(83);
        for (int round = 0; round < 20; ++round) {
            auto inst = testsupport::random_dyadic_instance_bounded(rng);
            EquivalenceReport report = verify_min_preservation(inst.p, inst.domains);
            CHECK(report.equal);
            CHECK(report.argmin_decodes);
        }
    }
    SUBCASE("size limits raise") {
        Var x = continuous_var("x");
        Polynomial p = Polynomial::variable(x);
        CHECK_THROWS_AS(
            (void)verify_min_preservation(p, {{x, ExplicitSet{{1.0, 2.0, 3.0, 4.0}}}}, 0.0, 3),
            SizeLimitError);
    }
}

TEST_CASE("gadget dominance holds on compiled instances") {
    // any bitstring violating a gadget sits above A/2, which itself sits
    // above the candidate-set minimum
    Rng rng(123);
    int checked = 0;
    while (checked < 8) {
        auto inst = testsupport::random_dyadic_instance_bounded(rng, 16);
        CompileArtifacts artifacts = compile(inst.p, inst.domains);
        if (artifacts.aux_defs.empty()) continue;
        ++checked;

        QuboMatrix q = assemble(artifacts);
        // direct minimum over the candidate set
        EquivalenceReport report = verify_min_preservation(inst.p, inst.domains);
        double a = artifacts.weight;
        CHECK(a / 2.0 > report.min_p);

        std::size_t n = artifacts.registry.bit_count();
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<std::uint8_t> bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
            bool gadget_violated = false;
            auto bit_of = [&](const Var& v) {
                return bits[static_cast<std::size_t>(artifacts.registry.index_of(v))];
            };
            for (const auto& def : artifacts.aux_defs) {
                gadget_violated |= bit_of(def.aux) != (bit_of(def.left) & bit_of(def.right));
            }
            if (gadget_violated) {
                CHECK(q.energy(bits) > a / 2.0);
            }
        }
    }
}
