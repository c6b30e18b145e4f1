#include <doctest.h>

#include <random>

#include "folia/components.hpp"
#include "folia/error.hpp"
#include "folia/poly_text.hpp"

using namespace folia;

namespace {

MultiPoly P(const char* text, std::size_t n = 4) { return parsePoly(text, VariableNames::indexed("x", n)); }

DiffForm oneForm(std::initializer_list<const char*> coeffs, std::size_t n) {
    std::vector<MultiPoly> c;
    for (const char* t : coeffs) c.push_back(P(t, n));
    return DiffForm::oneForm(c);
}

}  // namespace

TEST_SUITE("components") {
    TEST_CASE("rational examples") {
        CHECK(buildRational(P("x0", 2), P("x1", 2)) == oneForm({"x1", "-x0"}, 2));
        CHECK(buildRational(P("x0^2", 3), P("x1*x2", 3)) == oneForm({"2*x0*x1*x2", "-x0^2*x2", "-x0^2*x1"}, 3));
        // degrees (2, 3): p1 = 3, p2 = 2
        const DiffForm w = buildRational(P("x0^2"), P("x1^3"));
        CHECK(w == oneForm({"6*x0*x1^3", "-6*x0^2*x1^2", "0", "0"}, 4));
        CHECK(w.coefficientDegree() == 4);
    }

    TEST_CASE("rational preconditions") {
        CHECK_THROWS_AS(buildRational(P("x0 + x1^2"), P("x1")), PreconditionError);
        CHECK_THROWS_AS(buildRational(P("3"), P("x1")), PreconditionError);
        CHECK_THROWS_AS(buildRational(P("x0", 3), P("x1", 4)), ArityMismatch);
    }

    TEST_CASE("logarithmic examples") {
        const std::vector<MultiPoly> fs{P("x0", 3), P("x1", 3), P("x2", 3)};
        const std::vector<Scalar> l{1, 1, -2};
        CHECK(buildLogarithmic(fs, l) == oneForm({"x1*x2", "x0*x2", "-2*x0*x1"}, 3));
        const std::vector<MultiPoly> gs{P("x0", 3), P("x1", 3), P("x0 + x1", 3)};
        const DiffForm w = buildLogarithmic(gs, l);
        CHECK(descendsCheck(w).ok);
        CHECK(integrabilityCheck(w).ok);
    }

    TEST_CASE("logarithmic preconditions report the residual") {
        const std::vector<MultiPoly> fs{P("x0", 3), P("x1", 3), P("x2", 3)};
        const std::vector<Scalar> bad{1, 1, 1};
        try {
            buildLogarithmic(fs, bad);
            FAIL("expected a weight-condition error");
        } catch (const PreconditionError& e) {
            CHECK(std::string(e.what()).find("= 3") != std::string::npos);
        }
        const std::vector<Scalar> zero{0, 0, 0};
        CHECK_THROWS_AS(buildLogarithmic(fs, zero), PreconditionError);
        const std::vector<MultiPoly> two{P("x0", 3), P("x1", 3)};
        const std::vector<Scalar> l2{1, -1};
        CHECK_THROWS_AS(buildLogarithmic(two, l2), PreconditionError);
    }

    TEST_CASE("dropping a zero-weight factor divides out exactly that factor") {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 5; ++trial) {
            const MultiPoly f1 = randomHomogeneous(rng, 4, 1, 3);
            const MultiPoly f2 = randomHomogeneous(rng, 4, 1, 3);
            const MultiPoly f3 = randomHomogeneous(rng, 4, 1, 3);
            const std::vector<MultiPoly> fs{f1, f2, f3};
            const std::vector<Scalar> l{1, -1, 0};
            const DiffForm w3 = buildLogarithmic(fs, l);
            const DiffForm w2 = buildRational(f1, f2);
            CHECK(w3 == f3 * w2);
        }
    }

    TEST_CASE("pullback examples") {
        const DiffForm eta = oneForm({"x1", "-x0", "0"}, 3);
        const ScalarMatrix proj{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
        CHECK(buildLinearPullback(proj, eta) == oneForm({"x1", "-x0", "0", "0"}, 4));
        const ScalarMatrix shifted{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        CHECK(buildLinearPullback(shifted, eta) == oneForm({"0", "x2", "-x1", "0"}, 4));
        const ScalarMatrix degenerate{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}};
        CHECK_THROWS_AS(buildLinearPullback(degenerate, eta), PreconditionError);
        CHECK_THROWS_AS(buildLinearPullback(proj, oneForm({"x1", "x0", "0"}, 3)), CertificationError);
    }

    TEST_CASE("randomized constructors certify with exact zero residues") {
        std::mt19937_64 rng(52);
        for (int trial = 0; trial < 20; ++trial) {
            for (const auto& recipe : {randomRationalRecipe(rng), randomLogarithmicRecipe(rng), randomPullbackRecipe(rng)}) {
                const DiffForm w = build(recipe);
                CHECK(descendsCheck(w).ok);
                CHECK(integrabilityCheck(w).ok);
                CHECK((w.arity() == 4 || w.arity() == 5));
                if (!w.isZero()) CHECK(*w.coefficientDegree() <= 4);
            }
        }
    }

    TEST_CASE("rational coefficient degree is d1 + d2 - 1") {
        std::mt19937_64 rng(53);
        for (unsigned d1 = 1; d1 <= 3; ++d1) {
            for (unsigned d2 = 1; d1 + d2 <= 5; ++d2) {
                const DiffForm w = buildRational(randomHomogeneous(rng, 5, d1), randomHomogeneous(rng, 5, d2));
                if (!w.isZero()) CHECK(w.coefficientDegree() == static_cast<int>(d1 + d2 - 1));
            }
        }
    }

    TEST_CASE("property suite is reproducible") {
        const PropertyTally a = constructorPropertySuite(7, 4);
        const PropertyTally b = constructorPropertySuite(7, 4);
        CHECK(a.allPassed());
        CHECK(a.rational == b.rational);
    }
}
