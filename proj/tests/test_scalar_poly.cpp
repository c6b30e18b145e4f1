#include <doctest.h>

#include <random>

#include "folia/components.hpp"
#include "folia/error.hpp"
#include "folia/poly.hpp"
#include "folia/poly_text.hpp"

using namespace folia;

namespace {

const VariableNames kX = VariableNames::indexed("x", 3);

MultiPoly P(const char* text) { return parsePoly(text, kX); }

std::vector<Scalar> randomPoint(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-7, 7);
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar(d(rng)));
    return v;
}

}  // namespace

TEST_SUITE("scalar") {
    TEST_CASE("rational arithmetic stays canonical") {
        const Scalar a = Scalar::fraction(6, 4);
        CHECK(a.str() == "3/2");
        CHECK((a + Scalar::fraction(1, 2)).str() == "2");
        CHECK((a * a.inverse()).isOne());
        CHECK(Scalar::fraction(-2, 4).sign() < 0);
        CHECK(Scalar(3).pow(4) == Scalar(81));
        CHECK_THROWS_AS(Scalar(0).inverse(), PreconditionError);
    }

    TEST_CASE("residues") {
        const Scalar a = Scalar::modular(-1, 7);
        CHECK(a.residue() == 6);
        CHECK((a * a).isOne());
        CHECK((Scalar::modular(3, 7) * Scalar::modular(3, 7).inverse()).isOne());
        CHECK(Scalar::fraction(1, 2).reduceTo(ScalarDomain::prime(7)) == Scalar::modular(4, 7));
        CHECK_THROWS_AS(Scalar::fraction(1, 7).reduceTo(ScalarDomain::prime(7)), DomainMismatch);
    }

    TEST_CASE("mixing domains throws") {
        CHECK_THROWS_AS(Scalar(1) + Scalar::modular(1, 5), DomainMismatch);
        CHECK_THROWS_AS(Scalar::modular(1, 5) * Scalar::modular(1, 7), DomainMismatch);
        CHECK_THROWS_AS(ScalarDomain::prime(9), PreconditionError);
    }
}

TEST_SUITE("poly") {
    TEST_CASE("grlex order puts the leading term first") {
        const MultiPoly f = P("x2^3 + x0*x1 + x0^2 + 5");
        CHECK(formatPoly(f, kX) == "x2^3 + x0^2 + x0*x1 + 5");
        CHECK(f.leadingMonomial() == Monomial({0, 0, 3}));
        CHECK(f.totalDegree() == 3);
        CHECK_FALSE(f.isHomogeneous());
        CHECK(MultiPoly(3).totalDegree() == -1);
    }

    TEST_CASE("homogeneous monomials are enumerated once each in grlex order") {
        const auto mons = homogeneousMonomials(4, 3);
        CHECK(mons.size() == 20);
        for (std::size_t i = 1; i < mons.size(); ++i) CHECK(grlexCompare(mons[i - 1], mons[i]) > 0);
        CHECK(homogeneousMonomials(5, 4).size() == 70);
    }

    TEST_CASE("parse and format round trip") {
        for (const char* text : {"3*x0^2 - 4*x1*x2", "1/2*x0 - 7", "0", "-x2^5 + x0*x1*x2", "x0^2*x1 - 2/3*x2^3"}) {
            const MultiPoly f = P(text);
            CHECK(P(formatPoly(f, kX).c_str()) == f);
        }
        CHECK(P("(x0 + x1)^2") == P("x0^2 + 2*x0*x1 + x1^2"));
        CHECK(P("x0/2") == P("1/2*x0"));
    }

    TEST_CASE("parse errors") {
        CHECK_THROWS_AS(P("x0 x1"), ParseError);
        CHECK_THROWS_AS(P("x0 +"), ParseError);
        CHECK_THROWS_AS(P("x0/x1"), ParseError);
        CHECK_THROWS_AS(P("x0/0"), ParseError);
        CHECK_THROWS_AS(P("x7"), ParseError);
        CHECK_THROWS_AS(P("x0^-1"), ParseError);
        CHECK_THROWS_AS(VariableNames::infer("x0 + a1"), ParseError);
    }

    TEST_CASE("arithmetic agrees with evaluation") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const MultiPoly f = randomHomogeneous(rng, 3, 2, 5) + randomHomogeneous(rng, 3, 1, 3);
            const MultiPoly g = randomHomogeneous(rng, 3, 3, 5);
            const auto pt = randomPoint(rng, 3);
            CHECK(evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt));
            CHECK(evaluate(f + g, pt) == evaluate(f, pt) + evaluate(g, pt));
            CHECK(evaluate(f.pow(3), pt) == evaluate(f, pt).pow(3));
        }
    }

    TEST_CASE("partial derivatives follow the product rule") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 20; ++trial) {
            const MultiPoly f = randomHomogeneous(rng, 3, 2, 4);
            const MultiPoly g = randomHomogeneous(rng, 3, 3, 4);
            for (std::size_t v = 0; v < 3; ++v) {
                CHECK(partialDerivative(f * g, v) == partialDerivative(f, v) * g + f * partialDerivative(g, v));
            }
        }
    }

    TEST_CASE("linear substitution composes") {
        const MultiPoly f = P("x0^2 - x1*x2");
        const ScalarMatrix m{{1, 1, 0}, {0, 1, 0}, {0, 2, 1}};
        CHECK(linearSubstitute(f, m) == P("(x0 + x1)^2 - x1*(2*x1 + x2)"));
        const std::vector<MultiPoly> subs{P("x0 + x1"), P("x1"), P("2*x1 + x2")};
        CHECK(substitute(f, subs) == linearSubstitute(f, m));
    }

    TEST_CASE("exact division") {
        const MultiPoly f = P("x0^2 - x1^2");
        const auto q = exactDivide(f, P("x0 - x1"));
        REQUIRE(q);
        CHECK(*q == P("x0 + x1"));
        CHECK_FALSE(exactDivide(f, P("x0 - x2")));
        CHECK_FALSE(exactDivide(P("x0"), P("2*x0^2")));
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 30; ++trial) {
            const MultiPoly a = randomHomogeneous(rng, 3, 2, 4);
            const MultiPoly b = randomHomogeneous(rng, 3, 3, 4);
            const auto back = exactDivide(a * b, b);
            REQUIRE(back);
            CHECK(*back == a);
        }
    }

    TEST_CASE("gcd recovers planted common factors") {
        std::mt19937_64 rng(14);
        for (int trial = 0; trial < 30; ++trial) {
            const MultiPoly common = randomHomogeneous(rng, 3, 1 + trial % 2, 3);
            const MultiPoly a = randomHomogeneous(rng, 3, 2, 4);
            const MultiPoly b = randomHomogeneous(rng, 3, 2, 4);
            const MultiPoly g = polyGcd(common * a, common * b);
            // g is a normalized multiple of the planted factor dividing both inputs.
            CHECK(exactDivide(g, normalize(common)));
            CHECK(exactDivide(common * a, g));
            CHECK(exactDivide(common * b, g));
            CHECK(polyGcd(g, normalize(common)) == normalize(common));
        }
        CHECK(polyGcd(P("6*x0^2*x1"), P("4*x0*x1^2")) == P("x0*x1"));
        CHECK(polyGcd(P("x0"), P("x1")) == P("1"));
        // non-homogeneous inputs with fractional coefficients
        const MultiPoly h = P("1/2*x0^2 - 2/3*x1 + 1");
        CHECK(polyGcd(h * P("x0 + 3*x2 - 5"), h * P("x1^2 - 7*x0*x2")) == normalize(h));
        CHECK(polyGcd(P("x0^3 - 1/4*x1"), P("x2^2 + x0*x1 + 2")) == P("1"));
        CHECK_THROWS_AS(polyGcd(MultiPoly(3), MultiPoly(3)), PreconditionError);
    }

    TEST_CASE("normalization") {
        const auto split = splitContent(P("-4*x0^2 + 6*x1*x2"));
        CHECK(split.content == Scalar(-2));
        CHECK(split.normalized == P("2*x0^2 - 3*x1*x2"));
        CHECK(normalize(P("1/2*x0 + 1/3*x1")) == P("3*x0 + 2*x1"));
        const ScalarDomain f7 = ScalarDomain::prime(7);
        CHECK(normalize(parsePoly("3*x0 + x1", kX, f7)) == parsePoly("x0 + 5*x1", kX, f7));
    }

    TEST_CASE("coefficient gcd of a list") {
        const std::vector<MultiPoly> fs{P("x0*x1"), P("x0*x2"), P("2*x0^2")};
        CHECK(coefficientGcd(fs) == P("x0"));
        const std::vector<MultiPoly> zeros{MultiPoly(3), MultiPoly(3)};
        CHECK_THROWS(coefficientGcd(zeros));
    }

    TEST_CASE("modular reduction and domains") {
        const MultiPoly f = P("1/2*x0 + 3*x1");
        const MultiPoly g = f.reduceTo(ScalarDomain::prime(5));
        CHECK(g.domain() == ScalarDomain::prime(5));
        CHECK(g.coefficient(Monomial::variable(3, 0)) == Scalar::modular(3, 5));
        CHECK_THROWS_AS(f.reduceTo(ScalarDomain::prime(2)), DomainMismatch);
        CHECK_THROWS_AS(f + g, DomainMismatch);
        CHECK_THROWS_AS(f + MultiPoly::variable(4, 0), ArityMismatch);
    }
}
