#include <doctest.h>

#include <fstream>
#include <random>

#include "folia/binary.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"

using namespace folia;

namespace {

BinaryForm fromRoots(const std::vector<std::pair<long, long>>& roots) {
    std::vector<DivisorPoint> div;
    for (const auto& [c, d] : roots) div.push_back({{Scalar(c), Scalar(d)}, 1});
    return formFromDivisor(div);
}

// prod_{i<j} (c_i d_j - c_j d_i)^2 for roots [c_i : d_i] and F = prod (d_i t0 - c_i t1).
Scalar rootDiscriminant(const std::vector<std::pair<long, long>>& roots) {
    Scalar out(1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const Scalar v(roots[i].first * roots[j].second - roots[j].first * roots[i].second);
            out *= v * v;
        }
    }
    return out;
}

Scalar frozenOracleConstant() {
    std::ifstream in(std::string(FOLIA_GOLDEN_DIR) + "/discriminant_constant.txt");
    std::string s;
    in >> s;
    return Scalar(mpq_class(s));
}

}  // namespace

TEST_SUITE("binary") {
    TEST_CASE("plain and apolar coordinates") {
        const BinaryForm f({1, 4, 6, 4, 1});
        const auto alpha = f.apolarCoordinates();
        for (const auto& a : alpha) CHECK(a.isOne());
        CHECK(BinaryForm::fromApolar(alpha) == f);
        CHECK(BinaryForm::fromPoly(f.toPoly()) == f);
        CHECK_THROWS_AS(BinaryForm({0, 0, 0}), PreconditionError);
    }

    TEST_CASE("veronese and the root convention") {
        CHECK(veronese(4, {1, 1}) == BinaryForm({1, 4, 6, 4, 1}));
        CHECK(veronese(4, {1, 0}) == BinaryForm({1, 0, 0, 0, 0}));
        // d*t0 - c*t1 vanishes at [c : d]
        const MultiPoly l = rootLinearForm({Scalar(2), Scalar(3)});
        CHECK(evaluate(l, std::vector<Scalar>{2, 3}).isZero());
        const std::vector<DivisorPoint> div{{{Scalar(1), Scalar(0)}, 3}, {{Scalar(0), Scalar(1)}, 1}};
        // [1:0] is the root of -t1, [0:1] the root of t0: (-t1)^3 t0
        CHECK(formFromDivisor(div) == BinaryForm({0, 0, 0, -1, 0}));
        CHECK_THROWS_AS(formFromDivisor(div, 5u), PreconditionError);
    }

    TEST_CASE("harmonic quartic invariants") {
        const BinaryForm h({0, 1, 0, -1, 0});
        const InvariantTriple t = invariantsQCD(h);
        CHECK(t.q == Scalar::fraction(1, 4));
        CHECK(t.c.isZero());
        CHECK(t.discriminant() == Scalar::fraction(1, 64));
        CHECK(jInvariant(h, JNormalization::Raw).value() == Scalar(1));
        CHECK(jInvariant(h, JNormalization::Classical).value() == Scalar(1728));
        CHECK(rootPattern(h).multiplicities == std::vector<unsigned>{1, 1, 1, 1});
    }

    TEST_CASE("equianharmonic quartic has j = 0") {
        const BinaryForm e({1, 0, 0, 4, 0});
        CHECK(invariantsQCD(e).q.isZero());
        CHECK(jInvariant(e, JNormalization::Classical).value().isZero());
    }

    TEST_CASE("j agrees with the cross-ratio formula") {
        // Roots 0, 1, infinity, lambda: j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<long> d(-9, 9);
        for (int trial = 0; trial < 25; ++trial) {
            long num = d(rng);
            long den = std::abs(d(rng)) + 1;
            const Scalar l = Scalar::fraction(num, den);
            if (l.isZero() || l.isOne()) continue;
            const BinaryForm f = fromRoots({{0, 1}, {1, 1}, {1, 0}, {num, den}});
            const Scalar expected = Scalar(256) * (l * l - l + Scalar(1)).pow(3) / (l * l * (l - Scalar(1)).pow(2));
            CHECK(jInvariant(f, JNormalization::Classical).value() == expected);
        }
    }

    TEST_CASE("j at the boundary") {
        CHECK(jInvariant(BinaryForm({0, 0, 1, 0, 0}), JNormalization::Raw).kind() == JValue::Kind::Infinity);
        CHECK(jInvariant(BinaryForm({0, 1, 0, 0, 0}), JNormalization::Raw).kind() == JValue::Kind::Indeterminate);
        CHECK_THROWS_AS(jInvariant(BinaryForm({0, 1, 0, 0, 0}), JNormalization::Raw).value(), PreconditionError);
    }

    TEST_CASE("Q and C are SL2 invariants of weight 4 and 6") {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<long> d(-5, 5);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Scalar> c;
            for (int i = 0; i < 5; ++i) c.push_back(Scalar(d(rng)));
            if (std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.isZero(); })) continue;
            const BinaryForm f(c);
            const ScalarMatrix m{{d(rng), d(rng)}, {d(rng), d(rng)}};
            const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
            if (det.isZero()) continue;
            const InvariantTriple a = invariantsQCD(f);
            const InvariantTriple b = invariantsQCD(f.substituted(m));
            CHECK(b.q == det.pow(4) * a.q);
            CHECK(b.c == det.pow(6) * a.c);
        }
    }

    TEST_CASE("resultant oracle is a fixed multiple of D") {
        const Scalar kappa = frozenOracleConstant();
        CHECK(discriminantOracleConstant() == kappa);
        std::mt19937_64 rng(43);
        std::uniform_int_distribution<long> d(-6, 6);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Scalar> c;
            for (int i = 0; i < 5; ++i) c.push_back(Scalar::fraction(d(rng), 1 + std::abs(d(rng))));
            if (std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.isZero(); })) continue;
            const BinaryForm f(c);
            CHECK(discriminantOracle(f) == kappa * invariantsQCD(f).discriminant());
        }
    }

    TEST_CASE("D is proportional to the product of squared root differences") {
        // Independent of both D and the Sylvester path: forms with known rational roots.
        std::mt19937_64 rng(44);
        std::uniform_int_distribution<long> d(-5, 5);
        std::optional<Scalar> ratio;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::pair<long, long>> roots;
            for (int i = 0; i < 4; ++i) {
                long c = d(rng);
                long e = d(rng);
                if (c == 0 && e == 0) e = 1;
                roots.emplace_back(c, e);
            }
            const Scalar disc = rootDiscriminant(roots);
            const Scalar dd = invariantsQCD(fromRoots(roots)).discriminant();
            if (disc.isZero()) {
                CHECK(dd.isZero());
                continue;
            }
            const Scalar r = dd / disc;
            if (!ratio) ratio = r;
            CHECK(r == *ratio);
        }
        REQUIRE(ratio);
        CHECK(*ratio == Scalar::fraction(1, 256));
    }

    TEST_CASE("symbolic resultant equals the frozen constant times D") {
        const MultiPoly sylvester = symbolicDiscriminantOracle(4);
        const auto inv = quarticInvariants();
        std::vector<MultiPoly> toApolar;
        for (unsigned i = 0; i <= 4; ++i) toApolar.push_back(binomial(4, i).inverse() * MultiPoly::variable(5, i));
        CHECK(sylvester == frozenOracleConstant() * substitute(inv.d, toApolar));
    }

    TEST_CASE("root patterns and the orbit table") {
        CHECK(to_string(rootPattern(BinaryForm({1, 0, 0, 0, 0}))) == "[4]");
        CHECK(rootPattern(BinaryForm({0, 1, 0, 0, 0})).orbitClass == OrbitClass::Tangent);
        CHECK(rootPattern(BinaryForm({0, 0, 1, 0, 0})).orbitClass == OrbitClass::BitangentNode);
        CHECK(rootPattern(BinaryForm({0, 1, -1, 0, 0})).orbitClass == OrbitClass::OneDouble);
        CHECK(rootPattern(BinaryForm({1, -1, 0, 0, 0})).orbitClass == OrbitClass::Tangent);
        CHECK(rootPattern(BinaryForm({0, 1, 0, -1, 0})).orbitClass == OrbitClass::Simple);
        // (t0^2 + t1^2)^2: a conjugate double pair
        CHECK(to_string(rootPattern(BinaryForm({1, 0, 2, 0, 1}))) == "[2,2]");
        CHECK(to_string(rootPattern(BinaryForm({1, 0, -3, 2}))) == "[2,1]");
        CHECK_FALSE(rootPattern(BinaryForm({1, 0, -3, 2})).orbitClass);
        const ScalarDomain f3 = ScalarDomain::prime(3);
        CHECK_THROWS_AS(rootPattern(BinaryForm({Scalar::integer(1, f3), Scalar::integer(0, f3), Scalar::integer(0, f3),
                                                Scalar::integer(0, f3), Scalar::integer(1, f3)})),
                        PreconditionError);
    }

    TEST_CASE("root patterns over F_p") {
        const ScalarDomain f7 = ScalarDomain::prime(7);
        auto k = [f7](long v) { return Scalar::integer(v, f7); };
        // t0^2 t1^2 - t0 t1^3 = t0 t1^2 (t0 - t1)
        CHECK(to_string(rootPattern(BinaryForm({k(0), k(0), k(1), k(-1), k(0)}))) == "[2,1,1]");
        // t0^4 + t1^4 has four simple roots over the closure
        CHECK(to_string(rootPattern(BinaryForm({k(1), k(0), k(0), k(0), k(1)}))) == "[1,1,1,1]");
    }

    TEST_CASE("cubic discriminant") {
        std::vector<MultiPoly> triple;
        for (long v : {1, -3, 3, -1}) triple.push_back(MultiPoly::constant(0, Scalar(v)));
        CHECK(cubicDiscriminant(triple).isZero());
        std::vector<MultiPoly> simple;  // t0 t1 (t0 - t1): roots 0, 1, infinity
        for (long v : {0, 1, -1, 0}) simple.push_back(MultiPoly::constant(0, Scalar(v)));
        CHECK(cubicDiscriminant(simple).constantValue() == Scalar(1));
    }

    TEST_CASE("osculating flags contain the right multiples of l_p") {
        std::mt19937_64 rng(45);
        std::uniform_int_distribution<long> d(-4, 4);
        auto dot = [](const std::vector<Scalar>& f, const std::vector<Scalar>& a) {
            Scalar s(0);
            for (std::size_t i = 0; i < a.size(); ++i) s += f[i] * a[i];
            return s;
        };
        for (int trial = 0; trial < 10; ++trial) {
            BinaryPoint p{Scalar(d(rng)), Scalar(d(rng))};
            if (p.x0.isZero() && p.x1.isZero()) p.x1 = Scalar(1);
            const OsculatingFlag flag = osculatingFlag(4, p);
            const MultiPoly lp = veronese(1, p).toPoly();
            const MultiPoly g = BinaryForm({Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng)), Scalar(1)}).toPoly();
            const auto h = BinaryForm::fromPoly(lp * g).apolarCoordinates();
            CHECK(dot(flag.hyperplane, h).isZero());
            const MultiPoly q = BinaryForm({Scalar(d(rng)), Scalar(1), Scalar(d(rng))}).toPoly();
            const auto plane = BinaryForm::fromPoly(lp.pow(2) * q).apolarCoordinates();
            for (const auto& f : flag.plane) CHECK(dot(f, plane).isZero());
            const auto line = BinaryForm::fromPoly(lp.pow(3) * veronese(1, {Scalar(d(rng)), Scalar(1)}).toPoly())
                                  .apolarCoordinates();
            for (const auto& f : flag.line) CHECK(dot(f, line).isZero());
            // The point itself is not cut out by a larger space: the three functionals are independent.
            ScalarMatrix m(3, 5);
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t c = 0; c < 5; ++c) m(r, c) = flag.line[r][c];
            }
            CHECK(rank(m) == 3);
            // inclusion sends plain cofactors to the apolar coordinates of l_p * g
            CHECK(multiply(flag.inclusion, BinaryForm::fromPoly(g).coefficients()) == h);
        }
        CHECK_THROWS_AS(osculatingFlag(3, {Scalar(1), Scalar(0)}), PreconditionError);
    }

    TEST_CASE("flag at [1:0] is the coordinate flag") {
        const OsculatingFlag flag = osculatingFlag(4, {Scalar(1), Scalar(0)});
        CHECK(flag.hyperplane == std::vector<Scalar>{0, 0, 0, 0, 1});
        CHECK(flag.plane[0] == std::vector<Scalar>{0, 0, 0, 1, 0});
        CHECK(flag.line[0] == std::vector<Scalar>{0, 0, 1, 0, 0});
    }
}
