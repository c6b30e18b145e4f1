#include <doctest.h>

#include <random>

#include "folia/binary.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"

using namespace folia;

namespace {

ScalarMatrix randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c, ScalarDomain d = {}) {
    std::uniform_int_distribution<long> dist(-4, 4);
    ScalarMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::integer(dist(rng), d);
    }
    return m;
}

// Cofactor expansion, independent of the Bareiss path.
MultiPoly laplace(const Matrix<MultiPoly>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    MultiPoly out(m(0, 0).arity());
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<MultiPoly> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, k = 0; j < n; ++j) {
                if (j != c) minor(i - 1, k++) = m(i, j);
            }
        }
        const MultiPoly term = m(0, c) * laplace(minor);
        out += (c % 2 ? -term : term);
    }
    return out;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("nullspace vectors are annihilated and counted by rank") {
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t r = 2 + trial % 5;
            const std::size_t c = 3 + trial % 7;
            ScalarMatrix m = randomMatrix(rng, r, c);
            if (trial % 3 == 0 && r > 1) {
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Scalar(2) - m(1 % r, j);
            }
            const auto basis = nullspaceBasis(m);
            CHECK(basis.size() + rank(m) == c);
            for (const auto& v : basis) {
                for (const auto& x : multiply(m, v)) CHECK(x.isZero());
            }
        }
    }

    TEST_CASE("rank over F_p can drop") {
        const ScalarMatrix m{{1, 2}, {3, 1}};
        CHECK(rank(m) == 2);
        const ScalarDomain f5 = ScalarDomain::prime(5);
        ScalarMatrix mod(2, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) mod(i, j) = m(i, j).reduceTo(f5);
        }
        CHECK(rank(mod) == 1);
    }

    TEST_CASE("Bareiss determinant matches cofactor expansion") {
        std::mt19937_64 rng(22);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 2 + trial % 4;
            Matrix<MultiPoly> m(n, n, MultiPoly(2));
            std::uniform_int_distribution<long> d(-3, 3);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) = Scalar(d(rng)) * MultiPoly::variable(2, (i + j) % 2) + MultiPoly::constant(2, Scalar(d(rng)));
                }
            }
            CHECK(determinant(m) == laplace(m));
        }
    }

    TEST_CASE("determinant handles a zero pivot") {
        const MultiPoly z(1);
        const MultiPoly one = MultiPoly::constant(1, Scalar(1));
        const MultiPoly x = MultiPoly::variable(1, 0);
        Matrix<MultiPoly> m(2, 2, z);
        m(0, 1) = one;
        m(1, 0) = x;
        CHECK(determinant(m) == -x);
        CHECK_THROWS_AS(determinant(Matrix<MultiPoly>(2, 3, z)), PreconditionError);
    }
}
