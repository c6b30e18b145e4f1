#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "folia/exterior.hpp"

namespace folia {

/// Rational component R(d1, d2): p1 F2 dF1 - p2 F1 dF2 with
/// (p1, p2) = (d2, d1) / gcd(d1, d2). The argument order fixes the sign.
DiffForm buildRational(const MultiPoly& f1, const MultiPoly& f2);

/// Logarithmic component: sum_i lambda_i (prod_{j != i} F_j) dF_i, needs at
/// least three factors and sum_i d_i lambda_i = 0 (two factors belong to
/// buildRational).
DiffForm buildLogarithmic(std::span<const MultiPoly> factors, std::span<const Scalar> weights);

/// pi^* eta for a rank-3 linear map pi with 3 rows and r+1 columns and a
/// descending 1-form eta on three variables.
DiffForm buildLinearPullback(const ScalarMatrix& pi, const DiffForm& eta);

/// Input of one of the three constructors.
struct ComponentRecipe {
    enum class Kind { Rational, Logarithmic, Pullback };

    Kind kind;
    std::vector<MultiPoly> factors;  // F1, F2 (rational) or F1..Fs
    std::vector<Scalar> weights;     // logarithmic only
    ScalarMatrix pi;                 // pullback only
    std::vector<MultiPoly> eta;      // pullback only: coefficients on three variables
};

DiffForm build(const ComponentRecipe& recipe);

/// Random homogeneous polynomial with 1..maxTerms terms and integer
/// coefficients in [-bound, bound] \ {0}.
MultiPoly randomHomogeneous(std::mt19937_64& rng, std::size_t arity, unsigned degree, std::size_t maxTerms = 4,
                            long bound = 5);

/// Random recipe of each kind: arity 4 or 5, coefficient degree at most 4.
ComponentRecipe randomRationalRecipe(std::mt19937_64& rng);
ComponentRecipe randomLogarithmicRecipe(std::mt19937_64& rng);
ComponentRecipe randomPullbackRecipe(std::mt19937_64& rng);

struct PropertyTally {
    std::size_t rational = 0;
    std::size_t logarithmic = 0;
    std::size_t pullback = 0;
    std::size_t instances = 0;
    bool allPassed() const noexcept { return rational == instances && logarithmic == instances && pullback == instances; }
};
/// Builds `instances` random recipes of each kind and counts those whose
/// output has zero descent and integrability residuals.
PropertyTally constructorPropertySuite(std::uint64_t seed, std::size_t instances);

}  // namespace folia
