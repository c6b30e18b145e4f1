#include "folia/components.hpp"

#include <numeric>

#include "folia/error.hpp"
#include "folia/linalg.hpp"

namespace folia {

namespace {

DiffForm differential(const MultiPoly& f) { return exteriorDerivative(DiffForm::function(f)); }

int requireForm(const MultiPoly& f, const char* what) {
    if (f.isZero() || f.isConstant()) throw PreconditionError(std::string(what) + " must be nonconstant");
    if (!f.isHomogeneous()) throw PreconditionError(std::string(what) + " must be homogeneous");
    return f.totalDegree();
}

void certify(const DiffForm& omega, const char* family) {
    if (!descendsCheck(omega).ok) throw CertificationError(std::string(family) + " form does not descend");
    if (!integrabilityCheck(omega).ok) throw CertificationError(std::string(family) + " form is not integrable");
}

}  // namespace

DiffForm buildRational(const MultiPoly& f1, const MultiPoly& f2) {
    if (f1.arity() != f2.arity()) throw ArityMismatch("factors live in different rings");
    if (f1.domain() != f2.domain()) throw DomainMismatch("factors over different fields");
    const int d1 = requireForm(f1, "F1");
    const int d2 = requireForm(f2, "F2");
    const int g = std::gcd(d1, d2);
    const Scalar p1 = Scalar::integer(d2 / g, f1.domain());
    const Scalar p2 = Scalar::integer(d1 / g, f1.domain());
    DiffForm omega = p1 * (f2 * differential(f1)) - p2 * (f1 * differential(f2));
    certify(omega, "rational");
    return omega;
}

DiffForm buildLogarithmic(std::span<const MultiPoly> factors, std::span<const Scalar> weights) {
    if (factors.size() != weights.size()) throw PreconditionError("one weight per factor");
    if (factors.size() < 3) throw PreconditionError("logarithmic forms need three or more factors; use buildRational for two");
    const std::size_t arity = factors.front().arity();
    const ScalarDomain d = factors.front().domain();
    Scalar residual = Scalar::integer(0, d);
    bool anyWeight = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].arity() != arity) throw ArityMismatch("factors live in different rings");
        const int deg = requireForm(factors[i], "factor");
        residual += Scalar::integer(deg, d) * weights[i].reduceTo(d);
        anyWeight = anyWeight || !weights[i].isZero();
    }
    if (!anyWeight) throw PreconditionError("weights are all zero");
    if (!residual.isZero()) throw PreconditionError("weight condition violated: sum d_i lambda_i = " + residual.str());

    DiffForm omega(arity, 1, d);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        MultiPoly others = MultiPoly::constant(arity, Scalar::integer(1, d));
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j != i) others *= factors[j];
        }
        omega += weights[i].reduceTo(d) * (others * differential(factors[i]));
    }
    certify(omega, "logarithmic");
    return omega;
}

DiffForm buildLinearPullback(const ScalarMatrix& pi, const DiffForm& eta) {
    if (pi.rows() != 3) throw PreconditionError("pullback map needs three rows");
    if (eta.arity() != 3 || eta.degree() != 1) throw PreconditionError("eta must be a 1-form on three variables");
    if (rank(pi) != 3) throw PreconditionError("pullback map must have rank 3");
    certify(eta, "eta");
    DiffForm omega = pullback(eta, pi);
    certify(omega, "pullback");
    return omega;
}

DiffForm build(const ComponentRecipe& recipe) {
    switch (recipe.kind) {
        case ComponentRecipe::Kind::Rational:
            if (recipe.factors.size() != 2) throw PreconditionError("rational recipe needs two factors");
            return buildRational(recipe.factors[0], recipe.factors[1]);
        case ComponentRecipe::Kind::Logarithmic:
            return buildLogarithmic(recipe.factors, recipe.weights);
        case ComponentRecipe::Kind::Pullback:
            return buildLinearPullback(recipe.pi, DiffForm::oneForm(recipe.eta));
    }
    throw PreconditionError("unknown recipe kind");
}

}  // namespace folia

namespace folia {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(std::mt19937_64& rng, long bound) {
    const long v = pick(rng, 1, bound);
    return pick(rng, 0, 1) ? v : -v;
}

bool passes(const DiffForm& omega) { return descendsCheck(omega).ok && integrabilityCheck(omega).ok; }

}  // namespace

MultiPoly randomHomogeneous(std::mt19937_64& rng, std::size_t arity, unsigned degree, std::size_t maxTerms, long bound) {
    const auto mons = homogeneousMonomials(arity, degree);
    MultiPoly f(arity);
    const auto terms = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(maxTerms)));
    while (f.size() < terms) {
        const auto& m = mons[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(mons.size()) - 1))];
        if (f.coefficient(m).isZero()) f.addTerm(m, Scalar(nonzero(rng, bound)));
        if (f.size() == mons.size()) break;
    }
    return f;
}

ComponentRecipe randomRationalRecipe(std::mt19937_64& rng) {
    const std::size_t arity = static_cast<std::size_t>(pick(rng, 4, 5));
    const auto d1 = static_cast<unsigned>(pick(rng, 1, 3));
    const auto d2 = static_cast<unsigned>(pick(rng, 1, 5 - d1));
    ComponentRecipe r{ComponentRecipe::Kind::Rational, {}, {}, {}, {}};
    r.factors = {randomHomogeneous(rng, arity, d1), randomHomogeneous(rng, arity, d2)};
    return r;
}

ComponentRecipe randomLogarithmicRecipe(std::mt19937_64& rng) {
    const std::size_t arity = static_cast<std::size_t>(pick(rng, 4, 5));
    std::vector<unsigned> degrees{1, 1, 1};
    for (int extra = static_cast<int>(pick(rng, 0, 2)); extra > 0; --extra) ++degrees[static_cast<std::size_t>(pick(rng, 0, 2))];
    ComponentRecipe r{ComponentRecipe::Kind::Logarithmic, {}, {}, {}, {}};
    for (auto d : degrees) r.factors.push_back(randomHomogeneous(rng, arity, d, 3));
    const long l1 = nonzero(rng, 5);
    const long l2 = pick(rng, -5, 5);
    // lambda_3 from sum d_i lambda_i = 0
    const Scalar l3 = Scalar(-(static_cast<long>(degrees[0]) * l1 + static_cast<long>(degrees[1]) * l2)) /
                      Scalar(static_cast<long>(degrees[2]));
    r.weights = {Scalar(l1), Scalar(l2), l3};
    return r;
}

ComponentRecipe randomPullbackRecipe(std::mt19937_64& rng) {
    const std::size_t arity = static_cast<std::size_t>(pick(rng, 4, 5));
    ComponentRecipe r{ComponentRecipe::Kind::Pullback, {}, {}, ScalarMatrix(3, arity), {}};
    do {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < arity; ++j) r.pi(i, j) = Scalar(pick(rng, -3, 3));
        }
    } while (rank(r.pi) != 3);
    const auto d1 = static_cast<unsigned>(pick(rng, 1, 3));
    const auto d2 = static_cast<unsigned>(pick(rng, 1, 5 - d1));
    r.eta = buildRational(randomHomogeneous(rng, 3, d1), randomHomogeneous(rng, 3, d2)).oneFormCoefficients();
    return r;
}

PropertyTally constructorPropertySuite(std::uint64_t seed, std::size_t instances) {
    std::mt19937_64 rng(seed);
    PropertyTally t;
    t.instances = instances;
    auto attempt = [](const ComponentRecipe& recipe) {
        try {
            return passes(build(recipe));
        } catch (const CertificationError&) {
            return false;
        }
    };
    for (std::size_t i = 0; i < instances; ++i) {
        t.rational += attempt(randomRationalRecipe(rng));
        t.logarithmic += attempt(randomLogarithmicRecipe(rng));
        t.pullback += attempt(randomPullbackRecipe(rng));
    }
    return t;
}

}  // namespace folia
