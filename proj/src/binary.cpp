#include "folia/binary.hpp"

#include <algorithm>

#include "folia/error.hpp"
#include "folia/linalg.hpp"

namespace folia {

namespace {

MultiPoly linearForm(const BinaryPoint& p) {
    MultiPoly l(2, p.x0.domain());
    l.addTerm(Monomial::variable(2, 0), p.x0);
    l.addTerm(Monomial::variable(2, 1), p.x1);
    return l;
}

void requirePoint(const BinaryPoint& p) {
    if (p.x0.domain() != p.x1.domain()) throw DomainMismatch("point coordinates in different fields");
    if (p.x0.isZero() && p.x1.isZero()) throw PreconditionError("[0:0] is not a point of P^1");
}

// Plain coefficient vector of a homogeneous binary polynomial of degree r.
std::vector<Scalar> plainCoefficients(const MultiPoly& f, unsigned r) {
    std::vector<Scalar> c(r + 1, Scalar::integer(0, f.domain()));
    for (const auto& [m, v] : f.terms()) {
        if (m.totalDegree() != r) throw PreconditionError("binary form is not homogeneous of degree " + std::to_string(r));
        c[m[1]] = v;
    }
    return c;
}

// f(x) = F(x, 1) as a polynomial of arity 1.
MultiPoly dehomogenize(const BinaryForm& f) {
    MultiPoly out(1, f.domain());
    const unsigned r = f.degree();
    for (unsigned i = 0; i <= r; ++i) out.addTerm(Monomial::variable(1, 0, r - i), f.coefficients()[i]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("binary form needs at least one coefficient");
    const ScalarDomain d = coeffs_.front().domain();
    bool nonzero = false;
    for (const auto& c : coeffs_) {
        if (c.domain() != d) throw DomainMismatch("binary form coefficients in different fields");
        nonzero = nonzero || !c.isZero();
    }
    if (!nonzero) throw PreconditionError("the zero binary form is not a projective point");
}

BinaryForm BinaryForm::fromPoly(const MultiPoly& f) {
    if (f.arity() != 2) throw ArityMismatch("binary forms live in two variables");
    if (f.isZero()) throw PreconditionError("the zero binary form is not a projective point");
    if (!f.isHomogeneous()) throw PreconditionError("binary form must be homogeneous");
    return BinaryForm(plainCoefficients(f, static_cast<unsigned>(f.totalDegree())));
}

BinaryForm BinaryForm::fromApolar(std::span<const Scalar> alpha) {
    if (alpha.empty()) throw PreconditionError("empty coordinate vector");
    const auto r = static_cast<unsigned>(alpha.size() - 1);
    std::vector<Scalar> c;
    for (unsigned i = 0; i <= r; ++i) c.push_back(alpha[i] * binomial(r, i, alpha[i].domain()));
    return BinaryForm(std::move(c));
}

MultiPoly BinaryForm::toPoly() const {
    MultiPoly f(2, domain());
    const unsigned r = degree();
    for (unsigned i = 0; i <= r; ++i) f.addTerm(Monomial({r - i, i}), coeffs_[i]);
    return f;
}

std::vector<Scalar> BinaryForm::apolarCoordinates() const {
    std::vector<Scalar> alpha;
    const unsigned r = degree();
    for (unsigned i = 0; i <= r; ++i) alpha.push_back(coeffs_[i] / binomial(r, i, domain()));
    return alpha;
}

BinaryForm BinaryForm::substituted(const ScalarMatrix& m) const {
    if (m.rows() != 2 || m.cols() != 2) throw PreconditionError("GL(2) action needs a 2x2 matrix");
    return BinaryForm(plainCoefficients(linearSubstitute(toPoly(), m), degree()));
}

Scalar binomial(unsigned n, unsigned k, ScalarDomain d) {
    if (k > n) return Scalar::integer(0, d);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(b).reduceTo(d);
}

BinaryForm veronese(unsigned r, const BinaryPoint& p) {
    requirePoint(p);
    return BinaryForm(plainCoefficients(linearForm(p).pow(static_cast<int>(r)), r));
}

MultiPoly rootLinearForm(const BinaryPoint& p) {
    requirePoint(p);
    return linearForm({p.x1, -p.x0});
}

BinaryForm formFromDivisor(std::span<const DivisorPoint> divisor, std::optional<unsigned> expectedDegree) {
    if (divisor.empty()) throw PreconditionError("empty divisor");
    unsigned total = 0;
    MultiPoly f = MultiPoly::constant(2, Scalar::integer(1, divisor.front().point.x0.domain()));
    for (const auto& [point, mult] : divisor) {
        if (mult == 0) throw PreconditionError("divisor multiplicities must be positive");
        f *= rootLinearForm(point).pow(static_cast<int>(mult));
        total += mult;
    }
    if (expectedDegree && total != *expectedDegree) {
        throw PreconditionError("divisor has degree " + std::to_string(total) + ", expected " +
                                std::to_string(*expectedDegree));
    }
    return BinaryForm(plainCoefficients(f, total));
}

// ---------------------------------------------------------------------------
// Root patterns

std::string to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::Veronese: return "X4";
        case OrbitClass::Tangent: return "T";
        case OrbitClass::BitangentNode: return "N";
        case OrbitClass::OneDouble: return "Delta";
        case OrbitClass::Simple: return "U";
    }
    return "?";
}

std::string to_string(const RootPattern& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.multiplicities[i]);
    }
    return out + "]";
}

RootPattern rootPattern(const BinaryForm& f) {
    const unsigned r = f.degree();
    if (!f.domain().isRational() && f.domain().modulus <= r) {
        throw PreconditionError("root multiplicities need characteristic above the degree");
    }
    std::vector<unsigned> mult;
    unsigned atInfinity = 0;
    while (f.coefficients()[atInfinity].isZero()) ++atInfinity;
    if (atInfinity) mult.push_back(atInfinity);

    // deg g_k = sum_roots max(m - k, 0); successive differences count roots
    // of multiplicity >= k.
    std::vector<int> degrees;
    MultiPoly g = dehomogenize(f);
    degrees.push_back(g.totalDegree());
    while (g.totalDegree() > 0) {
        g = polyGcd(g, partialDerivative(g, 0));
        degrees.push_back(g.totalDegree());
    }
    std::vector<int> atLeast;  // atLeast[k-1] = #roots with multiplicity >= k
    for (std::size_t k = 1; k < degrees.size(); ++k) atLeast.push_back(degrees[k - 1] - degrees[k]);
    atLeast.push_back(0);
    for (std::size_t k = 0; k + 1 < atLeast.size(); ++k) {
        const int exactly = atLeast[k] - atLeast[k + 1];
        for (int i = 0; i < exactly; ++i) mult.push_back(static_cast<unsigned>(k + 1));
    }
    std::sort(mult.rbegin(), mult.rend());

    RootPattern out{mult, std::nullopt};
    if (r == 4) {
        if (mult == std::vector<unsigned>{4}) {
            out.orbitClass = OrbitClass::Veronese;
        } else if (mult == std::vector<unsigned>{3, 1}) {
            out.orbitClass = OrbitClass::Tangent;
        } else if (mult == std::vector<unsigned>{2, 2}) {
            out.orbitClass = OrbitClass::BitangentNode;
        } else if (mult == std::vector<unsigned>{2, 1, 1}) {
            out.orbitClass = OrbitClass::OneDouble;
        } else {
            out.orbitClass = OrbitClass::Simple;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariants

QuarticInvariants quarticInvariants(ScalarDomain domain) {
    auto a = [domain](std::size_t i) { return MultiPoly::variable(5, i, domain); };
    auto k = [domain](long v) { return Scalar::integer(v, domain); };
    MultiPoly q = a(0) * a(4) - k(4) * a(1) * a(3) + k(3) * a(2) * a(2);
    MultiPoly c = a(0) * a(2) * a(4) - a(0) * a(3) * a(3) + k(2) * a(1) * a(2) * a(3) - a(1) * a(1) * a(4) -
                  a(2) * a(2) * a(2);
    MultiPoly d = q.pow(3) - k(27) * c * c;
    return {std::move(q), std::move(c), std::move(d)};
}

Scalar InvariantTriple::discriminant() const { return q.pow(3) - Scalar::integer(27, q.domain()) * c * c; }

InvariantTriple invariantsQCD(const BinaryForm& f) {
    if (f.degree() != 4) throw PreconditionError("Q, C, D are defined for quartics");
    const auto inv = quarticInvariants(f.domain());
    const auto alpha = f.apolarCoordinates();
    return {evaluate(inv.q, alpha), evaluate(inv.c, alpha)};
}

const Scalar& JValue::value() const {
    if (kind_ != Kind::Finite) throw PreconditionError("j has no finite value here");
    return value_;
}

std::string JValue::str() const {
    switch (kind_) {
        case Kind::Finite: return value_.str();
        case Kind::Infinity: return "infinity";
        case Kind::Indeterminate: return "indeterminate";
    }
    return "?";
}

JValue jInvariant(const BinaryForm& f, JNormalization n) {
    const InvariantTriple t = invariantsQCD(f);
    if (t.q.isZero() && t.c.isZero()) return JValue::indeterminate(n);
    const Scalar d = t.discriminant();
    if (d.isZero()) return JValue::infinity(n);
    Scalar j = t.q.pow(3) / d;
    if (n == JNormalization::Classical) j *= Scalar::integer(1728, f.domain());
    return JValue::finite(std::move(j), n);
}

// ---------------------------------------------------------------------------
// Resultant oracle

Matrix<MultiPoly> sylvesterMatrix(std::span<const MultiPoly> f, std::span<const MultiPoly> g) {
    if (f.size() < 2 || g.size() < 2) throw PreconditionError("Sylvester matrix needs forms of positive degree");
    const std::size_t m = f.size() - 1;
    const std::size_t n = g.size() - 1;
    const MultiPoly zero(f.front().arity(), f.front().domain());
    Matrix<MultiPoly> s(m + n, m + n, zero);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f[i];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g[i];
    }
    return s;
}

namespace {

// Coefficients of dF/dt0 and dF/dt1 as (r-1)-forms, from plain a_i.
std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> partialCoefficients(std::span<const MultiPoly> a) {
    const std::size_t r = a.size() - 1;
    std::vector<MultiPoly> d0;
    std::vector<MultiPoly> d1;
    for (std::size_t i = 0; i < r; ++i) {
        // t0^(r-i) t1^i -> (r-i) t0^(r-1-i) t1^i
        d0.push_back(Scalar::integer(static_cast<long>(r - i), a[i].domain()) * a[i]);
        // t0^(r-1-i) t1^(i+1) -> (i+1) t0^(r-1-i) t1^i
        d1.push_back(Scalar::integer(static_cast<long>(i + 1), a[i].domain()) * a[i + 1]);
    }
    return {d0, d1};
}

}  // namespace

Scalar discriminantOracle(const BinaryForm& f) {
    if (f.degree() < 2) throw PreconditionError("discriminant oracle needs degree >= 2");
    std::vector<MultiPoly> a;
    for (const auto& c : f.coefficients()) a.push_back(MultiPoly::constant(0, c));
    const auto [d0, d1] = partialCoefficients(a);
    return determinant(sylvesterMatrix(d0, d1)).constantValue();
}

MultiPoly symbolicDiscriminantOracle(unsigned r) {
    if (r < 2) throw PreconditionError("discriminant oracle needs degree >= 2");
    std::vector<MultiPoly> a;
    for (unsigned i = 0; i <= r; ++i) a.push_back(MultiPoly::variable(r + 1, i));
    const auto [d0, d1] = partialCoefficients(a);
    return determinant(sylvesterMatrix(d0, d1));
}

Scalar discriminantOracleConstant() {
    const BinaryForm harmonic({0, 1, 0, -1, 0});
    return discriminantOracle(harmonic) / invariantsQCD(harmonic).discriminant();
}

MultiPoly cubicDiscriminant(std::span<const MultiPoly> g) {
    if (g.size() != 4) throw PreconditionError("cubic discriminant needs four coefficients");
    const auto& [a, b, c, d] = std::tie(g[0], g[1], g[2], g[3]);
    const ScalarDomain dom = a.domain();
    auto k = [dom](long v) { return Scalar::integer(v, dom); };
    return b * b * c * c - k(4) * a * c * c * c - k(4) * b * b * b * d - k(27) * a * a * d * d + k(18) * a * b * c * d;
}

// ---------------------------------------------------------------------------
// Osculating flag

namespace {

std::vector<Scalar> cofactorOf(const MultiPoly& g) { return plainCoefficients(g, 3); }

}  // namespace

std::vector<Scalar> OsculatingFlag::lineCofactor(const BinaryPoint& q) const {
    requirePoint(q);
    return cofactorOf(linearForm(point).pow(2) * linearForm(q));
}

std::vector<Scalar> OsculatingFlag::conicCofactor(const BinaryPoint& q) const {
    requirePoint(q);
    return cofactorOf(linearForm(point) * linearForm(q).pow(2));
}

std::vector<Scalar> OsculatingFlag::cubicCofactor(const BinaryPoint& q) const {
    requirePoint(q);
    return cofactorOf(linearForm(q).pow(3));
}

OsculatingFlag osculatingFlag(unsigned r, const BinaryPoint& p) {
    if (r != 4) throw PreconditionError("osculating flags are implemented for quartics");
    requirePoint(p);
    const ScalarDomain d = p.x0.domain();
    const Scalar zero = Scalar::integer(0, d);
    const Scalar one = Scalar::integer(1, d);

    // New coordinates s = N t with s0 = l_p; t = N^{-1} s.
    ScalarMatrix n = p.x0.isZero() ? ScalarMatrix{{p.x0, p.x1}, {one, zero}} : ScalarMatrix{{p.x0, p.x1}, {zero, one}};
    const Scalar det = n(0, 0) * n(1, 1) - n(0, 1) * n(1, 0);
    const ScalarMatrix inv{{n(1, 1) / det, -n(0, 1) / det}, {-n(1, 0) / det, n(0, 0) / det}};

    // h_j(alpha): coefficient of s0^(4-j) s1^j in F(N^{-1} s); l_p^k | F iff
    // h_j = 0 for j > 4 - k.
    ScalarMatrix h(5, 5, zero);
    for (unsigned i = 0; i <= 4; ++i) {
        const MultiPoly basis = MultiPoly::term(Monomial({4 - i, i}), binomial(4, i, d));
        const auto image = plainCoefficients(linearSubstitute(basis, inv), 4);
        for (unsigned j = 0; j <= 4; ++j) h(j, i) = image[j];
    }
    auto functional = [&](unsigned j) {
        MultiPoly f(5, d);
        for (unsigned i = 0; i <= 4; ++i) f.addTerm(Monomial::variable(5, i), h(j, i));
        const MultiPoly nf = normalize(f);
        std::vector<Scalar> out;
        for (unsigned i = 0; i <= 4; ++i) out.push_back(nf.coefficient(Monomial::variable(5, i)));
        return out;
    };

    OsculatingFlag flag{p, functional(4), {functional(3), functional(4)}, {functional(2), functional(3), functional(4)},
                        ScalarMatrix(5, 4, zero)};
    for (unsigned j = 0; j < 4; ++j) {
        const MultiPoly g = MultiPoly::term(Monomial({3 - j, j}), one);
        const auto alpha = BinaryForm(plainCoefficients(linearForm(p) * g, 4)).apolarCoordinates();
        for (unsigned i = 0; i <= 4; ++i) flag.inclusion(i, j) = alpha[i];
    }
    return flag;
}

}  // namespace folia
