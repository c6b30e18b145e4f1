#include "folia/exceptional.hpp"

#include <map>

#include "folia/binary.hpp"
#include "folia/components.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"
#include "folia/poly_text.hpp"

namespace folia {

namespace {

constexpr std::size_t kTangentArity = 4;
constexpr std::uint32_t kTangentDegree = 3;

void stage(bool ok, const std::string& what) {
    if (!ok) throw CertificationError("exceptional pipeline failed at stage: " + what);
}

using MonomialIndex = std::map<Monomial, std::size_t, GrlexDescending>;

MonomialIndex indexOf(const std::vector<Monomial>& mons) {
    MonomialIndex idx;
    for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);
    return idx;
}

}  // namespace

DiffForm buildOmega4() {
    const auto inv = quarticInvariants();
    // Rational pencil with (F1, F2) = (C, Q): weights (2, 3), since 2*3 = 3*2.
    return buildRational(inv.c, inv.q);
}

DiffForm restrictToHyperplane(const DiffForm& omega, const ScalarMatrix& inclusion) {
    if (inclusion.rows() != omega.arity()) throw ArityMismatch("inclusion codomain must be the form's space");
    if (rank(inclusion) != inclusion.cols()) throw PreconditionError("inclusion is not injective");
    return pullback(omega, inclusion);
}

ExceptionalReport deriveOmegaBar() {
    ExceptionalReport rep;
    rep.omega4 = buildOmega4();
    rep.omega4Descends = descendsCheck(rep.omega4).ok;
    rep.omega4Integrable = integrabilityCheck(rep.omega4).ok;
    stage(rep.omega4Descends && rep.omega4Integrable, "omega4 residues");

    const OsculatingFlag flag = osculatingFlag(4, {Scalar(1), Scalar(0)});
    ScalarMatrix h(1, 5);
    for (std::size_t i = 0; i < 5; ++i) h(0, i) = flag.hyperplane[i];
    const auto basis = nullspaceBasis(h);
    stage(basis.size() == 4, "hyperplane chart");
    rep.inclusion = ScalarMatrix(5, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 5; ++i) rep.inclusion(i, j) = basis[j][i];
    }

    rep.omegaH = restrictToHyperplane(rep.omega4, rep.inclusion);
    stage(!rep.omegaH.isZero(), "restriction");

    Saturation sat = saturate(rep.omegaH);
    rep.factor = sat.factor;
    rep.omegaBar = std::move(sat.form);
    stage(rep.factor.totalDegree() == 1, "saturation factor degree");

    // The plane P2_p inside H, as a linear form on H's coordinates.
    MultiPoly plane(4);
    for (const auto& functional : flag.plane) {
        MultiPoly restricted(4);
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar v = 0;
            for (std::size_t i = 0; i < 5; ++i) v += functional[i] * rep.inclusion(i, j);
            restricted.addTerm(Monomial::variable(4, j), v);
        }
        if (!restricted.isZero()) plane = normalize(restricted);
    }
    rep.factorIsFlagPlane = rep.factor == plane;
    stage(rep.factorIsFlagPlane, "saturation factor is the osculating plane");

    rep.omegaBarDegree = rep.omegaBar.coefficientDegree().value_or(-1);
    stage(rep.omegaBarDegree == 3, "omegaBar coefficient degree");
    rep.omegaBarDescends = descendsCheck(rep.omegaBar).ok;
    rep.omegaBarIntegrable = integrabilityCheck(rep.omegaBar).ok;
    stage(rep.omegaBarDescends && rep.omegaBarIntegrable, "omegaBar residues");
    return rep;
}

DiffForm paperOmegaBar() {
    const auto x = VariableNames::indexed("x", 4);
    const std::vector<MultiPoly> coeffs{
        parsePoly("x3*(2*x1^2 - 3*x0*x2)", x),
        parsePoly("x3*(3*x2*x3 - x0*x1)", x),
        parsePoly("x3*(x0^2 - 2*x1*x3)", x),
        parsePoly("-(x0*x1^2 - 2*x0^2*x2 + x1*x2*x3)", x),
    };
    return DiffForm::oneForm(coeffs);
}

AffineFields affineFields(std::size_t n) {
    if (n < 2) throw PreconditionError("affine fields need at least two coordinates");
    std::vector<MultiPoly> xs;
    std::vector<MultiPoly> ys;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(Scalar(static_cast<long>(i)) * MultiPoly::variable(n, i));
        ys.push_back(i == 0 ? MultiPoly(n) : MultiPoly::variable(n, i - 1));
    }
    AffineFields f{PolyVectorField(std::move(xs)), PolyVectorField(std::move(ys)), eulerField(n), volumeForm(n)};
    if (!(lieBracket(f.x, f.y) == -f.y)) throw CertificationError("[X, Y] != -Y");
    return f;
}

DiffForm contractVolume(const PolyVectorField& x, const PolyVectorField& y) {
    if (x.arity() != y.arity()) throw ArityMismatch("fields on different spaces");
    const std::size_t n = x.arity();
    return interiorProduct(x, interiorProduct(y, interiorProduct(eulerField(n), volumeForm(n))));
}

std::vector<Scalar> tangentCoordinates(const DiffForm& eta) {
    if (eta.arity() != kTangentArity || eta.degree() != 1) throw PreconditionError("expected a 1-form on four variables");
    const auto mons = homogeneousMonomials(kTangentArity, kTangentDegree);
    const auto idx = indexOf(mons);
    std::vector<Scalar> v(kTangentArity * mons.size(), Scalar::integer(0, eta.domain()));
    for (const auto& [I, f] : eta.terms()) {
        for (const auto& [m, c] : f.terms()) {
            auto it = idx.find(m);
            if (it == idx.end()) throw PreconditionError("coefficient is not homogeneous of degree 3");
            v[I[0] * mons.size() + it->second] = c;
        }
    }
    return v;
}

TangentReport tangentSystemDim(const DiffForm& omegaBar) {
    if (omegaBar.arity() != kTangentArity || omegaBar.degree() != 1) {
        throw PreconditionError("tangent system needs a 1-form on four variables");
    }
    if (omegaBar.coefficientDegree() != std::optional<int>(kTangentDegree)) {
        throw PreconditionError("tangent system needs degree-3 coefficients");
    }
    if (!omegaBar.domain().isRational()) throw PreconditionError("tangent system is solved over the rationals");
    if (!descendsCheck(omegaBar).ok) throw PreconditionError("form does not descend");
    if (!integrabilityCheck(omegaBar).ok) throw PreconditionError("form is not integrable");

    const auto mons = homogeneousMonomials(kTangentArity, kTangentDegree);
    const auto eulerIdx = indexOf(homogeneousMonomials(kTangentArity, kTangentDegree + 1));
    const auto frobIdx = indexOf(homogeneousMonomials(kTangentArity, 2 * kTangentDegree - 1));
    const std::size_t unknowns = kTangentArity * mons.size();
    const std::size_t eulerRows = eulerIdx.size();
    // Basis 3-forms dz_I, |I| = 3, in lexicographic order: four of them.
    std::map<IndexTuple, std::size_t> triples;
    for (std::size_t skip = kTangentArity; skip-- > 0;) {
        IndexTuple t;
        for (std::size_t i = 0; i < kTangentArity; ++i) {
            if (i != skip) t.push_back(i);
        }
        triples.emplace(t, triples.size());
    }
    const std::size_t rows = eulerRows + triples.size() * frobIdx.size();

    const DiffForm dOmega = exteriorDerivative(omegaBar);
    ScalarMatrix system(rows, unknowns);
    for (std::size_t i = 0; i < kTangentArity; ++i) {
        for (std::size_t k = 0; k < mons.size(); ++k) {
            const std::size_t col = i * mons.size() + k;
            const DiffForm e = DiffForm::monomial(MultiPoly::term(mons[k], Scalar(1)), {i});
            system(eulerIdx.at(mons[k] * Monomial::variable(kTangentArity, i)), col) = Scalar(1);
            const DiffForm image = wedge(omegaBar, exteriorDerivative(e)) + wedge(e, dOmega);
            for (const auto& [I, f] : image.terms()) {
                const std::size_t base = eulerRows + triples.at(I) * frobIdx.size();
                for (const auto& [m, c] : f.terms()) system(base + frobIdx.at(m), col) = c;
            }
        }
    }

    TangentReport rep;
    rep.kernel = nullspaceBasis(system);
    rep.rawKernelDim = rep.kernel.size();
    rep.projectiveDim = rep.rawKernelDim - 1;

    // Second route: parametrize {i_R eta = 0} first, then impose the rest.
    ScalarMatrix euler(eulerRows, unknowns);
    for (std::size_t r = 0; r < eulerRows; ++r) {
        for (std::size_t c = 0; c < unknowns; ++c) euler(r, c) = system(r, c);
    }
    const auto eulerKernel = nullspaceBasis(euler);
    rep.ambientDim = eulerKernel.size();
    ScalarMatrix reduced(rows - eulerRows, eulerKernel.size());
    for (std::size_t j = 0; j < eulerKernel.size(); ++j) {
        for (std::size_t r = eulerRows; r < rows; ++r) {
            Scalar v = 0;
            for (std::size_t c = 0; c < unknowns; ++c) {
                if (!system(r, c).isZero() && !eulerKernel[j][c].isZero()) v += system(r, c) * eulerKernel[j][c];
            }
            reduced(r - eulerRows, j) = v;
        }
    }
    const std::size_t routeTwo = eulerKernel.size() - rank(reduced);
    if (routeTwo != rep.rawKernelDim) {
        throw CertificationError("tangent kernel routes disagree: " + std::to_string(rep.rawKernelDim) + " vs " +
                                 std::to_string(routeTwo));
    }

    const auto self = multiply(system, tangentCoordinates(omegaBar));
    rep.containsOmegaBar = std::all_of(self.begin(), self.end(), [](const Scalar& s) { return s.isZero(); });
    return rep;
}

bool kernelContains(const TangentReport& report, const DiffForm& eta) {
    const auto v = tangentCoordinates(eta);
    ScalarMatrix m(report.kernel.size() + 1, v.size());
    for (std::size_t r = 0; r < report.kernel.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = report.kernel[r][c];
    }
    for (std::size_t c = 0; c < v.size(); ++c) m(report.kernel.size(), c) = v[c];
    return rank(m) == report.kernel.size();
}

DoubleTangency checkDoubleTangency() {
    const auto inv = quarticInvariants();
    std::vector<MultiPoly> chart;
    for (std::size_t i = 0; i < 4; ++i) chart.push_back(MultiPoly::variable(4, i));
    chart.push_back(MultiPoly(4));
    const MultiPoly restricted = substitute(inv.d, chart);

    // F = t0 * G with G = a0 t0^3 + 4a1 t0^2 t1 + 6a2 t0 t1^2 + 4a3 t1^3.
    std::vector<MultiPoly> g;
    for (unsigned i = 0; i < 4; ++i) g.push_back(binomial(4, i) * chart[i]);
    const MultiPoly a3 = chart[3];
    const MultiPoly rhs = a3 * a3 * cubicDiscriminant(g);

    DoubleTangency out;
    auto q = exactDivide(restricted, rhs);
    out.identityHolds = q && q->isConstant() && !q->isZero();
    out.constant = out.identityHolds ? q->constantValue() : Scalar(0);
    out.cubeDivides = exactDivide(restricted, a3.pow(3)).has_value();
    return out;
}

}  // namespace folia
