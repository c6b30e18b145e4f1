#include "folia/exterior.hpp"

#include <algorithm>

#include "folia/error.hpp"

namespace folia {

namespace {

// Sorts indices in place; returns the permutation sign, or 0 on a repeat.
int sortWithSign(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

}  // namespace

// ---------------------------------------------------------------------------
// DiffForm

DiffForm::DiffForm(std::size_t arity, std::size_t degree, ScalarDomain domain)
    : arity_(arity), degree_(degree), domain_(domain) {}

DiffForm DiffForm::function(const MultiPoly& f) {
    DiffForm a(f.arity(), 0, f.domain());
    a.addTerm({}, f);
    return a;
}

DiffForm DiffForm::oneForm(std::span<const MultiPoly> coeffs) {
    if (coeffs.empty()) throw PreconditionError("a 1-form needs at least one coefficient");
    DiffForm a(coeffs.size(), 1, coeffs.front().domain());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].arity() != coeffs.size()) {
            throw ArityMismatch("1-form coefficient " + std::to_string(i) + " has arity " +
                                std::to_string(coeffs[i].arity()) + ", expected " + std::to_string(coeffs.size()));
        }
        a.addTerm({i}, coeffs[i]);
    }
    return a;
}

DiffForm DiffForm::monomial(const MultiPoly& f, IndexTuple indices) {
    DiffForm a(f.arity(), indices.size(), f.domain());
    for (auto i : indices) {
        if (i >= f.arity()) throw ArityMismatch("form index out of range");
    }
    const int sign = sortWithSign(indices);
    if (sign == 0) return a;
    a.addTerm(indices, sign > 0 ? f : -f);
    return a;
}

MultiPoly DiffForm::coefficient(const IndexTuple& indices) const {
    auto it = terms_.find(indices);
    return it == terms_.end() ? MultiPoly(arity_, domain_) : it->second;
}

std::vector<MultiPoly> DiffForm::oneFormCoefficients() const {
    if (degree_ != 1) throw PreconditionError("not a 1-form");
    std::vector<MultiPoly> out(arity_, MultiPoly(arity_, domain_));
    for (const auto& [idx, f] : terms_) out[idx[0]] = f;
    return out;
}

std::vector<MultiPoly> DiffForm::coefficients() const {
    std::vector<MultiPoly> out;
    out.reserve(terms_.size());
    for (const auto& [idx, f] : terms_) out.push_back(f);
    return out;
}

std::optional<int> DiffForm::coefficientDegree() const {
    std::optional<int> deg;
    for (const auto& [idx, f] : terms_) {
        if (!f.isHomogeneous()) return std::nullopt;
        if (deg && *deg != f.totalDegree()) return std::nullopt;
        deg = f.totalDegree();
    }
    return deg;
}

void DiffForm::addTerm(const IndexTuple& sortedIndices, const MultiPoly& f) {
    if (sortedIndices.size() != degree_) throw PreconditionError("index tuple length does not match form degree");
    if (f.arity() != arity_) throw ArityMismatch("coefficient arity does not match form arity");
    if (f.domain() != domain_) throw DomainMismatch("coefficient field does not match form");
    if (f.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(sortedIndices, f);
    if (!inserted) {
        it->second += f;
        if (it->second.isZero()) terms_.erase(it);
    }
}

void DiffForm::requireCompatible(const DiffForm& rhs) const {
    if (arity_ != rhs.arity_) throw ArityMismatch("forms on different ambient spaces");
    if (degree_ != rhs.degree_) throw PreconditionError("adding forms of different degree");
    if (domain_ != rhs.domain_) throw DomainMismatch("forms over different coefficient fields");
}

DiffForm& DiffForm::operator+=(const DiffForm& rhs) {
    requireCompatible(rhs);
    for (const auto& [idx, f] : rhs.terms_) addTerm(idx, f);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& rhs) {
    requireCompatible(rhs);
    for (const auto& [idx, f] : rhs.terms_) addTerm(idx, -f);
    return *this;
}

DiffForm& DiffForm::operator*=(const MultiPoly& f) {
    TermMap next;
    for (auto& [idx, g] : terms_) {
        MultiPoly h = g * f;
        if (!h.isZero()) next.emplace(idx, std::move(h));
    }
    terms_ = std::move(next);
    return *this;
}

DiffForm& DiffForm::operator*=(const Scalar& s) {
    if (s.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, g] : terms_) g *= s;
    return *this;
}

DiffForm DiffForm::operator-() const {
    DiffForm a = *this;
    for (auto& [idx, g] : a.terms_) g = -g;
    return a;
}

// ---------------------------------------------------------------------------
// PolyVectorField

PolyVectorField::PolyVectorField(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.arity() != coeffs_.size()) throw ArityMismatch("vector field coefficient arity mismatch");
        if (c.domain() != coeffs_.front().domain()) throw DomainMismatch("vector field mixes coefficient fields");
    }
}

MultiPoly PolyVectorField::apply(const MultiPoly& f) const {
    if (f.arity() != arity()) throw ArityMismatch("vector field applied to a function on another space");
    MultiPoly out(arity(), f.domain());
    for (std::size_t i = 0; i < arity(); ++i) {
        if (!coeffs_[i].isZero()) out += coeffs_[i] * partialDerivative(f, i);
    }
    return out;
}

PolyVectorField PolyVectorField::operator-() const {
    std::vector<MultiPoly> c = coeffs_;
    for (auto& x : c) x = -x;
    return PolyVectorField(std::move(c));
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("vector fields on different spaces");
    std::vector<MultiPoly> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return PolyVectorField(std::move(c));
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) { return a + (-b); }

PolyVectorField eulerField(std::size_t arity, ScalarDomain domain) {
    std::vector<MultiPoly> c;
    for (std::size_t i = 0; i < arity; ++i) c.push_back(MultiPoly::variable(arity, i, domain));
    return PolyVectorField(std::move(c));
}

DiffForm volumeForm(std::size_t arity, ScalarDomain domain) {
    IndexTuple all(arity);
    for (std::size_t i = 0; i < arity; ++i) all[i] = i;
    return DiffForm::monomial(MultiPoly::constant(arity, Scalar::integer(1, domain)), all);
}

// ---------------------------------------------------------------------------
// Operations

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("wedge of forms on different spaces");
    if (a.domain() != b.domain()) throw DomainMismatch("wedge of forms over different fields");
    DiffForm out(a.arity(), a.degree() + b.degree(), a.domain());
    for (const auto& [i, f] : a.terms()) {
        for (const auto& [j, g] : b.terms()) {
            IndexTuple k = i;
            k.insert(k.end(), j.begin(), j.end());
            const int sign = sortWithSign(k);
            if (sign == 0) continue;
            MultiPoly h = f * g;
            out.addTerm(k, sign > 0 ? h : -h);
        }
    }
    return out;
}

DiffForm exteriorDerivative(const DiffForm& a) {
    DiffForm out(a.arity(), a.degree() + 1, a.domain());
    for (const auto& [idx, f] : a.terms()) {
        for (std::size_t j = 0; j < a.arity(); ++j) {
            if (std::find(idx.begin(), idx.end(), j) != idx.end() || !f.involves(j)) continue;
            IndexTuple k;
            k.reserve(idx.size() + 1);
            k.push_back(j);
            k.insert(k.end(), idx.begin(), idx.end());
            const int sign = sortWithSign(k);
            const MultiPoly df = partialDerivative(f, j);
            out.addTerm(k, sign > 0 ? df : -df);
        }
    }
    return out;
}

DiffForm interiorProduct(const PolyVectorField& v, const DiffForm& a) {
    if (a.degree() == 0) throw PreconditionError("interior product of a 0-form");
    if (v.arity() != a.arity()) throw ArityMismatch("contraction with a field on another space");
    DiffForm out(a.arity(), a.degree() - 1, a.domain());
    for (const auto& [idx, f] : a.terms()) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const MultiPoly& vs = v[idx[s]];
            if (vs.isZero()) continue;
            IndexTuple rest = idx;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
            MultiPoly h = vs * f;
            out.addTerm(rest, s % 2 == 0 ? h : -h);
        }
    }
    return out;
}

PolyVectorField lieBracket(const PolyVectorField& v, const PolyVectorField& w) {
    if (v.arity() != w.arity()) throw ArityMismatch("bracket of fields on different spaces");
    std::vector<MultiPoly> c;
    c.reserve(v.arity());
    for (std::size_t i = 0; i < v.arity(); ++i) c.push_back(v.apply(w[i]) - w.apply(v[i]));
    return PolyVectorField(std::move(c));
}

DiffForm lieDerivative(const PolyVectorField& v, const DiffForm& a) {
    if (v.arity() != a.arity()) throw ArityMismatch("Lie derivative along a field on another space");
    DiffForm out = interiorProduct(v, exteriorDerivative(a));
    if (a.degree() > 0) out += exteriorDerivative(interiorProduct(v, a));
    return out;
}

DiffForm pullback(const DiffForm& a, const ScalarMatrix& m) {
    if (m.rows() != a.arity()) throw ArityMismatch("pullback matrix rows must match the form's arity");
    const std::size_t newArity = m.cols();
    const ScalarDomain d = a.domain();
    // image of dz_i for each old coordinate i
    std::vector<DiffForm> images;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        DiffForm dz(newArity, 1, d);
        for (std::size_t j = 0; j < newArity; ++j) {
            if (!m(i, j).isZero()) dz.addTerm({j}, MultiPoly::constant(newArity, m(i, j).reduceTo(d)));
        }
        images.push_back(std::move(dz));
    }
    DiffForm out(newArity, a.degree(), d);
    for (const auto& [idx, f] : a.terms()) {
        DiffForm piece = DiffForm::function(linearSubstitute(f, m));
        for (auto i : idx) piece = wedge(piece, images[i]);
        out += piece;
    }
    return out;
}

DescentCheck descendsCheck(const DiffForm& omega) {
    if (omega.degree() != 1) throw PreconditionError("descent check needs a 1-form");
    if (!omega.isZero() && !omega.coefficientDegree()) {
        throw PreconditionError("descent check needs homogeneous coefficients of one degree");
    }
    const DiffForm r = interiorProduct(eulerField(omega.arity(), omega.domain()), omega);
    MultiPoly residual = r.coefficient({});
    const bool ok = residual.isZero();
    return {std::move(residual), ok};
}

IntegrabilityCheck integrabilityCheck(const DiffForm& omega) {
    if (omega.degree() != 1) throw PreconditionError("integrability check needs a 1-form");
    DiffForm residual = wedge(omega, exteriorDerivative(omega));
    const bool ok = residual.isZero();
    return {std::move(residual), ok};
}

namespace {

// Scalar content of a whole form: gcd over every coefficient, signed by the
// leading coefficient of the first term.
Scalar formContent(const DiffForm& omega) {
    if (omega.isZero()) return Scalar::integer(1, omega.domain());
    const Scalar& lead = omega.terms().begin()->second.leadingCoefficient();
    if (!omega.domain().isRational()) return lead;
    mpz_class num = 0;
    mpz_class den = 1;
    for (const auto& [idx, f] : omega.terms()) {
        for (const auto& [m, c] : f.terms()) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.rational().get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
        }
    }
    mpq_class content(num, den);
    content.canonicalize();
    if (lead.sign() < 0) content = -content;
    return Scalar(content);
}

}  // namespace

DiffForm normalizeForm(const DiffForm& omega) {
    DiffForm out = omega;
    out *= formContent(omega).inverse();
    return out;
}

Saturation saturate(const DiffForm& omega) {
    if (omega.degree() != 1) throw PreconditionError("saturation needs a 1-form");
    if (omega.isZero()) throw PreconditionError("saturation of the zero form");
    const auto coeffs = omega.coefficients();
    MultiPoly factor = coefficientGcd(coeffs);
    DiffForm quotient(omega.arity(), 1, omega.domain());
    for (const auto& [idx, f] : omega.terms()) {
        auto q = exactDivide(f, factor);
        if (!q) throw CertificationError("gcd does not divide a coefficient");
        quotient.addTerm(idx, *q);
    }
    const Scalar scale = formContent(quotient);
    quotient *= scale.inverse();
    return {std::move(quotient), std::move(factor), scale};
}

}  // namespace folia
