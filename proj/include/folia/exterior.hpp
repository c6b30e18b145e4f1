#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Strictly increasing indices i_1 < ... < i_k naming dz_{i_1} ^ ... ^ dz_{i_k}.
using IndexTuple = std::vector<std::size_t>;

/// Polynomial k-form on affine coordinates z_0..z_{n}. Descent to projective
/// space is the checkable predicate i_R(form) = 0, not a separate type.
class DiffForm {
   public:
    using TermMap = std::map<IndexTuple, MultiPoly>;

    explicit DiffForm(std::size_t arity = 0, std::size_t degree = 0, ScalarDomain domain = {});

    static DiffForm function(const MultiPoly& f);
    /// sum_i coeffs[i] dz_i
    static DiffForm oneForm(std::span<const MultiPoly> coeffs);
    /// f dz_I; I need not be sorted (the sign of the sort is applied).
    static DiffForm monomial(const MultiPoly& f, IndexTuple indices);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t degree() const noexcept { return degree_; }
    ScalarDomain domain() const noexcept { return domain_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    MultiPoly coefficient(const IndexTuple& indices) const;
    /// Entry i is the coefficient of dz_i; requires degree 1.
    std::vector<MultiPoly> oneFormCoefficients() const;
    /// All stored coefficients, in index-tuple order.
    std::vector<MultiPoly> coefficients() const;
    /// Common total degree of all coefficients, if they are homogeneous of one degree.
    std::optional<int> coefficientDegree() const;

    void addTerm(const IndexTuple& sortedIndices, const MultiPoly& f);

    DiffForm& operator+=(const DiffForm& rhs);
    DiffForm& operator-=(const DiffForm& rhs);
    DiffForm& operator*=(const MultiPoly& f);
    DiffForm& operator*=(const Scalar& s);
    DiffForm operator-() const;

    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    friend DiffForm operator*(const MultiPoly& f, DiffForm a) { return a *= f; }
    friend DiffForm operator*(const Scalar& s, DiffForm a) { return a *= s; }
    friend bool operator==(const DiffForm&, const DiffForm&) = default;

   private:
    void requireCompatible(const DiffForm& rhs) const;

    std::size_t arity_;
    std::size_t degree_;
    ScalarDomain domain_;
    TermMap terms_;
};

/// Derivation sum_i f_i d/dz_i with polynomial coefficients.
class PolyVectorField {
   public:
    explicit PolyVectorField(std::vector<MultiPoly> coeffs);

    std::size_t arity() const noexcept { return coeffs_.size(); }
    const MultiPoly& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }

    /// V(f) = sum_i f_i df/dz_i
    MultiPoly apply(const MultiPoly& f) const;

    PolyVectorField operator-() const;
    friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
    friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

   private:
    std::vector<MultiPoly> coeffs_;
};

/// Radial field R = sum_i z_i d/dz_i.
PolyVectorField eulerField(std::size_t arity, ScalarDomain domain = {});
/// dz_0 ^ ... ^ dz_{n} with coefficient 1.
DiffForm volumeForm(std::size_t arity, ScalarDomain domain = {});

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exteriorDerivative(const DiffForm& a);
DiffForm interiorProduct(const PolyVectorField& v, const DiffForm& a);
PolyVectorField lieBracket(const PolyVectorField& v, const PolyVectorField& w);
/// Cartan: L_V = i_V d + d i_V.
DiffForm lieDerivative(const PolyVectorField& v, const DiffForm& a);

/// Pull back along the linear map old_i = sum_j m(i, j) new_j.
DiffForm pullback(const DiffForm& a, const ScalarMatrix& m);

struct DescentCheck {
    MultiPoly residual;
    bool ok;
};
/// i_R(omega) for a 1-form with homogeneous coefficients.
DescentCheck descendsCheck(const DiffForm& omega);

struct IntegrabilityCheck {
    DiffForm residual;
    bool ok;
};
/// omega ^ d omega for a 1-form.
IntegrabilityCheck integrabilityCheck(const DiffForm& omega);

/// omega = scale * factor * form, with factor the normalized gcd of the
/// coefficients and form normalized (primitive, positive leading coefficient).
struct Saturation {
    DiffForm form;
    MultiPoly factor;
    Scalar scale;
};
Saturation saturate(const DiffForm& omega);

/// Normalizes a form: divides by the content of its first nonzero coefficient.
DiffForm normalizeForm(const DiffForm& omega);

}  // namespace folia
