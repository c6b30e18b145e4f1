#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Point [x0 : x1] of P^1.
struct BinaryPoint {
    Scalar x0;
    Scalar x1;
};

/// Binary form sum_i a_i t0^(r-i) t1^i, stored by its plain coefficients.
///
/// The invariants Q, C, D are classical formulas in the apolar coordinates
/// alpha_i = a_i / binom(r, i); the projective coordinates a0..a4 of P(4)
/// used by the symbolic layer are those apolar coordinates.
class BinaryForm {
   public:
    explicit BinaryForm(std::vector<Scalar> coeffs);

    /// From a homogeneous polynomial in (t0, t1).
    static BinaryForm fromPoly(const MultiPoly& f);
    static BinaryForm fromApolar(std::span<const Scalar> alpha);

    unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
    ScalarDomain domain() const noexcept { return coeffs_.front().domain(); }

    MultiPoly toPoly() const;
    std::vector<Scalar> apolarCoordinates() const;
    /// F(M t): the GL(2) action by linear substitution.
    BinaryForm substituted(const ScalarMatrix& m) const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

   private:
    std::vector<Scalar> coeffs_;
};

/// binom(n, k) as a scalar in the given domain.
Scalar binomial(unsigned n, unsigned k, ScalarDomain d = {});

/// (x0 t0 + x1 t1)^r
BinaryForm veronese(unsigned r, const BinaryPoint& p);

/// Linear form vanishing at [c : d], fixed as d*t0 - c*t1.
MultiPoly rootLinearForm(const BinaryPoint& p);

struct DivisorPoint {
    BinaryPoint point;
    unsigned multiplicity;
};
/// Product of rootLinearForm(p)^m over the divisor. When expectedDegree is
/// given the multiplicities must sum to it.
BinaryForm formFromDivisor(std::span<const DivisorPoint> divisor, std::optional<unsigned> expectedDegree = {});

enum class OrbitClass { Veronese, Tangent, BitangentNode, OneDouble, Simple };
std::string to_string(OrbitClass c);

struct RootPattern {
    /// Root multiplicities over the algebraic closure, descending.
    std::vector<unsigned> multiplicities;
    /// Set for quartics only.
    std::optional<OrbitClass> orbitClass;

    friend bool operator==(const RootPattern&, const RootPattern&) = default;
};
std::string to_string(const RootPattern& p);

/// Multiplicities via the chain g_k = gcd(g_{k-1}, g_{k-1}') on F(x, 1); the
/// root [1:0] is counted by the t1-divisibility of F. Requires char 0 or p > r.
RootPattern rootPattern(const BinaryForm& f);

/// Q, C and D = Q^3 - 27 C^2 for one quartic.
struct InvariantTriple {
    Scalar q;
    Scalar c;
    Scalar discriminant() const;
};
InvariantTriple invariantsQCD(const BinaryForm& f);

/// Q, C, D as polynomials in the apolar coordinates a0..a4.
struct QuarticInvariants {
    MultiPoly q;
    MultiPoly c;
    MultiPoly d;
};
QuarticInvariants quarticInvariants(ScalarDomain domain = {});

enum class JNormalization { Raw, Classical };

class JValue {
   public:
    enum class Kind { Finite, Infinity, Indeterminate };

    static JValue finite(Scalar v, JNormalization n) { return JValue(Kind::Finite, std::move(v), n); }
    static JValue infinity(JNormalization n) { return JValue(Kind::Infinity, Scalar(0), n); }
    static JValue indeterminate(JNormalization n) { return JValue(Kind::Indeterminate, Scalar(0), n); }

    Kind kind() const noexcept { return kind_; }
    JNormalization normalization() const noexcept { return norm_; }
    bool isFinite() const noexcept { return kind_ == Kind::Finite; }
    /// Requires a finite value.
    const Scalar& value() const;
    std::string str() const;

    friend bool operator==(const JValue&, const JValue&) = default;

   private:
    JValue(Kind k, Scalar v, JNormalization n) : kind_(k), value_(std::move(v)), norm_(n) {}

    Kind kind_;
    Scalar value_;
    JNormalization norm_;
};

/// Q^3 / D (times 1728 when Classical); Infinity when D = 0 off the base
/// locus, Indeterminate when Q = C = 0.
JValue jInvariant(const BinaryForm& f, JNormalization n);

/// Sylvester matrix of two binary forms given by plain coefficient lists.
Matrix<MultiPoly> sylvesterMatrix(std::span<const MultiPoly> f, std::span<const MultiPoly> g);

/// Resultant of dF/dt0 and dF/dt1 (Sylvester determinant), degree >= 2.
Scalar discriminantOracle(const BinaryForm& f);
/// The same with the plain coefficients a0..ar as variables.
MultiPoly symbolicDiscriminantOracle(unsigned r);
/// discriminantOracle(F) / D(F) for quartics, fixed by one evaluation at the
/// harmonic quartic t0^3 t1 - t0 t1^3.
Scalar discriminantOracleConstant();

/// Classical discriminant b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd of the
/// plain cubic a t0^3 + b t0^2 t1 + c t0 t1^2 + d t1^3.
MultiPoly cubicDiscriminant(std::span<const MultiPoly> g);

/// Osculating flag P1_p in P2_p in H of the rational normal quartic at the
/// point nu_4(p), whose linear form is l_p = x0 t0 + x1 t1.
///
/// Functionals act on apolar coordinates a0..a4. H is identified with binary
/// cubics G by G -> l_p G; `inclusion` maps plain cofactor coefficients
/// g0..g3 to apolar coordinates.
struct OsculatingFlag {
    BinaryPoint point;
    std::vector<Scalar> hyperplane;
    std::array<std::vector<Scalar>, 2> plane;
    std::array<std::vector<Scalar>, 3> line;
    ScalarMatrix inclusion;

    /// Cofactor of 3p + q: l_p^2 l_q.
    std::vector<Scalar> lineCofactor(const BinaryPoint& q) const;
    /// Cofactor of 2p + 2q: l_p l_q^2 (the conic X_2).
    std::vector<Scalar> conicCofactor(const BinaryPoint& q) const;
    /// Cofactor of p + 3q: l_q^3 (the twisted cubic X_3).
    std::vector<Scalar> cubicCofactor(const BinaryPoint& q) const;
};
OsculatingFlag osculatingFlag(unsigned r, const BinaryPoint& p);

}  // namespace folia
