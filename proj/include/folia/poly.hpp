#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folia/matrix.hpp"
#include "folia/scalar.hpp"

namespace folia {

using ScalarMatrix = Matrix<Scalar>;

/// Exponent vector of a monomial; arity is fixed by the owning polynomial.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

    std::size_t arity() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t totalDegree() const noexcept { return degree_; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& rhs) const;
    /// this / rhs; requires rhs.divides(*this).
    Monomial operator/(const Monomial& rhs) const;
    /// Copy with exponent i changed.
    Monomial withExponent(std::size_t i, std::uint32_t e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

   private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// All monomials of one total degree, in descending grlex order.
std::vector<Monomial> homogeneousMonomials(std::size_t arity, std::uint32_t degree);

/// Graded lexicographic comparison (x0 > x1 > ...): negative, zero or positive.
int grlexCompare(const Monomial& a, const Monomial& b) noexcept;

/// Orders a term map so that the grlex-largest monomial comes first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlexCompare(a, b) > 0; }
};

/// Sparse multivariate polynomial over Q or F_p. No zero coefficients are
/// stored; the zero polynomial has an empty term map.
class MultiPoly {
   public:
    using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

    explicit MultiPoly(std::size_t arity = 0, ScalarDomain domain = {}) : arity_(arity), domain_(domain) {}

    static MultiPoly constant(std::size_t arity, const Scalar& c);
    static MultiPoly variable(std::size_t arity, std::size_t index, ScalarDomain domain = {});
    static MultiPoly term(const Monomial& m, const Scalar& c);

    std::size_t arity() const noexcept { return arity_; }
    ScalarDomain domain() const noexcept { return domain_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool isZero() const noexcept { return terms_.empty(); }
    bool isConstant() const noexcept;
    /// Constant term value (zero when absent).
    Scalar constantValue() const;
    /// Total degree; -1 for the zero polynomial.
    int totalDegree() const noexcept;
    /// Degree in one variable; -1 for the zero polynomial.
    int degreeIn(std::size_t var) const;
    /// Zero counts as homogeneous.
    bool isHomogeneous() const noexcept;
    bool involves(std::size_t var) const;

    const Monomial& leadingMonomial() const;
    const Scalar& leadingCoefficient() const;
    Scalar coefficient(const Monomial& m) const;

    void addTerm(const Monomial& m, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Scalar& s);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
    friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(int e) const;

    /// Image in F_p; throws DomainMismatch on a denominator divisible by p.
    MultiPoly reduceTo(ScalarDomain d) const;
    /// The same polynomial in a ring with more (or equally many) variables.
    MultiPoly extended(std::size_t arity) const;

   private:
    void requireCompatible(const MultiPoly& rhs) const;

    std::size_t arity_;
    ScalarDomain domain_;
    TermMap terms_;
};

MultiPoly partialDerivative(const MultiPoly& p, std::size_t var);

/// Composes p with a linear map: old variable i becomes sum_j m(i, j) * new_j.
/// m has one row per variable of p and one column per new variable.
MultiPoly linearSubstitute(const MultiPoly& p, const ScalarMatrix& m);

/// Replaces variable i by subs[i]; all substitutes share one ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> subs);

Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point);

/// p / f when f divides p exactly, otherwise nullopt.
std::optional<MultiPoly> exactDivide(const MultiPoly& p, const MultiPoly& f);

/// Content and normalized part: p = content * normalized. Normalized means
/// primitive over Z with positive leading coefficient (over Q) or monic (over F_p).
struct ContentSplit {
    Scalar content;
    MultiPoly normalized;
};
ContentSplit splitContent(const MultiPoly& p);
MultiPoly normalize(const MultiPoly& p);

/// Greatest common divisor, normalized as above. gcd(0, 0) throws.
MultiPoly polyGcd(const MultiPoly& a, const MultiPoly& b);
/// Iterated gcd of a list with at least one nonzero entry.
MultiPoly coefficientGcd(std::span<const MultiPoly> polys);

}  // namespace folia
