#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace folia {

/// Coefficient field of a polynomial ring: Q when modulus is 0, otherwise F_p.
struct ScalarDomain {
    std::uint64_t modulus = 0;

    static constexpr ScalarDomain rationals() noexcept { return {}; }
    static ScalarDomain prime(std::uint64_t p);

    constexpr bool isRational() const noexcept { return modulus == 0; }
    friend constexpr bool operator==(ScalarDomain, ScalarDomain) = default;
};

std::string to_string(ScalarDomain d);

bool isPrime(std::uint64_t n) noexcept;

/// Exact scalar: a canonical rational, or a residue in [0, p) for a runtime
/// prime p. Arithmetic between different domains throws DomainMismatch.
class Scalar {
   public:
    Scalar() = default;
    Scalar(int v) : value_(mpq_class(v)) {}
    Scalar(long v) : value_(mpq_class(v)) {}
    Scalar(const mpz_class& v) : value_(mpq_class(v)) {}
    Scalar(mpq_class v);

    static Scalar fraction(long num, long den);
    static Scalar modular(std::int64_t v, std::uint64_t p);
    /// Integer v viewed in the given domain.
    static Scalar integer(long v, ScalarDomain d);

    ScalarDomain domain() const noexcept;
    bool isRational() const noexcept { return std::holds_alternative<mpq_class>(value_); }
    bool isZero() const noexcept;
    bool isOne() const noexcept;
    /// Rational with denominator 1.
    bool isInteger() const noexcept;

    const mpq_class& rational() const;
    std::uint64_t residue() const;

    /// Reduction of a rational into F_p (or the identity when already there).
    /// Throws DomainMismatch if the denominator vanishes mod p.
    Scalar reduceTo(ScalarDomain d) const;

    Scalar inverse() const;
    Scalar pow(unsigned e) const;
    /// Sign of a rational; residues report 0 or 1.
    int sign() const noexcept;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string str() const;

   private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };
    void requireSameDomain(const Scalar& rhs) const;

    std::variant<mpq_class, Residue> value_{mpq_class(0)};
};

}  // namespace folia
