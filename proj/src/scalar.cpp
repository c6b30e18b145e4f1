#include "folia/scalar.hpp"

#include "folia/error.hpp"

namespace folia {

namespace {

std::uint64_t reduceSigned(std::int64_t v, std::uint64_t p) {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t reduceBig(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t powMod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) result = result * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

ScalarDomain ScalarDomain::prime(std::uint64_t p) {
    // Residue products must fit in 64 bits.
    if (p >= (1ULL << 32) || !isPrime(p)) {
        throw PreconditionError("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
    return ScalarDomain{p};
}

std::string to_string(ScalarDomain d) {
    return d.isRational() ? std::string("Q") : "F_" + std::to_string(d.modulus);
}

bool isPrime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) {
    std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw PreconditionError("zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::modular(std::int64_t v, std::uint64_t p) {
    Scalar s;
    s.value_ = Residue{reduceSigned(v, p), ScalarDomain::prime(p).modulus};
    return s;
}

Scalar Scalar::integer(long v, ScalarDomain d) {
    if (d.isRational()) return Scalar(v);
    Scalar s;
    s.value_ = Residue{reduceSigned(v, d.modulus), d.modulus};
    return s;
}

ScalarDomain Scalar::domain() const noexcept {
    if (auto r = std::get_if<Residue>(&value_)) return ScalarDomain{r->modulus};
    return {};
}

bool Scalar::isZero() const noexcept {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::isOne() const noexcept {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

bool Scalar::isInteger() const noexcept {
    auto q = std::get_if<mpq_class>(&value_);
    return q && q->get_den() == 1;
}

const mpq_class& Scalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw DomainMismatch("scalar is a residue, not a rational");
}

std::uint64_t Scalar::residue() const {
    if (auto r = std::get_if<Residue>(&value_)) return r->value;
    throw DomainMismatch("scalar is a rational, not a residue");
}

Scalar Scalar::reduceTo(ScalarDomain d) const {
    if (d == domain()) return *this;
    if (d.isRational() || !isRational()) {
        throw DomainMismatch("cannot move a scalar from " + to_string(domain()) + " to " + to_string(d));
    }
    const auto& q = std::get<mpq_class>(value_);
    const std::uint64_t den = reduceBig(q.get_den(), d.modulus);
    if (den == 0) {
        throw DomainMismatch("denominator of " + q.get_str() + " vanishes mod " + std::to_string(d.modulus));
    }
    const std::uint64_t num = reduceBig(q.get_num(), d.modulus);
    Scalar s;
    s.value_ = Residue{num * powMod(den, d.modulus - 2, d.modulus) % d.modulus, d.modulus};
    return s;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw PreconditionError("inverse of zero");
    if (auto r = std::get_if<Residue>(&value_)) {
        Scalar s;
        s.value_ = Residue{powMod(r->value, r->modulus - 2, r->modulus), r->modulus};
        return s;
    }
    return Scalar(mpq_class(1) / std::get<mpq_class>(value_));
}

Scalar Scalar::pow(unsigned e) const {
    Scalar result = Scalar::integer(1, domain());
    Scalar base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

int Scalar::sign() const noexcept {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 0 ? 0 : 1;
    return sgn(std::get<mpq_class>(value_));
}

void Scalar::requireSameDomain(const Scalar& rhs) const {
    if (domain() != rhs.domain()) {
        throw DomainMismatch("scalar domains differ: " + to_string(domain()) + " vs " + to_string(rhs.domain()));
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    requireSameDomain(rhs);
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    requireSameDomain(rhs);
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + r->modulus - std::get<Residue>(rhs.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    requireSameDomain(rhs);
    if (auto r = std::get_if<Residue>(&value_)) {
        r->value = r->value * std::get<Residue>(rhs.value_).value % r->modulus;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    requireSameDomain(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (auto r = std::get_if<Residue>(&s.value_)) {
        r->value = (r->modulus - r->value) % r->modulus;
    } else {
        auto& q = std::get<mpq_class>(s.value_);
        q = -q;
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.domain() != b.domain()) return false;
    if (auto r = std::get_if<Scalar::Residue>(&a.value_)) return r->value == std::get<Scalar::Residue>(b.value_).value;
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::str() const {
    if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

}  // namespace folia
