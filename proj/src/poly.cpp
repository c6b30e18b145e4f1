#include "folia/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "folia/error.hpp"

namespace folia {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
    if (index >= arity) throw ArityMismatch("variable index " + std::to_string(index) + " out of range");
    Monomial m(arity);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
}

std::vector<Monomial> homogeneousMonomials(std::size_t arity, std::uint32_t degree) {
    std::vector<Monomial> out;
    if (arity == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    std::vector<std::uint32_t> e(arity, 0);
    // Exponent vectors in lex-descending order, which is grlex within one degree.
    auto fill = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == arity) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    fill(fill, 0, degree);
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += rhs.exps_[i];
    m.degree_ += rhs.degree_;
    return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= rhs.exps_[i];
    m.degree_ -= rhs.degree_;
    return m;
}

Monomial Monomial::withExponent(std::size_t i, std::uint32_t e) const {
    Monomial m = *this;
    m.degree_ = m.degree_ - m.exps_[i] + e;
    m.exps_[i] = e;
    return m;
}

int grlexCompare(const Monomial& a, const Monomial& b) noexcept {
    if (a.totalDegree() != b.totalDegree()) return a.totalDegree() < b.totalDegree() ? -1 : 1;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(std::size_t arity, const Scalar& c) {
    MultiPoly p(arity, c.domain());
    p.addTerm(Monomial(arity), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index, ScalarDomain domain) {
    MultiPoly p(arity, domain);
    p.addTerm(Monomial::variable(arity, index), Scalar::integer(1, domain));
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Scalar& c) {
    MultiPoly p(m.arity(), c.domain());
    p.addTerm(m, c);
    return p;
}

bool MultiPoly::isConstant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.totalDegree() == 0);
}

Scalar MultiPoly::constantValue() const { return coefficient(Monomial(arity_)); }

int MultiPoly::totalDegree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.totalDegree());
}

int MultiPoly::degreeIn(std::size_t var) const {
    if (var >= arity_) throw ArityMismatch("variable index out of range");
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

bool MultiPoly::isHomogeneous() const noexcept {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.totalDegree();
    return terms_.rbegin()->first.totalDegree() == d;
}

bool MultiPoly::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] > 0; });
}

const Monomial& MultiPoly::leadingMonomial() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Scalar& MultiPoly::leadingCoefficient() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.begin()->second;
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::integer(0, domain_) : it->second;
}

void MultiPoly::addTerm(const Monomial& m, const Scalar& c) {
    if (m.arity() != arity_) throw ArityMismatch("monomial arity does not match polynomial arity");
    if (c.isZero()) return;
    const Scalar value = c.domain() == domain_ ? c : c.reduceTo(domain_);
    auto [it, inserted] = terms_.try_emplace(m, value);
    if (!inserted) {
        it->second += value;
        if (it->second.isZero()) terms_.erase(it);
    }
}

void MultiPoly::requireCompatible(const MultiPoly& rhs) const {
    if (arity_ != rhs.arity_) {
        throw ArityMismatch("polynomial arities differ: " + std::to_string(arity_) + " vs " + std::to_string(rhs.arity_));
    }
    if (domain_ != rhs.domain_) {
        throw DomainMismatch("polynomial domains differ: " + to_string(domain_) + " vs " + to_string(rhs.domain_));
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    requireCompatible(rhs);
    for (const auto& [m, c] : rhs.terms_) addTerm(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    requireCompatible(rhs);
    for (const auto& [m, c] : rhs.terms_) addTerm(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.requireCompatible(b);
    MultiPoly out(a.arity_, a.domain_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.addTerm(ma * mb, ca * cb);
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
    const Scalar v = s.domain() == domain_ ? s : s.reduceTo(domain_);
    if (v.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= v;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw PreconditionError("negative exponent " + std::to_string(e));
    MultiPoly result = constant(arity_, Scalar::integer(1, domain_));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::reduceTo(ScalarDomain d) const {
    MultiPoly p(arity_, d);
    for (const auto& [m, c] : terms_) p.addTerm(m, c.reduceTo(d));
    return p;
}

MultiPoly MultiPoly::extended(std::size_t arity) const {
    if (arity < arity_) throw ArityMismatch("cannot shrink polynomial arity");
    MultiPoly p(arity, domain_);
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
        e.resize(arity, 0);
        p.addTerm(Monomial(std::move(e)), c);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Calculus and substitution

MultiPoly partialDerivative(const MultiPoly& p, std::size_t var) {
    if (var >= p.arity()) throw ArityMismatch("derivative index " + std::to_string(var) + " out of range");
    MultiPoly out(p.arity(), p.domain());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        out.addTerm(m.withExponent(var, m[var] - 1), c * Scalar::integer(m[var], p.domain()));
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> subs) {
    if (subs.size() != p.arity()) throw ArityMismatch("substitution needs one polynomial per variable");
    if (subs.empty()) return p;
    const std::size_t newArity = subs.front().arity();
    const ScalarDomain dom = subs.front().domain();
    for (const auto& s : subs) {
        if (s.arity() != newArity) throw ArityMismatch("substitutes live in different rings");
        if (s.domain() != dom) throw DomainMismatch("substitutes live in different coefficient fields");
    }
    // powers[i][e] = subs[i]^e, filled lazily
    std::vector<std::vector<MultiPoly>> powers(subs.size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(newArity, Scalar::integer(1, dom)));
        while (cache.size() <= e) cache.push_back(cache.back() * subs[i]);
        return cache[e];
    };
    MultiPoly out(newArity, dom);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(newArity, c.reduceTo(dom));
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i]) t *= power(i, m[i]);
        }
        out += t;
    }
    return out;
}

MultiPoly linearSubstitute(const MultiPoly& p, const ScalarMatrix& m) {
    if (m.rows() != p.arity()) {
        throw ArityMismatch("substitution matrix has " + std::to_string(m.rows()) + " rows, polynomial has " +
                            std::to_string(p.arity()) + " variables");
    }
    std::vector<MultiPoly> subs;
    subs.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        MultiPoly l(m.cols(), p.domain());
        for (std::size_t j = 0; j < m.cols(); ++j) l.addTerm(Monomial::variable(m.cols(), j), m(i, j));
        subs.push_back(std::move(l));
    }
    if (subs.empty()) return MultiPoly::constant(m.cols(), p.constantValue());
    return substitute(p, subs);
}

Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point) {
    if (point.size() != p.arity()) throw ArityMismatch("evaluation point has the wrong length");
    for (const auto& x : point) {
        if (x.domain() != p.domain()) throw DomainMismatch("evaluation point is not in " + to_string(p.domain()));
    }
    Scalar sum = Scalar::integer(0, p.domain());
    for (const auto& [m, c] : p.terms()) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i]) t *= point[i].pow(m[i]);
        }
        sum += t;
    }
    return sum;
}

std::optional<MultiPoly> exactDivide(const MultiPoly& p, const MultiPoly& f) {
    if (f.isZero()) throw PreconditionError("division by the zero polynomial");
    if (p.arity() != f.arity()) throw ArityMismatch("division across rings of different arity");
    if (p.domain() != f.domain()) throw DomainMismatch("division across coefficient fields");
    MultiPoly quotient(p.arity(), p.domain());
    MultiPoly rest = p;
    const Monomial& lm = f.leadingMonomial();
    const Scalar lcInv = f.leadingCoefficient().inverse();
    while (!rest.isZero()) {
        const Monomial& m = rest.leadingMonomial();
        if (!lm.divides(m)) return std::nullopt;
        const MultiPoly t = MultiPoly::term(m / lm, rest.leadingCoefficient() * lcInv);
        quotient += t;
        rest -= t * f;
    }
    return quotient;
}

// ---------------------------------------------------------------------------
// Normalization and gcd

ContentSplit splitContent(const MultiPoly& p) {
    if (p.isZero()) return {Scalar::integer(1, p.domain()), p};
    Scalar content;
    if (p.domain().isRational()) {
        mpz_class num = 0;
        mpz_class den = 1;
        for (const auto& [m, c] : p.terms()) {
            const mpq_class& q = c.rational();
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        }
        mpq_class value(num, den);
        value.canonicalize();
        if (p.leadingCoefficient().sign() < 0) value = -value;
        content = Scalar(value);
    } else {
        content = p.leadingCoefficient();
    }
    MultiPoly normalized = p;
    normalized *= content.inverse();
    return {content, std::move(normalized)};
}

MultiPoly normalize(const MultiPoly& p) { return splitContent(p).normalized; }

namespace {

int mainVariable(const MultiPoly& a, const MultiPoly& b) {
    for (int k = static_cast<int>(a.arity()) - 1; k >= 0; --k) {
        if (a.involves(k) || b.involves(k)) return k;
    }
    return -1;
}

// Coefficients of p viewed as a polynomial in x_var; entry e multiplies x_var^e.
std::vector<MultiPoly> coefficientsIn(const MultiPoly& p, std::size_t var) {
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(std::max(p.degreeIn(var), 0)) + 1,
                                  MultiPoly(p.arity(), p.domain()));
    for (const auto& [m, c] : p.terms()) coeffs[m[var]].addTerm(m.withExponent(var, 0), c);
    return coeffs;
}

MultiPoly leadingCoefficientIn(const MultiPoly& p, std::size_t var) {
    const int d = p.degreeIn(var);
    MultiPoly lc(p.arity(), p.domain());
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(m[var]) == d) lc.addTerm(m.withExponent(var, 0), c);
    }
    return lc;
}

MultiPoly gcdRec(const MultiPoly& a, const MultiPoly& b);

MultiPoly contentIn(const MultiPoly& p, std::size_t var) {
    MultiPoly g(p.arity(), p.domain());
    for (const auto& c : coefficientsIn(p, var)) {
        if (c.isZero()) continue;
        g = gcdRec(g, c);
        if (g.isConstant()) break;
    }
    return g;
}

MultiPoly primitivePartIn(const MultiPoly& p, std::size_t var) {
    const MultiPoly c = contentIn(p, var);
    return normalize(*exactDivide(p, c));
}

// Pseudo-remainder of a by b in x_var, up to a nonzero factor from K[other vars].
MultiPoly pseudoRemainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
    const int db = b.degreeIn(var);
    const MultiPoly lcb = leadingCoefficientIn(b, var);
    while (!a.isZero() && a.degreeIn(var) >= db) {
        const int da = a.degreeIn(var);
        MultiPoly shifted = leadingCoefficientIn(a, var);
        shifted *= MultiPoly::term(Monomial::variable(a.arity(), var, da - db), Scalar::integer(1, a.domain()));
        a = lcb * a - shifted * b;
        a = normalize(a);
    }
    return a;
}

// Normalized gcd; either argument may be zero but not both.
MultiPoly gcdRec(const MultiPoly& a, const MultiPoly& b) {
    if (a.isZero()) return normalize(b);
    if (b.isZero()) return normalize(a);
    const int k = mainVariable(a, b);
    if (k < 0) return MultiPoly::constant(a.arity(), Scalar::integer(1, a.domain()));
    const auto var = static_cast<std::size_t>(k);
    if (!a.involves(var)) return gcdRec(a, contentIn(b, var));
    if (!b.involves(var)) return gcdRec(contentIn(a, var), b);

    const MultiPoly ca = contentIn(a, var);
    const MultiPoly cb = contentIn(b, var);
    MultiPoly pa = normalize(*exactDivide(a, ca));
    MultiPoly pb = normalize(*exactDivide(b, cb));
    const MultiPoly c = gcdRec(ca, cb);
    if (pa.degreeIn(var) < pb.degreeIn(var)) std::swap(pa, pb);
    for (;;) {
        MultiPoly r = pseudoRemainder(pa, pb, var);
        if (r.isZero()) break;
        if (!r.involves(var)) {
            pb = MultiPoly::constant(a.arity(), Scalar::integer(1, a.domain()));
            break;
        }
        pa = std::move(pb);
        pb = primitivePartIn(r, var);
    }
    return normalize(c * primitivePartIn(pb, var));
}

// Coprimality certificate: restrict both primitive integer polynomials to a
// random line t -> u + t v and reduce mod a large prime. When the restriction
// of a keeps its total degree, a common factor g of a and b restricts to a
// common factor of degree deg g, so a constant univariate gcd proves g = 1.
constexpr std::uint64_t kCertPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulMod(std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % kCertPrime);
}

std::uint64_t powMod(std::uint64_t x, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, x = mulMod(x, x)) {
        if (e & 1) r = mulMod(r, x);
    }
    return r;
}

using UniPoly = std::vector<std::uint64_t>;

void trim(UniPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly restrictToLine(const MultiPoly& p, const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v) {
    UniPoly out(static_cast<std::size_t>(p.totalDegree()) + 1, 0);
    for (const auto& [m, c] : p.terms()) {
        const mpq_class& q = c.rational();
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), q.get_num_mpz_t(), kCertPrime);
        UniPoly term{r.get_ui()};
        for (std::size_t i = 0; i < p.arity(); ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) {
                UniPoly next(term.size() + 1, 0);
                for (std::size_t k = 0; k < term.size(); ++k) {
                    next[k] = (next[k] + mulMod(term[k], u[i])) % kCertPrime;
                    next[k + 1] = (next[k + 1] + mulMod(term[k], v[i])) % kCertPrime;
                }
                term = std::move(next);
            }
        }
        for (std::size_t k = 0; k < term.size(); ++k) out[k] = (out[k] + term[k]) % kCertPrime;
    }
    trim(out);
    return out;
}

UniPoly uniRemainder(UniPoly a, const UniPoly& b) {
    const std::uint64_t inv = powMod(b.back(), kCertPrime - 2);
    while (a.size() >= b.size()) {
        const std::uint64_t f = mulMod(a.back(), inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) {
            a[shift + k] = (a[shift + k] + kCertPrime - mulMod(f, b[k])) % kCertPrime;
        }
        trim(a);
    }
    return a;
}

bool certifiedCoprime(const MultiPoly& a, const MultiPoly& b) {
    if (!a.domain().isRational() || a.isConstant() || b.isConstant()) return false;
    const MultiPoly na = normalize(a);
    const MultiPoly nb = normalize(b);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> dist(1, kCertPrime - 1);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<std::uint64_t> u(a.arity()), v(a.arity());
        for (auto& x : u) x = dist(rng);
        for (auto& x : v) x = dist(rng);
        UniPoly fa = restrictToLine(na, u, v);
        if (static_cast<int>(fa.size()) - 1 != na.totalDegree()) continue;
        UniPoly fb = restrictToLine(nb, u, v);
        while (!fb.empty()) {
            UniPoly r = uniRemainder(fa, fb);
            fa = std::move(fb);
            fb = std::move(r);
        }
        if (fa.size() == 1) return true;
    }
    return false;
}

}  // namespace

MultiPoly polyGcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("gcd across rings of different arity");
    if (a.domain() != b.domain()) throw DomainMismatch("gcd across coefficient fields");
    if (a.isZero() && b.isZero()) throw PreconditionError("gcd(0, 0) is undefined");
    if (!a.isZero() && !b.isZero() && certifiedCoprime(a, b)) {
        return MultiPoly::constant(a.arity(), Scalar::integer(1, a.domain()));
    }
    return gcdRec(a, b);
}

MultiPoly coefficientGcd(std::span<const MultiPoly> polys) {
    std::optional<MultiPoly> g;
    for (const auto& p : polys) {
        if (p.isZero()) continue;
        g = g ? polyGcd(*g, p) : normalize(p);
        if (g->isConstant()) break;
    }
    if (!g) throw PreconditionError("coefficient gcd of an all-zero list");
    return *g;
}

}  // namespace folia
