#include "folia/varietyprobe.hpp"

#include <algorithm>
#include <thread>

#include "folia/binary.hpp"
#include "folia/error.hpp"
#include "folia/linalg.hpp"

namespace folia {

namespace {

ScalarDomain goodPrime(std::uint64_t p) {
    if (p < 5) throw PreconditionError("probes need a prime p >= 5, got " + std::to_string(p));
    try {
        return ScalarDomain::prime(p);
    } catch (const Error& e) {
        throw PreconditionError(e.what());
    }
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Point number i of P^n(F_p): blocks by the position of the leading 1,
// remaining coordinates as base-p digits.
ProjectivePoint decodePoint(std::uint64_t i, std::size_t n, std::uint64_t p) {
    ProjectivePoint pt(n + 1, 0);
    std::size_t lead = 0;
    std::uint64_t block = 1;
    for (std::size_t k = 0; k < n; ++k) block *= p;
    while (i >= block) {
        i -= block;
        block /= p;
        ++lead;
    }
    pt[lead] = 1;
    for (std::size_t k = n; k > lead; --k) {
        pt[k] = static_cast<std::uint32_t>(i % p);
        i /= p;
    }
    return pt;
}

struct CompiledTerm {
    std::uint64_t coeff;
    std::vector<std::uint32_t> exps;
};
using CompiledPoly = std::vector<CompiledTerm>;

CompiledPoly compile(const MultiPoly& f, ScalarDomain d) {
    CompiledPoly out;
    const MultiPoly g = [&] {
        try {
            return f.reduceTo(d);
        } catch (const DomainMismatch&) {
            throw PreconditionError("bad prime " + std::to_string(d.modulus) + ": a coefficient denominator vanishes");
        }
    }();
    for (const auto& [m, c] : g.terms()) {
        out.push_back({c.residue(), {m.exponents().begin(), m.exponents().end()}});
    }
    return out;
}

std::uint32_t maxExponent(const std::vector<CompiledPoly>& polys) {
    std::uint32_t e = 0;
    for (const auto& f : polys) {
        for (const auto& t : f) {
            for (auto x : t.exps) e = std::max(e, x);
        }
    }
    return e;
}

PointSet sortedSet(std::uint64_t p, std::size_t n, std::vector<ProjectivePoint> pts) {
    PointSet s(p, n);
    for (auto& pt : pts) s.insert(std::vector<std::uint64_t>(pt.begin(), pt.end()));
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

PointSet::PointSet(std::uint64_t prime, std::size_t dimension) : prime_(prime), dimension_(dimension) {}

bool PointSet::contains(const ProjectivePoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

void PointSet::insert(std::vector<std::uint64_t> coords) {
    if (coords.size() != dimension_ + 1) throw ArityMismatch("point has the wrong number of coordinates");
    for (auto& c : coords) c %= prime_;
    auto lead = std::find_if(coords.begin(), coords.end(), [](std::uint64_t c) { return c != 0; });
    if (lead == coords.end()) throw PreconditionError("the zero vector is not a projective point");
    const std::uint64_t inv = powmod(*lead, prime_ - 2, prime_);
    ProjectivePoint pt;
    for (auto c : coords) pt.push_back(static_cast<std::uint32_t>(c * inv % prime_));
    auto it = std::lower_bound(points_.begin(), points_.end(), pt);
    if (it == points_.end() || *it != pt) points_.insert(it, std::move(pt));
}

void PointSet::insert(std::span<const Scalar> coords) {
    std::vector<std::uint64_t> v;
    for (const auto& c : coords) {
        if (c.domain().modulus != prime_) throw DomainMismatch("point coordinates outside F_" + std::to_string(prime_));
        v.push_back(c.residue());
    }
    insert(std::move(v));
}

void PointSet::requireSameAmbient(const PointSet& other) const {
    if (prime_ != other.prime_ || dimension_ != other.dimension_) {
        throw PreconditionError("point sets live in different projective spaces");
    }
}

PointSet PointSet::unite(const PointSet& other) const {
    requireSameAmbient(other);
    PointSet out(prime_, dimension_);
    std::set_union(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                   std::back_inserter(out.points_));
    return out;
}

PointSet PointSet::intersect(const PointSet& other) const {
    requireSameAmbient(other);
    PointSet out(prime_, dimension_);
    std::set_intersection(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                          std::back_inserter(out.points_));
    return out;
}

std::string to_string(const ProjectivePoint& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ":";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

std::uint64_t projectiveSpaceSize(std::size_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    std::uint64_t block = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        total += block;
        block *= p;
    }
    return total;
}

PointSet projectivePoints(std::size_t n, std::uint64_t p, std::uint64_t cap) {
    goodPrime(p);
    const std::uint64_t count = projectiveSpaceSize(n, p);
    if (count > cap) throw PreconditionError("P^" + std::to_string(n) + "(F_" + std::to_string(p) + ") exceeds the point cap");
    std::vector<ProjectivePoint> pts;
    pts.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) pts.push_back(decodePoint(i, n, p));
    std::sort(pts.begin(), pts.end());
    PointSet s(p, n);
    for (auto& pt : pts) s.insert(std::vector<std::uint64_t>(pt.begin(), pt.end()));
    return s;
}

PointSet zeroLocus(std::span<const MultiPoly> polys, std::size_t n, std::uint64_t p, std::uint64_t cap) {
    const ScalarDomain d = goodPrime(p);
    std::vector<CompiledPoly> compiled;
    for (const auto& f : polys) {
        if (f.arity() != n + 1) throw ArityMismatch("polynomial arity must be n + 1");
        if (!f.isHomogeneous()) throw PreconditionError("zero loci in projective space need homogeneous polynomials");
        compiled.push_back(compile(f, d));
    }
    const std::uint64_t count = projectiveSpaceSize(n, p);
    if (count > cap) throw PreconditionError("P^" + std::to_string(n) + "(F_" + std::to_string(p) + ") exceeds the point cap");
    const std::uint32_t maxE = maxExponent(compiled);

    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::vector<ProjectivePoint>> found(workers);
    auto scan = [&](unsigned w) {
        std::vector<std::vector<std::uint64_t>> powers(n + 1, std::vector<std::uint64_t>(maxE + 1));
        for (std::uint64_t i = w; i < count; i += workers) {
            const ProjectivePoint pt = decodePoint(i, n, p);
            for (std::size_t v = 0; v <= n; ++v) {
                powers[v][0] = 1;
                for (std::uint32_t e = 1; e <= maxE; ++e) powers[v][e] = powers[v][e - 1] * pt[v] % p;
            }
            bool zero = true;
            for (const auto& f : compiled) {
                std::uint64_t acc = 0;
                for (const auto& t : f) {
                    std::uint64_t m = t.coeff;
                    for (std::size_t v = 0; v <= n; ++v) {
                        if (t.exps[v]) m = m * powers[v][t.exps[v]] % p;
                    }
                    acc = (acc + m) % p;
                }
                if (acc) {
                    zero = false;
                    break;
                }
            }
            if (zero) found[w].push_back(pt);
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(scan, w);
    scan(0);
    for (auto& t : threads) t.join();

    std::vector<ProjectivePoint> all;
    for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    return sortedSet(p, n, std::move(all));
}

// ---------------------------------------------------------------------------
// Strata

std::string to_string(Stratum s) {
    switch (s) {
        case Stratum::X4: return "X4";
        case Stratum::TBAR: return "TBAR";
        case Stratum::NBAR: return "NBAR";
        case Stratum::X2: return "X2";
        case Stratum::X3: return "X3";
        case Stratum::P1P: return "P1P";
        case Stratum::SECANT: return "SECANT";
        case Stratum::DISCRIMINANT: return "DISCRIMINANT";
    }
    return "?";
}

namespace {

std::vector<BinaryPoint> lineOver(ScalarDomain d) {
    std::vector<BinaryPoint> pts{{Scalar::integer(0, d), Scalar::integer(1, d)}};
    for (std::uint64_t t = 0; t < d.modulus; ++t) {
        pts.push_back({Scalar::integer(1, d), Scalar::modular(static_cast<std::int64_t>(t), d.modulus)});
    }
    return pts;
}

MultiPoly linear(const BinaryPoint& q) { return veronese(1, q).toPoly(); }

void insertForm(PointSet& s, const MultiPoly& f) { s.insert(BinaryForm::fromPoly(f).apolarCoordinates()); }

bool isSquare(std::uint64_t v, std::uint64_t p) { return v % p == 0 || powmod(v, (p - 1) / 2, p) == 1; }

// Monic irreducible t0^2 + b t0 t1 + c t1^2; their squares are the double
// conjugate pairs over F_{p^2}.
std::vector<MultiPoly> irreducibleQuadratics(ScalarDomain d) {
    const std::uint64_t p = d.modulus;
    std::vector<MultiPoly> out;
    for (std::uint64_t b = 0; b < p; ++b) {
        for (std::uint64_t c = 0; c < p; ++c) {
            if (isSquare((b * b % p + 4 * ((p - c) % p)) % p, p)) continue;
            out.push_back(BinaryForm({Scalar::integer(1, d), Scalar::integer(static_cast<long>(b), d),
                                      Scalar::integer(static_cast<long>(c), d)})
                              .toPoly());
        }
    }
    return out;
}

}  // namespace

PointSet stratumPoints(Stratum s, std::uint64_t p) {
    const ScalarDomain d = goodPrime(p);
    const auto line = lineOver(d);
    auto k = [d](long v) { return Scalar::integer(v, d); };

    switch (s) {
        case Stratum::X4: {
            PointSet out(p, 4);
            for (const auto& q : line) out.insert(veronese(4, q).apolarCoordinates());
            return out;
        }
        case Stratum::TBAR: {
            PointSet out(p, 4);
            for (const auto& q : line) {
                for (const auto& r : line) insertForm(out, linear(q).pow(3) * linear(r));
            }
            return out;
        }
        case Stratum::NBAR: {
            PointSet out(p, 4);
            for (std::size_t i = 0; i < line.size(); ++i) {
                for (std::size_t j = i; j < line.size(); ++j) insertForm(out, (linear(line[i]) * linear(line[j])).pow(2));
            }
            for (const auto& g : irreducibleQuadratics(d)) insertForm(out, g.pow(2));
            return out;
        }
        case Stratum::X2:
        case Stratum::X3:
        case Stratum::P1P: {
            const OsculatingFlag flag = osculatingFlag(4, {k(1), k(0)});
            PointSet out(p, 3);
            for (const auto& q : line) {
                const auto g = s == Stratum::X2   ? flag.conicCofactor(q)
                               : s == Stratum::X3 ? flag.cubicCofactor(q)
                                                  : flag.lineCofactor(q);
                const auto a = multiply(flag.inclusion, g);
                if (!a[4].isZero()) throw CertificationError("cofactor image left the osculating hyperplane");
                out.insert(std::span<const Scalar>(a.data(), 4));
            }
            return out;
        }
        case Stratum::SECANT: {
            // Quartics annihilated by an apolar quadric g: the catalecticant
            // kernel of each g in P^2 is a line of P(4).
            PointSet out(p, 4);
            const PointSet quadrics = projectivePoints(2, p);
            for (const auto& g : quadrics.points()) {
                ScalarMatrix m(3, 5, k(0));
                for (std::size_t i = 0; i < 3; ++i) {
                    for (std::size_t j = 0; j < 3; ++j) m(i, i + j) = k(g[j]);
                }
                const auto basis = nullspaceBasis(m);
                if (basis.size() != 2) throw CertificationError("catalecticant kernel is not a line");
                for (const auto& q : line) {
                    std::vector<Scalar> v;
                    for (std::size_t i = 0; i < 5; ++i) v.push_back(q.x0 * basis[0][i] + q.x1 * basis[1][i]);
                    out.insert(v);
                }
            }
            return out;
        }
        case Stratum::DISCRIMINANT: {
            PointSet out(p, 4);
            const PointSet quadrics = projectivePoints(2, p);
            for (const auto& q : line) {
                const MultiPoly sq = linear(q).pow(2);
                for (const auto& g : quadrics.points()) {
                    insertForm(out, sq * BinaryForm({k(g[0]), k(g[1]), k(g[2])}).toPoly());
                }
            }
            for (const auto& g : irreducibleQuadratics(d)) insertForm(out, g.pow(2));
            return out;
        }
    }
    throw PreconditionError("unknown stratum");
}

SetComparison compareSets(const PointSet& a, const PointSet& b) {
    if (a.prime() != b.prime() || a.dimension() != b.dimension()) {
        throw PreconditionError("compared point sets live in different projective spaces");
    }
    SetComparison out{a == b, PointSet(a.prime(), a.dimension()), PointSet(b.prime(), b.dimension())};
    for (const auto& pt : a.points()) {
        if (!b.contains(pt)) out.onlyA.insert(std::vector<std::uint64_t>(pt.begin(), pt.end()));
    }
    for (const auto& pt : b.points()) {
        if (!a.contains(pt)) out.onlyB.insert(std::vector<std::uint64_t>(pt.begin(), pt.end()));
    }
    return out;
}

}  // namespace folia
