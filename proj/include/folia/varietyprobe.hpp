#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Normalized homogeneous coordinates over F_p (first nonzero entry 1).
using ProjectivePoint = std::vector<std::uint32_t>;

/// Finite set of points of P^n(F_p), kept sorted and duplicate free.
class PointSet {
   public:
    PointSet(std::uint64_t prime, std::size_t dimension);

    std::uint64_t prime() const noexcept { return prime_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
    bool contains(const ProjectivePoint& p) const;

    /// Normalizes p (any nonzero vector) and adds it.
    void insert(std::vector<std::uint64_t> coords);
    void insert(std::span<const Scalar> coords);

    PointSet unite(const PointSet& other) const;
    PointSet intersect(const PointSet& other) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

   private:
    void requireSameAmbient(const PointSet& other) const;

    std::uint64_t prime_;
    std::size_t dimension_;
    std::vector<ProjectivePoint> points_;
};

std::string to_string(const ProjectivePoint& p);

/// (p^(n+1) - 1) / (p - 1)
std::uint64_t projectiveSpaceSize(std::size_t n, std::uint64_t p);

/// Default ceiling for enumerations, a little above |P^4(F_31)|.
inline constexpr std::uint64_t kPointCap = 1'000'000;

/// Every point of P^n(F_p) in lexicographic order; needs p >= 5 prime.
PointSet projectivePoints(std::size_t n, std::uint64_t p, std::uint64_t cap = kPointCap);

/// Common zeros in P^n(F_p) of homogeneous polynomials of arity n + 1.
/// Refuses primes dividing a coefficient denominator. The point space is
/// split across worker threads.
PointSet zeroLocus(std::span<const MultiPoly> polys, std::size_t n, std::uint64_t p,
                   std::uint64_t cap = kPointCap);

/// Orbit strata. X4, TBAR, NBAR, SECANT, DISCRIMINANT live in P(4) with
/// apolar coordinates; X2, X3, P1P live in the osculating hyperplane at
/// p = [1:0], i.e. (a4 = 0) with coordinates a0..a3.
enum class Stratum { X4, TBAR, NBAR, X2, X3, P1P, SECANT, DISCRIMINANT };
std::string to_string(Stratum s);

/// Image of the stratum's parametrization over F_p, degenerate parameters
/// included.
PointSet stratumPoints(Stratum s, std::uint64_t p);

struct SetComparison {
    bool equal;
    PointSet onlyA;
    PointSet onlyB;
};
SetComparison compareSets(const PointSet& a, const PointSet& b);

/// Primes used by default for certificates.
inline const std::vector<std::uint64_t> kDefaultPrimes{5, 7, 11, 13};

}  // namespace folia
