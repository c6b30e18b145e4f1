#pragma once

#include <string>
#include <vector>

#include "folia/exterior.hpp"

namespace folia {

/// 2Q dC - 3C dQ = buildRational(C, Q) on P(4), variables a0..a4 (apolar
/// coordinates). Its leaves are the level sets of j' = Q^3 / C^2.
DiffForm buildOmega4();

/// Pullback along an injective linear map; inclusion has one row per
/// coordinate of omega's space and one column per coordinate of H.
DiffForm restrictToHyperplane(const DiffForm& omega, const ScalarMatrix& inclusion);

struct ExceptionalReport {
    DiffForm omega4;
    DiffForm omegaH;
    /// Linear form cutting P2_p out of H, normalized.
    MultiPoly factor;
    DiffForm omegaBar;
    /// Coordinates (a0..a3) of H at p = [1:0] mapped into P(4).
    ScalarMatrix inclusion;
    bool omega4Descends = false;
    bool omega4Integrable = false;
    bool factorIsFlagPlane = false;
    bool omegaBarDescends = false;
    bool omegaBarIntegrable = false;
    int omegaBarDegree = -1;
};

/// buildOmega4 -> restrict to the osculating hyperplane at [1:0] -> saturate.
/// Throws CertificationError naming the stage that failed.
ExceptionalReport deriveOmegaBar();

/// The degree-two form on P^3 in the printed coordinates x0..x3.
DiffForm paperOmegaBar();

struct AffineFields {
    PolyVectorField x;
    PolyVectorField y;
    PolyVectorField r;
    DiffForm omega;
};
/// X = sum i z_i d_i, Y = sum z_{i-1} d_i, the Euler field and the volume
/// form on n coordinates; [X, Y] = -Y is checked.
AffineFields affineFields(std::size_t n);

/// i_X i_Y i_R Omega
DiffForm contractVolume(const PolyVectorField& x, const PolyVectorField& y);

struct TangentReport {
    std::size_t ambientDim = 0;
    std::size_t rawKernelDim = 0;
    std::size_t projectiveDim = 0;
    bool containsOmegaBar = false;
    /// Kernel basis as coefficient vectors (see tangentCoordinates).
    std::vector<std::vector<Scalar>> kernel;
};

/// Solves omegaBar ^ d eta + eta ^ d omegaBar = 0, i_R eta = 0 for eta with
/// degree-3 coefficients on four variables. Both assembly routes (Euler rows
/// in the system, or a parametrized Euler kernel first) must agree.
TangentReport tangentSystemDim(const DiffForm& omegaBar);

/// Coefficient vector of a degree-3 1-form on four variables: 20 entries per
/// dz_i, monomials in descending grlex order.
std::vector<Scalar> tangentCoordinates(const DiffForm& eta);

/// eta in the span of report.kernel.
bool kernelContains(const TangentReport& report, const DiffForm& eta);

struct DoubleTangency {
    /// c with D(a0..a3, 0) = c a3^2 Disc(a0, 4a1, 6a2, 4a3).
    Scalar constant;
    bool identityHolds = false;
    bool cubeDivides = false;
    bool ok() const noexcept { return identityHolds && !cubeDivides; }
};
DoubleTangency checkDoubleTangency();

}  // namespace folia
