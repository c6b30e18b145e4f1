#pragma once

#include <vector>

#include "folia/poly.hpp"

namespace folia {

/// Row echelon data of a scalar matrix, produced by fraction-free
/// Gauss-Jordan elimination (integer rows over Q, plain elimination over F_p).
struct EchelonForm {
    /// Reduced rows; row r has its pivot in pivotColumns[r] and zeros in
    /// every other pivot column.
    ScalarMatrix rows;
    std::vector<std::size_t> pivotColumns;

    std::size_t rank() const noexcept { return pivotColumns.size(); }
};

EchelonForm echelonForm(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column. Over Q every vector is
/// scaled to a primitive integer vector.
std::vector<std::vector<Scalar>> nullspaceBasis(const ScalarMatrix& m);

std::vector<Scalar> multiply(const ScalarMatrix& m, std::span<const Scalar> v);

/// Determinant of a square polynomial matrix by Bareiss fraction-free
/// elimination (every intermediate division is exact).
MultiPoly determinant(Matrix<MultiPoly> m);

}  // namespace folia
