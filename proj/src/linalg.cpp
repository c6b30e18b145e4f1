#include "folia/linalg.hpp"

#include "folia/error.hpp"

namespace folia {

namespace {

ScalarDomain matrixDomain(const ScalarMatrix& m) {
    ScalarDomain d{};
    bool seen = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& x : m.row(r)) {
            if (!seen) {
                d = x.domain();
                seen = true;
            } else if (x.domain() != d) {
                throw DomainMismatch("matrix mixes coefficient fields");
            }
        }
    }
    return d;
}

using IntRow = std::vector<mpz_class>;

void makePrimitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& x : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Integer rows, each cleared of denominators and made primitive.
std::vector<IntRow> integerRows(const ScalarMatrix& m) {
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class den = 1;
        for (const auto& x : m.row(r)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).rational();
            rows[r][c] = q.get_num() * (den / q.get_den());
        }
        makePrimitive(rows[r]);
    }
    return rows;
}

EchelonForm echelonOverIntegers(const ScalarMatrix& m) {
    auto rows = integerRows(m);
    EchelonForm out;
    std::size_t pivotRow = 0;
    for (std::size_t c = 0; c < m.cols() && pivotRow < rows.size(); ++c) {
        // Smallest nonzero entry keeps the cross-multiplication growth down.
        std::size_t best = rows.size();
        for (std::size_t r = pivotRow; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0) continue;
            if (best == rows.size() || mpz_cmpabs(rows[r][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[pivotRow], rows[best]);
        if (sgn(rows[pivotRow][c]) < 0) {
            for (auto& x : rows[pivotRow]) x = -x;
        }
        const IntRow& piv = rows[pivotRow];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivotRow || sgn(rows[r][c]) == 0) continue;
            const mpz_class factor = rows[r][c];
            for (std::size_t k = 0; k < m.cols(); ++k) rows[r][k] = piv[c] * rows[r][k] - factor * piv[k];
            makePrimitive(rows[r]);
        }
        out.pivotColumns.push_back(c);
        ++pivotRow;
    }
    out.rows = ScalarMatrix(out.pivotColumns.size(), m.cols());
    for (std::size_t r = 0; r < out.pivotColumns.size(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.rows(r, c) = Scalar(rows[r][c]);
    }
    return out;
}

EchelonForm echelonOverField(const ScalarMatrix& m, ScalarDomain d) {
    ScalarMatrix a = m;
    EchelonForm out;
    std::size_t pivotRow = 0;
    for (std::size_t c = 0; c < a.cols() && pivotRow < a.rows(); ++c) {
        std::size_t r = pivotRow;
        while (r < a.rows() && a(r, c).isZero()) ++r;
        if (r == a.rows()) continue;
        a.swapRows(pivotRow, r);
        const Scalar inv = a(pivotRow, c).inverse();
        for (std::size_t k = 0; k < a.cols(); ++k) a(pivotRow, k) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivotRow || a(i, c).isZero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(pivotRow, k);
        }
        out.pivotColumns.push_back(c);
        ++pivotRow;
    }
    out.rows = ScalarMatrix(out.pivotColumns.size(), a.cols(), Scalar::integer(0, d));
    for (std::size_t r = 0; r < out.pivotColumns.size(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.rows(r, c) = a(r, c);
    }
    return out;
}

}  // namespace

EchelonForm echelonForm(const ScalarMatrix& m) {
    const ScalarDomain d = matrixDomain(m);
    return d.isRational() ? echelonOverIntegers(m) : echelonOverField(m, d);
}

std::size_t rank(const ScalarMatrix& m) { return echelonForm(m).rank(); }

std::vector<std::vector<Scalar>> nullspaceBasis(const ScalarMatrix& m) {
    const ScalarDomain d = matrixDomain(m);
    const EchelonForm ef = echelonForm(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto c : ef.pivotColumns) isPivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (isPivot[f]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::integer(0, d));
        v[f] = Scalar::integer(1, d);
        for (std::size_t r = 0; r < ef.rank(); ++r) {
            v[ef.pivotColumns[r]] = -ef.rows(r, f) / ef.rows(r, ef.pivotColumns[r]);
        }
        if (d.isRational()) {
            mpz_class den = 1;
            for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
            IntRow iv(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) iv[i] = v[i].rational().get_num() * (den / v[i].rational().get_den());
            makePrimitive(iv);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = Scalar(iv[i]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> multiply(const ScalarMatrix& m, std::span<const Scalar> v) {
    if (v.size() != m.cols()) throw ArityMismatch("matrix-vector size mismatch");
    const ScalarDomain d = v.empty() ? ScalarDomain{} : v.front().domain();
    std::vector<Scalar> out(m.rows(), Scalar::integer(0, d));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).isZero() && !v[c].isZero()) out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

MultiPoly determinant(Matrix<MultiPoly> m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw PreconditionError("determinant of an empty matrix");
    const std::size_t arity = m(0, 0).arity();
    const ScalarDomain d = m(0, 0).domain();
    MultiPoly previous = MultiPoly::constant(arity, Scalar::integer(1, d));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).isZero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).isZero()) ++r;
            if (r == n) return MultiPoly(arity, d);
            m.swapRows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const MultiPoly numer = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = exactDivide(numer, previous);
                if (!q) throw CertificationError("Bareiss step was not exact");
                m(i, j) = std::move(*q);
            }
            m(i, k) = MultiPoly(arity, d);
        }
        previous = m(k, k);
    }
    MultiPoly det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

}  // namespace folia
