#include "polystab/linalg.hpp"

#include <cassert>
#include <cstdlib>

namespace polystab {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    assert(a.cols() == b.rows());
    RatMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Rational dot(const RatVec& a, const RatVec& b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Pivot pick: nonzero entry with the largest |numerator| in the column
// (any nonzero pivot is valid; this only bounds intermediate swell).
std::size_t pick_pivot(const RatMat& m, std::size_t col, std::size_t from) {
    std::size_t best = m.rows();
    BigInt best_mag = 0;
    for (std::size_t r = from; r < m.rows(); ++r) {
        const Rational& v = m.at(r, col);
        if (v == 0) continue;
        BigInt mag = abs(v.get_num());
        if (best == m.rows() || mag > best_mag) {
            best = r;
            best_mag = mag;
        }
    }
    return best;
}

void swap_rows(RatMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

}  // namespace

std::optional<RatVec> try_solve(const RatMat& a, const RatVec& rhs) {
    assert(a.rows() == a.cols() && rhs.size() == a.rows());
    const std::size_t n = a.rows();
    RatMat m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n) = rhs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = pick_pivot(m, col, col);
        if (piv == m.rows()) return std::nullopt;
        swap_rows(m, col, piv);
        const Rational pv = m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / pv;
            m.at(r, col) = 0;
            for (std::size_t j = col + 1; j <= n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    RatVec x(n, Rational(0));
    for (std::size_t ri = n; ri-- > 0;) {
        Rational s = m.at(ri, n);
        for (std::size_t j = ri + 1; j < n; ++j) s -= m.at(ri, j) * x[j];
        x[ri] = s / m.at(ri, ri);
    }
    return x;
}

RatVec solve_linear_system(const RatMat& a, const RatVec& rhs) {
    auto x = try_solve(a, rhs);
    if (!x) throw SingularMatrix("solve_linear_system: rank-deficient matrix");
    return *x;
}

Rational determinant(const RatMat& a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    // Clear row denominators, then fraction-free Bareiss on integers.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
        scale /= Rational(l);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = a.at(i, j);
            m[i][j] = v.get_num() * (l / v.get_den());
        }
    }

    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Rational det = Rational(m[n - 1][n - 1]) * scale;
    return sign < 0 ? Rational(-det) : det;
}

std::size_t rank(const RatMat& a) {
    RatMat m = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = pick_pivot(m, col, r);
        if (piv == m.rows()) continue;
        swap_rows(m, r, piv);
        const Rational pv = m.at(r, col);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / pv;
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<RatVec> nullspace(const RatMat& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    RatMat m = a;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = pick_pivot(m, col, r);
        if (piv == m.rows()) continue;
        swap_rows(m, r, piv);
        Rational pv = m.at(r, col);
        for (std::size_t j = col; j < cols; ++j) m.at(r, j) /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace polystab
