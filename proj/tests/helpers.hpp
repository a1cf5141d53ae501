#pragma once

#include "polystab/families.hpp"
#include "polystab/integrate.hpp"

#include <random>

namespace testutil {

using namespace polystab;

inline Halfspace hs(std::initializer_list<long> normal, long offset) {
    return {rat_vec(normal), Rational(offset)};
}

// [-1,1]^n
inline Polytope cube(int n) {
    std::vector<Halfspace> out;
    for (int i = 0; i < n; ++i) {
        RatVec up(static_cast<std::size_t>(n), Rational(0)), dn(static_cast<std::size_t>(n), Rational(0));
        up[static_cast<std::size_t>(i)] = 1;
        dn[static_cast<std::size_t>(i)] = -1;
        out.push_back({up, Rational(1)});
        out.push_back({dn, Rational(1)});
    }
    return enumerate_vertices(out, n);
}

inline Polytope moment_polytope(int r) { return polar_dual(xr_fano_polytope(r)); }

inline Polytope pn_moment(int n) { return polar_dual(projective_space_polytope(n)); }

// random integer matrix with |det| = 1, built from elementary operations
inline RatMat random_unimodular(std::mt19937& rng, int n, int ops = 20) {
    RatMat a = RatMat::identity(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> row(0, n - 1), op(0, 2), sgn(0, 1);
    for (int t = 0; t < ops; ++t) {
        int i = row(rng), j = row(rng);
        switch (op(rng)) {
            case 0:
                if (i != j) {
                    Rational s = sgn(rng) ? 1 : -1;
                    for (int c = 0; c < n; ++c)
                        a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) +=
                            s * a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(c));
                }
                break;
            case 1:
                for (int c = 0; c < n; ++c)
                    std::swap(a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)),
                              a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(c)));
                break;
            default:
                for (int c = 0; c < n; ++c)
                    a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
                        -a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c));
        }
    }
    return a;
}

inline RatVec apply_matrix(const RatMat& a, const RatVec& x) {
    RatVec y(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
    return y;
}

// image A * P via the transformed H-representation
inline Polytope transform(const Polytope& p, const RatMat& a_inv) {
    std::vector<Halfspace> out;
    for (const auto& f : p.facets) {
        RatVec u(f.normal.size(), Rational(0));
        // row vector u^T A^{-1}
        for (std::size_t j = 0; j < u.size(); ++j)
            for (std::size_t i = 0; i < u.size(); ++i) u[j] += f.normal[i] * a_inv.at(i, j);
        out.push_back({std::move(u), f.offset});
    }
    return enumerate_vertices(out, p.dim);
}

inline RatMat inverse(const RatMat& a) {
    const std::size_t n = a.rows();
    RatMat inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        RatVec e(n, Rational(0));
        e[c] = 1;
        RatVec col = solve_linear_system(a, e);
        for (std::size_t r = 0; r < n; ++r) inv.at(r, c) = col[r];
    }
    return inv;
}

}  // namespace testutil
