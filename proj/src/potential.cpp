#include "polystab/potential.hpp"

#include <cassert>

namespace polystab {

Rational average_scalar_curvature(const Polytope& p) {
    return boundary_volume(p) / volume(p);
}

namespace {

AffinePotential solve_with_gram(const BodyMoments& m, const RatVec& gram_b) {
    const std::size_t n = m.first.size();
    if (m.vol == 0) throw SingularMomentMatrix("solve_potential: zero volume");
    RatMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = m.second.at(i, j) - gram_b[i] * gram_b[j] / m.vol;
    auto x = try_solve(a, m.first);
    if (!x) throw SingularMomentMatrix("solve_potential: singular moment matrix");
    AffinePotential theta;
    theta.a = std::move(*x);
    theta.c = -dot(theta.a, m.first) / m.vol;
    return theta;
}

}  // namespace

AffinePotential solve_potential(const BodyMoments& m) {
    AffinePotential theta = solve_with_gram(m, m.first);
    // defining equations, re-checked exactly after the solve
    const std::size_t n = m.first.size();
    if (dot(theta.a, m.first) + theta.c * m.vol != 0)  // L_P(1) = 0
        throw std::logic_error("solve_potential: L_P(1) != 0 after solve");
    for (std::size_t i = 0; i < n; ++i) {
        Rational r = m.first[i] - theta.c * m.first[i];
        for (std::size_t j = 0; j < n; ++j) r -= theta.a[j] * m.second.at(i, j);
        if (r != 0)  // L_P(x_i) = 0
            throw std::logic_error("solve_potential: L_P(x_i) != 0 after solve");
    }
    return theta;
}

AffinePotential solve_potential(const Polytope& p) {
    Polytope q = p;
    if (!is_reflexive(q)) throw NotReflexive("solve_potential: input not reflexive");
    return solve_potential(polytope_moments(p));
}

AffinePotential shifted_reference_potential(const BodyMoments& m) {
    RatVec shifted(m.first.size());
    shifted[0] = m.vol;
    for (std::size_t i = 1; i < m.first.size(); ++i) shifted[i] = m.first[i - 1];
    return solve_with_gram(m, shifted);
}

Rational donaldson_futaki(const Polytope& p, const AffinePotential& theta, const AffineForm& f) {
    Rational vol_dp = boundary_volume(p);
    RatVec bm1 = boundary_moment_first(p);
    Rational bnd = f.constant * vol_dp + dot(f.coeff, bm1);

    BodyMoments m = polytope_moments(p);
    Rational sbar = vol_dp / m.vol;
    AffineForm weight{theta.a, sbar + theta.c};  // Sbar + theta
    Rational inter = integrate_affine_product(m, QuadraticIntegrand{weight, f});
    return bnd - inter;
}

Rational donaldson_futaki(const Polytope& p, const AffinePotential& theta,
                          const SimplePLFunction& f) {
    PLSplit s = integrate_pl(p, f);
    Rational sbar = average_scalar_curvature(p);
    Rational inter = (sbar + theta.c) * s.f_dv + dot(theta.a, s.xf_dv);
    return s.f_dsigma - inter;
}

std::pair<Rational, RatVec> mabuchi_constant(const Polytope& p, const AffinePotential& theta) {
    assert(!p.vertices.empty());
    Rational best = theta.eval(p.vertices[0]);
    std::size_t arg = 0;
    for (std::size_t k = 1; k < p.vertices.size(); ++k) {
        Rational v = theta.eval(p.vertices[k]);
        if (v > best) {  // vertices are lex-sorted: first max is lex-smallest
            best = v;
            arg = k;
        }
    }
    return {best, p.vertices[arg]};
}

}  // namespace polystab
