// The potential function theta_P and the Donaldson-Futaki functional
//   L_P(f) = int_{dP} f dsigma - int_P (Sbar + theta_P) f dv.
#pragma once

#include "polystab/integrate.hpp"

namespace polystab {

struct SingularMomentMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// theta(x) = <a, x> + c
struct AffinePotential {
    RatVec a;
    Rational c;

    Rational eval(const RatVec& x) const { return dot(a, x) + c; }
};

// Vol(dP) / Vol(P); equals dim(P) exactly on reflexive input.
Rational average_scalar_curvature(const Polytope& p);

// The unique (a, c) with L_P(1) = 0 and L_P(x_i) = 0: solve
//   sum_j (c_ij - b_i b_j / vol) a_j = b_i,   c = -<a, b> / vol.
// Both identities are re-checked exactly after the solve.
AffinePotential solve_potential(const Polytope& p);
AffinePotential solve_potential(const BodyMoments& m);

// Variant solve with the rank-one correction built from the moment vector
// shifted one slot (volume prepended): (c_ij - b'_i b'_j / vol) a_j = b_i
// with b' = (vol-style b_0, b_1, ..., b_{n-1}). This is NOT the potential
// function (it does not satisfy L_P(x_i) = 0); it reproduces the published
// reference dataset for the 10-dimensional family, whose potential was
// evidently produced by exactly this index slip. Kept for `verify-paper`.
AffinePotential shifted_reference_potential(const BodyMoments& m);

Rational donaldson_futaki(const Polytope& p, const AffinePotential& theta, const AffineForm& f);
Rational donaldson_futaki(const Polytope& p, const AffinePotential& theta,
                          const SimplePLFunction& f);

// Exact max of theta over the vertices and the lex-smallest attaining vertex.
std::pair<Rational, RatVec> mabuchi_constant(const Polytope& p, const AffinePotential& theta);

}  // namespace polystab
