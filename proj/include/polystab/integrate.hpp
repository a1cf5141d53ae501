// Exact integration of degree-<=2 polynomials over rational polytopes, plus
// boundary-measure (dsigma) integrals on reflexive polytopes.
//
// The engine evaluates the pulling triangulation pyramid-by-pyramid in closed
// form: for a cone over a base face, int_0^1 u^(d+m) du folds the simplex
// sums of a whole sub-triangulation into the base face's moments, so the
// result equals the per-simplex sum exactly at a fraction of the cost. The
// per-simplex accumulators are also provided and the two are checked against
// each other in the tests.
#pragma once

#include "polystab/triangulate.hpp"

namespace polystab {

struct BodyMoments {
    Rational vol;   // int_P 1 dv
    RatVec first;   // b_i = int_P x_i dv
    RatMat second;  // c_ij = int_P x_i x_j dv
};

// g(x) = <coeff, x> + constant
struct AffineForm {
    RatVec coeff;
    Rational constant;

    Rational eval(const RatVec& x) const { return dot(coeff, x) + constant; }
};

// represents g(x) * h(x)
struct QuadraticIntegrand {
    AffineForm g, h;
};

// f(x) = max(0, <u,x> + d)
struct SimplePLFunction {
    RatVec u;
    Rational d;
};

// Closed-form moments over the pulling triangulation. Zero moments for empty
// or lower-dimensional input.
BodyMoments polytope_moments(const Polytope& p, ApexRule rule = ApexRule::LexMin);

Rational volume(const Polytope& p);
RatVec moment_first(const Polytope& p);
RatMat moment_second(const Polytope& p);

Rational integrate_affine_product(const Polytope& p, const QuadraticIntegrand& q);
Rational integrate_affine_product(const BodyMoments& m, const QuadraticIntegrand& q);

// Per-simplex reference accumulators (same triangulation, summed termwise).
Rational volume_by_simplex_sum(const Polytope& p, ApexRule rule = ApexRule::LexMin);
BodyMoments moments_by_simplex_sum(const Polytope& p, ApexRule rule = ApexRule::LexMin);

// --- boundary measure on reflexive polytopes (facet offsets all 1) ---

// Vol(dP) in the dsigma measure; equals n * Vol(P) on reflexive input.
Rational boundary_volume(const Polytope& p);
// int_{dP} x_i dsigma
RatVec boundary_moment_first(const Polytope& p);

// Interior and boundary integrals of a simple PL function f = max(0, l):
//   f_dv       = int_P f dv              (= int over the cut region of l)
//   xf_dv[i]   = int_P x_i f dv
//   f_dsigma   = int_{dP} f dsigma
// The cut region (p intersected with {l >= 0}) is returned alongside.
struct PLSplit {
    CutResult cut;
    Rational f_dv;
    RatVec xf_dv;
    Rational f_dsigma;
};
PLSplit integrate_pl(const Polytope& p, const SimplePLFunction& f);
// same, reusing a precomputed cut of p by {l >= 0}
PLSplit integrate_pl(const Polytope& p, const SimplePLFunction& f, CutResult cut);

}  // namespace polystab
