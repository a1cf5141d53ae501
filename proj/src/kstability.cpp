#include "polystab/kstability.hpp"

#include <chrono>

namespace polystab {

CutResult pminus(const Polytope& p, const AffinePotential& theta) {
    return intersect_halfspace(p, Halfspace{theta.a, theta.c - 1});
}

CriterionResult instability_test(const Polytope& p, const AffinePotential& theta) {
    return instability_test(p, theta, pminus(p, theta));
}

CriterionResult instability_test(const Polytope& p, const AffinePotential& theta,
                                 const CutResult& cut) {
    (void)p;
    CriterionResult r;
    r.lhs = 1 - theta.c;
    r.pminus_vertex_count = cut.region.vertices.size();
    if (!cut.region.full_dimensional()) {
        r.applicable = false;
        r.vol_pminus = 0;
        r.integral = 0;
        return r;
    }
    BodyMoments m = polytope_moments(cut.region);
    r.vol_pminus = m.vol;
    RatVec neg_a(theta.a.size());
    for (std::size_t i = 0; i < theta.a.size(); ++i) neg_a[i] = -theta.a[i];
    AffineForm one_minus_theta{neg_a, 1 - theta.c};
    r.integral = integrate_affine_product(m, QuadraticIntegrand{one_minus_theta, one_minus_theta});
    r.applicable = r.vol_pminus > 0;
    if (r.applicable) {
        r.rhs = r.integral / r.vol_pminus;
        r.satisfied = r.lhs < r.rhs;
    }
    return r;
}

StabilityCertificate analyze(const Polytope& input, InputKind kind) {
    auto t0 = std::chrono::steady_clock::now();
    StabilityCertificate cert;
    cert.input_kind = (kind == InputKind::FanoPolytope) ? "fano_polytope" : "moment_polytope";

    Polytope moment;
    if (kind == InputKind::FanoPolytope) {
        Polytope delta = input;
        if (!is_reflexive(delta)) throw NotReflexive("analyze: Fano polytope is not reflexive");
        cert.has_fano_block = true;
        cert.fano_vertices = delta.vertices.size();
        cert.fano_facets = delta.facets.size();
        cert.fano_reflexive = true;
        cert.fano_smooth = is_smooth_fano(delta);
        if (!cert.fano_smooth)
            cert.warning = "input is reflexive but not smooth; analysis proceeds";
        moment = polar_dual(delta);
    } else {
        moment = input;
        if (!is_reflexive(moment)) throw NotReflexive("analyze: moment polytope is not reflexive");
    }
    cert.dim = moment.dim;
    cert.moment_vertices = moment.vertices.size();
    cert.moment_facets = moment.facets.size();
    cert.moment_reflexive = true;
    cert.moment_smooth = true;
    for (std::size_t v = 0; v < moment.vertices.size() && cert.moment_smooth; ++v) {
        std::vector<std::size_t> tight;
        moment.vertex_tight[v].for_each([&](std::size_t j) { tight.push_back(j); });
        if (tight.size() != static_cast<std::size_t>(moment.dim)) {
            cert.moment_smooth = false;
            break;
        }
        RatMat mm(tight.size(), tight.size());
        for (std::size_t i = 0; i < tight.size(); ++i)
            for (std::size_t j = 0; j < tight.size(); ++j)
                mm.at(i, j) = moment.facets[tight[i]].normal[j];
        Rational d = determinant(mm);
        if (d != 1 && d != -1) cert.moment_smooth = false;
    }

    cert.moments = polytope_moments(moment);
    cert.sbar = boundary_volume(moment) / cert.moments.vol;
    cert.potential = solve_potential(cert.moments);
    auto [m, arg] = mabuchi_constant(moment, cert.potential);
    cert.mabuchi = m;
    cert.mabuchi_argmax = arg;
    cert.sufficient_polystable = (m <= 1);
    cert.ding_unstable = (m > 1);
    CutResult cut = pminus(moment, cert.potential);
    cert.criterion = instability_test(moment, cert.potential, cut);

    cert.destabilizer_desc = "max(0, theta - 1)";
    SimplePLFunction destab{cert.potential.a, cert.potential.c - 1};
    PLSplit split = integrate_pl(moment, destab, std::move(cut));
    cert.destabilizer_value =
        split.f_dsigma -
        ((cert.sbar + cert.potential.c) * split.f_dv + dot(cert.potential.a, split.xf_dv));

    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

}  // namespace polystab
