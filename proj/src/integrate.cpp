#include "polystab/integrate.hpp"

#include <cassert>
#include <memory>
#include <unordered_map>

namespace polystab {

namespace {

struct FaceMoments {
    Rational I0;
    RatVec I1;
    std::vector<Rational> I2;  // packed upper triangle, (i,j) with i <= j
};

inline std::size_t tri_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + j;
}

// Moments of every face with respect to its own chart, assembled bottom-up
// along the pulling triangulation: the cone of a base face H from apex a
// contributes, for f of degree m in the cone parameter,
//   int_cone f = J * sum_m I_H[g_m] / (d + m),   d = dim of the cone,
// where J converts H's chart (extended by the apex direction) into the
// parent's chart.
class MomentEngine {
public:
    MomentEngine(FaceLattice& fl, ApexRule rule) : fl_(fl), rule_(rule), n_(static_cast<std::size_t>(fl.polytope().dim)) {}

    const FaceMoments& moments(FaceLattice::FaceId id) {
        auto it = memo_.find(id);
        if (it != memo_.end()) return *it->second;
        auto fm = std::make_unique<FaceMoments>();
        compute(id, *fm);
        auto [pos, _] = memo_.emplace(id, std::move(fm));
        return *pos->second;
    }

private:
    void compute(FaceLattice::FaceId id, FaceMoments& out) {
        const std::size_t n = n_;
        out.I0 = 0;
        out.I1.assign(n, Rational(0));
        out.I2.assign(n * (n + 1) / 2, Rational(0));
        const auto& f = fl_.face(id);
        if (f.dim == 0) {
            const RatVec& v = fl_.polytope().vertices[f.lexmin];
            out.I0 = 1;
            out.I1 = v;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) out.I2[tri_index(i, j, n)] = v[i] * v[j];
            return;
        }
        const int d = f.dim;
        const std::uint32_t apex_idx = fl_.apex(id, rule_);
        const RatVec a = fl_.polytope().vertices[apex_idx];
        fl_.with_chart(id);
        const auto subs = fl_.facets_of(id);
        for (auto sub : subs) {
            if (fl_.face(sub).verts.test(apex_idx)) continue;
            const FaceMoments& K = moments(sub);
            Rational J = chart_jacobian(id, sub, a);
            Rational w0 = J / d, w1 = J / (d + 1), w2 = J / (d + 2);
            out.I0 += w0 * K.I0;
            for (std::size_t i = 0; i < n; ++i)
                out.I1[i] += w0 * a[i] * K.I0 + w1 * (K.I1[i] - a[i] * K.I0);
            for (std::size_t i = 0; i < n; ++i) {
                Rational di = K.I1[i] - a[i] * K.I0;  // int (y_i - a_i)
                for (std::size_t j = i; j < n; ++j) {
                    Rational dj = K.I1[j] - a[j] * K.I0;
                    const Rational& kij = K.I2[tri_index(i, j, n)];
                    out.I2[tri_index(i, j, n)] +=
                        w0 * a[i] * a[j] * K.I0 + w1 * (a[j] * di + a[i] * dj) +
                        w2 * (kij - a[i] * K.I1[j] - a[j] * K.I1[i] + a[i] * a[j] * K.I0);
                }
            }
        }
    }

    // |det Z| with basis(parent)[sel] * Z = [basis(child) | base(child) - a][sel]
    Rational chart_jacobian(FaceLattice::FaceId parent, FaceLattice::FaceId child, const RatVec& a) {
        const auto& pf = fl_.with_chart(parent);
        const std::size_t d = static_cast<std::size_t>(fl_.face(parent).dim);
        const auto& cf = fl_.face(child);
        const RatVec& child_base = fl_.polytope().vertices[cf.lexmin];
        const std::vector<RatVec>* child_basis = nullptr;
        if (cf.dim > 0) {
            fl_.with_chart(child);
            child_basis = &fl_.face(child).basis;
        }
        RatMat m(d, d), rhs_m(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            std::size_t row = pf.sel[r];
            for (std::size_t c = 0; c < d; ++c) m.at(r, c) = pf.basis[c][row];
            for (std::size_t c = 0; c + 1 < d; ++c) rhs_m.at(r, c) = (*child_basis)[c][row];
            rhs_m.at(r, d - 1) = child_base[row] - a[row];
        }
        // solve columnwise, Z packed into rhs columns
        RatMat z(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            RatVec col(d);
            for (std::size_t r = 0; r < d; ++r) col[r] = rhs_m.at(r, c);
            RatVec zc = solve_linear_system(m, col);
            for (std::size_t r = 0; r < d; ++r) z.at(r, c) = zc[r];
        }
        Rational J = determinant(z);
        return J < 0 ? Rational(-J) : J;
    }

    FaceLattice& fl_;
    ApexRule rule_;
    std::size_t n_;
    std::unordered_map<FaceLattice::FaceId, std::unique_ptr<FaceMoments>> memo_;
};

BodyMoments zero_moments(std::size_t n) {
    BodyMoments m;
    m.vol = 0;
    m.first.assign(n, Rational(0));
    m.second = RatMat(n, n);
    return m;
}

BodyMoments unpack(const FaceMoments& fm, std::size_t n) {
    BodyMoments m;
    m.vol = fm.I0;
    m.first = fm.I1;
    m.second = RatMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.second.at(i, j) = fm.I2[tri_index(i, j, n)];
    return m;
}

// dsigma density of a facet hyperplane {<u,x> + c = 0} relative to the chart
// of a face lying in it: dv = dsigma ^ dl forces dsigma = |det([B | g])| dt
// for any g with <u, g> = 1.
Rational dsigma_density(FaceLattice& fl, FaceLattice::FaceId face_id, const Halfspace& h) {
    const auto& f = fl.with_chart(face_id);
    const std::size_t n = h.normal.size();
    RatVec g(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (h.normal[i] != 0) {
            g[i] = Rational(1) / h.normal[i];
            break;
        }
    }
    RatMat m(n, n);
    for (std::size_t c = 0; c + 1 < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) = f.basis[c][r];
    for (std::size_t r = 0; r < n; ++r) m.at(r, n - 1) = g[r];
    Rational rho = determinant(m);
    return rho < 0 ? Rational(-rho) : rho;
}

void require_reflexive_offsets(const Polytope& p, const char* who) {
    if (!p.full_dimensional()) throw NotReflexive(std::string(who) + ": not full-dimensional");
    for (const auto& f : p.facets)
        if (f.offset != 1) throw NotReflexive(std::string(who) + ": facet offset != 1");
}

}  // namespace

BodyMoments polytope_moments(const Polytope& p, ApexRule rule) {
    const std::size_t n = static_cast<std::size_t>(p.dim);
    if (!p.full_dimensional()) return zero_moments(n);
    FaceLattice fl(p);
    MomentEngine eng(fl, rule);
    return unpack(eng.moments(fl.top()), n);
}

Rational volume(const Polytope& p) { return polytope_moments(p).vol; }
RatVec moment_first(const Polytope& p) { return polytope_moments(p).first; }
RatMat moment_second(const Polytope& p) { return polytope_moments(p).second; }

Rational integrate_affine_product(const BodyMoments& m, const QuadraticIntegrand& q) {
    const std::size_t n = m.first.size();
    Rational out = q.g.constant * q.h.constant * m.vol;
    for (std::size_t i = 0; i < n; ++i)
        out += (q.g.constant * q.h.coeff[i] + q.h.constant * q.g.coeff[i]) * m.first[i];
    for (std::size_t i = 0; i < n; ++i) {
        if (q.g.coeff[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            out += q.g.coeff[i] * q.h.coeff[j] * m.second.at(i, j);
    }
    return out;
}

Rational integrate_affine_product(const Polytope& p, const QuadraticIntegrand& q) {
    if (!p.full_dimensional()) return 0;
    return integrate_affine_product(polytope_moments(p), q);
}

Rational volume_by_simplex_sum(const Polytope& p, ApexRule rule) {
    if (!p.full_dimensional()) return 0;
    FaceLattice fl(p);
    Rational total = 0;
    std::vector<RatVec> pts;
    for_each_top_simplex(fl, rule, [&](const std::vector<std::uint32_t>& idx) {
        pts.clear();
        for (auto k : idx) pts.push_back(p.vertices[k]);
        Rational v = simplex_signed_volume(pts);
        total += v < 0 ? Rational(-v) : v;
    });
    return total;
}

BodyMoments moments_by_simplex_sum(const Polytope& p, ApexRule rule) {
    const std::size_t n = static_cast<std::size_t>(p.dim);
    BodyMoments m = zero_moments(n);
    if (!p.full_dimensional()) return m;
    FaceLattice fl(p);
    std::vector<RatVec> pts;
    for_each_top_simplex(fl, rule, [&](const std::vector<std::uint32_t>& idx) {
        pts.clear();
        for (auto k : idx) pts.push_back(p.vertices[k]);
        Rational v = simplex_signed_volume(pts);
        if (v < 0) v = -v;
        m.vol += v;
        // int_S x_i = V * centroid; int_S x_i x_j = V/((n+1)(n+2)) *
        //   [ sum_k x_i^(k) x_j^(k) + (sum_k x_i^(k))(sum_k x_j^(k)) ]
        RatVec s(n, Rational(0));
        for (const auto& pt : pts)
            for (std::size_t i = 0; i < n; ++i) s[i] += pt[i];
        Rational w1 = v / static_cast<unsigned long>(n + 1);
        Rational w2 = v / static_cast<unsigned long>((n + 1) * (n + 2));
        for (std::size_t i = 0; i < n; ++i) m.first[i] += w1 * s[i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational q = 0;
                for (const auto& pt : pts) q += pt[i] * pt[j];
                Rational val = w2 * (q + s[i] * s[j]);
                m.second.at(i, j) += val;
                if (i != j) m.second.at(j, i) += val;
            }
    });
    return m;
}

Rational boundary_volume(const Polytope& p) {
    require_reflexive_offsets(p, "boundary_volume");
    FaceLattice fl(p);
    MomentEngine eng(fl, ApexRule::LexMin);
    Rational total = 0;
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
        auto id = fl.facet_face(j);
        total += dsigma_density(fl, id, p.facets[j]) * eng.moments(id).I0;
    }
    return total;
}

RatVec boundary_moment_first(const Polytope& p) {
    require_reflexive_offsets(p, "boundary_moment_first");
    const std::size_t n = static_cast<std::size_t>(p.dim);
    FaceLattice fl(p);
    MomentEngine eng(fl, ApexRule::LexMin);
    RatVec out(n, Rational(0));
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
        auto id = fl.facet_face(j);
        Rational rho = dsigma_density(fl, id, p.facets[j]);
        const auto& K = eng.moments(id);
        for (std::size_t i = 0; i < n; ++i) out[i] += rho * K.I1[i];
    }
    return out;
}

PLSplit integrate_pl(const Polytope& p, const SimplePLFunction& f) {
    return integrate_pl(p, f, intersect_halfspace(p, Halfspace{f.u, f.d}));
}

PLSplit integrate_pl(const Polytope& p, const SimplePLFunction& f, CutResult cut) {
    require_reflexive_offsets(p, "integrate_pl");
    const std::size_t n = static_cast<std::size_t>(p.dim);
    PLSplit out;
    out.cut = std::move(cut);
    out.f_dv = 0;
    out.xf_dv.assign(n, Rational(0));
    out.f_dsigma = 0;
    const Polytope& r = out.cut.region;
    if (!r.full_dimensional()) return out;  // f vanishes a.e. on P and dP

    FaceLattice fl(r);
    MomentEngine eng(fl, ApexRule::LexMin);
    const auto& M = eng.moments(fl.top());
    out.f_dv = f.d * M.I0;
    for (std::size_t i = 0; i < n; ++i) out.f_dv += f.u[i] * M.I1[i];
    for (std::size_t i = 0; i < n; ++i) {
        out.xf_dv[i] = f.d * M.I1[i];
        for (std::size_t j = 0; j < n; ++j)
            out.xf_dv[i] += f.u[j] * M.I2[tri_index(std::min(i, j), std::max(i, j), n)];
    }
    // boundary: the pieces of dP where l >= 0 are the region's facets that
    // came from facets of p (the cut facet itself is not part of dP)
    for (std::size_t g = 0; g < r.facets.size(); ++g) {
        if (out.cut.source[g] >= p.facets.size()) continue;
        auto id = fl.facet_face(g);
        Rational rho = dsigma_density(fl, id, r.facets[g]);
        const auto& K = eng.moments(id);
        Rational val = f.d * K.I0;
        for (std::size_t i = 0; i < n; ++i) val += f.u[i] * K.I1[i];
        out.f_dsigma += rho * val;
    }
    return out;
}

}  // namespace polystab
