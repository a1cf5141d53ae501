#include "polystab/triangulate.hpp"

#include <cassert>

namespace polystab {

Rational simplex_signed_volume(const std::vector<RatVec>& pts) {
    assert(!pts.empty());
    const std::size_t n = pts.size() - 1;
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = pts[i + 1][j] - pts[0][j];
    Rational det = determinant(m);
    BigInt fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
    return det / Rational(fact);
}

namespace {

void dfs(FaceLattice& fl, ApexRule rule, FaceLattice::FaceId id,
         std::vector<std::uint32_t>& chain,
         const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    const auto& f = fl.face(id);
    if (f.is_simplex) {
        std::size_t base = chain.size();
        f.verts.for_each([&](std::size_t v) { chain.push_back(static_cast<std::uint32_t>(v)); });
        fn(chain);
        chain.resize(base);
        return;
    }
    const std::uint32_t a = fl.apex(id, rule);
    chain.push_back(a);
    // copy: facets_of may reallocate the face pool during recursion
    const std::vector<FaceLattice::FaceId> subs = fl.facets_of(id);
    for (auto sub : subs) {
        if (fl.face(sub).verts.test(a)) continue;
        dfs(fl, rule, sub, chain, fn);
    }
    chain.pop_back();
}

}  // namespace

void for_each_top_simplex(FaceLattice& fl, ApexRule rule,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> chain;
    chain.reserve(static_cast<std::size_t>(fl.polytope().face_dim) + 1);
    dfs(fl, rule, fl.top(), chain, fn);
}

std::vector<Simplex> triangulate(const Polytope& p, ApexRule rule) {
    if (!p.full_dimensional())
        throw Degenerate("triangulate: polytope is not full-dimensional");
    FaceLattice fl(p);
    std::vector<Simplex> out;
    for_each_top_simplex(fl, rule, [&](const std::vector<std::uint32_t>& idx) {
        Simplex s;
        s.points.reserve(idx.size());
        for (auto k : idx) s.points.push_back(p.vertices[k]);
        s.signed_volume = simplex_signed_volume(s.points);
        out.push_back(std::move(s));
    });
    return out;
}

std::size_t count_top_simplices(const Polytope& p, ApexRule rule) {
    if (!p.full_dimensional()) return 0;
    FaceLattice fl(p);
    std::size_t n = 0;
    for_each_top_simplex(fl, rule, [&](const std::vector<std::uint32_t>&) { ++n; });
    return n;
}

}  // namespace polystab
