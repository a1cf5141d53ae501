#include "polystab/families.hpp"

#include <cassert>
#include <stdexcept>

namespace polystab {

namespace {

RatVec unit(int n, int i) {
    RatVec v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

std::vector<RatVec> xr_generators(int r) {
    if (r < 1) throw std::invalid_argument("xr_generators: r must be >= 1");
    const int n = 5 * r;
    std::vector<RatVec> u, v, w, y, z;
    for (int i = 0; i < 2 * r; ++i) u.push_back(unit(n, i));
    {
        RatVec last(static_cast<std::size_t>(n), Rational(0));
        for (int i = 0; i < 2 * r; ++i) last[static_cast<std::size_t>(i)] = -1;
        u.push_back(std::move(last));
    }
    for (int i = 0; i < 2 * r; ++i) v.push_back(unit(n, 2 * r + i));
    {
        RatVec last(static_cast<std::size_t>(n), Rational(0));
        for (int i = 2 * r; i < 4 * r; ++i) last[static_cast<std::size_t>(i)] = -1;
        v.push_back(std::move(last));
    }
    for (int i = 0; i < r; ++i) {
        w.push_back(unit(n, 4 * r + i));
        RatVec neg(static_cast<std::size_t>(n), Rational(0));
        neg[static_cast<std::size_t>(4 * r + i)] = -1;
        w.push_back(std::move(neg));
    }
    for (int i = 0; i < r; ++i) y.push_back(add(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]));
    for (int i = 0; i < r; ++i) z.push_back(add(w[static_cast<std::size_t>(2 * i)], y[static_cast<std::size_t>(i)]));

    std::vector<RatVec> out;
    out.reserve(static_cast<std::size_t>(8 * r + 2));
    for (auto* block : {&u, &v, &w, &y, &z})
        for (auto& g : *block) out.push_back(std::move(g));
    assert(out.size() == static_cast<std::size_t>(8 * r + 2));
    return out;
}

Polytope xr_fano_polytope(int r) {
    Polytope p = enumerate_facets(xr_generators(r));
    is_smooth_fano(p);  // caches reflexive + smooth flags
    return p;
}

Polytope projective_space_polytope(int n) {
    if (n < 1) throw std::invalid_argument("projective_space_polytope: n must be >= 1");
    std::vector<RatVec> pts;
    for (int i = 0; i < n; ++i) pts.push_back(unit(n, i));
    RatVec neg(static_cast<std::size_t>(n), Rational(-1));
    pts.push_back(std::move(neg));
    Polytope p = enumerate_facets(pts);
    is_smooth_fano(p);
    return p;
}

MoriRelationReport mori_relation_check(int r) {
    auto gen = xr_generators(r);
    const int n = 5 * r;
    // block offsets in generator order
    auto u = [&](int i) { return gen[static_cast<std::size_t>(i - 1)]; };                    // 1..2r+1
    auto v = [&](int i) { return gen[static_cast<std::size_t>(2 * r + 1 + i - 1)]; };        // 1..2r+1
    auto w1 = [&](int i) { return gen[static_cast<std::size_t>(4 * r + 2 + 2 * (i - 1))]; }; // w_{i,1}
    auto y = [&](int i) { return gen[static_cast<std::size_t>(6 * r + 2 + i - 1)]; };        // 1..r
    auto z = [&](int i) { return gen[static_cast<std::size_t>(7 * r + 2 + i - 1)]; };        // 1..r

    MoriRelationReport rep;
    for (int i = 1; i <= r; ++i) {
        MoriRelationReport::Entry e;
        e.i = i;
        RatVec lhs(static_cast<std::size_t>(n), Rational(0)), rhs(static_cast<std::size_t>(n), Rational(0));
        long lterms = 0, rterms = 0;
        for (int k = i + 1; k <= 2 * r + 1; ++k) { lhs = add(lhs, u(k)); ++lterms; }
        for (int k = 1; k <= i; ++k) { lhs = add(lhs, y(k)); ++lterms; }
        for (int k = 1; k <= i; ++k) { rhs = add(rhs, v(k)); ++rterms; }
        e.first_holds = (lhs == rhs);
        e.first_degree = lterms - rterms;

        RatVec lhs2(static_cast<std::size_t>(n), Rational(0)), rhs2(static_cast<std::size_t>(n), Rational(0));
        long l2 = 0, r2 = 0;
        for (int k = r + 1; k <= 2 * r + 1; ++k) { lhs2 = add(lhs2, u(k)); ++l2; }
        for (int k = i + 1; k <= r; ++k) { lhs2 = add(lhs2, y(k)); ++l2; }
        for (int k = 1; k <= i; ++k) { lhs2 = add(lhs2, z(k)); ++l2; }
        for (int k = 1; k <= r; ++k) { rhs2 = add(rhs2, v(k)); ++r2; }
        for (int k = 1; k <= i; ++k) { rhs2 = add(rhs2, w1(k)); ++r2; }
        e.second_holds = (lhs2 == rhs2);
        e.second_degree = l2 - r2;

        if (!e.first_holds || !e.second_holds || e.first_degree != 2 * r + 1 - i ||
            e.second_degree != r + 1 - i)
            rep.all_hold = false;
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace polystab
