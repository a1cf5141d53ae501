#include <doctest.h>

#include "derived_expected.hpp"
#include "helpers.hpp"
#include "polystab/kstability.hpp"

using namespace polystab;
using namespace testutil;

TEST_CASE("average_scalar_curvature equals the dimension on reflexive input") {
    CHECK(average_scalar_curvature(cube(2)) == 2);
    CHECK(average_scalar_curvature(pn_moment(3)) == 3);
    CHECK(average_scalar_curvature(moment_polytope(1)) == 5);
}

TEST_CASE("solve_potential: symmetric polytopes have theta = 0") {
    for (Polytope p : {cube(2), cube(3), pn_moment(2)}) {
        AffinePotential t = solve_potential(p);
        for (const auto& a : t.a) CHECK(a == 0);
        CHECK(t.c == 0);
    }
    Polytope notrefl = enumerate_vertices({{rat_vec({1, 0}), Rational(2)},
                                           {rat_vec({-1, 0}), Rational(1)},
                                           {rat_vec({0, 1}), Rational(1)},
                                           {rat_vec({0, -1}), Rational(1)}},
                                          2);
    CHECK_THROWS_AS(solve_potential(notrefl), NotReflexive);
}

TEST_CASE("solve_potential on the r=1 family matches the independent oracle") {
    Polytope p = moment_polytope(1);
    AffinePotential t = solve_potential(p);
    for (int i = 0; i < 5; ++i)
        CHECK(t.a[static_cast<std::size_t>(i)] == parse_rational(derived::kX1A[i]));
    CHECK(t.c == parse_rational(derived::kX1C));
}

TEST_CASE("donaldson_futaki vanishes on affine functions, boundary path") {
    std::vector<Polytope> polys;
    polys.push_back(cube(1));
    polys.push_back(cube(2));
    polys.push_back(cube(3));
    polys.push_back(pn_moment(2));
    polys.push_back(moment_polytope(1));
    for (auto& p : polys) {
        AffinePotential t = solve_potential(p);
        const std::size_t n = static_cast<std::size_t>(p.dim);
        AffineForm one{RatVec(n, Rational(0)), Rational(1)};
        CHECK(donaldson_futaki(p, t, one) == 0);
        for (std::size_t i = 0; i < n; ++i) {
            AffineForm xi{RatVec(n, Rational(0)), Rational(0)};
            xi.coeff[i] = 1;
            CHECK(donaldson_futaki(p, t, xi) == 0);
        }
    }
}

TEST_CASE("mabuchi_constant basics") {
    Polytope sq = cube(2);
    AffinePotential zero{rat_vec({0, 0}), Rational(0)};
    auto [m, arg] = mabuchi_constant(sq, zero);
    CHECK(m == 0);
    CHECK(arg == sq.vertices[0]);  // lex-smallest tie-break

    AffinePotential t{rat_vec({1, 0}), rat(1, 2)};
    auto [m2, arg2] = mabuchi_constant(sq, t);
    CHECK(m2 == rat(3, 2));
    CHECK(arg2 == RatVec{rat(1), rat(-1)});  // lex-smallest among the two maximizers
}

TEST_CASE("mabuchi additivity on products") {
    Polytope p1 = pn_moment(1), p2 = pn_moment(2), x1 = moment_polytope(1);
    auto mab = [](const Polytope& p) {
        AffinePotential t = solve_potential(p);
        return mabuchi_constant(p, t).first;
    };
    Rational m1 = mab(p1), m2 = mab(p2), mx = mab(x1);
    CHECK(m1 == 0);
    CHECK(m2 == 0);
    CHECK(mab(cartesian_product(p1, p2)) == m1 + m2);
    CHECK(mab(cartesian_product(p1, x1)) == m1 + mx);
    CHECK(mab(cartesian_product(p2, x1)) == m2 + mx);
}

TEST_CASE("analyze: symmetric square is polystable, criterion not applicable") {
    StabilityCertificate cert = analyze(cube(2), InputKind::MomentPolytope);
    CHECK(cert.mabuchi == 0);
    CHECK(cert.sufficient_polystable);
    CHECK_FALSE(cert.ding_unstable);
    CHECK_FALSE(cert.criterion.applicable);
    CHECK(cert.criterion.pminus_vertex_count == 0);
    CHECK(cert.sbar == 2);
}

TEST_CASE("analyze: free sums of small families") {
    // moment polytope of the product = product of moment polytopes; M adds
    Polytope fs = free_sum(projective_space_polytope(1), projective_space_polytope(2));
    StabilityCertificate cert = analyze(fs, InputKind::FanoPolytope);
    CHECK(cert.dim == 3);
    CHECK(cert.mabuchi == 0);
    CHECK(cert.fano_smooth);

    Polytope fs2 = free_sum(xr_fano_polytope(1), projective_space_polytope(1));
    StabilityCertificate cert2 = analyze(fs2, InputKind::FanoPolytope);
    Polytope x1 = moment_polytope(1);
    AffinePotential t = solve_potential(x1);
    CHECK(cert2.mabuchi == mabuchi_constant(x1, t).first);
    CHECK(cert2.ding_unstable);
}

TEST_CASE("pminus is contained in P and its data is canonical") {
    Polytope p = moment_polytope(1);
    AffinePotential t = solve_potential(p);
    CutResult pm = pminus(p, t);
    REQUIRE(!pm.region.empty());
    for (const auto& v : pm.region.vertices) {
        CHECK(p.contains(v));
        for (const auto& x : v) CHECK(is_canonical(x));
    }
}

TEST_CASE("analyze: r=1 family is the negative control") {
    StabilityCertificate cert = analyze(xr_fano_polytope(1), InputKind::FanoPolytope);
    CHECK(cert.ding_unstable);
    CHECK(cert.criterion.applicable);
    CHECK_FALSE(cert.criterion.satisfied);
    CHECK(cert.criterion.vol_pminus == parse_rational(derived::kX1VolPMinus));
    CHECK(cert.criterion.integral == parse_rational(derived::kX1Integral));
    CHECK(cert.criterion.pminus_vertex_count == 10);
}

TEST_CASE("unimodular equivariance of the potential on the r=1 family") {
    std::mt19937 rng(41);
    Polytope p = moment_polytope(1);
    AffinePotential t = solve_potential(p);
    auto [m, arg] = mabuchi_constant(p, t);
    for (int trial = 0; trial < 3; ++trial) {
        RatMat a = random_unimodular(rng, 5);
        Polytope q = transform(p, inverse(a));
        AffinePotential t2 = solve_potential(q);
        // theta'(A x) == theta(x) on every vertex
        for (const auto& v : p.vertices) CHECK(t2.eval(apply_matrix(a, v)) == t.eval(v));
        auto [m2, arg2] = mabuchi_constant(q, t2);
        CHECK(m2 == m);
        CHECK(t2.eval(apply_matrix(a, arg)) == m);
    }
}
