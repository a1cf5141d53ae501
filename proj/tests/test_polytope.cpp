#include <doctest.h>

#include "helpers.hpp"

using namespace polystab;
using namespace testutil;

TEST_CASE("enumerate_vertices: square") {
    Polytope p = cube(2);
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.vertices[0] == RatVec{rat(-1), rat(-1)});
    CHECK(p.vertices[3] == RatVec{rat(1), rat(1)});
    CHECK(p.facets.size() == 4);
    // every vertex lies on exactly its incident facets
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        for (std::size_t f = 0; f < p.facets.size(); ++f) {
            bool tight = p.facets[f].eval(p.vertices[v]) == 0;
            CHECK(tight == p.vertex_tight[v].test(f));
        }
}

TEST_CASE("enumerate_vertices: dual of the P^2 polytope") {
    Polytope p = enumerate_vertices({{rat_vec({1, 0}), Rational(1)},
                                     {rat_vec({0, 1}), Rational(1)},
                                     {rat_vec({-1, -1}), Rational(1)}},
                                    2);
    REQUIRE(p.vertices.size() == 3);
    CHECK(p.vertices[0] == RatVec{rat(-1), rat(-1)});
    CHECK(p.vertices[1] == RatVec{rat(-1), rat(2)});
    CHECK(p.vertices[2] == RatVec{rat(2), rat(-1)});
}

TEST_CASE("enumerate_vertices: unbounded and infeasible inputs") {
    CHECK_THROWS_AS(enumerate_vertices({{rat_vec({1, 0}), Rational(0)},
                                        {rat_vec({0, 1}), Rational(0)}},
                                       2),
                    Unbounded);
    CHECK_THROWS_AS(enumerate_vertices({{rat_vec({1}), Rational(-1)},   // x >= 1
                                        {rat_vec({-1}), Rational(-1)}}, // x <= -1
                                       1),
                    EmptyPolytope);
}

TEST_CASE("enumerate_facets: square and P^2 polytope") {
    Polytope sq = enumerate_facets({rat_vec({1, 1}), rat_vec({1, -1}), rat_vec({-1, 1}),
                                    rat_vec({-1, -1})});
    CHECK(sq.facets.size() == 4);
    for (const auto& f : sq.facets) CHECK(f.offset == 1);

    Polytope p2 = enumerate_facets({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, -1})});
    CHECK(p2.facets.size() == 3);
    for (const auto& f : p2.facets) CHECK(f.offset == 1);

    // interior points are dropped
    Polytope sq2 = enumerate_facets({rat_vec({1, 1}), rat_vec({1, -1}), rat_vec({-1, 1}),
                                     rat_vec({-1, -1}), rat_vec({0, 0})});
    CHECK(sq2.vertices.size() == 4);

    CHECK_THROWS_AS(enumerate_facets({rat_vec({0, 0}), rat_vec({1, 1}), rat_vec({2, 2})}),
                    Degenerate);
}

TEST_CASE("round trip: H-rep -> V-rep -> H-rep") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> coord(-3, 3);
    int done = 0;
    while (done < 12) {
        int n = 2 + (done % 3);
        std::vector<RatVec> pts;
        for (int k = 0; k < n + 4; ++k) {
            RatVec v(static_cast<std::size_t>(n));
            for (auto& x : v) x = coord(rng);
            pts.push_back(std::move(v));
        }
        Polytope p;
        try {
            p = enumerate_facets(pts);
        } catch (const Degenerate&) {
            continue;
        }
        Polytope q = enumerate_vertices(p.facets, n);
        CHECK(q.vertices == p.vertices);
        // facet sets agree as canonical halfspace lists
        REQUIRE(q.facets.size() == p.facets.size());
        for (std::size_t i = 0; i < p.facets.size(); ++i) {
            CHECK(q.facets[i].normal == p.facets[i].normal);
            CHECK(q.facets[i].offset == p.facets[i].offset);
        }
        ++done;
    }
}

TEST_CASE("polar_dual examples and involution") {
    Polytope cross = enumerate_facets({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, 0}),
                                       rat_vec({0, -1})});
    Polytope sq = polar_dual(cross);
    CHECK(sq.vertices.size() == 4);
    CHECK(sq.vertices[0] == RatVec{rat(-1), rat(-1)});

    Polytope p2 = projective_space_polytope(2);
    Polytope dual = polar_dual(p2);
    CHECK(dual.vertices.size() == 3);
    CHECK(dual.vertices[2] == RatVec{rat(2), rat(-1)});

    // involution on reflexive polytopes
    for (Polytope* d : {&cross, &p2}) {
        Polytope dd = polar_dual(polar_dual(*d));
        CHECK(dd.vertices == d->vertices);
    }

    Polytope shifted = enumerate_facets({rat_vec({1, 0}), rat_vec({2, 0}), rat_vec({1, 1}),
                                         rat_vec({2, 1})});
    CHECK_THROWS_AS(polar_dual(shifted), OriginNotInterior);
}

TEST_CASE("is_reflexive / is_smooth_fano") {
    Polytope sq = cube(2);
    CHECK(is_reflexive(sq));
    Polytope cross = enumerate_facets({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, 0}),
                                       rat_vec({0, -1})});
    CHECK(is_smooth_fano(cross));  // P^1 x P^1

    // conv{e1, e2, -e1-2e2} dualizes to the lattice triangle (-1,-1),(-1,1),(3,-1):
    // reflexive but not smooth (one facet basis has determinant -2)
    Polytope w2 = enumerate_facets({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, -2})});
    CHECK(is_reflexive(w2));
    CHECK_FALSE(is_smooth_fano(w2));
    // conv{e1, e2, -e1-3e2} has a facet offset of 3: not reflexive
    Polytope w3 = enumerate_facets({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, -3})});
    CHECK_FALSE(is_reflexive(w3));

    // del Pezzo of degree 6: all six 2x2 facet determinants are +-1
    Polytope dp6 = enumerate_facets({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, 0}),
                                     rat_vec({0, -1}), rat_vec({1, 1}), rat_vec({-1, -1})});
    CHECK(dp6.facets.size() == 6);
    CHECK(is_smooth_fano(dp6));
}

TEST_CASE("intersect_halfspace on the square") {
    Polytope sq = cube(2);
    auto cut = intersect_halfspace(sq, {rat_vec({1, 0}), Rational(0)});  // x >= 0
    CHECK(cut.region.full_dimensional());
    CHECK(cut.region.vertices.size() == 4);
    CHECK(volume(cut.region) == 2);

    auto empty = intersect_halfspace(sq, {rat_vec({1, 0}), Rational(-2)});  // x >= 2
    CHECK(empty.region.empty());

    auto edge = intersect_halfspace(sq, {rat_vec({-1, 0}), Rational(-1)});  // x >= ... x = 1 edge
    CHECK(edge.region.face_dim == 1);
    CHECK(volume(edge.region) == 0);

    // source bookkeeping: every kept facet maps to an input halfspace
    for (auto s : cut.source) CHECK(s <= sq.facets.size());
}

TEST_CASE("cartesian_product and free_sum") {
    Polytope seg = cube(1);
    Polytope sq = cartesian_product(seg, seg);
    CHECK(sq.vertices.size() == 4);
    CHECK(sq.facets.size() == 4);

    Polytope prism = cartesian_product(seg, pn_moment(2));
    CHECK(prism.dim == 3);
    CHECK(prism.vertices.size() == 6);

    Polytope cross = free_sum(seg, seg);
    CHECK(cross.vertices.size() == 4);
    Polytope sq_dual = polar_dual(cross);
    CHECK(sq_dual.vertices.size() == 4);

    // dual(free_sum(a, b)) == product(dual a, dual b) for reflexive a, b
    Polytope d1 = projective_space_polytope(1), d2 = projective_space_polytope(2);
    Polytope lhs = polar_dual(free_sum(d1, d2));
    Polytope rhs = cartesian_product(polar_dual(d1), polar_dual(d2));
    CHECK(lhs.vertices == rhs.vertices);

    // vertex counts add / multiply
    CHECK(free_sum(d2, d2).vertices.size() == 6);
    CHECK(cartesian_product(polar_dual(d2), polar_dual(d2)).vertices.size() == 9);
}

TEST_CASE("raw H-rep of the dim-10 family dual enumerates to 500 vertices") {
    auto gens = xr_generators(2);
    std::vector<Halfspace> hs;
    for (const auto& g : gens) hs.push_back({g, Rational(1)});
    Polytope p = enumerate_vertices(hs, 10);
    CHECK(p.vertices.size() == 500);
    CHECK(p.facets.size() == 18);
    for (const auto& v : p.vertices)
        for (const auto& x : v) CHECK(is_canonical(x));
}

TEST_CASE("unimodular equivariance of vertex enumeration") {
    std::mt19937 rng(29);
    Polytope p = pn_moment(2);
    for (int t = 0; t < 6; ++t) {
        RatMat a = random_unimodular(rng, 2);
        Rational d = determinant(a);
        REQUIRE((d == 1 || d == -1));
        Polytope q = transform(p, inverse(a));
        REQUIRE(q.vertices.size() == p.vertices.size());
        // vertex sets map onto each other
        std::vector<RatVec> mapped;
        for (const auto& v : p.vertices) mapped.push_back(apply_matrix(a, v));
        std::sort(mapped.begin(), mapped.end(), [](const RatVec& x, const RatVec& y) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                int c = cmp(x[i], y[i]);
                if (c) return c < 0;
            }
            return false;
        });
        CHECK(mapped == q.vertices);
    }
}
