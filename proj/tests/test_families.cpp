#include <doctest.h>

#include "helpers.hpp"

using namespace polystab;
using namespace testutil;

TEST_CASE("projective_space_polytope") {
    Polytope p1 = projective_space_polytope(1);
    CHECK(p1.vertices.size() == 2);
    CHECK(p1.vertices[0] == RatVec{rat(-1)});
    CHECK(p1.vertices[1] == RatVec{rat(1)});

    Polytope p2 = projective_space_polytope(2);
    CHECK(p2.vertices.size() == 3);
    CHECK(is_smooth_fano(p2));
    Polytope d = polar_dual(p2);
    REQUIRE(d.vertices.size() == 3);
    CHECK(d.vertices[0] == RatVec{rat(-1), rat(-1)});
    CHECK(d.vertices[1] == RatVec{rat(-1), rat(2)});
    CHECK(d.vertices[2] == RatVec{rat(2), rat(-1)});
}

TEST_CASE("xr generators and polytope, r = 1") {
    auto gen = xr_generators(1);
    CHECK(gen.size() == 10);
    Polytope d = xr_fano_polytope(1);
    CHECK(d.dim == 5);
    CHECK(d.vertices.size() == 10);
    CHECK(is_reflexive(d));
    CHECK(is_smooth_fano(d));
    // Picard number = vertices - dim = 3r + 2
    CHECK(static_cast<int>(d.vertices.size()) - d.dim == 5);
}

TEST_CASE("xr polytope, r = 2: the 18 stated generators") {
    auto gen = xr_generators(2);
    CHECK(gen.size() == 18);
    Polytope d = xr_fano_polytope(2);
    CHECK(d.dim == 10);
    CHECK(d.vertices.size() == 18);
    CHECK(is_reflexive(d));
    CHECK(is_smooth_fano(d));
    CHECK(static_cast<int>(d.vertices.size()) - d.dim == 8);
    // the generator set equals the vertex set
    std::vector<RatVec> sorted = gen;
    std::sort(sorted.begin(), sorted.end(), [](const RatVec& a, const RatVec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c) return c < 0;
        }
        return false;
    });
    CHECK(sorted == d.vertices);
    // every facet is a simplex with 10 incident vertices here
    for (const auto& inc : d.facet_vertices) CHECK(inc.size() == 10);
    // origin strictly inside: l(0) = 1 on every facet
    for (const auto& f : d.facets) CHECK(f.offset == 1);
}

TEST_CASE("free sum vertex count: r=2 family plus a segment") {
    Polytope fs = free_sum(xr_fano_polytope(2), projective_space_polytope(1));
    CHECK(fs.vertices.size() == 20);
    CHECK(fs.dim == 11);
}

TEST_CASE("dual of a free sum is the product of the duals") {
    std::vector<std::pair<std::string, Polytope>> deltas;
    deltas.emplace_back("P^1", projective_space_polytope(1));
    deltas.emplace_back("P^2", projective_space_polytope(2));
    deltas.emplace_back("X_1", xr_fano_polytope(1));
    for (std::size_t i = 0; i < deltas.size(); ++i)
        for (std::size_t j = i; j < deltas.size(); ++j) {
            CAPTURE(deltas[i].first);
            CAPTURE(deltas[j].first);
            Polytope lhs = polar_dual(free_sum(deltas[i].second, deltas[j].second));
            Polytope rhs = cartesian_product(polar_dual(deltas[i].second),
                                             polar_dual(deltas[j].second));
            CHECK(lhs.vertices == rhs.vertices);
        }
}

TEST_CASE("mori relations") {
    for (int r : {1, 2, 3}) {
        MoriRelationReport rep = mori_relation_check(r);
        CHECK(rep.all_hold);
        REQUIRE(rep.entries.size() == static_cast<std::size_t>(r));
        for (const auto& e : rep.entries) {
            CHECK(e.first_holds);
            CHECK(e.second_holds);
            CHECK(e.first_degree == 2 * r + 1 - e.i);
            CHECK(e.second_degree == r + 1 - e.i);
        }
    }
}

TEST_CASE("xr polytope, r = 3 (larger instance)") {
    Polytope d = xr_fano_polytope(3);
    CHECK(d.dim == 15);
    CHECK(d.vertices.size() == 26);
    CHECK(is_reflexive(d));
    CHECK(is_smooth_fano(d));
}
