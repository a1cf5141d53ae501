// Pulling triangulation: cone every face from its apex vertex (lex-smallest
// by default), recursing over the faces not containing the apex.
#pragma once

#include "polystab/face_lattice.hpp"

#include <functional>

namespace polystab {

struct Simplex {
    std::vector<RatVec> points;  // n+1 points of a full-dimensional simplex
    Rational signed_volume;      // det(p1-p0, ..., pn-p0) / n!
};

Rational simplex_signed_volume(const std::vector<RatVec>& pts);

// Streams the vertex-index tuples (size face_dim+1) of every top-dimensional
// simplex in the pulling triangulation, in a deterministic DFS order.
void for_each_top_simplex(FaceLattice& fl, ApexRule rule,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn);

// Materialized triangulation. Throws Degenerate when p is not full-dimensional.
std::vector<Simplex> triangulate(const Polytope& p, ApexRule rule = ApexRule::LexMin);

// Number of simplices without materializing them.
std::size_t count_top_simplices(const Polytope& p, ApexRule rule = ApexRule::LexMin);

}  // namespace polystab
