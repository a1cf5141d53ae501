// Built-in polytope families: the 5r-dimensional blow-up family X_r and the
// projective-space simplices.
#pragma once

#include "polystab/polytope.hpp"

namespace polystab {

// Generators of the X_r Fano polytope in construction order:
// u_1..u_{2r+1}, v_1..v_{2r+1}, w_{1,1}, w_{1,2}, ..., w_{r,1}, w_{r,2},
// y_1..y_r (y_i = u_i + v_i), z_1..z_r (z_i = w_{i,1} + y_i).
std::vector<RatVec> xr_generators(int r);

// conv of the 8r+2 generators in dimension 5r, facets enumerated and the
// reflexive / smooth flags computed.
Polytope xr_fano_polytope(int r);

// conv{e_1, ..., e_n, -(e_1+...+e_n)}
Polytope projective_space_polytope(int n);

struct MoriRelationReport {
    struct Entry {
        int i;
        bool first_holds;    // u_{i+1}+...+u_{2r+1}+y_1+...+y_i = v_1+...+v_i
        long first_degree;   // term-count difference, expected 2r+1-i
        bool second_holds;   // u_{r+1}+...+u_{2r+1}+y_{i+1}+...+y_r+z_1+...+z_i
                             //   = v_1+...+v_r+w_{1,1}+...+w_{i,1}
        long second_degree;  // expected r+1-i
    };
    std::vector<Entry> entries;
    bool all_hold = true;
};

MoriRelationReport mori_relation_check(int r);

}  // namespace polystab
