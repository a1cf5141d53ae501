// Published reference values for the 10-dimensional family (r = 2), plus the
// flat vertex list of its moment polytope. Generated from the reference dataset.
#include "polystab/reference.hpp"

namespace polystab::reference {

const std::array<std::array<int, 10>, 500> kMomentVertices = {{
    {{-1, -1, -1, -1, 0, 0, -1, -1, 0, 0}},
    {{-1, -1, -1, -1, 0, 0, -1, -1, 0, 1}},
    {{-1, -1, -1, -1, 0, 0, -1, -1, 1, 0}},
    {{-1, -1, -1, -1, 0, 0, -1, -1, 1, 1}},
    {{-1, -1, -1, -1, 0, 0, -1, 2, 0, 0}},
    {{-1, -1, -1, -1, 0, 0, -1, 2, 0, 1}},
    {{-1, -1, -1, -1, 0, 0, -1, 2, 1, 0}},
    {{-1, -1, -1, -1, 0, 0, -1, 2, 1, 1}},
    {{-1, -1, -1, -1, 0, 0, 2, -1, 0, 0}},
    {{-1, -1, -1, -1, 0, 0, 2, -1, 0, 1}},
    {{-1, -1, -1, -1, 0, 0, 2, -1, 1, 0}},
    {{-1, -1, -1, -1, 0, 0, 2, -1, 1, 1}},
    {{-1, -1, -1, -1, 0, 1, -1, -1, 0, -1}},
    {{-1, -1, -1, -1, 0, 1, -1, -1, 1, -1}},
    {{-1, -1, -1, -1, 0, 1, -1, 1, 0, -1}},
    {{-1, -1, -1, -1, 0, 1, -1, 1, 1, -1}},
    {{-1, -1, -1, -1, 0, 1, 1, -1, 0, -1}},
    {{-1, -1, -1, -1, 0, 1, 1, -1, 1, -1}},
    {{-1, -1, -1, -1, 0, 3, -1, -1, 0, -1}},
    {{-1, -1, -1, -1, 0, 3, -1, -1, 0, 1}},
    {{-1, -1, -1, -1, 0, 3, -1, -1, 1, -1}},
    {{-1, -1, -1, -1, 0, 3, -1, -1, 1, 1}},
    {{-1, -1, -1, -1, 1, 0, -1, -1, -1, 0}},
    {{-1, -1, -1, -1, 1, 0, -1, -1, -1, 1}},
    {{-1, -1, -1, -1, 1, 0, -1, 1, -1, 0}},
    {{-1, -1, -1, -1, 1, 0, -1, 1, -1, 1}},
    {{-1, -1, -1, -1, 1, 0, 1, -1, -1, 0}},
    {{-1, -1, -1, -1, 1, 0, 1, -1, -1, 1}},
    {{-1, -1, -1, -1, 1, 1, -1, -1, -1, -1}},
    {{-1, -1, -1, -1, 1, 1, -1, 0, -1, -1}},
    {{-1, -1, -1, -1, 1, 1, 0, -1, -1, -1}},
    {{-1, -1, -1, -1, 1, 2, -1, -1, -1, -1}},
    {{-1, -1, -1, -1, 1, 2, -1, -1, -1, 1}},
    {{-1, -1, -1, -1, 2, 1, -1, -1, -1, -1}},
    {{-1, -1, -1, -1, 2, 1, -1, -1, 1, -1}},
    {{-1, -1, -1, -1, 3, 0, -1, -1, -1, 0}},
    {{-1, -1, -1, -1, 3, 0, -1, -1, -1, 1}},
    {{-1, -1, -1, -1, 3, 0, -1, -1, 1, 0}},
    {{-1, -1, -1, -1, 3, 0, -1, -1, 1, 1}},
    {{-1, -1, -1, 4, 0, 0, -1, -1, 0, 0}},
    {{-1, -1, -1, 4, 0, 0, -1, -1, 0, 1}},
    {{-1, -1, -1, 4, 0, 0, -1, -1, 1, 0}},
    {{-1, -1, -1, 4, 0, 0, -1, -1, 1, 1}},
    {{-1, -1, -1, 4, 0, 0, -1, 2, 0, 0}},
    {{-1, -1, -1, 4, 0, 0, -1, 2, 0, 1}},
    {{-1, -1, -1, 4, 0, 0, -1, 2, 1, 0}},
    {{-1, -1, -1, 4, 0, 0, -1, 2, 1, 1}},
    {{-1, -1, -1, 4, 0, 0, 2, -1, 0, 0}},
    {{-1, -1, -1, 4, 0, 0, 2, -1, 0, 1}},
    {{-1, -1, -1, 4, 0, 0, 2, -1, 1, 0}},
    {{-1, -1, -1, 4, 0, 0, 2, -1, 1, 1}},
    {{-1, -1, -1, 4, 0, 1, -1, -1, 0, -1}},
    {{-1, -1, -1, 4, 0, 1, -1, -1, 1, -1}},
    {{-1, -1, -1, 4, 0, 1, -1, 1, 0, -1}},
    {{-1, -1, -1, 4, 0, 1, -1, 1, 1, -1}},
    {{-1, -1, -1, 4, 0, 1, 1, -1, 0, -1}},
    {{-1, -1, -1, 4, 0, 1, 1, -1, 1, -1}},
    {{-1, -1, -1, 4, 0, 3, -1, -1, 0, -1}},
    {{-1, -1, -1, 4, 0, 3, -1, -1, 0, 1}},
    {{-1, -1, -1, 4, 0, 3, -1, -1, 1, -1}},
    {{-1, -1, -1, 4, 0, 3, -1, -1, 1, 1}},
    {{-1, -1, -1, 4, 1, 0, -1, -1, -1, 0}},
    {{-1, -1, -1, 4, 1, 0, -1, -1, -1, 1}},
    {{-1, -1, -1, 4, 1, 0, -1, 1, -1, 0}},
    {{-1, -1, -1, 4, 1, 0, -1, 1, -1, 1}},
    {{-1, -1, -1, 4, 1, 0, 1, -1, -1, 0}},
    {{-1, -1, -1, 4, 1, 0, 1, -1, -1, 1}},
    {{-1, -1, -1, 4, 1, 1, -1, -1, -1, -1}},
    {{-1, -1, -1, 4, 1, 1, -1, 0, -1, -1}},
    {{-1, -1, -1, 4, 1, 1, 0, -1, -1, -1}},
    {{-1, -1, -1, 4, 1, 2, -1, -1, -1, -1}},
    {{-1, -1, -1, 4, 1, 2, -1, -1, -1, 1}},
    {{-1, -1, -1, 4, 2, 1, -1, -1, -1, -1}},
    {{-1, -1, -1, 4, 2, 1, -1, -1, 1, -1}},
    {{-1, -1, -1, 4, 3, 0, -1, -1, -1, 0}},
    {{-1, -1, -1, 4, 3, 0, -1, -1, -1, 1}},
    {{-1, -1, -1, 4, 3, 0, -1, -1, 1, 0}},
    {{-1, -1, -1, 4, 3, 0, -1, -1, 1, 1}},
    {{-1, -1, 4, -1, 0, 0, -1, -1, 0, 0}},
    {{-1, -1, 4, -1, 0, 0, -1, -1, 0, 1}},
    {{-1, -1, 4, -1, 0, 0, -1, -1, 1, 0}},
    {{-1, -1, 4, -1, 0, 0, -1, -1, 1, 1}},
    {{-1, -1, 4, -1, 0, 0, -1, 2, 0, 0}},
    {{-1, -1, 4, -1, 0, 0, -1, 2, 0, 1}},
    {{-1, -1, 4, -1, 0, 0, -1, 2, 1, 0}},
    {{-1, -1, 4, -1, 0, 0, -1, 2, 1, 1}},
    {{-1, -1, 4, -1, 0, 0, 2, -1, 0, 0}},
    {{-1, -1, 4, -1, 0, 0, 2, -1, 0, 1}},
    {{-1, -1, 4, -1, 0, 0, 2, -1, 1, 0}},
    {{-1, -1, 4, -1, 0, 0, 2, -1, 1, 1}},
    {{-1, -1, 4, -1, 0, 1, -1, -1, 0, -1}},
    {{-1, -1, 4, -1, 0, 1, -1, -1, 1, -1}},
    {{-1, -1, 4, -1, 0, 1, -1, 1, 0, -1}},
    {{-1, -1, 4, -1, 0, 1, -1, 1, 1, -1}},
    {{-1, -1, 4, -1, 0, 1, 1, -1, 0, -1}},
    {{-1, -1, 4, -1, 0, 1, 1, -1, 1, -1}},
    {{-1, -1, 4, -1, 0, 3, -1, -1, 0, -1}},
    {{-1, -1, 4, -1, 0, 3, -1, -1, 0, 1}},
    {{-1, -1, 4, -1, 0, 3, -1, -1, 1, -1}},
    {{-1, -1, 4, -1, 0, 3, -1, -1, 1, 1}},
    {{-1, -1, 4, -1, 1, 0, -1, -1, -1, 0}},
    {{-1, -1, 4, -1, 1, 0, -1, -1, -1, 1}},
    {{-1, -1, 4, -1, 1, 0, -1, 1, -1, 0}},
    {{-1, -1, 4, -1, 1, 0, -1, 1, -1, 1}},
    {{-1, -1, 4, -1, 1, 0, 1, -1, -1, 0}},
    {{-1, -1, 4, -1, 1, 0, 1, -1, -1, 1}},
    {{-1, -1, 4, -1, 1, 1, -1, -1, -1, -1}},
    {{-1, -1, 4, -1, 1, 1, -1, 0, -1, -1}},
    {{-1, -1, 4, -1, 1, 1, 0, -1, -1, -1}},
    {{-1, -1, 4, -1, 1, 2, -1, -1, -1, -1}},
    {{-1, -1, 4, -1, 1, 2, -1, -1, -1, 1}},
    {{-1, -1, 4, -1, 2, 1, -1, -1, -1, -1}},
    {{-1, -1, 4, -1, 2, 1, -1, -1, 1, -1}},
    {{-1, -1, 4, -1, 3, 0, -1, -1, -1, 0}},
    {{-1, -1, 4, -1, 3, 0, -1, -1, -1, 1}},
    {{-1, -1, 4, -1, 3, 0, -1, -1, 1, 0}},
    {{-1, -1, 4, -1, 3, 0, -1, -1, 1, 1}},
    {{-1, 0, -1, -1, 0, -1, -1, -1, 0, 0}},
    {{-1, 0, -1, -1, 0, -1, -1, -1, 0, 1}},
    {{-1, 0, -1, -1, 0, -1, -1, -1, 1, 0}},
    {{-1, 0, -1, -1, 0, -1, -1, -1, 1, 1}},
    {{-1, 0, -1, -1, 0, -1, -1, 3, 0, 0}},
    {{-1, 0, -1, -1, 0, -1, -1, 3, 0, 1}},
    {{-1, 0, -1, -1, 0, -1, -1, 3, 1, 0}},
    {{-1, 0, -1, -1, 0, -1, -1, 3, 1, 1}},
    {{-1, 0, -1, -1, 0, -1, 3, -1, 0, 0}},
    {{-1, 0, -1, -1, 0, -1, 3, -1, 0, 1}},
    {{-1, 0, -1, -1, 0, -1, 3, -1, 1, 0}},
    {{-1, 0, -1, -1, 0, -1, 3, -1, 1, 1}},
    {{-1, 0, -1, -1, 1, -1, -1, -1, -1, 0}},
    {{-1, 0, -1, -1, 1, -1, -1, -1, -1, 1}},
    {{-1, 0, -1, -1, 1, -1, -1, 2, -1, 0}},
    {{-1, 0, -1, -1, 1, -1, -1, 2, -1, 1}},
    {{-1, 0, -1, -1, 1, -1, 2, -1, -1, 0}},
    {{-1, 0, -1, -1, 1, -1, 2, -1, -1, 1}},
    {{-1, 0, -1, -1, 4, -1, -1, -1, -1, 0}},
    {{-1, 0, -1, -1, 4, -1, -1, -1, -1, 1}},
    {{-1, 0, -1, -1, 4, -1, -1, -1, 1, 0}},
    {{-1, 0, -1, -1, 4, -1, -1, -1, 1, 1}},
    {{-1, 0, -1, 3, 0, -1, -1, -1, 0, 0}},
    {{-1, 0, -1, 3, 0, -1, -1, -1, 0, 1}},
    {{-1, 0, -1, 3, 0, -1, -1, -1, 1, 0}},
    {{-1, 0, -1, 3, 0, -1, -1, -1, 1, 1}},
    {{-1, 0, -1, 3, 0, -1, -1, 3, 0, 0}},
    {{-1, 0, -1, 3, 0, -1, -1, 3, 0, 1}},
    {{-1, 0, -1, 3, 0, -1, -1, 3, 1, 0}},
    {{-1, 0, -1, 3, 0, -1, -1, 3, 1, 1}},
    {{-1, 0, -1, 3, 0, -1, 3, -1, 0, 0}},
    {{-1, 0, -1, 3, 0, -1, 3, -1, 0, 1}},
    {{-1, 0, -1, 3, 0, -1, 3, -1, 1, 0}},
    {{-1, 0, -1, 3, 0, -1, 3, -1, 1, 1}},
    {{-1, 0, -1, 3, 1, -1, -1, -1, -1, 0}},
    {{-1, 0, -1, 3, 1, -1, -1, -1, -1, 1}},
    {{-1, 0, -1, 3, 1, -1, -1, 2, -1, 0}},
    {{-1, 0, -1, 3, 1, -1, -1, 2, -1, 1}},
    {{-1, 0, -1, 3, 1, -1, 2, -1, -1, 0}},
    {{-1, 0, -1, 3, 1, -1, 2, -1, -1, 1}},
    {{-1, 0, -1, 3, 4, -1, -1, -1, -1, 0}},
    {{-1, 0, -1, 3, 4, -1, -1, -1, -1, 1}},
    {{-1, 0, -1, 3, 4, -1, -1, -1, 1, 0}},
    {{-1, 0, -1, 3, 4, -1, -1, -1, 1, 1}},
    {{-1, 0, 3, -1, 0, -1, -1, -1, 0, 0}},
    {{-1, 0, 3, -1, 0, -1, -1, -1, 0, 1}},
    {{-1, 0, 3, -1, 0, -1, -1, -1, 1, 0}},
    {{-1, 0, 3, -1, 0, -1, -1, -1, 1, 1}},
    {{-1, 0, 3, -1, 0, -1, -1, 3, 0, 0}},
    {{-1, 0, 3, -1, 0, -1, -1, 3, 0, 1}},
    {{-1, 0, 3, -1, 0, -1, -1, 3, 1, 0}},
    {{-1, 0, 3, -1, 0, -1, -1, 3, 1, 1}},
    {{-1, 0, 3, -1, 0, -1, 3, -1, 0, 0}},
    {{-1, 0, 3, -1, 0, -1, 3, -1, 0, 1}},
    {{-1, 0, 3, -1, 0, -1, 3, -1, 1, 0}},
    {{-1, 0, 3, -1, 0, -1, 3, -1, 1, 1}},
    {{-1, 0, 3, -1, 1, -1, -1, -1, -1, 0}},
    {{-1, 0, 3, -1, 1, -1, -1, -1, -1, 1}},
    {{-1, 0, 3, -1, 1, -1, -1, 2, -1, 0}},
    {{-1, 0, 3, -1, 1, -1, -1, 2, -1, 1}},
    {{-1, 0, 3, -1, 1, -1, 2, -1, -1, 0}},
    {{-1, 0, 3, -1, 1, -1, 2, -1, -1, 1}},
    {{-1, 0, 3, -1, 4, -1, -1, -1, -1, 0}},
    {{-1, 0, 3, -1, 4, -1, -1, -1, -1, 1}},
    {{-1, 0, 3, -1, 4, -1, -1, -1, 1, 0}},
    {{-1, 0, 3, -1, 4, -1, -1, -1, 1, 1}},
    {{-1, 1, -1, -1, 0, -1, -1, -1, 0, -1}},
    {{-1, 1, -1, -1, 0, -1, -1, -1, 1, -1}},
    {{-1, 1, -1, -1, 0, -1, -1, 3, 0, -1}},
    {{-1, 1, -1, -1, 0, -1, -1, 3, 1, -1}},
    {{-1, 1, -1, -1, 0, -1, 3, -1, 0, -1}},
    {{-1, 1, -1, -1, 0, -1, 3, -1, 1, -1}},
    {{-1, 1, -1, -1, 1, -1, -1, -1, -1, -1}},
    {{-1, 1, -1, -1, 1, -1, -1, 2, -1, -1}},
    {{-1, 1, -1, -1, 1, -1, 2, -1, -1, -1}},
    {{-1, 1, -1, -1, 4, -1, -1, -1, -1, -1}},
    {{-1, 1, -1, -1, 4, -1, -1, -1, 1, -1}},
    {{-1, 1, -1, 2, 0, -1, -1, -1, 0, -1}},
    {{-1, 1, -1, 2, 0, -1, -1, -1, 1, -1}},
    {{-1, 1, -1, 2, 0, -1, -1, 3, 0, -1}},
    {{-1, 1, -1, 2, 0, -1, -1, 3, 1, -1}},
    {{-1, 1, -1, 2, 0, -1, 3, -1, 0, -1}},
    {{-1, 1, -1, 2, 0, -1, 3, -1, 1, -1}},
    {{-1, 1, -1, 2, 1, -1, -1, -1, -1, -1}},
    {{-1, 1, -1, 2, 1, -1, -1, 2, -1, -1}},
    {{-1, 1, -1, 2, 1, -1, 2, -1, -1, -1}},
    {{-1, 1, -1, 2, 4, -1, -1, -1, -1, -1}},
    {{-1, 1, -1, 2, 4, -1, -1, -1, 1, -1}},
    {{-1, 1, 2, -1, 0, -1, -1, -1, 0, -1}},
    {{-1, 1, 2, -1, 0, -1, -1, -1, 1, -1}},
    {{-1, 1, 2, -1, 0, -1, -1, 3, 0, -1}},
    {{-1, 1, 2, -1, 0, -1, -1, 3, 1, -1}},
    {{-1, 1, 2, -1, 0, -1, 3, -1, 0, -1}},
    {{-1, 1, 2, -1, 0, -1, 3, -1, 1, -1}},
    {{-1, 1, 2, -1, 1, -1, -1, -1, -1, -1}},
    {{-1, 1, 2, -1, 1, -1, -1, 2, -1, -1}},
    {{-1, 1, 2, -1, 1, -1, 2, -1, -1, -1}},
    {{-1, 1, 2, -1, 4, -1, -1, -1, -1, -1}},
    {{-1, 1, 2, -1, 4, -1, -1, -1, 1, -1}},
    {{-1, 4, -1, -1, 0, -1, -1, -1, 0, -1}},
    {{-1, 4, -1, -1, 0, -1, -1, -1, 0, 1}},
    {{-1, 4, -1, -1, 0, -1, -1, -1, 1, -1}},
    {{-1, 4, -1, -1, 0, -1, -1, -1, 1, 1}},
    {{-1, 4, -1, -1, 0, -1, -1, 3, 0, -1}},
    {{-1, 4, -1, -1, 0, -1, -1, 3, 0, 1}},
    {{-1, 4, -1, -1, 0, -1, -1, 3, 1, -1}},
    {{-1, 4, -1, -1, 0, -1, -1, 3, 1, 1}},
    {{-1, 4, -1, -1, 0, -1, 3, -1, 0, -1}},
    {{-1, 4, -1, -1, 0, -1, 3, -1, 0, 1}},
    {{-1, 4, -1, -1, 0, -1, 3, -1, 1, -1}},
    {{-1, 4, -1, -1, 0, -1, 3, -1, 1, 1}},
    {{-1, 4, -1, -1, 0, 3, -1, -1, 0, -1}},
    {{-1, 4, -1, -1, 0, 3, -1, -1, 0, 1}},
    {{-1, 4, -1, -1, 0, 3, -1, -1, 1, -1}},
    {{-1, 4, -1, -1, 0, 3, -1, -1, 1, 1}},
    {{-1, 4, -1, -1, 1, -1, -1, -1, -1, -1}},
    {{-1, 4, -1, -1, 1, -1, -1, -1, -1, 1}},
    {{-1, 4, -1, -1, 1, -1, -1, 2, -1, -1}},
    {{-1, 4, -1, -1, 1, -1, -1, 2, -1, 1}},
    {{-1, 4, -1, -1, 1, -1, 2, -1, -1, -1}},
    {{-1, 4, -1, -1, 1, -1, 2, -1, -1, 1}},
    {{-1, 4, -1, -1, 1, 2, -1, -1, -1, -1}},
    {{-1, 4, -1, -1, 1, 2, -1, -1, -1, 1}},
    {{-1, 4, -1, -1, 4, -1, -1, -1, -1, -1}},
    {{-1, 4, -1, -1, 4, -1, -1, -1, -1, 1}},
    {{-1, 4, -1, -1, 4, -1, -1, -1, 1, -1}},
    {{-1, 4, -1, -1, 4, -1, -1, -1, 1, 1}},
    {{0, -1, -1, -1, -1, 0, -1, -1, 0, 0}},
    {{0, -1, -1, -1, -1, 0, -1, -1, 0, 1}},
    {{0, -1, -1, -1, -1, 0, -1, -1, 1, 0}},
    {{0, -1, -1, -1, -1, 0, -1, -1, 1, 1}},
    {{0, -1, -1, -1, -1, 0, -1, 3, 0, 0}},
    {{0, -1, -1, -1, -1, 0, -1, 3, 0, 1}},
    {{0, -1, -1, -1, -1, 0, -1, 3, 1, 0}},
    {{0, -1, -1, -1, -1, 0, -1, 3, 1, 1}},
    {{0, -1, -1, -1, -1, 0, 3, -1, 0, 0}},
    {{0, -1, -1, -1, -1, 0, 3, -1, 0, 1}},
    {{0, -1, -1, -1, -1, 0, 3, -1, 1, 0}},
    {{0, -1, -1, -1, -1, 0, 3, -1, 1, 1}},
    {{0, -1, -1, -1, -1, 1, -1, -1, 0, -1}},
    {{0, -1, -1, -1, -1, 1, -1, -1, 1, -1}},
    {{0, -1, -1, -1, -1, 1, -1, 2, 0, -1}},
    {{0, -1, -1, -1, -1, 1, -1, 2, 1, -1}},
    {{0, -1, -1, -1, -1, 1, 2, -1, 0, -1}},
    {{0, -1, -1, -1, -1, 1, 2, -1, 1, -1}},
    {{0, -1, -1, -1, -1, 4, -1, -1, 0, -1}},
    {{0, -1, -1, -1, -1, 4, -1, -1, 0, 1}},
    {{0, -1, -1, -1, -1, 4, -1, -1, 1, -1}},
    {{0, -1, -1, -1, -1, 4, -1, -1, 1, 1}},
    {{0, -1, -1, 3, -1, 0, -1, -1, 0, 0}},
    {{0, -1, -1, 3, -1, 0, -1, -1, 0, 1}},
    {{0, -1, -1, 3, -1, 0, -1, -1, 1, 0}},
    {{0, -1, -1, 3, -1, 0, -1, -1, 1, 1}},
    {{0, -1, -1, 3, -1, 0, -1, 3, 0, 0}},
    {{0, -1, -1, 3, -1, 0, -1, 3, 0, 1}},
    {{0, -1, -1, 3, -1, 0, -1, 3, 1, 0}},
    {{0, -1, -1, 3, -1, 0, -1, 3, 1, 1}},
    {{0, -1, -1, 3, -1, 0, 3, -1, 0, 0}},
    {{0, -1, -1, 3, -1, 0, 3, -1, 0, 1}},
    {{0, -1, -1, 3, -1, 0, 3, -1, 1, 0}},
    {{0, -1, -1, 3, -1, 0, 3, -1, 1, 1}},
    {{0, -1, -1, 3, -1, 1, -1, -1, 0, -1}},
    {{0, -1, -1, 3, -1, 1, -1, -1, 1, -1}},
    {{0, -1, -1, 3, -1, 1, -1, 2, 0, -1}},
    {{0, -1, -1, 3, -1, 1, -1, 2, 1, -1}},
    {{0, -1, -1, 3, -1, 1, 2, -1, 0, -1}},
    {{0, -1, -1, 3, -1, 1, 2, -1, 1, -1}},
    {{0, -1, -1, 3, -1, 4, -1, -1, 0, -1}},
    {{0, -1, -1, 3, -1, 4, -1, -1, 0, 1}},
    {{0, -1, -1, 3, -1, 4, -1, -1, 1, -1}},
    {{0, -1, -1, 3, -1, 4, -1, -1, 1, 1}},
    {{0, -1, 3, -1, -1, 0, -1, -1, 0, 0}},
    {{0, -1, 3, -1, -1, 0, -1, -1, 0, 1}},
    {{0, -1, 3, -1, -1, 0, -1, -1, 1, 0}},
    {{0, -1, 3, -1, -1, 0, -1, -1, 1, 1}},
    {{0, -1, 3, -1, -1, 0, -1, 3, 0, 0}},
    {{0, -1, 3, -1, -1, 0, -1, 3, 0, 1}},
    {{0, -1, 3, -1, -1, 0, -1, 3, 1, 0}},
    {{0, -1, 3, -1, -1, 0, -1, 3, 1, 1}},
    {{0, -1, 3, -1, -1, 0, 3, -1, 0, 0}},
    {{0, -1, 3, -1, -1, 0, 3, -1, 0, 1}},
    {{0, -1, 3, -1, -1, 0, 3, -1, 1, 0}},
    {{0, -1, 3, -1, -1, 0, 3, -1, 1, 1}},
    {{0, -1, 3, -1, -1, 1, -1, -1, 0, -1}},
    {{0, -1, 3, -1, -1, 1, -1, -1, 1, -1}},
    {{0, -1, 3, -1, -1, 1, -1, 2, 0, -1}},
    {{0, -1, 3, -1, -1, 1, -1, 2, 1, -1}},
    {{0, -1, 3, -1, -1, 1, 2, -1, 0, -1}},
    {{0, -1, 3, -1, -1, 1, 2, -1, 1, -1}},
    {{0, -1, 3, -1, -1, 4, -1, -1, 0, -1}},
    {{0, -1, 3, -1, -1, 4, -1, -1, 0, 1}},
    {{0, -1, 3, -1, -1, 4, -1, -1, 1, -1}},
    {{0, -1, 3, -1, -1, 4, -1, -1, 1, 1}},
    {{0, 0, -1, -1, -1, -1, -1, -1, 0, 0}},
    {{0, 0, -1, -1, -1, -1, -1, -1, 0, 1}},
    {{0, 0, -1, -1, -1, -1, -1, -1, 1, 0}},
    {{0, 0, -1, -1, -1, -1, -1, -1, 1, 1}},
    {{0, 0, -1, -1, -1, -1, -1, 4, 0, 0}},
    {{0, 0, -1, -1, -1, -1, -1, 4, 0, 1}},
    {{0, 0, -1, -1, -1, -1, -1, 4, 1, 0}},
    {{0, 0, -1, -1, -1, -1, -1, 4, 1, 1}},
    {{0, 0, -1, -1, -1, -1, 4, -1, 0, 0}},
    {{0, 0, -1, -1, -1, -1, 4, -1, 0, 1}},
    {{0, 0, -1, -1, -1, -1, 4, -1, 1, 0}},
    {{0, 0, -1, -1, -1, -1, 4, -1, 1, 1}},
    {{0, 0, -1, 2, -1, -1, -1, -1, 0, 0}},
    {{0, 0, -1, 2, -1, -1, -1, -1, 0, 1}},
    {{0, 0, -1, 2, -1, -1, -1, -1, 1, 0}},
    {{0, 0, -1, 2, -1, -1, -1, -1, 1, 1}},
    {{0, 0, -1, 2, -1, -1, -1, 4, 0, 0}},
    {{0, 0, -1, 2, -1, -1, -1, 4, 0, 1}},
    {{0, 0, -1, 2, -1, -1, -1, 4, 1, 0}},
    {{0, 0, -1, 2, -1, -1, -1, 4, 1, 1}},
    {{0, 0, -1, 2, -1, -1, 4, -1, 0, 0}},
    {{0, 0, -1, 2, -1, -1, 4, -1, 0, 1}},
    {{0, 0, -1, 2, -1, -1, 4, -1, 1, 0}},
    {{0, 0, -1, 2, -1, -1, 4, -1, 1, 1}},
    {{0, 0, 2, -1, -1, -1, -1, -1, 0, 0}},
    {{0, 0, 2, -1, -1, -1, -1, -1, 0, 1}},
    {{0, 0, 2, -1, -1, -1, -1, -1, 1, 0}},
    {{0, 0, 2, -1, -1, -1, -1, -1, 1, 1}},
    {{0, 0, 2, -1, -1, -1, -1, 4, 0, 0}},
    {{0, 0, 2, -1, -1, -1, -1, 4, 0, 1}},
    {{0, 0, 2, -1, -1, -1, -1, 4, 1, 0}},
    {{0, 0, 2, -1, -1, -1, -1, 4, 1, 1}},
    {{0, 0, 2, -1, -1, -1, 4, -1, 0, 0}},
    {{0, 0, 2, -1, -1, -1, 4, -1, 0, 1}},
    {{0, 0, 2, -1, -1, -1, 4, -1, 1, 0}},
    {{0, 0, 2, -1, -1, -1, 4, -1, 1, 1}},
    {{0, 1, -1, -1, -1, -1, -1, -1, 0, -1}},
    {{0, 1, -1, -1, -1, -1, -1, -1, 1, -1}},
    {{0, 1, -1, -1, -1, -1, -1, 4, 0, -1}},
    {{0, 1, -1, -1, -1, -1, -1, 4, 1, -1}},
    {{0, 1, -1, -1, -1, -1, 4, -1, 0, -1}},
    {{0, 1, -1, -1, -1, -1, 4, -1, 1, -1}},
    {{0, 1, -1, 1, -1, -1, -1, -1, 0, -1}},
    {{0, 1, -1, 1, -1, -1, -1, -1, 1, -1}},
    {{0, 1, -1, 1, -1, -1, -1, 4, 0, -1}},
    {{0, 1, -1, 1, -1, -1, -1, 4, 1, -1}},
    {{0, 1, -1, 1, -1, -1, 4, -1, 0, -1}},
    {{0, 1, -1, 1, -1, -1, 4, -1, 1, -1}},
    {{0, 1, 1, -1, -1, -1, -1, -1, 0, -1}},
    {{0, 1, 1, -1, -1, -1, -1, -1, 1, -1}},
    {{0, 1, 1, -1, -1, -1, -1, 4, 0, -1}},
    {{0, 1, 1, -1, -1, -1, -1, 4, 1, -1}},
    {{0, 1, 1, -1, -1, -1, 4, -1, 0, -1}},
    {{0, 1, 1, -1, -1, -1, 4, -1, 1, -1}},
    {{0, 3, -1, -1, -1, -1, -1, -1, 0, -1}},
    {{0, 3, -1, -1, -1, -1, -1, -1, 0, 1}},
    {{0, 3, -1, -1, -1, -1, -1, -1, 1, -1}},
    {{0, 3, -1, -1, -1, -1, -1, -1, 1, 1}},
    {{0, 3, -1, -1, -1, -1, -1, 4, 0, -1}},
    {{0, 3, -1, -1, -1, -1, -1, 4, 0, 1}},
    {{0, 3, -1, -1, -1, -1, -1, 4, 1, -1}},
    {{0, 3, -1, -1, -1, -1, -1, 4, 1, 1}},
    {{0, 3, -1, -1, -1, -1, 4, -1, 0, -1}},
    {{0, 3, -1, -1, -1, -1, 4, -1, 0, 1}},
    {{0, 3, -1, -1, -1, -1, 4, -1, 1, -1}},
    {{0, 3, -1, -1, -1, -1, 4, -1, 1, 1}},
    {{0, 3, -1, -1, -1, 4, -1, -1, 0, -1}},
    {{0, 3, -1, -1, -1, 4, -1, -1, 0, 1}},
    {{0, 3, -1, -1, -1, 4, -1, -1, 1, -1}},
    {{0, 3, -1, -1, -1, 4, -1, -1, 1, 1}},
    {{1, -1, -1, -1, -1, 0, -1, -1, -1, 0}},
    {{1, -1, -1, -1, -1, 0, -1, -1, -1, 1}},
    {{1, -1, -1, -1, -1, 0, -1, 3, -1, 0}},
    {{1, -1, -1, -1, -1, 0, -1, 3, -1, 1}},
    {{1, -1, -1, -1, -1, 0, 3, -1, -1, 0}},
    {{1, -1, -1, -1, -1, 0, 3, -1, -1, 1}},
    {{1, -1, -1, -1, -1, 1, -1, -1, -1, -1}},
    {{1, -1, -1, -1, -1, 1, -1, 2, -1, -1}},
    {{1, -1, -1, -1, -1, 1, 2, -1, -1, -1}},
    {{1, -1, -1, -1, -1, 4, -1, -1, -1, -1}},
    {{1, -1, -1, -1, -1, 4, -1, -1, -1, 1}},
    {{1, -1, -1, 2, -1, 0, -1, -1, -1, 0}},
    {{1, -1, -1, 2, -1, 0, -1, -1, -1, 1}},
    {{1, -1, -1, 2, -1, 0, -1, 3, -1, 0}},
    {{1, -1, -1, 2, -1, 0, -1, 3, -1, 1}},
    {{1, -1, -1, 2, -1, 0, 3, -1, -1, 0}},
    {{1, -1, -1, 2, -1, 0, 3, -1, -1, 1}},
    {{1, -1, -1, 2, -1, 1, -1, -1, -1, -1}},
    {{1, -1, -1, 2, -1, 1, -1, 2, -1, -1}},
    {{1, -1, -1, 2, -1, 1, 2, -1, -1, -1}},
    {{1, -1, -1, 2, -1, 4, -1, -1, -1, -1}},
    {{1, -1, -1, 2, -1, 4, -1, -1, -1, 1}},
    {{1, -1, 2, -1, -1, 0, -1, -1, -1, 0}},
    {{1, -1, 2, -1, -1, 0, -1, -1, -1, 1}},
    {{1, -1, 2, -1, -1, 0, -1, 3, -1, 0}},
    {{1, -1, 2, -1, -1, 0, -1, 3, -1, 1}},
    {{1, -1, 2, -1, -1, 0, 3, -1, -1, 0}},
    {{1, -1, 2, -1, -1, 0, 3, -1, -1, 1}},
    {{1, -1, 2, -1, -1, 1, -1, -1, -1, -1}},
    {{1, -1, 2, -1, -1, 1, -1, 2, -1, -1}},
    {{1, -1, 2, -1, -1, 1, 2, -1, -1, -1}},
    {{1, -1, 2, -1, -1, 4, -1, -1, -1, -1}},
    {{1, -1, 2, -1, -1, 4, -1, -1, -1, 1}},
    {{1, 0, -1, -1, -1, -1, -1, -1, -1, 0}},
    {{1, 0, -1, -1, -1, -1, -1, -1, -1, 1}},
    {{1, 0, -1, -1, -1, -1, -1, 4, -1, 0}},
    {{1, 0, -1, -1, -1, -1, -1, 4, -1, 1}},
    {{1, 0, -1, -1, -1, -1, 4, -1, -1, 0}},
    {{1, 0, -1, -1, -1, -1, 4, -1, -1, 1}},
    {{1, 0, -1, 1, -1, -1, -1, -1, -1, 0}},
    {{1, 0, -1, 1, -1, -1, -1, -1, -1, 1}},
    {{1, 0, -1, 1, -1, -1, -1, 4, -1, 0}},
    {{1, 0, -1, 1, -1, -1, -1, 4, -1, 1}},
    {{1, 0, -1, 1, -1, -1, 4, -1, -1, 0}},
    {{1, 0, -1, 1, -1, -1, 4, -1, -1, 1}},
    {{1, 0, 1, -1, -1, -1, -1, -1, -1, 0}},
    {{1, 0, 1, -1, -1, -1, -1, -1, -1, 1}},
    {{1, 0, 1, -1, -1, -1, -1, 4, -1, 0}},
    {{1, 0, 1, -1, -1, -1, -1, 4, -1, 1}},
    {{1, 0, 1, -1, -1, -1, 4, -1, -1, 0}},
    {{1, 0, 1, -1, -1, -1, 4, -1, -1, 1}},
    {{1, 1, -1, -1, -1, -1, -1, -1, -1, -1}},
    {{1, 1, -1, -1, -1, -1, -1, 4, -1, -1}},
    {{1, 1, -1, -1, -1, -1, 4, -1, -1, -1}},
    {{1, 1, -1, 0, -1, -1, -1, -1, -1, -1}},
    {{1, 1, -1, 0, -1, -1, -1, 4, -1, -1}},
    {{1, 1, -1, 0, -1, -1, 4, -1, -1, -1}},
    {{1, 1, 0, -1, -1, -1, -1, -1, -1, -1}},
    {{1, 1, 0, -1, -1, -1, -1, 4, -1, -1}},
    {{1, 1, 0, -1, -1, -1, 4, -1, -1, -1}},
    {{1, 2, -1, -1, -1, -1, -1, -1, -1, -1}},
    {{1, 2, -1, -1, -1, -1, -1, -1, -1, 1}},
    {{1, 2, -1, -1, -1, -1, -1, 4, -1, -1}},
    {{1, 2, -1, -1, -1, -1, -1, 4, -1, 1}},
    {{1, 2, -1, -1, -1, -1, 4, -1, -1, -1}},
    {{1, 2, -1, -1, -1, -1, 4, -1, -1, 1}},
    {{1, 2, -1, -1, -1, 4, -1, -1, -1, -1}},
    {{1, 2, -1, -1, -1, 4, -1, -1, -1, 1}},
    {{2, 1, -1, -1, -1, -1, -1, -1, -1, -1}},
    {{2, 1, -1, -1, -1, -1, -1, -1, 1, -1}},
    {{2, 1, -1, -1, -1, -1, -1, 4, -1, -1}},
    {{2, 1, -1, -1, -1, -1, -1, 4, 1, -1}},
    {{2, 1, -1, -1, -1, -1, 4, -1, -1, -1}},
    {{2, 1, -1, -1, -1, -1, 4, -1, 1, -1}},
    {{2, 1, -1, -1, 4, -1, -1, -1, -1, -1}},
    {{2, 1, -1, -1, 4, -1, -1, -1, 1, -1}},
    {{3, 0, -1, -1, -1, -1, -1, -1, -1, 0}},
    {{3, 0, -1, -1, -1, -1, -1, -1, -1, 1}},
    {{3, 0, -1, -1, -1, -1, -1, -1, 1, 0}},
    {{3, 0, -1, -1, -1, -1, -1, -1, 1, 1}},
    {{3, 0, -1, -1, -1, -1, -1, 4, -1, 0}},
    {{3, 0, -1, -1, -1, -1, -1, 4, -1, 1}},
    {{3, 0, -1, -1, -1, -1, -1, 4, 1, 0}},
    {{3, 0, -1, -1, -1, -1, -1, 4, 1, 1}},
    {{3, 0, -1, -1, -1, -1, 4, -1, -1, 0}},
    {{3, 0, -1, -1, -1, -1, 4, -1, -1, 1}},
    {{3, 0, -1, -1, -1, -1, 4, -1, 1, 0}},
    {{3, 0, -1, -1, -1, -1, 4, -1, 1, 1}},
    {{3, 0, -1, -1, 4, -1, -1, -1, -1, 0}},
    {{3, 0, -1, -1, 4, -1, -1, -1, -1, 1}},
    {{3, 0, -1, -1, 4, -1, -1, -1, 1, 0}},
    {{3, 0, -1, -1, 4, -1, -1, -1, 1, 1}},
    {{4, -1, -1, -1, -1, 0, -1, -1, -1, 0}},
    {{4, -1, -1, -1, -1, 0, -1, -1, -1, 1}},
    {{4, -1, -1, -1, -1, 0, -1, -1, 1, 0}},
    {{4, -1, -1, -1, -1, 0, -1, -1, 1, 1}},
    {{4, -1, -1, -1, -1, 0, -1, 3, -1, 0}},
    {{4, -1, -1, -1, -1, 0, -1, 3, -1, 1}},
    {{4, -1, -1, -1, -1, 0, -1, 3, 1, 0}},
    {{4, -1, -1, -1, -1, 0, -1, 3, 1, 1}},
    {{4, -1, -1, -1, -1, 0, 3, -1, -1, 0}},
    {{4, -1, -1, -1, -1, 0, 3, -1, -1, 1}},
    {{4, -1, -1, -1, -1, 0, 3, -1, 1, 0}},
    {{4, -1, -1, -1, -1, 0, 3, -1, 1, 1}},
    {{4, -1, -1, -1, -1, 1, -1, -1, -1, -1}},
    {{4, -1, -1, -1, -1, 1, -1, -1, 1, -1}},
    {{4, -1, -1, -1, -1, 1, -1, 2, -1, -1}},
    {{4, -1, -1, -1, -1, 1, -1, 2, 1, -1}},
    {{4, -1, -1, -1, -1, 1, 2, -1, -1, -1}},
    {{4, -1, -1, -1, -1, 1, 2, -1, 1, -1}},
    {{4, -1, -1, -1, -1, 4, -1, -1, -1, -1}},
    {{4, -1, -1, -1, -1, 4, -1, -1, -1, 1}},
    {{4, -1, -1, -1, -1, 4, -1, -1, 1, -1}},
    {{4, -1, -1, -1, -1, 4, -1, -1, 1, 1}},
    {{4, -1, -1, -1, 2, 1, -1, -1, -1, -1}},
    {{4, -1, -1, -1, 2, 1, -1, -1, 1, -1}},
    {{4, -1, -1, -1, 3, 0, -1, -1, -1, 0}},
    {{4, -1, -1, -1, 3, 0, -1, -1, -1, 1}},
    {{4, -1, -1, -1, 3, 0, -1, -1, 1, 0}},
    {{4, -1, -1, -1, 3, 0, -1, -1, 1, 1}},
}};

const char* kVolume = "1160242379/907200";
const char* kFirstMoments[10] = {"74830759/302400", "74830759/302400", "-74830759/453600", "-74830759/453600", "74830759/302400", "74830759/302400", "-74830759/453600", "-74830759/453600", "70493741/604800", "70493741/604800"};

// packed upper triangle of the printed c_ij, (i,j) row-major with i <= j
const char* kSecondMoments[55] = {
    "178450577/207360", "-5546027789/26611200",
    "-26032694389/119750400", "-26032694389/119750400",
    "-8492713417/39916800", "14971354001/79833600",
    "671357611/79833600", "671357611/79833600",
    "-1954923461/53222400", "401887133/11404800",
    "178450577/207360", "-26032694389/119750400",
    "-26032694389/119750400", "14971354001/79833600",
    "-8492713417/39916800", "671357611/79833600",
    "671357611/79833600", "401887133/11404800",
    "-1954923461/53222400", "11836195861/17107200",
    "-30787982249/239500800", "671357611/79833600",
    "671357611/79833600", "-671357611/119750400",
    "-671357611/119750400", "238350521/479001600",
    "238350521/479001600", "11836195861/17107200",
    "671357611/79833600", "671357611/79833600",
    "-671357611/119750400", "-671357611/119750400",
    "238350521/479001600", "238350521/479001600",
    "178450577/207360", "-5546027789/26611200",
    "-26032694389/119750400", "-26032694389/119750400",
    "-1954923461/53222400", "401887133/11404800",
    "178450577/207360", "-26032694389/119750400",
    "-26032694389/119750400", "401887133/11404800",
    "-1954923461/53222400", "11836195861/17107200",
    "-30787982249/239500800", "238350521/479001600",
    "238350521/479001600", "11836195861/17107200",
    "238350521/479001600", "238350521/479001600",
    "47610261247/119750400", "2238581/268800",
    "47610261247/119750400",
};

// printed potential coefficients; slot 8 (1-based) is absent from the source
const char* kCoeff1 =
    "-6652648658253133533458927983168676127683718266602824699363990525289674109591035878412"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff2 =
    "1687745798567404193815209217652629451060504388870318301921068835922145585283243903476"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff3 =
    "-21147646246417011499866967397062900688335377230874174724893114467501367151381425063936"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff4 =
    "-16449189574770853901820814565647695141892141945507143699918086624224225617813524184576"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff5 =
    "18867213846247881068138780627879434410159166376320806192304262236814428074696514423284"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff6 =
    "18022542054726735081290778189303857192199055260809176385339483335125600021972271934964"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff7 =
    "-4698456671646157598046152831415205546443235285367031024975027843277141533567900879360"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff9 =
    "18624673824124080312696733009635412309289343301014612819864978181445157138478256822904"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kCoeff10 =
    "13250624276073817145781262775194444874240614651756716947770180446185628747942770170488"
    "/"
    "53176342041336824655798753434693514382090025600989171593542652235046808161762115363697";
const char* kConstant =
    "-16867374143720575167184942526540793898738108171965667017693911650767893692338734579977015850328"
    "/"
    "61697445596558353778949801830303224262546846295462581202931147867160375877959493561648257515163";
const char* kMabuchi =
    "151391597288670805729207671187119501031257600642015195734257750130579621051110153773967855027680"
    "/"
    "61697445596558353778949801830303224262546846295462581202931147867160375877959493561648257515163";
const int kArgmax[10] = {-1, 4, -1, -1, 4, -1, -1, -1, 1, 1};
const char* kOneMinusC =
    "78564819740278928946134744356844018161284954467428248220625059517928269570298228141625273365491"
    "/"
    "61697445596558353778949801830303224262546846295462581202931147867160375877959493561648257515163";

const char* kVolPMinus =
    "9913827197891868218725468640586013274692150157684913042593444857895342443605224601053970414179865731"
    "9017862741454876233276834053010839022019070192664214967347537833601597392097605946773713573499952969"
    "1461156607159712565351709639115390236785045136758382009813065689840095311829428039661892343804026189"
    "6853164088619710540509540099832729086457535433347317943151648257549565297293465575244822545238100897"
    "4523363860456952748451526468729373756340667185676466013599561709229757352232819130597973051692076784"
    "1213219340253076562038593537862720122497235197521749499453788414162852299245346876197156118461263013"
    "0674477784237651096995068727118258572324221717363226455667471939938619245059504209607929427034971669"
    "5508271307695662718724070906942893859210767784017729149938893405177731558565791906959555819123198655"
    "7654141227821336892308630167829889951800949230588362955127840668450398328558883546500557961672230620"
    "3572503201500052639273275886444484792561770911651089616780491276218418550094688465095482367038130108"
    "9399549684290370497731412792946367710914232777481945905904527555158870213937820806639783647203053999"
    "9055479481163214616178222467983982127225158712466439513689609578226256499451379029789635189857267976"
    "7723694154625312472160648188660666297686055026836082934606831584557134144469970252158467033879286220"
    "2628554500593655106140245171494901742233261286341251734708038238020308108525601202177838050702704286"
    "8307562974412573849153831337854989898861217803090152005769863596639270255895150720799257943768334722"
    "7464493481530998949399853309626260725318374154548070039148240796984220771597335947261843932367849860"
    "7760427199196825167867661214401361445293460819045007369935440834594534665034045773368348895575297698"
    "5482047044475586831217092396449464880446784171413718490037064822819266663047818435610813390599599313"
    "9381305317487365286200748330034639965513016760789296433035407466613385377003722241607071598851792956"
    "3220981473962210999357010343288115952981078444559529548803988936991586368993306744366340822225958275"
    "8755381760034661582145296077084311619667373202800246959511243298926973252299790102270546819106673901"
    "7151978718756022291324476943808372439174955809607911577115260729492281944478320037047896381958415176"
    "1542182749436783403823590577854995998477677803692424759045857190168687524015024749986541948337959695"
    "5590565881346675553406392010185429653274614255778110367624503597232058341215855053542835556587110724"
    "6616628868572516773954758855574406711368592916301407596636918296834669987351188466788222072335825269"
    "18606204511175964161126175418773994161"
    "/"
    "3543026364543837719972300160849476323530733991788558409179144645494593457900983112563678107416559917"
    "7991361922067256535907440453531236732098908560476339821743283782402825205769817943405308325928996201"
    "9153840524421445450184453607955115433785255720387227333383266258654227902390597727150822263465192244"
    "4054934714678077318145266305043940730541820689931543283125448488146590895526706566177421021449288934"
    "5566761164167917240929486258747528134530421016293249628106384179157408711245871027090831219630738508"
    "8644365456536867153853197681465369462618318813438498377109286784494700280801385626547793560418186710"
    "4864180066444944537404637130380517672099133405240369911374334033968662725164217719150147770963127209"
    "7187554209103366121779927303197202024597205521845211348199200689562455628698893774194317755193314176"
    "8694676849742609431834168032091262836304908714538384825443549924884133905543846054438116333662560905"
    "7394649181763593664177758878030854192561776897496714944230304478507916422441611285621946916637967040"
    "9402565817519895098632646157430628543685838624367455944116886985764308559914646713876960171620268899"
    "2337839166045007716892213487794583426276306031132420810150874342151442768001624503472327991486471183"
    "2878076705939813725735634026583803786091007449577862092386311971965306438790279556028567057904310037"
    "4555948532820088267136515497881478974870113140340488960698158913865554463164232758278251485872445929"
    "3915572162273736462309394776370306357677913862514885405009112333159315488454265303007623626974454869"
    "1452375705920495694839449135025071658834954648272660140238187102622332236868613634693175190531631522"
    "1012650401514001111227171892519206574180638912642746147853026759017580937482797486075769374435234924"
    "8706874795950139333299268992262473959976349885990177276217986245482442874212704629465475576139927426"
    "9350473094035720200663474123691446901614129228012542309905611451764380948047866092592350573221721159"
    "3187869230423079638607565248928527462682233609593257312928174864543437819587776047187541056257455731"
    "1104307131708864338935971758318348948412965644827059774648149831824893763282756950034165821656823427"
    "4425594772469923238024238084518788683358158655358712400802390566644352582729146329645532686239070990"
    "1430461055061490260534225077781791869099057042958484484660428433072480968229046836127860424301702390"
    "6216037361017031106182326286140192982148406635622487944334920777353162449651041611630443895888950877"
    "4379981264458413245217238141040601238121273983954863057832338827301078765360589269787767441529388942"
    "2636962268258173529623782427197440000";
const char* kIntegral =
    "2175188099784750065997542609888467373337434176381577121622052613057913758329843008369240683273910368"
    "5577330848169752117568087790361095209379398945098057743576903623258657539530447246065834640720577088"
    "4580727448791281579650052677873381763679043925892475851912551182415026066360527850858159639072088211"
    "5158935964420928287540416767622563808173622512939274625005731408060133793183897297366363596630518360"
    "6251642587425935205942137713244130084438519753043945123419279982489228456818608763211900865775548690"
    "6360792360112749665457482189786362294518116102406374783545927360215539612843886343548315325594128794"
    "1497107628424099124097003302430367501190710250922888637138431305200910894754238984696947395119131963"
    "7071206276667814368378162863301077172249323584374725718058018022069250844465929766255946683790332290"
    "1369585992934859166880154472809053524549941575753578267583918707078475596980355631972264515101330414"
    "0109496976907183486365693324177213811699891983386208346109654531996545209879355797047988285743266232"
    "9641306699220604561741942812660278393516257287550419270647258004882522449047009491686275712957694833"
    "7706950984630530898794850997487593104820687433541743278933714322420540065489078371329449890686267961"
    "3614414120469269333143838229035877047907645847262549577175584081668577404392107085148106782280594944"
    "2734745948667742129036117261285205268600389188929582274774678527184254800872374872708818228913904386"
    "5262836318569617268740026083950497215246118517053027921702190534503434789395529953154935890423683150"
    "8067391134374872488112159657049321042775099494423896558401295263460615462800876972413978896797527922"
    "2553594266282006070994848610719831920153876092982973967392041678109780360996125942989844735171229999"
    "6834313573806795135045439009598126148905534352187359972201726243005524606272304709723269976829544844"
    "1912774821048423773778580379900882419828245730112968757199864212375646016013514893037775905626719564"
    "8041794861293781218577397661384073431177515000196648280020202013316416824834240134171907538835868041"
    "7542402408267945095005387996541433578712922915159545620467597379072616400024929148906323079028211939"
    "8720031011771860916206334153577595583722248077066036271457578823303697763510932123764937787078621875"
    "5781982350639116403413968608360293619680595981035060844102158073020609094010258814702710687852244335"
    "1515053665865598506853012044955691848333393051437882015337987237654591085000477208941701387363276721"
    "7561223993272426672314480066213081013278905654778093699061304629942903725787439626637374374915093817"
    "6161693491882967982437140660673850939411150405255830647789017625985843522211547670567705221170460199"
    "3115401873286779411862156472162120596759811348679137665910968899263102154692664408579885343029232140"
    "4821463447047241327742880820129959185913788884546951527605356684526632531839273711602641642193673269"
    "0043970786272377555298954545866002436416739304069133894162522480854940010784545363340431588910058686"
    "1060591436745419788180063416443232478702198787938913648096588184843808095578139911772526600606328712"
    "3162743755903179562132047438806203228922039170363286462274925415598397953026797245894085872631967107"
    "6817892272123943715921881857468769216644629139753853797958877605176353981813542302301367694411674266"
    "4522579607728297576815481246411803027048410710740687780574611962272427048751324343181519799541349749"
    "0562274838056605193864440533787137149299406366038550714271543982754191550643447233262698853757824237"
    "7475024370923112071406761830404396180407228091489852302487497047571855407995631419858574076950274668"
    "3702455406336860440568896407705229325051093780309006503118957908297631243388191085542156779639706061"
    "7868471829934766943759628585369316378381893487471198991593577078189856896156534689856972549631143756"
    "3176245338059836059352264300638181914178089285612221071053278111907164151158375221880734632050576127"
    "1234211331586643797165335173153316929641316680393961090024797502338338488622320402049483790546760822"
    "3211706895521675654691083378034259977661953106323122280083754601087336000665480537309917503175642670"
    "4734461242519145352686509414656719200956840780735634055122889177009323614048222641478931915176679234"
    "2029971989178371722169254443686383798618329880537756356520562252700309977176687299329922762190036437"
    "6965530064624803369042184179912831101334496077429590949954837956150199598567410190592835672846858944"
    "6301986052310803482551467631997738255516653808014328347399124581662926343368689818589900840837084625"
    "2950414787423519441295636978494452621322935625551727510730907723639171675637175698177431275215517415"
    "5969256781108460641907326008532697909912909047835459287187026525988794924307127846661952587751940550"
    "0319953835016038333569323404576892351279471449673248873532782044291780785167274134550730202284893677"
    "6093619049045432828919738493212680597814891381771151679805925324041450007547518728116494023593128073"
    "6161934378427505840604635330624338057196054654701101812070354683798089800584124533077894519076625191"
    "3343067972458234549410347214589606614738751958043412360298623548521879371607762361155885968719312939"
    "67627175507526083785422277179635487280594471949394324786010503594600613879929519"
    "/"
    "2951386555588556778320452593030052340610113893865354368463255643382209383934658042077287583887928475"
    "5734944314812932219589012793940330978903551693541204267055511218239806393132195621823015869488313338"
    "4880426786232804129698137920390207206742745443182015181257322293111621992869336050256421899502092324"
    "8468376796334689598122879924834033657381564979285201740976680539816302944725866453472502554723335686"
    "0783821577466021370553095731723396982071631401606099010052736761396418239843236061490673967137900274"
    "4862986736119381174593101714364997658009384385724907801727860496100165907701386339531922322690909465"
    "3427225524100580188617312053038071686419127532184518863770682762752468787534817414060740807188189196"
    "3781763248612930452598182517591817786889024647775694260487823219867071103870431985097959769185155996"
    "9154082685711355617362480609588888720326676043632451783190872753236175307326404168301433599849475078"
    "4284063172361995340003417651495343130624717553026726329988567202063974685817209280696555865319574565"
    "1353878360051738643769599164539927045011053379203030161111047675658066620666941385991015387272744543"
    "7930156893723182864456544301422915285192656850647702734577892089460745218788943135057888683147405318"
    "5206232862826655082305480430761014362763766717768345004057257577788693663184500271097844325337394827"
    "1017383112675185352372771583969079837109894936309044065601932747748674690543076540773968512072453157"
    "8241296661650951430699480114500206416846347050219873404483676396993521329132541561803344021665845779"
    "5499432367589727851930493193242344353045165019329176576471181593352630598756839517732923214468432296"
    "0429889267224836597015041690685908950943471312809610965008498429194902117308188315496423523878228818"
    "7665685845916419683372274203788891511917997037539257631538219860588428189705018794704360805461106082"
    "0383607117662894615441466354645276236142315030105786475395520791556539669716638852317868968787033025"
    "0628515167899780707985933717971907158812943682567961158472097430730857575257925914594080680001902403"
    "0555644818961268853486975072596800213051997690381253013294822765840213870258055682432699490610681222"
    "4227937279722108549063221758510784912313545590316505287095740042519769968112638564140536788051402330"
    "6060892644567245084762055126905803278194851037433609546756255863470714627586247333351357644822188625"
    "2821756595731212114010952853458246041525700495532442238614632147233464526629363660875420308086565013"
    "3066901997353716744174946941429338006863109374608084694718759538220930935810891125487782478870916071"
    "8186590881670635167680571972084545228388299114449425737891686253831649967829610489889530099496448680"
    "5671124822767174159165542002232915399604409526632772487837888504768718724497965053705276439728469828"
    "9293748636572517443732769880003888225415306132860858691026572011222761493098283642369009600304222489"
    "4750371352434149941161454750399661948699366652691092582589701435358145417858403569482962658763757209"
    "9459524729848445171900344776306080857228169519880491623406243408311512943697584543483429154906011432"
    "8703780208721583103546322415541743817087099544101819151958661530755994214172582759021069770287295057"
    "3836992893610786289946548826188201358791066604158660704498091841914533948578738215430540033360073055"
    "7345235394822735082194523322850148193231241218631539046480336568396873746901359710906348097177738704"
    "0213082334895498547063883971882881126771574908141434590828708483199014744144178883901947339701055125"
    "0147942712317152239614061184590399388107212877592774643266216682647481258689824766821122819066612614"
    "6845147692787266692053664911866982180306094854292854613989045941416939777590514699828055930949938333"
    "5410967865743880208263265120234530557472386214868381638050138389514287964126640145530439326297513517"
    "8889294632069928317332023893062338204368273485757709068218778294904680287047875652048726382490736215"
    "0217146488790338009287664162494963979740788415181199002283824281554810037502534864160519796924034971"
    "9114151218933290211494056637081844924487730753391508038150381992379225032608451636442699720048689670"
    "7064479745154333473444699373691346672180001617587776001551095267515122764996678968107360590778467150"
    "2884456684791550568507409288023586535655966849358312722386537622620619380425505139565289614281607561"
    "1683565586198200462547541441711053527793394618802220919657459085022627825191775309307542221823939646"
    "1107408368974941871420738962040863959046142782168814810131061047543152453648167334894831437154919693"
    "4680820581035898892456746784564284443863534318966363050259477368864425515834724033649564365495840700"
    "1997805778367538802797159966973593129992315304098215273928133141475413826914147711843233623381988310"
    "4996057112240467157779926359978485422384971123035204221676339755320828784891611298963147490347058463"
    "0535920258903696897275709248540336354602765039918924160263811669255381536358947687158117166144720636"
    "3901894869253889047299341120814217434002395009612803264974456854281375437538698988546196070070854513"
    "0892741806575990527359516231652697519334365837619770552895128975565968091663618339152426194314400133"
    "676764161754285379411429766611840526444070220304430251421966221447417298944000";
const char* kDifference =
    "5617899183279073902021141981550573922694912750923867870849273791478748834140163603890873130341463345"
    "8816076989108129896537401827864884018496362904093532255671711325167685368633677013806308444877683804"
    "4345855423857373698996530973666570996430979827518546486851165243971449707367918181599387630467420454"
    "4090608351472005471293356577071895563645081758240662780998598036812355069336041747647375603984573066"
    "4018938562409556235048649079685347976255953092203426832612329775418994727703219608862511898347888820"
    "8040464825377106457457450878749801372216259836074371806904417019826007389508635697189604220946659029"
    "5520964476085909067352721453001197097282753951406901428754512142774203066240838117465520275072095580"
    "5642176102170362027606688799125476205566980821622322797997578107651225628858299706622618693490069691"
    "8388245571837438110000375407031649691421088806133545165257435834946147736018067334824563928963355281"
    "2600661233686449816113769543007982289766000105403774862533796981901846646884492052066094910816467804"
    "7591488298453436163360568717058828639326219412901097292260634271601603646792731949084267720783701215"
    "0562333047300478120775330824129826412518599373412034423265116476688482788303860700424366104955756254"
    "9406063442473151218562615552245976978887991906528499980010733407907785156783408021128267832695046934"
    "4550027389151915140524241717574615205199970524936016679932253165404002770789993399647581454617208014"
    "9858585242819023562658379260051181021392653739865634186448786227094002182370519793857442588126566077"
    "0551772898250852333870841296083059147352265272669892672788621568930646981149451263586775749402278993"
    "7945230857387950720030810572023167804324880195844772419884916458596951795511187260812679859671933197"
    "3795892641113186460072770516917365372030216543097373342373454981114137647800645192554326608504219529"
    "0471696404364348006670638691379032556663116442444659759465450987283664734647922309075449759727680847"
    "3370807740459948545101284369287898697443189728139664790162696168288320736610516744523993625681167570"
    "0564307364010364056810035733792876122496491015533202251582021545718385055873320153264229710148974425"
    "1154439577289450251442452932918209103728203653641796853054886254503940922736561645263856142530944166"
    "8061655799394082681518982703743306967065854600700834872422049028902444362189800924662310339716502209"
    "1380476724636648915654307481275067549997744198609921998572851680720638550043125935263823805213604846"
    "7536065159726736926214761776109557629952324658152680948217298614721692711835959373683815769216728578"
    "4262774760097206167635080858649388136779817422435723017488234443664571949543637639669658530919183998"
    "1519505577800820568101606402843653772129530574544109621240208035269508030277127412682190275281552433"
    "7924545766553782468802143451229857205964304684901319407413697992982347697843242977760561021767442836"
    "1385476425623738887773279897475752069149572153365771515415793394945035126969489203160108800205011504"
    "3779385861339404804021525627434203094579988317861446564436888436890977349045922421454105776990866537"
    "8158406606338945211515805521459489950758808337803307799891712922137451243371148928207207162588946840"
    "1125385450710452547535783109776822806053795345348440410947494530819561812600774824976426181444803173"
    "4417916600776319926475205344530961924821151044590431614311645613260210049700389946684298817323413109"
    "5263393106759597468821326322308261321649575834187452614704632013470967270496108829066285179884486703"
    "1330858923443487470877584270724566169795407436900898873018366386780989709984562825016270999316961713"
    "4576722163321371433198586135485531135168501671791784289507200900902921963193879402239818773548083076"
    "1690168174832449136610711189955655905907796800744362542512044339203075164893138057294509143851093081"
    "7724450886635923747749991688579231953702722614922143038962582925714461634416898673663675572710987669"
    "6936564147093320149075146795204277781040273938241119493146432967473698155542204587253904603570387163"
    "3280962858562227863851064239209014397458522327864433645279550366633453892178915552255611922751262050"
    "7050963048050245309228514563323083812897219004644052571882852847095550545301310687689783028878111808"
    "3100823853227274065363381589441307607242513991496512686048519172274284462084693078334761115142569759"
    "3689416197288168121071253802176189429851694424571567743042610768178386074653384477395217349443513331"
    "9819047183076106371656682283951534425783612819439129178788102658985567262015370165439597969009551361"
    "7720992800357218035621654289984559233741523614744171440665317628524350382770039537543722593372723774"
    "8858695274269725448438613739960726974717707160523306669558129167406096167849029659365330226387454410"
    "2907520386299690341956483373449229504618114482704869191594367939728587525578696491180234438671965852"
    "9081494123186832835685989523493635220150169159663343741160744703709254205060761319587929759228969591"
    "3178539481587911685309914322182281864510475110823066927575070072701036355238292517868321701095801713"
    "9369966106530503336854011422997649883015852674131501241740178047571594021702303528108322221243426934"
    "41887454342023322502098355141866530185184365590769838640246828245519786892051819"
    "/"
    "4129172816648427646450290758485649112694633354612342928403934929043458145692389015211049235076730350"
    "0473814367585472570363925508195042900623756823962511521554984495717062457480752134225116429788032177"
    "6334267896094081772933051488421303967790129974937061603255420562291063470537760040174404301163369343"
    "3081375385106450995359768493762628645555528794479596040868806661657381279058780515585135715483415153"
    "2140532240751859368523462379761760984612683718434370143115674223163844829021994442886309242362356685"
    "4747175067565788062765866819863533691152751378139346207282423048509097878752734365058058741785765935"
    "8721754627982938416797920043418040622571255359972258979500566839332614594397519369097166372577551601"
    "4433412737860052878980542548206572873622009960638044768791519663741393910187926785682385844364492144"
    "0568998209530626384701037114334156673296622703876681718001434407697648157400261779230694001260201742"
    "8284596939906481344735226627856286645262657544476239280980343113799544830194557956537870132831078811"
    "8001424536575387487123364309251894696802214107706357672076134295830453432139172933233642436198599249"
    "0195304276733299051009992453324581193109605736254061320323937220939995856661576535684813688972275776"
    "0169631996882935732164942242744939789787435016659876324653103535356766777897175271656992837610758126"
    "7729817210443733881596519524059958946837318860371826687000864672207623670355809248805492919243893012"
    "4998228360805476254112953258545589107636655745305606590608939634207242572694507746197326282964365389"
    "7003611672746871659172116438587227727411608950790073541782426595734538167134376014461466864566877002"
    "7581058448042110146723829639031390631149218038586652158150658722191309361819099335322595580946020306"
    "3448259399517105065223198431296200852273105373196011712974987262339140204625506646733976817606145172"
    "6645330167027685331193119815312514761359547146786511804340021102665552400341220972972167388139315750"
    "0758788180160008291118562224017635843015128143137411119030989719856841974305989168932392282173570162"
    "7086938160782627001210738275400624811147538751761140560652135750368683561243880863027187165681899090"
    "0123609505202483178073005027664152749534817906926352049761542624868148704579326087833320418708979706"
    "8914744686071254516651638005892392380678177860827635260505318426345659190756003957804025362498583665"
    "1285449065206257274330368279975130148243614162439337377664975517381563405122963912683722101365785734"
    "5453308394236328264926851520930079558771094340986075245465493258099140526279641564311919208804212018"
    "3617656471968947282477047976315930765283572819132939164762138273145542656771150609506785595548056806"
    "5708105376929176249601802634846883045324287096733273641442138749565952867552489133169774344906343265"
    "8068728066948830349414747287073844196769029017998063971825080420668440837410300857803674693863397652"
    "9221102399611976636707129042684261881522535064163911691982767533178140029903551616636355568537476347"
    "4270278445265506875938415523226453497865309896462519275656071879589019231203073515136829817863202560"
    "6176618015016269518654838982960385664985266249609620198253189608451736427539515018157629866556617095"
    "0399599677406245890184063755423511466648203883404549292129635364925748605521740311870621325006267723"
    "7725894312948601454946143857267049373126870017198034325502833309765380649054717871543407999018078307"
    "5966299297612576967072657936294221308373566966416815085174712789254108076913120271796162203774142981"
    "6314197128992538694674341350679080724850610721173718911330845730866518453430584854479405411974352170"
    "5972594250248559037396953734723030227125423329469900717755757140333604517870471860120412802602399053"
    "0253069069441139538436805836242402444226377346952901312491805063339406848912046551303422180867268684"
    "6207832550267962341371198388588496271309274097689311076024119293149128521110927971928304867694176077"
    "1661305097156510070808257433765460610216116810799593443147881708782614573519425285687667130901090855"
    "6489575030712703948532904214809754150940592373995505255826023578820724059113685385373553052983418557"
    "7864214994630190161917914455072357733741721413476085886827829711543193901803409255989297830054518574"
    "6685132181246528048459058139555389352679116541085823405925693437557245048065595306497435812103679966"
    "3336883373316101520512703625661866545171285481751515441936802680941118400907756677864932277639841640"
    "6766883968150195853166823432281675944019075028809781463891926628923869192393142633547961585876140696"
    "2712138107129652303673397197062109277807425371926766341868968627274812888017281496467877538973216539"
    "3284607557316564564927326127310138635337406156324739013657456288429272601066638272229908417891155510"
    "1250233773939266877353096423434576056217592364262806986845422236530786606474964878867763636752085092"
    "8770154842078579113325470144924751802287475176645645897327606509430283708777083937863066593265270806"
    "6093639686887601451691648550595520325572420726310165933997247730554196176635144848808686607254326291"
    "7924010850954405136872771342014860391201053112946455116150055621908413586690379865158355779043690041"
    "53511390822737919259505867013849302449393080245255791721336487667935695087239168";
const int kPMinusVertexCount = 346;

}  // namespace polystab::reference
