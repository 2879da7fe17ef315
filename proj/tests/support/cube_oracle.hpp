#pragma once

#include <vector>

#include "retorix/complex.hpp"

namespace retorix::testing {

// Independent oracle for H^*(RZ_K; Q): the real moment-angle complex as a
// cubical CW subcomplex of [0,1]^m. Cells are products e_1 x ... x e_m with
// e_i in {0, 1, 01} and 01-support a face of K; the cellular coboundary is
// computed directly from the cube, with no reference to the Hochster
// decomposition or the DGA. Intended for m <= 12.
std::vector<long long> cube_cw_betti(const SimplicialComplex& K);

}  // namespace retorix::testing
