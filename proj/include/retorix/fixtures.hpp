#pragma once

#include <vector>

#include "retorix/complex.hpp"
#include "retorix/gf2.hpp"

namespace retorix::fixtures {

// The 9-vertex 2-sphere used throughout: boundary of a triangular prism
// with each quadrilateral face subdivided into four triangles.
SimplicialComplex sphere9();

// Characteristic matrices over the square boundary ∂P_4.
Gf2Matrix torus_lambda();  // T^2 small cover
Gf2Matrix klein_lambda();  // Klein bottle

// (I_n | all-ones column) over ∂Δ^n: real projective space RP^n.
Gf2Matrix rp_lambda(int n);

// Nine-element dependency data for the two 9-dimensional real Bott
// manifolds with equal Betti numbers but different rings (elements 1..9).
std::vector<Gf2Vector> t1_deps();
std::vector<Gf2Vector> t2_deps();

// The 17-element matroid pair with isomorphic cohomology rings but
// non-isomorphic matroids (elements 1..17).
std::vector<Gf2Vector> seventeen_deps_first();
std::vector<Gf2Vector> seventeen_deps_second();

}  // namespace retorix::fixtures
