#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retorix/complex.hpp"
#include "retorix/dga.hpp"
#include "retorix/gf2.hpp"

namespace retorix {

constexpr int kCsympClassGuard = 128;

struct CsympWitness {
    std::vector<CohomologyClass> classes;  // ω's symmetric-difference to [m]
    CohomologyClass product;               // nonzero, in the top bidegree
};

struct CsympResult {
    bool value = false;
    std::optional<CsympWitness> witness;
    std::string reason;  // set when value is false for a structural reason
};

// Decision procedure: M^R(K, Λ) (or RZ_K when Λ is null) is c-symplectic
// iff there are n = dim(K)+1 over 2 homogeneous degree-2 classes, ω_i in
// row Λ, with nonzero cup product. Precondition on K: pure with facets of
// even size 2n; otherwise returns false with reason "odd dimension".
// Polytopality is not verified; callers on non-polytopal spheres should
// treat the answer as carrying that caveat.
CsympResult decide_c_symplectic(const SimplicialComplex& K, const Gf2Matrix* lambda);

// Constructive witness for flag polytope boundaries: picks a facet
// {v_1..v_n}, reads the opposite vertices w_i off the codimension-two face
// links, labels the remaining vertices greedily, and certifies the product
// of the classes [u_{v_i} Π_{ℓ(v)=i} t_v] nonzero.
CsympWitness flag_witness(const SimplicialComplex& K);

// Mixed degree-1/2 witness search with the △-accumulator (no
// dimension-parity precondition); flag complexes take the constructive
// fast path.
CsympResult almost_c_symplectic(const SimplicialComplex& K);

// Engine-level validation of a witness: every class is a cocycle, the ω's
// symmetric-difference to [m], and the full-mode product reproduces the
// claimed nonzero class. Throws internal_error when violated.
void verify_witness(const SimplicialComplex& K, const CsympWitness& witness);

}  // namespace retorix
