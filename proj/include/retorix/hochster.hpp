#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "retorix/complex.hpp"
#include "retorix/gf2.hpp"
#include "retorix/qlinalg.hpp"
#include "retorix/rational.hpp"

namespace retorix {

// Sparse coboundary matrix from cardinality c to c+1 cells.
struct SparseCoboundary {
    int rows = 0;  // # cells of card c+1
    int cols = 0;  // # cells of card c
    std::vector<std::vector<std::pair<int, Rational>>> columns;
};

// The augmented (reduced) simplicial cochain complex over Q. Cells are
// grouped by cardinality |σ| = p+1, so level 0 is spanned by ∅* whenever the
// complex is nonvoid. Simplices are oriented by ascending vertex order and
// δ(σ*) = Σ_v (-1)^{|σ ∩ [1,v)|} (σ∪v)* over vertices v with σ∪v a face.
struct ReducedComplexQ {
    std::vector<std::vector<uint64_t>> cells;  // [card] = sorted face masks
    std::vector<SparseCoboundary> delta;       // delta[c]: card c -> card c+1
};

ReducedComplexQ build_reduced_complex(const SimplicialComplex& K);

// Sign of inserting v into the sorted face σ (v not in σ).
inline int insertion_sign(uint64_t sigma, int v) {
    const uint64_t below = (uint64_t{1} << (v - 1)) - 1;
    return (popcount64(sigma & below) & 1) ? -1 : 1;
}

// Exact reduced Betti numbers: result[i] = dim H̃^{i-1}(K; Q), for
// i = 0..top_card. Empty for the void complex. A complex with an apex
// vertex (one lying in every facet) is a cone and short-circuits to zero.
std::vector<long long> reduced_betti(const SimplicialComplex& K);

// Graded Betti table of M^R(K, Λ): entry (p, ω) = dim H̃^{p-1}(K_ω; Q) for
// ω in row Λ. Λ = I_m yields the full Hochster table of RZ_K.
struct GradedBettiTable {
    int m = 0;
    std::map<std::pair<int, uint64_t>, long long> entries;  // nonzero only
    std::vector<long long> totals;                          // index p

    long long at(int p, uint64_t omega) const {
        auto it = entries.find({p, omega});
        return it == entries.end() ? 0 : it->second;
    }
};

GradedBettiTable graded_betti(const SimplicialComplex& K, const Gf2Matrix& lambda);

// Euler characteristic two ways: from the cell count formula
//   χ = (Σ_k (-1)^k f_{k-1}(K) 2^{m-k}) / 2^{m-rank Λ},  f_{-1} = 1,
// and as the alternating sum of graded Betti totals. Consistent inputs
// (Λ characteristic over a genuine complex) make the two agree.
struct EulerCheck {
    Integer chi_cells;
    Integer chi_betti;
    bool consistent() const { return chi_cells == chi_betti; }
};

EulerCheck euler_check(const SimplicialComplex& K, const Gf2Matrix& lambda);

}  // namespace retorix
