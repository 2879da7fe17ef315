#pragma once

#include <cstdint>
#include <vector>

#include "retorix/gf2.hpp"

namespace retorix {

constexpr int kNullityGuard = 22;

// Circuits of the binary matroid represented by the columns of M:
// inclusion-minimal supports of nonzero vectors in ker M (the cycle space),
// found by enumerating all 2^nullity combinations. Elements are the
// columns, 1-based; results sorted by (size, mask).
std::vector<uint64_t> circuits(const Gf2Matrix& M);

// Same, from an explicit spanning set of the cycle space.
std::vector<uint64_t> circuits_of_cycle_space(int n, const std::vector<Gf2Vector>& spanning);

struct BinaryMatroid {
    int n = 0;
    Gf2Matrix matrix;
    std::vector<uint64_t> circuit_set;  // computed on construction

    static BinaryMatroid from_matrix(const Gf2Matrix& M);
};

// (C1) no empty circuit, (C2) antichain, (C3) circuit elimination.
bool circuit_axioms_hold(const std::vector<uint64_t>& circuits);

struct Triangularization {
    Gf2Matrix matrix;              // n x n, strictly upper triangular
    std::vector<int> permutation;  // permutation[j] = original column at slot j+1 (1-based)
};

// Rewrites B as a strictly upper triangular square matrix with the same
// column matroid (up to the returned column permutation). Requires a zero
// column; the construction follows the nested column-span filtration.
Triangularization triangularize(const Gf2Matrix& B);

// A matrix whose column-matroid cycle space is exactly span(deps):
// rows form a basis of the orthogonal complement of span(deps) in GF(2)^n.
Gf2Matrix matrix_from_dependencies(int n, const std::vector<Gf2Vector>& deps);

// Number of non-isomorphic binary matroids on an n-set, by enumerating all
// subspaces of GF(2)^n as cycle spaces and counting circuit sets up to
// ground-set permutation. Guard: n <= 5.
long long count_binary_matroids(int n);

// Exhaustive (backtracking) search for a ground-set permutation carrying
// one circuit set onto the other. Candidates are restricted to
// degree-profile-preserving images, which keeps the search exact and fast.
bool circuit_sets_isomorphic(int n, const std::vector<uint64_t>& c1, const std::vector<uint64_t>& c2);

}  // namespace retorix
