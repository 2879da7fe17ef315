#pragma once

#include <map>
#include <utility>
#include <vector>

#include "retorix/complex.hpp"
#include "retorix/gf2.hpp"
#include "retorix/matroid.hpp"

namespace retorix {

// A real Bott manifold is specified by a strictly upper triangular n x n
// GF(2) matrix A; a k-stage generalized one by block sizes n_1..n_k and the
// blocks of the strictly upper triangular block matrix 𝔸. As a flat matrix
// 𝔸 is k x n: row i carries the blocks (i,j), each a 1 x n_j bit row, so
// column n+i of Λ(𝔸) = (I_n | 𝕀^t + 𝔸^t) reads ones on block i plus the
// (i,j) block bits inside block j for j > i. (With all n_i = 1 this is
// exactly the real case.)
struct BottSpec {
    bool generalized = false;
    Gf2Matrix A;                                      // real case
    std::vector<int> sizes;                           // generalized case
    std::map<std::pair<int, int>, Gf2Vector> blocks;  // (i,j), 1-based, i < j

    static BottSpec real(const Gf2Matrix& A);
    static BottSpec generalized_spec(std::vector<int> sizes,
                                     std::map<std::pair<int, int>, Gf2Vector> blocks);
    int stages() const { return generalized ? static_cast<int>(sizes.size()) : A.cols(); }
};

struct LambdaComplex {
    Gf2Matrix lambda;
    SimplicialComplex K;
};

// Λ(A) = (I_n | I_n + A^t) over the crosspolytope boundary, or
// Λ(𝔸) = (I_n | 𝕀^t + 𝔸^t) over the product-of-simplices boundary with the
// block vertex order. The result is checked to be characteristic.
LambdaComplex lambda_matrix(const BottSpec& spec);

// k x k matrix: off-diagonal (i,j) = parity of block (i,j), diagonal
// (i,i) = n_i + 1 mod 2.
Gf2Matrix underlying_matrix(const BottSpec& spec);

struct RingPresentation {
    struct Generator {
        uint64_t circuit;  // subset of [n] (blocks), 1-based bits
        int degree;
    };
    int ground = 0;
    std::vector<Generator> generators;
};

// Generators are the circuits of T(A) (real: A itself, generalized: the
// underlying matrix); deg x_C = |C| resp. Σ_{i in C} n_i. Products of
// generators with intersecting circuits vanish; disjoint ones multiply
// freely up to sign.
RingPresentation ring_presentation(const BottSpec& spec);

// β^d = number of pairwise-disjoint circuit families of total degree d
// (the empty family counts for β^0).
std::vector<long long> betti_from_presentation(const RingPresentation& pres, int dim);

// Pairs (i, j), i < j, of generators with disjoint circuits.
std::vector<std::pair<int, int>> disjoint_pairs(const RingPresentation& pres);

}  // namespace retorix
