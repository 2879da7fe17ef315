#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "retorix/errors.hpp"
#include "retorix/gf2.hpp"

namespace retorix {

// A simplicial complex on the vertex set [m] = {1,...,m}, stored by its
// facets as bit masks (vertex i <-> bit i-1). The complex stores m
// explicitly, so ghost vertices (in [m] but in no facet) are representable;
// induced subcomplexes keep their ambient labels.
//
// Two degenerate complexes are distinguished:
//   - the void complex: no faces at all (empty facet list),
//   - the empty complex {∅}: the single facet ∅ (mask 0).
// The distinction matters downstream: K_ω for ω = ∅ is {∅}, whose reduced
// cohomology is Q in degree -1.
class SimplicialComplex {
public:
    SimplicialComplex() : m_(0) {}
    SimplicialComplex(int m, const std::vector<std::vector<int>>& facets);

    static SimplicialComplex void_complex(int m);
    static SimplicialComplex empty_complex(int m);
    // Normalizes: keeps maximal faces only, sorts lexicographically.
    static SimplicialComplex from_facet_masks(int m, std::vector<uint64_t> facets);

    int vertex_count() const { return m_; }
    uint64_t ambient_mask() const { return mask_all(m_); }
    // Vertices the complex was induced on; defaults to all of [m].
    uint64_t active_vertices() const { return active_; }

    const std::vector<uint64_t>& facet_masks() const { return facets_; }
    std::vector<std::vector<int>> facet_lists() const;

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }

    // Largest facet cardinality; 0 for {∅}, -1 for the void complex.
    int top_card() const;
    int dim() const { return top_card() - 1; }
    bool is_pure() const;

    bool is_face(uint64_t sigma) const;
    // Masks of all faces with |σ| = card, sorted ascending; card 0 gives
    // {∅} for any nonvoid complex. Lazy and memoized.
    const std::vector<uint64_t>& faces_of_card(int card) const;
    long long face_count() const;  // all faces including ∅ (0 when void)

    // Union of all facets (the vertices actually used).
    uint64_t support() const;

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && facets_ == o.facets_;
    }

    // Copy carrying a record of the vertex set the complex was induced on.
    SimplicialComplex with_active(uint64_t active) const;

private:
    int m_;
    uint64_t active_ = 0;
    std::vector<uint64_t> facets_;  // antichain, lex-sorted on vertex lists

    mutable std::mutex cache_mutex_;
    mutable std::vector<std::vector<uint64_t>> face_cache_;
    mutable std::vector<bool> face_cache_built_;

public:
    SimplicialComplex(const SimplicialComplex& o);
    SimplicialComplex& operator=(const SimplicialComplex& o);
    SimplicialComplex(SimplicialComplex&&) noexcept;
    SimplicialComplex& operator=(SimplicialComplex&&) noexcept;
};

// Lexicographic order on sorted vertex lists (not integer order on masks).
bool lex_mask_less(uint64_t a, uint64_t b);

// K_ω = {σ in K : σ ⊆ ω}. Vertices keep their ambient labels.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, uint64_t omega);

// Join: vertex set is the disjoint union (L shifted by K.m), facets F ∪ G.
// A factor with m = 0 acts as the identity.
SimplicialComplex simplicial_join(const SimplicialComplex& K, const SimplicialComplex& L);

// All inclusion-minimal non-faces of K.
std::vector<uint64_t> minimal_non_faces(const SimplicialComplex& K);

// Flag: every minimal non-face has at most two vertices.
bool is_flag(const SimplicialComplex& K);

// link(K, σ) = {τ in K : τ ∩ σ = ∅, τ ∪ σ in K}; σ must be a face.
SimplicialComplex link_of(const SimplicialComplex& K, uint64_t sigma);

SimplicialComplex make_simplex_boundary(int n);       // ∂Δ^n, n+1 vertices
SimplicialComplex make_polygon(int k);                // cycle on k >= 3 vertices
SimplicialComplex make_crosspolytope(int n);          // 2n vertices, non-faces {i, n+i}
// Boundary complex of the dual of Δ^{n_1} x ... x Δ^{n_k}; vertex order
// 1_1..1_{n_1}, 2_1..2_{n_2}, ..., k_1..k_{n_k}, 1_{n_1+1}, ..., k_{n_k+1}:
// block i = {off_i+1..off_i+n_i} ∪ {n+i}, and the blocks are exactly the
// minimal non-faces.
SimplicialComplex make_product_simplices_boundary(const std::vector<int>& sizes);

// "cross:n", "prodsimp:n1,n2,...", "polygon:k", "simplex:n"
SimplicialComplex standard_complex(const std::string& spec);

// JSON {"m": int, "facets": [[int,...],...]} with 1-based vertices.
SimplicialComplex complex_from_json_text(const std::string& text);
std::string complex_to_json_text(const SimplicialComplex& K);

}  // namespace retorix
