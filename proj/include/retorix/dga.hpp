#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "retorix/complex.hpp"
#include "retorix/gf2.hpp"
#include "retorix/qlinalg.hpp"
#include "retorix/rational.hpp"

namespace retorix {

// The differential graded algebra R^K: generators u_i (degree 1) and t_i
// (degree 0) with du_i = 0, dt_i = u_i, subject to
//   u_iu_i = 0,  u_it_i = u_i,  t_iu_i = -u_i,  t_it_i = 1,
//   u_iu_j = -u_ju_i,  u_it_j = t_ju_i,  t_it_j = t_jt_i   (i != j),
// and the Stanley-Reisner ideal (u_σ = 0 for σ not a face).
//
// A monomial in normal form is u_σ t_{ω∖σ} with σ ⊆ ω; as a word it is the
// ascending-index string with u at positions of σ and t at positions of
// ω∖σ (reordering between the two presentations costs no sign).
struct Monomial {
    uint64_t sigma = 0;
    uint64_t omega = 0;

    Monomial() = default;
    Monomial(uint64_t s, uint64_t w) : sigma(s), omega(w) {
        if ((s & w) != s) throw domain_error("monomial requires σ ⊆ ω");
    }
    int degree() const { return popcount64(sigma); }
    bool operator==(const Monomial& o) const = default;
    bool operator<(const Monomial& o) const {
        return sigma != o.sigma ? sigma < o.sigma : omega < o.omega;
    }
};

struct SignedMonomial {
    int sign = 1;  // ±1
    Monomial mono;
};

enum class ProductMode {
    kFull,  // the honest relations; off-diagonal ω-components appear and are exact
    kRule   // same-index u·t and t·u collisions yield zero outright (cohomology-level rule)
};

// Product of two normal-form monomials in the free algebra (no
// Stanley-Reisner reduction). Empty optional = zero.
std::optional<SignedMonomial> mul_monomial(const Monomial& a, const Monomial& b,
                                           ProductMode mode = ProductMode::kFull);

// Finitely supported rational combination of monomials; zero coefficients
// are never stored, so equality of maps is equality of cochains.
using Cochain = std::map<Monomial, Rational>;

void cochain_add_term(Cochain& c, const Monomial& m, const Rational& coeff);
Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_scale(const Cochain& a, const Rational& s);
bool cochain_is_zero(const Cochain& a);

// Product in R^K (Stanley-Reisner reduction applied).
Cochain cochain_mul(const SimplicialComplex& K, const Cochain& a, const Cochain& b,
                    ProductMode mode = ProductMode::kFull);

// d(u_σ t_{ω∖σ}) = Σ_{i in ω∖σ} (-1)^{|σ ∩ [1,i)|} u_{σ∪i} t_{ω∖σ∖i},
// dropping terms with σ∪i not a face; extended linearly.
Cochain differential(const SimplicialComplex& K, const Cochain& c);

// The Z_2^m sign action: g · u_σt_{ω∖σ} = (-1)^{|ω ∩ g|} u_σt_{ω∖σ}.
Cochain act(const Gf2Vector& g, const Cochain& c);

// Split by the total support ω of each monomial.
std::map<uint64_t, Cochain> split_by_omega(const Cochain& c);

struct CohomologyClass {
    int p = 0;
    uint64_t omega = 0;
    QVector coords;          // in the fixed basis of H^{p,ω}
    Cochain representative;  // a cocycle in R^K_ω
    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

// Fixed bases of H^{p,ω} = H^p(R^K_ω, d) with representative cocycles and
// quotient coordinates, built lazily per ω. Construction cross-checks the
// dimension of every piece against the simplicial side and asserts the
// f_ω chain-map property (u_σt_{ω∖σ} -> σ*), so a sign-convention mismatch
// aborts instead of being silently absorbed.
class GradedBasis {
public:
    struct Piece {
        int p = 0;
        uint64_t omega = 0;
        std::vector<uint64_t> sigmas;  // monomial index, σ ascending
        QuotientBasis quotient;
        std::vector<Cochain> reps;
        int dimension() const { return static_cast<int>(reps.size()); }
    };

    explicit GradedBasis(const SimplicialComplex& K, long long face_guard = 200000);

    const SimplicialComplex& complex() const;

    // Builds the ω tower on first use.
    const Piece& piece(int p, uint64_t omega) const;

    CohomologyClass basis_class(int p, uint64_t omega, int index) const;

    // Expresses a cocycle as a class; throws internal_error if the input is
    // not a cocycle of the expected bidegree.
    CohomologyClass class_from_cocycle(int p, uint64_t omega, const Cochain& rep) const;

    // Solves d(w) = z in R^K_ω; nullopt when z is not exact.
    std::optional<Cochain> exactness_witness(int p, uint64_t omega, const Cochain& z) const;

    QVector vectorize(const Piece& piece, const Cochain& c) const;

private:
    struct Tower;
    struct State;
    const Tower& tower(uint64_t omega) const;

    // Towers are cached behind a shared state so copies share the cache.
    std::shared_ptr<State> state_;
};

// Prebuilds the towers for the given ω's (in parallel) and returns the basis.
GradedBasis cohomology_basis(const SimplicialComplex& K, const std::vector<Gf2Vector>& omegas);

// Cup product. Both modes agree on the (x.ω △ y.ω)-component; full mode
// additionally produces off-components that are exact.
CohomologyClass cup(const GradedBasis& basis, const CohomologyClass& x, const CohomologyClass& y,
                    ProductMode mode = ProductMode::kRule);

struct FullCupResult {
    CohomologyClass projected;                  // the (2, ω₁△ω₂)-graded answer
    std::map<uint64_t, Cochain> off_components; // other ω-components of the raw product
};
FullCupResult cup_full_components(const GradedBasis& basis, const CohomologyClass& x,
                                  const CohomologyClass& y);

// Full graded ring of M^R(K, Λ) up to max_degree: all basis classes with
// ω in row Λ and all pairwise products (i <= j) as coordinate vectors.
struct RingStructure {
    struct Entry {
        int p;
        uint64_t omega;
        Cochain rep;
    };
    struct Product {
        int i, j;
        int p;              // total degree
        uint64_t omega;     // ω_i △ ω_j
        QVector coords;
    };
    int m = 0;
    bool characteristic = true;
    std::vector<Entry> basis;
    std::vector<Product> products;
};

RingStructure ring_structure(const SimplicialComplex& K, const Gf2Matrix& lambda, int max_degree = -1);

}  // namespace retorix
