#include "retorix/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "retorix/dga.hpp"
#include "retorix/hochster.hpp"

namespace retorix {

SimplicialComplex random_complex(std::mt19937_64& rng, int max_m) {
    const int m = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_m));
    const uint64_t full = mask_all(m);
    std::vector<uint64_t> facets;
    const int count = 1 + static_cast<int>(rng() % static_cast<uint64_t>(2 * m));
    for (int i = 0; i < count; ++i) {
        uint64_t f = rng() & full;
        if (f == 0) f = uint64_t{1} << (rng() % static_cast<uint64_t>(m));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facet_masks(m, std::move(facets));
}

Gf2Matrix random_gf2_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::vector<Gf2Vector> r;
    r.reserve(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) r.emplace_back(cols, rng() & mask_all(cols));
    return Gf2Matrix(cols, r);
}

namespace {

Monomial random_monomial(std::mt19937_64& rng, const SimplicialComplex& K) {
    const uint64_t full = K.ambient_mask();
    for (int attempt = 0; attempt < 64; ++attempt) {
        const uint64_t omega = rng() & full;
        uint64_t sigma = rng() & omega;
        // shrink σ until it is a face
        while (sigma && !K.is_face(sigma)) sigma &= sigma - 1;
        if (K.is_face(sigma)) return Monomial(sigma, omega);
    }
    return Monomial(0, 0);
}

Cochain random_cochain(std::mt19937_64& rng, const SimplicialComplex& K, int terms) {
    Cochain c;
    for (int i = 0; i < terms; ++i) {
        const Monomial m = random_monomial(rng, K);
        const int num = static_cast<int>(rng() % 9) - 4;
        const int den = 1 + static_cast<int>(rng() % 3);
        cochain_add_term(c, m, Rational(num, den));
    }
    return c;
}

struct ClassPick {
    bool ok = false;
    CohomologyClass cls;
};

// A random basis class of a random bidegree with nonzero cohomology.
ClassPick random_class(std::mt19937_64& rng, GradedBasis& basis, const GradedBettiTable& table) {
    std::vector<std::pair<int, uint64_t>> keys;
    for (const auto& [key, dim] : table.entries)
        if (dim > 0) keys.push_back(key);
    if (keys.empty()) return {};
    const auto [p, omega] = keys[rng() % keys.size()];
    const auto& piece = basis.piece(p, omega);
    ClassPick out;
    out.ok = true;
    out.cls = basis.basis_class(p, omega, static_cast<int>(rng() % static_cast<uint64_t>(piece.dimension())));
    return out;
}

std::string describe_complex(const SimplicialComplex& K) {
    return complex_to_json_text(K);
}

using SuiteFn = void (*)(std::mt19937_64&, SuiteResult&);

void note_failure(SuiteResult& r, const std::string& detail) {
    ++r.failures;
    if (r.detail.empty()) r.detail = detail;
}

void suite_d_squared(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    // exhaustive over all monomials of R^K on this complex
    const uint64_t full = K.ambient_mask();
    for (uint64_t omega = 0; omega <= full; ++omega) {
        for (uint64_t sigma = omega;; sigma = (sigma - 1) & omega) {
            if (K.is_face(sigma)) {
                Cochain c{{Monomial(sigma, omega), Rational(1)}};
                ++r.cases;
                if (!cochain_is_zero(differential(K, differential(K, c))))
                    note_failure(r, "d∘d != 0 on " + describe_complex(K));
            }
            if (sigma == 0) break;
        }
    }
}

void suite_leibniz(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    for (int i = 0; i < 4; ++i) {
        const Monomial a = random_monomial(rng, K);
        const Monomial b = random_monomial(rng, K);
        if (!K.is_face(a.sigma) || !K.is_face(b.sigma)) continue;
        Cochain ca{{a, Rational(1)}};
        Cochain cb{{b, Rational(1)}};
        const Cochain lhs = differential(K, cochain_mul(K, ca, cb, ProductMode::kFull));
        Cochain rhs = cochain_mul(K, differential(K, ca), cb, ProductMode::kFull);
        const int sign = (a.degree() % 2 == 0) ? 1 : -1;
        rhs = cochain_add(rhs, cochain_scale(cochain_mul(K, ca, differential(K, cb), ProductMode::kFull),
                                             Rational(sign)));
        ++r.cases;
        if (lhs != rhs) note_failure(r, "Leibniz failed on " + describe_complex(K));
    }
}

void suite_chain_map(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    const uint64_t omega = rng() & K.ambient_mask();
    ++r.cases;
    try {
        GradedBasis basis(K);
        basis.piece(0, omega);  // tower construction asserts the chain map
    } catch (const internal_error& e) {
        note_failure(r, std::string("chain map: ") + e.what());
    } catch (const domain_error&) {
        // void slice; nothing to check
    }
}

void suite_graded_commutativity(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    GradedBasis basis(K);
    GradedBettiTable table;
    try {
        table = graded_betti(K, Gf2Matrix::identity(K.vertex_count()));
    } catch (const capacity_error&) {
        return;
    }
    ClassPick x = random_class(rng, basis, table);
    ClassPick y = random_class(rng, basis, table);
    if (!x.ok || !y.ok) return;
    ++r.cases;
    const CohomologyClass xy = cup(basis, x.cls, y.cls, ProductMode::kRule);
    CohomologyClass yx = cup(basis, y.cls, x.cls, ProductMode::kRule);
    const int sign = (x.cls.p * y.cls.p) % 2 == 0 ? 1 : -1;
    for (auto& c : yx.coords) c *= sign;
    if (xy.coords != yx.coords) note_failure(r, "graded commutativity failed on " + describe_complex(K));
}

void suite_associativity(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 5);
    GradedBasis basis(K);
    GradedBettiTable table;
    try {
        table = graded_betti(K, Gf2Matrix::identity(K.vertex_count()));
    } catch (const capacity_error&) {
        return;
    }
    ClassPick x = random_class(rng, basis, table);
    ClassPick y = random_class(rng, basis, table);
    ClassPick z = random_class(rng, basis, table);
    if (!x.ok || !y.ok || !z.ok) return;
    ++r.cases;
    const CohomologyClass left = cup(basis, cup(basis, x.cls, y.cls, ProductMode::kRule), z.cls,
                                     ProductMode::kRule);
    const CohomologyClass right = cup(basis, x.cls, cup(basis, y.cls, z.cls, ProductMode::kRule),
                                      ProductMode::kRule);
    if (left.coords != right.coords || left.omega != right.omega)
        note_failure(r, "associativity failed on " + describe_complex(K));
}

void suite_row_space_orthogonality(std::mt19937_64& rng, SuiteResult& r) {
    const int m = 2 + static_cast<int>(rng() % 10);  // m <= 11, kernel enumerable
    const int q = static_cast<int>(rng() % static_cast<uint64_t>(m + 1));
    const Gf2Matrix lambda = random_gf2_matrix(rng, q, m);
    const std::vector<Gf2Vector> rs = row_space(lambda);
    std::vector<uint64_t> rs_masks;
    rs_masks.reserve(rs.size());
    for (const auto& v : rs) rs_masks.push_back(v.bits());

    // full kernel enumeration from a basis
    const Gf2Rref rr = rref(lambda);
    std::vector<uint64_t> kernel = {0};
    for (const auto& kb : rr.kernel_basis) {
        const size_t sz = kernel.size();
        for (size_t i = 0; i < sz; ++i) kernel.push_back(kernel[i] ^ kb.bits());
    }

    for (uint64_t omega = 0; omega <= mask_all(m); ++omega) {
        bool orthogonal = true;
        for (uint64_t g : kernel)
            if (popcount64(omega & g) & 1) { orthogonal = false; break; }
        const bool in_row_space = std::binary_search(rs_masks.begin(), rs_masks.end(), omega);
        ++r.cases;
        if (orthogonal != in_row_space) {
            note_failure(r, "row-space/orthogonality mismatch at m=" + std::to_string(m));
            return;
        }
    }
}

void suite_grading_law(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    GradedBasis basis(K);
    GradedBettiTable table;
    try {
        table = graded_betti(K, Gf2Matrix::identity(K.vertex_count()));
    } catch (const capacity_error&) {
        return;
    }
    ClassPick x = random_class(rng, basis, table);
    ClassPick y = random_class(rng, basis, table);
    if (!x.ok || !y.ok) return;
    ++r.cases;
    const CohomologyClass rule = cup(basis, x.cls, y.cls, ProductMode::kRule);
    const FullCupResult full = cup_full_components(basis, x.cls, y.cls);
    if (rule.coords != full.projected.coords) {
        note_failure(r, "full/rule mode disagree on " + describe_complex(K));
        return;
    }
    for (const auto& [omega, component] : full.off_components) {
        const int p = x.cls.p + y.cls.p;
        auto witness = basis.exactness_witness(p, omega, component);
        if (!witness) {
            note_failure(r, "off-component not exact on " + describe_complex(K));
            return;
        }
        if (differential(K, *witness) != component) {
            note_failure(r, "exactness witness is wrong on " + describe_complex(K));
            return;
        }
    }
}

void suite_fixed_points(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    const int m = K.vertex_count();
    const int q = static_cast<int>(rng() % static_cast<uint64_t>(m + 1));
    const Gf2Matrix lambda = random_gf2_matrix(rng, q, m);
    const Gf2Rref rr = rref(lambda);
    const std::vector<Gf2Vector> rs = row_space(lambda);
    std::vector<uint64_t> rs_masks;
    for (const auto& v : rs) rs_masks.push_back(v.bits());

    GradedBasis basis(K);
    GradedBettiTable table;
    try {
        table = graded_betti(K, Gf2Matrix::identity(m));
    } catch (const capacity_error&) {
        return;
    }
    ClassPick x = random_class(rng, basis, table);
    if (!x.ok) return;
    ++r.cases;
    bool fixed = true;
    for (const auto& g : rr.kernel_basis)
        if (act(g, x.cls.representative) != x.cls.representative) { fixed = false; break; }
    const bool in_row_space = std::binary_search(rs_masks.begin(), rs_masks.end(), x.cls.omega);
    if (fixed != in_row_space)
        note_failure(r, "fixed-point criterion failed on " + describe_complex(K));
}

void suite_random_cochain_d_squared(std::mt19937_64& rng, SuiteResult& r) {
    const SimplicialComplex K = random_complex(rng, 6);
    const Cochain c = random_cochain(rng, K, 5);
    ++r.cases;
    if (!cochain_is_zero(differential(K, differential(K, c))))
        note_failure(r, "d∘d != 0 on a random cochain over " + describe_complex(K));
}

}  // namespace

std::vector<SuiteResult> run_property_suites(uint64_t seed, int cases) {
    struct Entry {
        const char* name;
        SuiteFn fn;
        int rounds_divisor;  // heavier suites run fewer rounds but still count >= `cases` cases
    };
    const Entry entries[] = {
        {"d_squared_exhaustive", suite_d_squared, 40},
        {"d_squared_random_cochains", suite_random_cochain_d_squared, 1},
        {"leibniz", suite_leibniz, 1},
        {"f_omega_chain_map", suite_chain_map, 1},
        {"graded_commutativity", suite_graded_commutativity, 1},
        {"associativity", suite_associativity, 1},
        {"row_space_orthogonality", suite_row_space_orthogonality, 40},
        {"grading_law_full_vs_rule", suite_grading_law, 1},
        {"fixed_point_criterion", suite_fixed_points, 1},
    };

    std::vector<SuiteResult> out;
    for (const Entry& e : entries) {
        SuiteResult r;
        r.name = e.name;
        std::mt19937_64 rng(seed ^ std::hash<std::string>{}(e.name));
        const int rounds = std::max(1, cases / std::max(1, e.rounds_divisor));
        int round = 0;
        // run until both the round budget and the case floor are met
        while (round < rounds || r.cases < cases) {
            e.fn(rng, r);
            ++round;
            if (round > 100000) break;  // safety against starved suites
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace retorix
