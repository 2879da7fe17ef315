#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "retorix/csymp.hpp"
#include "retorix/fixtures.hpp"

using namespace retorix;

namespace {

uint64_t verts(std::initializer_list<int> vs) {
    uint64_t m = 0;
    for (int v : vs) m |= uint64_t{1} << (v - 1);
    return m;
}

// random join of flag polytope boundaries (polygons and crosspolytopes)
SimplicialComplex random_flag_join(std::mt19937_64& rng, int max_factors, int max_m) {
    SimplicialComplex out;
    const int factors = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_factors));
    for (int i = 0; i < factors; ++i) {
        SimplicialComplex piece = (rng() % 2 == 0)
                                      ? make_polygon(4 + static_cast<int>(rng() % 3))
                                      : make_crosspolytope(1 + static_cast<int>(rng() % 2));
        if (out.vertex_count() + piece.vertex_count() > max_m) break;
        out = simplicial_join(out, piece);
    }
    if (out.vertex_count() == 0) out = make_polygon(4);
    return out;
}

}  // namespace

TEST_CASE("decide_c_symplectic") {
    SUBCASE("S2 x S2 from the join of two triangle boundaries") {
        const SimplicialComplex K = simplicial_join(make_simplex_boundary(2), make_simplex_boundary(2));
        const CsympResult r = decide_c_symplectic(K, nullptr);
        CHECK(r.value);
        REQUIRE(r.witness.has_value());
        REQUIRE(r.witness->classes.size() == 2);
        CHECK(r.witness->classes[0].omega == verts({1, 2, 3}));
        CHECK(r.witness->classes[1].omega == verts({4, 5, 6}));
        CHECK(!r.witness->product.is_zero());
    }
    SUBCASE("the 4-sphere has no degree-2 classes") {
        const CsympResult r = decide_c_symplectic(make_simplex_boundary(4), nullptr);
        CHECK(!r.value);
    }
    SUBCASE("odd facet size is rejected with a reason") {
        const CsympResult r = decide_c_symplectic(make_simplex_boundary(3), nullptr);
        CHECK(!r.value);
        CHECK(r.reason == "odd dimension");
    }
    SUBCASE("triangle boundary: RZ is the 2-sphere, n = 1") {
        const CsympResult r = decide_c_symplectic(make_simplex_boundary(2), nullptr);
        CHECK(r.value);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->classes.size() == 1);
    }
    SUBCASE("torus over the square (n = 1)") {
        const Gf2Matrix lambda = fixtures::torus_lambda();
        const CsympResult r = decide_c_symplectic(make_polygon(4), &lambda);
        CHECK(r.value);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->classes.size() == 1);
        CHECK(r.witness->classes[0].omega == verts({1, 2, 3, 4}));
    }
    SUBCASE("Klein bottle is not c-symplectic") {
        const Gf2Matrix lambda = fixtures::klein_lambda();
        const CsympResult r = decide_c_symplectic(make_polygon(4), &lambda);
        CHECK(!r.value);
    }
    SUBCASE("identity Λ agrees with no Λ") {
        for (const auto& K : {simplicial_join(make_simplex_boundary(2), make_simplex_boundary(2)),
                              make_simplex_boundary(4),
                              simplicial_join(make_polygon(4), make_polygon(4))}) {
            const Gf2Matrix id = Gf2Matrix::identity(K.vertex_count());
            CHECK(decide_c_symplectic(K, &id).value == decide_c_symplectic(K, nullptr).value);
        }
    }
    SUBCASE("product of two squares (RZ = T^2 x T^2)") {
        const SimplicialComplex K = simplicial_join(make_polygon(4), make_polygon(4));
        const CsympResult r = decide_c_symplectic(K, nullptr);
        CHECK(r.value);
    }
}

TEST_CASE("flag witnesses") {
    SUBCASE("square boundary: the textbook labeling") {
        const CsympWitness w = flag_witness(make_polygon(4));
        REQUIRE(w.classes.size() == 2);
        CHECK(w.classes[0].omega == verts({1, 3}));
        CHECK(w.classes[1].omega == verts({2, 4}));
        CHECK(w.classes[0].representative == Cochain{{Monomial(verts({1}), verts({1, 3})), Rational(1)}});
        CHECK(w.classes[1].representative == Cochain{{Monomial(verts({2}), verts({2, 4})), Rational(1)}});
        CHECK(!w.product.is_zero());
    }
    SUBCASE("crosspolytopes: antipodal classes") {
        for (int n = 1; n <= 4; ++n) {
            const CsympWitness w = flag_witness(make_crosspolytope(n));
            REQUIRE(w.classes.size() == static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                const uint64_t expected = (uint64_t{1} << i) | (uint64_t{1} << (n + i));
                CHECK(w.classes[static_cast<size_t>(i)].omega == expected);
            }
            CHECK(!w.product.is_zero());
        }
    }
    SUBCASE("polygons up to 8 vertices") {
        for (int k = 4; k <= 8; ++k) {
            const CsympWitness w = flag_witness(make_polygon(k));
            CHECK(w.classes.size() == 2);
            CHECK(!w.product.is_zero());
        }
        // pentagon: one label class has two vertices
        const CsympWitness w = flag_witness(make_polygon(5));
        int sizes = 0;
        for (const auto& cls : w.classes) sizes += popcount64(cls.omega);
        CHECK(sizes == 5);
    }
    SUBCASE("non-flag input is a domain error") {
        CHECK_THROWS_AS(flag_witness(make_simplex_boundary(2)), domain_error);
    }
}

TEST_CASE("almost_c_symplectic") {
    SUBCASE("flag boundaries take the constructive path") {
        const CsympResult r = almost_c_symplectic(make_polygon(6));
        CHECK(r.value);
        REQUIRE(r.witness.has_value());
    }
    SUBCASE("triangle boundary: single degree-2 class covering all vertices") {
        const CsympResult r = almost_c_symplectic(make_simplex_boundary(2));
        CHECK(r.value);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->classes.size() == 1);
        CHECK(r.witness->classes[0].p == 2);
        CHECK(r.witness->classes[0].omega == verts({1, 2, 3}));
    }
    SUBCASE("tetrahedron boundary is not almost c-symplectic") {
        CHECK(!almost_c_symplectic(make_simplex_boundary(3)).value);
    }
    SUBCASE("mixed join of a triangle and a square") {
        const CsympResult r = almost_c_symplectic(simplicial_join(make_simplex_boundary(2), make_polygon(4)));
        CHECK(r.value);
    }
    SUBCASE("join law on fixed pairs") {
        const std::vector<std::pair<SimplicialComplex, bool>> pieces = {
            {make_simplex_boundary(2), true},
            {make_simplex_boundary(3), false},
            {make_polygon(4), true},
            {make_polygon(5), true},
            {make_crosspolytope(2), true},
            {make_simplex_boundary(4), false},
        };
        std::mt19937_64 rng(107);
        for (int trial = 0; trial < 12; ++trial) {
            const auto& [K, ka] = pieces[rng() % pieces.size()];
            const auto& [L, la] = pieces[rng() % pieces.size()];
            if (K.vertex_count() + L.vertex_count() > 10) continue;
            const CsympResult joined = almost_c_symplectic(simplicial_join(K, L));
            CHECK(joined.value == (ka && la));
        }
    }
    SUBCASE("random flag joins") {
        std::mt19937_64 rng(109);
        for (int trial = 0; trial < 6; ++trial) {
            const SimplicialComplex K = random_flag_join(rng, 2, 10);
            const CsympResult r = almost_c_symplectic(K);
            CHECK(r.value);
            REQUIRE(r.witness.has_value());
            uint64_t acc = 0;
            for (const auto& cls : r.witness->classes) acc ^= cls.omega;
            CHECK(acc == K.ambient_mask());
        }
    }
}

TEST_CASE("witness verification catches corruption") {
    const CsympWitness good = flag_witness(make_polygon(4));
    CsympWitness bad = good;
    bad.classes.pop_back();  // ω's no longer cover [m]
    CHECK_THROWS_AS(verify_witness(make_polygon(4), bad), internal_error);
}
