#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "retorix/complex.hpp"
#include "retorix/fixtures.hpp"
#include "retorix/hochster.hpp"
#include "retorix/selftest.hpp"
#include "support/cube_oracle.hpp"

using namespace retorix;

namespace {
uint64_t verts(std::initializer_list<int> vs) {
    uint64_t m = 0;
    for (int v : vs) m |= uint64_t{1} << (v - 1);
    return m;
}
}  // namespace

TEST_CASE("reduced cochain complex shape") {
    SUBCASE("empty complex has only the augmentation") {
        const ReducedComplexQ rc = build_reduced_complex(SimplicialComplex::empty_complex(3));
        REQUIRE(rc.cells.size() == 1);
        CHECK(rc.cells[0] == std::vector<uint64_t>{0});
        CHECK(rc.delta[0].rows == 0);
        CHECK(reduced_betti(SimplicialComplex::empty_complex(3)) == std::vector<long long>{1});
    }
    SUBCASE("void complex has nothing") {
        CHECK(build_reduced_complex(SimplicialComplex::void_complex(3)).cells.empty());
        CHECK(reduced_betti(SimplicialComplex::void_complex(3)).empty());
    }
    SUBCASE("coboundary squares to zero") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 20; ++trial) {
            const SimplicialComplex K = random_complex(rng, 6);
            const ReducedComplexQ rc = build_reduced_complex(K);
            for (size_t c = 0; c + 1 < rc.delta.size(); ++c) {
                const auto& d0 = rc.delta[c];
                const auto& d1 = rc.delta[c + 1];
                // (d1 ∘ d0)[col] must vanish
                for (int col = 0; col < d0.cols; ++col) {
                    std::map<int, Rational> acc;
                    for (const auto& [mid, v0] : d0.columns[static_cast<size_t>(col)])
                        for (const auto& [row, v1] : d1.columns[static_cast<size_t>(mid)])
                            acc[row] += v0 * v1;
                    for (const auto& [row, v] : acc) CHECK(v == 0);
                }
            }
        }
    }
}

TEST_CASE("reduced Betti numbers") {
    SUBCASE("two points") {
        CHECK(reduced_betti(SimplicialComplex(2, {{1}, {2}})) == std::vector<long long>{0, 1});
    }
    SUBCASE("circle") {
        CHECK(reduced_betti(make_simplex_boundary(2)) == std::vector<long long>{0, 0, 1});
    }
    SUBCASE("sphere9 slice {1,5,6,7}: a triangle plus an isolated vertex") {
        const SimplicialComplex sub = induced_subcomplex(fixtures::sphere9(), verts({1, 5, 6, 7}));
        CHECK(reduced_betti(sub) == std::vector<long long>{0, 1, 0, 0});
    }
    SUBCASE("crosspolytopes are spheres") {
        for (int n = 1; n <= 4; ++n) {
            const auto rb = reduced_betti(make_crosspolytope(n));
            for (int c = 0; c <= n; ++c) CHECK(rb[static_cast<size_t>(c)] == (c == n ? 1 : 0));
        }
    }
    SUBCASE("cones vanish") {
        // a vertex joined to everything: the first vertex lies in every facet
        CHECK(reduced_betti(SimplicialComplex(4, {{1, 2, 3}, {1, 3, 4}})) ==
              std::vector<long long>{0, 0, 0, 0});
        CHECK(reduced_betti(SimplicialComplex(1, {{1}})) == std::vector<long long>{0, 0});
    }
}

TEST_CASE("graded Betti tables") {
    const SimplicialComplex square = make_polygon(4);
    SUBCASE("torus") {
        const GradedBettiTable t = graded_betti(square, fixtures::torus_lambda());
        CHECK(t.totals == std::vector<long long>{1, 2, 1});
        CHECK(t.at(1, verts({1, 3})) == 1);
        CHECK(t.at(1, verts({2, 4})) == 1);
        CHECK(t.at(2, verts({1, 2, 3, 4})) == 1);
        CHECK(t.at(0, 0) == 1);
    }
    SUBCASE("Klein bottle") {
        const GradedBettiTable t = graded_betti(square, fixtures::klein_lambda());
        CHECK(t.totals == std::vector<long long>{1, 1, 0});
        CHECK(t.entries.size() == 2);
        CHECK(t.at(1, verts({2, 4})) == 1);
    }
    SUBCASE("projective spaces") {
        for (int n = 1; n <= 6; ++n) {
            const GradedBettiTable t = graded_betti(make_simplex_boundary(n), fixtures::rp_lambda(n));
            std::vector<long long> expected(static_cast<size_t>(n) + 1, 0);
            expected[0] = 1;
            if (n % 2 == 1) expected[static_cast<size_t>(n)] = 1;
            CHECK(t.totals == expected);
        }
    }
    SUBCASE("restricted sum: any Λ table is the I_m table summed over its row space") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 15; ++trial) {
            const SimplicialComplex K = random_complex(rng, 5);
            const int m = K.vertex_count();
            const Gf2Matrix lambda = random_gf2_matrix(rng, static_cast<int>(rng() % (m + 1)), m);
            const GradedBettiTable full = graded_betti(K, Gf2Matrix::identity(m));
            const GradedBettiTable restricted = graded_betti(K, lambda);
            std::vector<long long> expected(restricted.totals.size(), 0);
            for (const auto& w : row_space(lambda))
                for (size_t p = 0; p < expected.size(); ++p)
                    expected[p] += full.at(static_cast<int>(p), w.bits());
            CHECK(restricted.totals == expected);
        }
    }
}

TEST_CASE("Hochster totals match the cube-cell CW oracle") {
    std::vector<SimplicialComplex> fixtures_list = {
        make_polygon(4),
        make_polygon(5),
        make_simplex_boundary(2),
        make_simplex_boundary(3),
        make_simplex_boundary(4),
        make_crosspolytope(2),
        SimplicialComplex(3, {{1, 2}}),          // ghost vertex
        SimplicialComplex(4, {{1, 2}, {3, 4}}),  // disconnected
        SimplicialComplex(5, {{1, 2, 3}, {3, 4}, {4, 5}, {2, 5}}),
    };
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 8; ++trial) fixtures_list.push_back(random_complex(rng, 5));

    for (const auto& K : fixtures_list) {
        const GradedBettiTable t = graded_betti(K, Gf2Matrix::identity(K.vertex_count()));
        std::vector<long long> oracle = testing::cube_cw_betti(K);
        std::vector<long long> totals = t.totals;
        const size_t len = std::max(oracle.size(), totals.size());
        oracle.resize(len, 0);
        totals.resize(len, 0);
        CHECK(totals == oracle);
    }
}

TEST_CASE("sphere9 full table matches the cube oracle" * doctest::timeout(120)) {
    // the heaviest cross-validation: 512 slices vs a 6400-cell CW complex
    const SimplicialComplex K = fixtures::sphere9();
    CHECK(graded_betti(K, Gf2Matrix::identity(9)).totals == testing::cube_cw_betti(K));
}

TEST_CASE("join slices obey the Kunneth rule") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        const SimplicialComplex K = random_complex(rng, 3);
        const SimplicialComplex L = random_complex(rng, 3);
        const SimplicialComplex J = simplicial_join(K, L);
        const uint64_t w = rng() & K.ambient_mask();
        const uint64_t t = rng() & L.ambient_mask();
        const auto rbk = reduced_betti(induced_subcomplex(K, w));
        const auto rbl = reduced_betti(induced_subcomplex(L, t));
        const auto rbj = reduced_betti(induced_subcomplex(J, w | (t << K.vertex_count())));
        // H̃^{k-1}(join) = Σ_{i+j=k-2+1} H̃^{i-1} ⊗ H̃^{j-1} in cardinality indexing:
        // rbj[c] = Σ_{a+b=c} rbk[a] * rbl[b]
        for (size_t c = 0; c < rbj.size(); ++c) {
            long long expected = 0;
            for (size_t a = 0; a < rbk.size(); ++a) {
                const size_t b = c - a;
                if (a > c || b >= rbl.size()) continue;
                expected += rbk[a] * rbl[b];
            }
            CHECK(rbj[c] == expected);
        }
    }
}

TEST_CASE("Euler characteristic two ways") {
    SUBCASE("torus over the square with the identity") {
        const EulerCheck e = euler_check(make_polygon(4), Gf2Matrix::identity(4));
        CHECK(e.chi_cells == 0);
        CHECK(e.consistent());
    }
    SUBCASE("RP2") {
        const EulerCheck e = euler_check(make_simplex_boundary(2), fixtures::rp_lambda(2));
        CHECK(e.chi_cells == 1);
        CHECK(e.consistent());
    }
    SUBCASE("Klein bottle via the Bott matrix") {
        const EulerCheck e =
            euler_check(make_crosspolytope(2), Gf2Matrix({{1, 0, 1, 0}, {0, 1, 1, 1}}));
        CHECK(e.chi_cells == 0);
        CHECK(e.consistent());
    }
    SUBCASE("random complexes with the identity") {
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 10; ++trial) {
            const SimplicialComplex K = random_complex(rng, 5);
            CHECK(euler_check(K, Gf2Matrix::identity(K.vertex_count())).consistent());
        }
    }
}
