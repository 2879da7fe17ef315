#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "retorix/errors.hpp"
#include "retorix/fixtures.hpp"
#include "retorix/matroid.hpp"
#include "retorix/selftest.hpp"

using namespace retorix;

namespace {
uint64_t elems(std::initializer_list<int> vs) {
    uint64_t m = 0;
    for (int v : vs) m |= uint64_t{1} << (v - 1);
    return m;
}
}  // namespace

TEST_CASE("circuit enumeration") {
    SUBCASE("only dependency is the zero column") {
        // columns 0, e1, e1+e2 (a strictly upper triangular 3x3 with all ones above)
        const Gf2Matrix A({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
        CHECK(circuits(A) == std::vector<uint64_t>{elems({1})});
    }
    SUBCASE("identity columns have no circuits") {
        CHECK(circuits(Gf2Matrix::identity(4)).empty());
    }
    SUBCASE("nine-element first dependency set") {
        const Gf2Matrix M = matrix_from_dependencies(9, fixtures::t1_deps());
        const std::vector<uint64_t> expected = {
            elems({1}),
            elems({5, 6, 8}),
            elems({6, 7, 9}),
            elems({5, 7, 8, 9}),
            elems({2, 3, 4, 7, 8}),
            elems({2, 3, 4, 5, 9}),
            elems({2, 3, 4, 5, 6, 7}),
            elems({2, 3, 4, 6, 8, 9}),
        };
        CHECK(circuits(M) == expected);
    }
    SUBCASE("loop from a single zero column") {
        const Gf2Matrix M = matrix_from_dependencies(1, {Gf2Vector::unit(1, 1)});
        CHECK(M.rows() == 0);
        CHECK(circuits(M) == std::vector<uint64_t>{elems({1})});
    }
}

TEST_CASE("circuit axioms hold for random matrices") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int q = 1 + static_cast<int>(rng() % 4);
        const Gf2Matrix M = random_gf2_matrix(rng, q, n);
        const auto cs = circuits(M);
        CHECK(circuit_axioms_hold(cs));
        // minimality: proper subsets of a circuit are independent
        for (uint64_t c : cs) {
            uint64_t rest = c;
            while (rest) {
                const uint64_t without = c & ~(rest & (~rest + 1));
                rest &= rest - 1;
                // columns of `without` must be independent: no kernel vector
                // of the submatrix is supported inside it
                for (uint64_t other : cs) CHECK((other & without) != other);
            }
        }
    }
}

TEST_CASE("triangularize") {
    SUBCASE("columns 0, e1, e1") {
        const Gf2Matrix B({{0, 1, 1}});
        const Triangularization tri = triangularize(B);
        CHECK(tri.permutation == std::vector<int>{1, 2, 3});
        CHECK(circuits(tri.matrix) == std::vector<uint64_t>{elems({1}), elems({2, 3})});
        CHECK(tri.matrix.rows() == 3);
        CHECK(tri.matrix.cols() == 3);
    }
    SUBCASE("requires a zero column") {
        CHECK_THROWS_AS(triangularize(Gf2Matrix::identity(3)), domain_error);
    }
    SUBCASE("strictly upper triangular input keeps its circuits") {
        const Gf2Matrix A({{0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
        CHECK(circuits(triangularize(A).matrix) == circuits(A));
    }
    SUBCASE("composition with matrix_from_dependencies preserves circuits") {
        for (const auto& deps : {fixtures::t1_deps(), fixtures::t2_deps()}) {
            const Gf2Matrix B = matrix_from_dependencies(9, deps);
            const Triangularization tri = triangularize(B);
            // permutation is identity here (column 1 is already the loop)
            CHECK(tri.permutation[0] == 1);
            CHECK(circuits(tri.matrix) == circuits(B));
        }
    }
    SUBCASE("random: circuits preserved up to the returned permutation") {
        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 6);
            Gf2Matrix M = random_gf2_matrix(rng, 1 + static_cast<int>(rng() % 4), n);
            // force a zero column
            std::vector<Gf2Vector> rows;
            const int kill = 1 + static_cast<int>(rng() % n);
            for (const auto& r : M.row_vectors())
                rows.emplace_back(n, r.bits() & ~(uint64_t{1} << (kill - 1)));
            M = Gf2Matrix(n, rows);
            const Triangularization tri = triangularize(M);
            // map original circuits through the permutation: original column
            // tri.permutation[j]-1 sits at position j
            std::vector<int> slot_of(static_cast<size_t>(n) + 1, 0);
            for (int j = 0; j < n; ++j) slot_of[static_cast<size_t>(tri.permutation[static_cast<size_t>(j)])] = j;
            std::vector<uint64_t> mapped;
            for (uint64_t c : circuits(M)) {
                uint64_t image = 0;
                uint64_t rest = c;
                while (rest) {
                    const int e = std::countr_zero(rest) + 1;
                    rest &= rest - 1;
                    image |= uint64_t{1} << slot_of[static_cast<size_t>(e)];
                }
                mapped.push_back(image);
            }
            std::sort(mapped.begin(), mapped.end(), [](uint64_t a, uint64_t b) {
                if (popcount64(a) != popcount64(b)) return popcount64(a) < popcount64(b);
                return a < b;
            });
            CHECK(mapped == circuits(tri.matrix));
        }
    }
}

TEST_CASE("matrix_from_dependencies") {
    SUBCASE("single pair dependency") {
        const Gf2Matrix M = matrix_from_dependencies(3, {Gf2Vector::from_vertices(3, {1, 2})});
        CHECK(circuits(M) == std::vector<uint64_t>{elems({1, 2})});
    }
    SUBCASE("cycle space depends only on the span") {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 5);
            Gf2Vector d1(n, 1 + (rng() & mask_all(n - 1)));
            Gf2Vector d2(n, 1 + (rng() & mask_all(n - 1)));
            if ((d1 ^ d2).is_zero()) continue;
            const auto c1 = circuits(matrix_from_dependencies(n, {d1, d2}));
            const auto c2 = circuits(matrix_from_dependencies(n, {d2, d1 ^ d2}));
            CHECK(c1 == c2);
        }
    }
    SUBCASE("zero dependency is a domain error") {
        CHECK_THROWS_AS(matrix_from_dependencies(3, {Gf2Vector::zero(3)}), domain_error);
    }
}

TEST_CASE("binary matroid counts") {
    CHECK(count_binary_matroids(0) == 1);
    CHECK(count_binary_matroids(1) == 2);
    CHECK(count_binary_matroids(2) == 4);
    CHECK(count_binary_matroids(3) == 8);
    CHECK(count_binary_matroids(4) == 16);
    CHECK_THROWS_AS(count_binary_matroids(6), capacity_error);
}

TEST_CASE("circuit set isomorphism") {
    SUBCASE("permuted copies are isomorphic") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 4);
            const Gf2Matrix M = random_gf2_matrix(rng, 2, n);
            const auto cs = circuits(M);
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<uint64_t> mapped;
            for (uint64_t c : cs) {
                uint64_t image = 0;
                uint64_t rest = c;
                while (rest) {
                    const int e = std::countr_zero(rest);
                    rest &= rest - 1;
                    image |= uint64_t{1} << perm[static_cast<size_t>(e)];
                }
                mapped.push_back(image);
            }
            CHECK(circuit_sets_isomorphic(n, cs, mapped));
        }
    }
    SUBCASE("loop vs coloop") {
        CHECK(!circuit_sets_isomorphic(1, {elems({1})}, {}));
    }
    SUBCASE("the seventeen-element pair is not isomorphic") {
        const auto c1 = circuits(matrix_from_dependencies(17, fixtures::seventeen_deps_first()));
        const auto c2 = circuits(matrix_from_dependencies(17, fixtures::seventeen_deps_second()));
        CHECK(!circuit_sets_isomorphic(17, c1, c2));
        CHECK(circuit_sets_isomorphic(17, c1, c1));
    }
}
