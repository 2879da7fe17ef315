#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "retorix/complex.hpp"
#include "retorix/errors.hpp"
#include "retorix/gf2.hpp"
#include "retorix/selftest.hpp"

using namespace retorix;

namespace {
Gf2Vector vec(int len, std::initializer_list<int> verts) {
    return Gf2Vector::from_vertices(len, std::vector<int>(verts));
}
}  // namespace

TEST_CASE("rref over GF(2)") {
    SUBCASE("rank 2 with one kernel vector") {
        Gf2Rref r = rref(Gf2Matrix({{1, 0, 1}, {0, 1, 1}}));
        CHECK(r.rank == 2);
        REQUIRE(r.kernel_basis.size() == 1);
        CHECK(r.kernel_basis[0] == vec(3, {1, 2, 3}));
    }
    SUBCASE("zero matrix has full kernel") {
        Gf2Rref r = rref(Gf2Matrix({{0, 0, 0}, {0, 0, 0}}));
        CHECK(r.rank == 0);
        REQUIRE(r.kernel_basis.size() == 3);
        CHECK(r.kernel_basis[0] == vec(3, {1}));
        CHECK(r.kernel_basis[1] == vec(3, {2}));
        CHECK(r.kernel_basis[2] == vec(3, {3}));
    }
    SUBCASE("repeated rows") {
        Gf2Rref r = rref(Gf2Matrix({{1, 1, 0}, {1, 1, 0}}));
        CHECK(r.rank == 1);
        REQUIRE(r.kernel_basis.size() == 2);
        CHECK(r.kernel_basis[0] == vec(3, {1, 2}));
        CHECK(r.kernel_basis[1] == vec(3, {3}));
    }
    SUBCASE("rank plus nullity is m") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 10);
            const int q = static_cast<int>(rng() % 12);
            Gf2Matrix mat = random_gf2_matrix(rng, q, m);
            Gf2Rref r = rref(mat);
            CHECK(r.rank + static_cast<int>(r.kernel_basis.size()) == m);
        }
    }
}

TEST_CASE("row space enumeration") {
    SUBCASE("two independent rows") {
        auto rs = row_space(Gf2Matrix({{1, 0, 1, 0}, {0, 1, 0, 1}}));
        REQUIRE(rs.size() == 4);
        CHECK(rs[0] == vec(4, {}));
        CHECK(rs[1] == vec(4, {1, 3}));
        CHECK(rs[2] == vec(4, {2, 4}));
        CHECK(rs[3] == vec(4, {1, 2, 3, 4}));
    }
    SUBCASE("empty matrix convention") {
        auto rs = row_space(Gf2Matrix(5));
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].is_zero());
    }
    SUBCASE("Klein rows, sorted as integers") {
        auto rs = row_space(Gf2Matrix({{1, 0, 1, 1}, {0, 1, 0, 1}}));
        REQUIRE(rs.size() == 4);
        CHECK(rs[1] == vec(4, {1, 2, 3}));
        CHECK(rs[2] == vec(4, {2, 4}));
        CHECK(rs[3] == vec(4, {1, 3, 4}));
    }
    SUBCASE("rank guard") {
        CHECK_THROWS_AS(row_space(Gf2Matrix::identity(25)), capacity_error);
    }
    SUBCASE("closed under symmetric difference and contains zero") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            Gf2Matrix mat = random_gf2_matrix(rng, 3, 6);
            auto rs = row_space(mat);
            CHECK(rs.front().is_zero());
            for (const auto& a : rs)
                for (const auto& b : rs) {
                    const Gf2Vector c = a ^ b;
                    CHECK(std::find(rs.begin(), rs.end(), c) != rs.end());
                }
        }
    }
}

TEST_CASE("characteristic function check") {
    const SimplicialComplex triangle = make_simplex_boundary(2);
    SUBCASE("independent columns on every edge") {
        CHECK(is_characteristic(triangle, Gf2Matrix({{1, 0, 1}, {0, 1, 1}})).ok);
    }
    SUBCASE("equal columns on an edge are caught, minimal face reported") {
        auto check = is_characteristic(triangle, Gf2Matrix({{1, 0, 1}, {0, 1, 0}}));
        CHECK(!check.ok);
        REQUIRE(check.offending_face.has_value());
        CHECK(*check.offending_face == std::vector<int>{1, 3});
    }
    SUBCASE("crosspolytope with the Klein-bottle matrix") {
        CHECK(is_characteristic(make_crosspolytope(2), Gf2Matrix({{1, 0, 1, 0}, {0, 1, 1, 1}})).ok);
    }
    SUBCASE("column count mismatch") {
        CHECK_THROWS_AS(is_characteristic(triangle, Gf2Matrix({{1, 0}})), domain_error);
    }
    SUBCASE("zero column fails on a vertex") {
        auto check = is_characteristic(triangle, Gf2Matrix({{1, 0, 0}, {0, 1, 0}}));
        CHECK(!check.ok);
        CHECK(*check.offending_face == std::vector<int>{3});
    }
}

TEST_CASE("row space membership equals kernel orthogonality") {
    // full kernel enumeration, small m
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 8);
        Gf2Matrix lambda = random_gf2_matrix(rng, static_cast<int>(rng() % (m + 1)), m);
        Gf2Rref r = rref(lambda);
        std::vector<uint64_t> kernel = {0};
        for (const auto& kb : r.kernel_basis) {
            const size_t sz = kernel.size();
            for (size_t i = 0; i < sz; ++i) kernel.push_back(kernel[i] ^ kb.bits());
        }
        auto rs = row_space(lambda);
        std::vector<uint64_t> masks;
        for (const auto& v : rs) masks.push_back(v.bits());
        for (uint64_t omega = 0; omega <= mask_all(m); ++omega) {
            bool even = true;
            for (uint64_t g : kernel)
                if (popcount64(omega & g) & 1) { even = false; break; }
            CHECK(even == std::binary_search(masks.begin(), masks.end(), omega));
        }
    }
}

TEST_CASE("matrix parsing") {
    SUBCASE("plain text with spaces") {
        Gf2Matrix m = parse_gf2_matrix("1 0 1\n0 1 1\n");
        CHECK(m.rows() == 2);
        CHECK(m.cols() == 3);
        CHECK(m.get(0, 3));
    }
    SUBCASE("inline JSON") {
        Gf2Matrix m = parse_gf2_matrix("[[1,0,1],[0,1,1]]");
        CHECK(m == parse_gf2_matrix("101\n011"));
    }
    SUBCASE("bad characters") {
        CHECK_THROWS_AS(parse_gf2_matrix("10x\n"), domain_error);
    }
    SUBCASE("bit string round trip") {
        const Gf2Vector v = vec(6, {2, 5});
        CHECK(v.to_string() == "010010");
        CHECK(Gf2Vector::parse("010010") == v);
    }
}
