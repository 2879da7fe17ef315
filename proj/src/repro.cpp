#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "retorix/csymp.hpp"
#include "retorix/dga.hpp"
#include "retorix/engine.hpp"
#include "retorix/fixtures.hpp"
#include "retorix/hochster.hpp"
#include "retorix/matroid.hpp"

namespace retorix::fixtures {

SimplicialComplex sphere9() {
    return SimplicialComplex(9, {{1, 2, 3},
                                 {1, 2, 9},
                                 {1, 3, 8},
                                 {1, 4, 8},
                                 {1, 4, 9},
                                 {2, 3, 7},
                                 {2, 5, 7},
                                 {2, 5, 9},
                                 {3, 6, 7},
                                 {3, 6, 8},
                                 {4, 5, 6},
                                 {4, 5, 9},
                                 {4, 6, 8},
                                 {5, 6, 7}});
}

Gf2Matrix torus_lambda() { return Gf2Matrix({{1, 0, 1, 0}, {0, 1, 0, 1}}); }

Gf2Matrix klein_lambda() { return Gf2Matrix({{1, 0, 1, 1}, {0, 1, 0, 1}}); }

Gf2Matrix rp_lambda(int n) {
    std::vector<Gf2Vector> rows;
    const int m = n + 1;
    for (int i = 1; i <= n; ++i) {
        uint64_t bits = (uint64_t{1} << (i - 1)) | (uint64_t{1} << (m - 1));
        rows.emplace_back(m, bits);
    }
    return Gf2Matrix(m, rows);
}

namespace {
Gf2Vector deps_vector(int n, const std::vector<int>& verts) {
    return Gf2Vector::from_vertices(n, verts);
}
}  // namespace

std::vector<Gf2Vector> t1_deps() {
    return {deps_vector(9, {1}), deps_vector(9, {2, 3, 4, 5, 6, 7}), deps_vector(9, {5, 6, 8}),
            deps_vector(9, {6, 7, 9})};
}

std::vector<Gf2Vector> t2_deps() {
    return {deps_vector(9, {1}), deps_vector(9, {2, 3, 4, 5, 6, 7}), deps_vector(9, {4, 5, 8}),
            deps_vector(9, {6, 7, 9})};
}

std::vector<Gf2Vector> seventeen_deps_first() {
    return {deps_vector(17, {1}), deps_vector(17, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}),
            deps_vector(17, {4, 5, 6, 7, 8, 9, 12, 13, 14, 15}),
            deps_vector(17, {6, 7, 8, 9, 10, 11, 14, 15, 16, 17})};
}

std::vector<Gf2Vector> seventeen_deps_second() {
    return {deps_vector(17, {1}), deps_vector(17, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}),
            deps_vector(17, {3, 4, 5, 6, 7, 8, 12, 13, 14, 15}),
            deps_vector(17, {6, 7, 8, 9, 10, 11, 14, 15, 16, 17})};
}

}  // namespace retorix::fixtures

namespace retorix::repro {

namespace {

using fixtures::sphere9;

Cochain term(uint64_t sigma, uint64_t omega, int coeff) {
    Cochain c;
    c.emplace(Monomial(sigma, omega), Rational(coeff));
    return c;
}

uint64_t verts(std::initializer_list<int> vs) {
    uint64_t m = 0;
    for (int v : vs) m |= uint64_t{1} << (v - 1);
    return m;
}

bool check_sphere_cup(std::string& detail) {
    const SimplicialComplex K = sphere9();
    GradedBasis basis(K);

    const uint64_t w1 = verts({1, 5, 6, 7});
    const uint64_t w2 = verts({2, 3, 4, 7});
    Cochain alpha_rep = term(verts({5}), w1, 1);
    alpha_rep = cochain_add(alpha_rep, term(verts({6}), w1, 1));
    alpha_rep = cochain_add(alpha_rep, term(verts({7}), w1, 1));
    Cochain beta_rep = term(verts({2}), w2, 1);
    beta_rep = cochain_add(beta_rep, term(verts({3}), w2, 1));
    beta_rep = cochain_add(beta_rep, term(verts({7}), w2, 1));

    const CohomologyClass alpha = basis.class_from_cocycle(1, w1, alpha_rep);
    const CohomologyClass beta = basis.class_from_cocycle(1, w2, beta_rep);
    if (alpha.is_zero() || beta.is_zero()) {
        detail = "input classes vanish";
        return false;
    }

    // Raw cochain product: -x - y with
    //   x = u_25 t_1346 + u_36 t_1245,
    //   y = u_57 t_12346 + u_67 t_12345 + u_27 t_13456 + u_37 t_12456.
    const uint64_t w6 = verts({1, 2, 3, 4, 5, 6});
    const uint64_t w7 = verts({1, 2, 3, 4, 5, 6, 7});
    Cochain x_rep = cochain_add(term(verts({2, 5}), w6, 1), term(verts({3, 6}), w6, 1));
    Cochain y_rep = cochain_add(
        cochain_add(term(verts({5, 7}), w7, 1), term(verts({6, 7}), w7, 1)),
        cochain_add(term(verts({2, 7}), w7, 1), term(verts({3, 7}), w7, 1)));

    const Cochain raw = cochain_mul(K, alpha_rep, beta_rep, ProductMode::kFull);
    const Cochain expected = cochain_add(cochain_scale(x_rep, Rational(-1)), cochain_scale(y_rep, Rational(-1)));
    if (raw != expected) {
        detail = "raw product differs from -x - y";
        return false;
    }

    const FullCupResult full = cup_full_components(basis, alpha, beta);
    const CohomologyClass minus_x = basis.class_from_cocycle(2, w6, cochain_scale(x_rep, Rational(-1)));
    if (full.projected.omega != w6 || full.projected.coords != minus_x.coords || full.projected.is_zero()) {
        detail = "projected class is not -[x]";
        return false;
    }

    // The discarded component lives over {1..7} and is exact, with
    // d(u_7 t_123456) as the certificate.
    auto it = full.off_components.find(w7);
    if (it == full.off_components.end() || full.off_components.size() != 1) {
        detail = "expected exactly one off-component, over 1234567";
        return false;
    }
    const Cochain certificate = term(verts({7}), w7, 1);
    if (differential(K, certificate) != y_rep) {
        detail = "d(u_7 t_123456) != y";
        return false;
    }
    if (it->second != cochain_scale(y_rep, Rational(-1))) {
        detail = "off-component is not -y";
        return false;
    }
    auto witness = basis.exactness_witness(2, w7, it->second);
    if (!witness || differential(K, *witness) != it->second) {
        detail = "off-component exactness certificate failed";
        return false;
    }
    // rule mode agrees with the projection
    const CohomologyClass rule = cup(basis, alpha, beta, ProductMode::kRule);
    if (rule.coords != full.projected.coords) {
        detail = "rule mode disagrees with full mode";
        return false;
    }
    return true;
}

bool check_torus(std::string& detail) {
    const SimplicialComplex K = make_polygon(4);
    const GradedBettiTable table = graded_betti(K, fixtures::torus_lambda());
    if (table.totals != std::vector<long long>{1, 2, 1}) {
        detail = "torus totals differ";
        return false;
    }
    GradedBasis basis(K);
    const CohomologyClass a = basis.basis_class(1, verts({1, 3}), 0);
    const CohomologyClass b = basis.basis_class(1, verts({2, 4}), 0);
    if (cup(basis, a, b).is_zero()) {
        detail = "degree-1 generators have zero product";
        return false;
    }
    if (!cup(basis, a, a).is_zero() || !cup(basis, b, b).is_zero()) {
        detail = "degree-1 generator squares do not vanish";
        return false;
    }
    return true;
}

bool check_klein(std::string& detail) {
    const SimplicialComplex K = make_polygon(4);
    const GradedBettiTable table = graded_betti(K, fixtures::klein_lambda());
    if (table.totals != std::vector<long long>{1, 1, 0}) {
        detail = "Klein totals differ";
        return false;
    }
    if (table.at(0, 0) != 1 || table.at(1, verts({2, 4})) != 1 || table.entries.size() != 2) {
        detail = "Klein graded entries differ";
        return false;
    }
    return true;
}

bool check_projective(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        const SimplicialComplex K = make_simplex_boundary(n);
        const GradedBettiTable table = graded_betti(K, fixtures::rp_lambda(n));
        std::vector<long long> expected(static_cast<size_t>(n) + 1, 0);
        expected[0] = 1;
        if (n % 2 == 1) expected[static_cast<size_t>(n)] = 1;
        if (table.totals != expected) {
            detail = "RP^" + std::to_string(n) + " totals differ";
            return false;
        }
    }
    return true;
}

const std::vector<long long> kBottBetti = {1, 1, 0, 2, 3, 3, 4, 2, 0, 0};

struct BottSide {
    Gf2Matrix A;
    RingPresentation pres;
};

BottSide bott_side(const std::vector<Gf2Vector>& deps, std::string& detail) {
    BottSide out;
    const Gf2Matrix B = matrix_from_dependencies(9, deps);
    const Triangularization tri = triangularize(B);
    for (size_t j = 0; j < tri.permutation.size(); ++j) {
        if (tri.permutation[j] != static_cast<int>(j) + 1) {
            detail = "unexpected column permutation";
            return out;
        }
    }
    out.A = tri.matrix;
    out.pres = ring_presentation(BottSpec::real(tri.matrix));
    return out;
}

CohomologyClass circuit_class(GradedBasis& basis, uint64_t circuit, int n) {
    uint64_t omega = circuit | (circuit << n);
    return basis.basis_class(popcount64(circuit), omega, 0);
}

bool check_bott_pair(std::string& detail) {
    // Presentation side.
    BottSide t1 = bott_side(fixtures::t1_deps(), detail);
    BottSide t2 = bott_side(fixtures::t2_deps(), detail);
    if (!detail.empty()) return false;

    auto degrees = [](const RingPresentation& p) {
        std::vector<int> out;
        for (const auto& g : p.generators) out.push_back(g.degree);
        std::sort(out.begin(), out.end());
        return out;
    };
    if (degrees(t1.pres) != std::vector<int>{1, 3, 3, 4, 5, 5, 6, 6}) {
        detail = "T1 generator degrees differ";
        return false;
    }
    if (degrees(t2.pres) != std::vector<int>{1, 3, 3, 4, 5, 5, 6}) {
        detail = "T2 generator degrees differ";
        return false;
    }
    if (betti_from_presentation(t1.pres, 9) != kBottBetti ||
        betti_from_presentation(t2.pres, 9) != kBottBetti) {
        detail = "presentation Betti vectors differ from (1,1,0,2,3,3,4,2,0,0)";
        return false;
    }

    // T1: every pair of degree->1 generators intersects; T2 has exactly one
    // disjoint pair, of degrees 3 and 3.
    for (const auto& [i, j] : disjoint_pairs(t1.pres)) {
        if (t1.pres.generators[static_cast<size_t>(i)].degree > 1 &&
            t1.pres.generators[static_cast<size_t>(j)].degree > 1) {
            detail = "T1 has a disjoint pair of degree > 1";
            return false;
        }
    }
    uint64_t c_a = 0, c_b = 0;
    int high_pairs = 0;
    for (const auto& [i, j] : disjoint_pairs(t2.pres)) {
        if (t2.pres.generators[static_cast<size_t>(i)].degree > 1 &&
            t2.pres.generators[static_cast<size_t>(j)].degree > 1) {
            ++high_pairs;
            c_a = t2.pres.generators[static_cast<size_t>(i)].circuit;
            c_b = t2.pres.generators[static_cast<size_t>(j)].circuit;
        }
    }
    // the unique surviving product pairs the circuits {4,5,8} and {6,7,9}
    if (high_pairs != 1 || c_a != verts({4, 5, 8}) || c_b != verts({6, 7, 9})) {
        detail = "T2 disjoint-pair structure differs";
        return false;
    }

    // General engine on the crosspolytope with Λ(A).
    for (BottSide* side : {&t1, &t2}) {
        const LambdaComplex lc = lambda_matrix(BottSpec::real(side->A));
        GradedBettiTable table = graded_betti(lc.K, lc.lambda);
        if (table.totals != kBottBetti) {
            detail = "engine Betti vector differs from the presentation";
            return false;
        }
    }
    {
        const LambdaComplex lc = lambda_matrix(BottSpec::real(t2.A));
        GradedBasis basis(lc.K);
        CohomologyClass xa = circuit_class(basis, c_a, 9);
        CohomologyClass xb = circuit_class(basis, c_b, 9);
        if (cup(basis, xa, xb).is_zero()) {
            detail = "T2 engine product of the disjoint circuits vanishes";
            return false;
        }
    }
    {
        const LambdaComplex lc = lambda_matrix(BottSpec::real(t1.A));
        GradedBasis basis(lc.K);
        for (size_t i = 0; i < t1.pres.generators.size(); ++i) {
            for (size_t j = i; j < t1.pres.generators.size(); ++j) {
                if (t1.pres.generators[i].degree <= 1 || t1.pres.generators[j].degree <= 1) continue;
                CohomologyClass xi = circuit_class(basis, t1.pres.generators[i].circuit, 9);
                CohomologyClass xj = circuit_class(basis, t1.pres.generators[j].circuit, 9);
                if (!cup(basis, xi, xj).is_zero()) {
                    detail = "T1 engine product of degree>1 generators is nonzero";
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_seventeen(std::string& detail) {
    const Gf2Matrix m1 = matrix_from_dependencies(17, fixtures::seventeen_deps_first());
    const Gf2Matrix m2 = matrix_from_dependencies(17, fixtures::seventeen_deps_second());
    const std::vector<uint64_t> c1 = circuits(m1);
    const std::vector<uint64_t> c2 = circuits(m2);

    auto degree_multiset = [](const std::vector<uint64_t>& cs) {
        std::map<int, int> mult;
        for (uint64_t c : cs) ++mult[popcount64(c)];
        return mult;
    };
    const std::map<int, int> expected = {{1, 1}, {8, 3}, {10, 4}};
    if (degree_multiset(c1) != expected || degree_multiset(c2) != expected) {
        detail = "degree multisets differ from {1x1, 8x3, 10x4}";
        return false;
    }

    RingPresentation p1, p2;
    p1.ground = p2.ground = 17;
    for (uint64_t c : c1) p1.generators.push_back({c, popcount64(c)});
    for (uint64_t c : c2) p2.generators.push_back({c, popcount64(c)});
    if (betti_from_presentation(p1, 17) != betti_from_presentation(p2, 17)) {
        detail = "graded dimensions of the two presentations differ";
        return false;
    }

    // products not involving the degree-1 generator all vanish: the only
    // disjoint pairs involve the loop
    for (const RingPresentation* p : {&p1, &p2}) {
        for (const auto& [i, j] : disjoint_pairs(*p)) {
            if (p->generators[static_cast<size_t>(i)].degree > 1 &&
                p->generators[static_cast<size_t>(j)].degree > 1) {
                detail = "a product of degree>1 generators survives";
                return false;
            }
        }
    }

    if (circuit_sets_isomorphic(17, c1, c2)) {
        detail = "matroids were reported isomorphic";
        return false;
    }
    return true;
}

bool check_matroid_counts(std::string& detail) {
    const std::vector<long long> expected = {1, 2, 4, 8, 16, 32};
    for (int n = 0; n <= 5; ++n) {
        if (count_binary_matroids(n) != expected[static_cast<size_t>(n)]) {
            detail = "count at n=" + std::to_string(n) + " differs";
            return false;
        }
    }
    detail = "counts (1,2,4,16,...) match the cited table at offset -1: table row n equals ground size n-1";
    return true;
}

bool check_euler(std::string& detail) {
    struct Case {
        const char* name;
        SimplicialComplex K;
        Gf2Matrix lambda;
    };
    std::vector<Case> cases;
    cases.push_back({"torus", make_polygon(4), fixtures::torus_lambda()});
    cases.push_back({"klein", make_polygon(4), fixtures::klein_lambda()});
    cases.push_back({"rz_p4", make_polygon(4), Gf2Matrix::identity(4)});
    for (int n = 1; n <= 4; ++n)
        cases.push_back({"rp", make_simplex_boundary(n), fixtures::rp_lambda(n)});
    cases.push_back({"sphere9", sphere9(), Gf2Matrix::identity(9)});
    {
        const LambdaComplex lc = lambda_matrix(BottSpec::real(Gf2Matrix({{0, 1}, {0, 0}})));
        cases.push_back({"bott2", lc.K, lc.lambda});
    }
    for (const auto& c : cases) {
        const EulerCheck e = euler_check(c.K, c.lambda);
        if (!e.consistent()) {
            detail = std::string("Euler mismatch on ") + c.name;
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<FixtureResult> run_all() {
    using Check = bool (*)(std::string&);
    const std::pair<const char*, Check> checks[] = {
        {"sphere9_cup_product", check_sphere_cup},
        {"torus_small_cover", check_torus},
        {"klein_bottle", check_klein},
        {"projective_spaces", check_projective},
        {"bott_nine_dimensional_pair", check_bott_pair},
        {"matroid_seventeen_element_pair", check_seventeen},
        {"binary_matroid_counts", check_matroid_counts},
        {"euler_consistency", check_euler},
    };
    std::vector<FixtureResult> out;
    for (const auto& [name, fn] : checks) {
        FixtureResult r;
        r.name = name;
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace retorix::repro
