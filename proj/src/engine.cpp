#include "retorix/engine.hpp"

#include <limits>
#include <sstream>

#include "retorix/csymp.hpp"
#include "retorix/dga.hpp"
#include "retorix/hochster.hpp"
#include "retorix/matroid.hpp"
#include "retorix/selftest.hpp"

namespace retorix::engine {

namespace {

std::string omega_string(uint64_t omega, int m) { return Gf2Vector(m, omega).to_string(); }

json coords_json(const QVector& coords) {
    json out = json::array();
    for (const auto& c : coords) out.push_back(rational_to_string(c));
    return out;
}

long long narrow(const Integer& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw capacity_error(std::string(what) + " exceeds 64-bit range");
    return static_cast<long long>(v);
}

json rep_json(const Cochain& rep, int m) {
    json out = json::array();
    for (const auto& [mono, coeff] : rep) {
        out.push_back(json::array({omega_string(mono.sigma, m), omega_string(mono.omega, m),
                                   narrow(numerator(coeff), "coefficient"),
                                   narrow(denominator(coeff), "coefficient")}));
    }
    return out;
}

json class_json(const CohomologyClass& cls, int m) {
    json out;
    out["p"] = cls.p;
    out["omega"] = omega_string(cls.omega, m);
    out["coords"] = coords_json(cls.coords);
    out["rep"] = rep_json(cls.representative, m);
    return out;
}

json vertices_json(uint64_t mask, int m) {
    json out = json::array();
    for (int v : Gf2Vector(m, mask).vertices()) out.push_back(v);
    return out;
}

}  // namespace

json betti_job(const SimplicialComplex& K, const Gf2Matrix& lambda) {
    const GradedBettiTable table = graded_betti(K, lambda);
    json out;
    out["totals"] = table.totals;
    json graded = json::array();
    for (const auto& [key, dim] : table.entries) {
        json row;
        row["p"] = key.first;
        row["omega"] = omega_string(key.second, table.m);
        row["dim"] = dim;
        graded.push_back(row);
    }
    out["graded"] = graded;
    return out;
}

json ring_job(const SimplicialComplex& K, const Gf2Matrix& lambda, int max_degree) {
    const RingStructure ring = ring_structure(K, lambda, max_degree);
    json out;
    out["m"] = ring.m;
    out["characteristic"] = ring.characteristic;
    json basis = json::array();
    for (const auto& entry : ring.basis) {
        json row;
        row["p"] = entry.p;
        row["omega"] = omega_string(entry.omega, ring.m);
        row["rep"] = rep_json(entry.rep, ring.m);
        basis.push_back(row);
    }
    out["basis"] = basis;
    json products = json::array();
    for (const auto& prod : ring.products) {
        json row;
        row["i"] = prod.i;
        row["j"] = prod.j;
        row["p"] = prod.p;
        row["omega"] = omega_string(prod.omega, ring.m);
        row["coords"] = coords_json(prod.coords);
        products.push_back(row);
    }
    out["products"] = products;
    return out;
}

json bott_job(const BottSpec& spec, int dim) {
    const RingPresentation pres = ring_presentation(spec);
    int total_dim = 0;
    if (spec.generalized)
        for (int s : spec.sizes) total_dim += s;
    else
        total_dim = spec.A.cols();
    if (dim < 0) dim = total_dim;

    json out;
    out["n"] = pres.ground;
    json gens = json::array();
    for (const auto& g : pres.generators) {
        json row;
        row["circuit"] = vertices_json(g.circuit, pres.ground);
        row["degree"] = g.degree;
        gens.push_back(row);
    }
    out["generators"] = gens;
    out["betti"] = betti_from_presentation(pres, dim);
    json pairs = json::array();
    for (const auto& [i, j] : disjoint_pairs(pres)) pairs.push_back(json::array({i, j}));
    out["disjoint_pairs"] = pairs;
    return out;
}

json bott_deps_job(int n, const std::vector<Gf2Vector>& deps, int dim) {
    const Gf2Matrix B = matrix_from_dependencies(n, deps);
    const Triangularization tri = triangularize(B);
    json out = bott_job(BottSpec::real(tri.matrix), dim);
    out["permutation"] = tri.permutation;
    return out;
}

json matroid_circuits_job(const Gf2Matrix& M) {
    json out;
    out["n"] = M.cols();
    json cs = json::array();
    for (uint64_t c : circuits(M)) cs.push_back(vertices_json(c, M.cols()));
    out["circuits"] = cs;
    return out;
}

json matroid_triangularize_job(const Gf2Matrix& M) {
    const Triangularization tri = triangularize(M);
    json out;
    json rows = json::array();
    for (int i = 0; i < tri.matrix.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= tri.matrix.cols(); ++j) row.push_back(tri.matrix.get(i, j) ? 1 : 0);
        rows.push_back(row);
    }
    out["matrix"] = rows;
    out["permutation"] = tri.permutation;
    json cs = json::array();
    for (uint64_t c : circuits(tri.matrix)) cs.push_back(vertices_json(c, tri.matrix.cols()));
    out["circuits"] = cs;
    return out;
}

json matroid_count_job(int n) {
    json out;
    out["n"] = n;
    out["count"] = count_binary_matroids(n);
    return out;
}

json csymp_job(const SimplicialComplex& K, const Gf2Matrix* lambda, bool almost) {
    CsympResult result = almost ? almost_c_symplectic(K) : decide_c_symplectic(K, lambda);
    json out;
    out["result"] = result.value;
    out["caveat"] = "polytopality of K is assumed, not verified";
    if (!result.reason.empty()) out["reason"] = result.reason;
    if (result.witness) {
        json w;
        json classes = json::array();
        for (const auto& cls : result.witness->classes) classes.push_back(class_json(cls, K.vertex_count()));
        w["classes"] = classes;
        w["product"] = class_json(result.witness->product, K.vertex_count());
        out["witness"] = w;
    }
    return out;
}

json check_job(const SimplicialComplex& K, const Gf2Matrix& lambda) {
    json out;
    const CharacteristicCheck cc = is_characteristic(K, lambda);
    out["characteristic"] = cc.ok;
    if (cc.offending_face)
        out["offending_face"] = *cc.offending_face;
    else
        out["offending_face"] = nullptr;
    const EulerCheck euler = euler_check(K, lambda);
    out["chi_cells"] = euler.chi_cells.str();
    out["chi_betti"] = euler.chi_betti.str();
    out["euler_consistent"] = euler.consistent();
    return out;
}

json selftest_job(uint64_t seed, int cases) {
    json out;
    out["seed"] = seed;
    json suites = json::array();
    bool all = true;
    for (const SuiteResult& r : run_property_suites(seed, cases)) {
        json row;
        row["name"] = r.name;
        row["cases"] = r.cases;
        row["failures"] = r.failures;
        if (!r.detail.empty()) row["detail"] = r.detail;
        suites.push_back(row);
        all = all && r.passed();
    }
    out["suites"] = suites;
    out["all_pass"] = all;
    return out;
}

json repro_job() {
    json out;
    json fixtures = json::array();
    bool all = true;
    for (const auto& f : retorix::repro::run_all()) {
        json row;
        row["name"] = f.name;
        row["pass"] = f.pass;
        if (!f.detail.empty()) row["detail"] = f.detail;
        fixtures.push_back(row);
        all = all && f.pass;
    }
    out["fixtures"] = fixtures;
    out["all_pass"] = all;
    return out;
}

SimplicialComplex parse_complex_text(const std::string& text) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return complex_from_json_text(text);
    return standard_complex(text);
}

std::vector<Gf2Vector> parse_dependency_lines(const std::string& text, int* n_out) {
    const Gf2Matrix rows = parse_gf2_matrix(text);
    if (n_out) *n_out = rows.cols();
    return rows.row_vectors();
}

}  // namespace retorix::engine
