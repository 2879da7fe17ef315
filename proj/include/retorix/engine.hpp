#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "retorix/bott.hpp"
#include "retorix/complex.hpp"
#include "retorix/gf2.hpp"

namespace retorix::engine {

using nlohmann::json;

// Job-level entry points shared by the C API and the test suites. All
// output is deterministic: keys sorted, ω rendered as a length-m bit
// string, rationals rendered canonically.

json betti_job(const SimplicialComplex& K, const Gf2Matrix& lambda);
json ring_job(const SimplicialComplex& K, const Gf2Matrix& lambda, int max_degree);
json bott_job(const BottSpec& spec, int dim);
json bott_deps_job(int n, const std::vector<Gf2Vector>& deps, int dim);
json matroid_circuits_job(const Gf2Matrix& M);
json matroid_triangularize_job(const Gf2Matrix& M);
json matroid_count_job(int n);
json csymp_job(const SimplicialComplex& K, const Gf2Matrix* lambda, bool almost);
json check_job(const SimplicialComplex& K, const Gf2Matrix& lambda);
json selftest_job(uint64_t seed, int cases);
json repro_job();

// Parses either a standard-family spec ("cross:3") or complex JSON text.
SimplicialComplex parse_complex_text(const std::string& text);

// Parse one 0/1 vector per line.
std::vector<Gf2Vector> parse_dependency_lines(const std::string& text, int* n_out);

}  // namespace retorix::engine

namespace retorix::repro {

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The built-in fixture set behind `retorix repro`: the 9-vertex sphere cup
// product, the classical small covers (torus, Klein bottle, projective
// spaces), the nine-dimensional Bott pair, the 17-element matroid pair,
// matroid counts, and the Euler consistency sweep.
std::vector<FixtureResult> run_all();

}  // namespace retorix::repro
