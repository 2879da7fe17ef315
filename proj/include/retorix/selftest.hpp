#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "retorix/complex.hpp"
#include "retorix/gf2.hpp"

namespace retorix {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string detail;  // first failure description, if any
    bool passed() const { return failures == 0 && cases > 0; }
};

// Random nonvoid complex on at most max_m vertices.
SimplicialComplex random_complex(std::mt19937_64& rng, int max_m);
Gf2Matrix random_gf2_matrix(std::mt19937_64& rng, int rows, int cols);

// The randomized property suites behind `retorix selftest`: algebra laws
// (d∘d = 0, Leibniz, graded commutativity, associativity), the f_ω
// chain-map property, the row-space/kernel orthogonality equivalence, the
// grading law (full vs rule mode, off-component exactness), and the
// fixed-subalgebra criterion. Deterministic for a fixed seed.
std::vector<SuiteResult> run_property_suites(uint64_t seed, int cases);

}  // namespace retorix
