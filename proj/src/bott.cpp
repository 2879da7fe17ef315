#include "retorix/bott.hpp"

#include <algorithm>

#include "retorix/errors.hpp"

namespace retorix {

BottSpec BottSpec::real(const Gf2Matrix& A) {
    if (A.rows() != A.cols()) throw domain_error("real Bott matrix must be square");
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 1; j <= i + 1; ++j)
            if (A.get(i, j)) throw domain_error("real Bott matrix must be strictly upper triangular");
    BottSpec out;
    out.generalized = false;
    out.A = A;
    return out;
}

BottSpec BottSpec::generalized_spec(std::vector<int> sizes,
                                    std::map<std::pair<int, int>, Gf2Vector> blocks) {
    const int k = static_cast<int>(sizes.size());
    if (k < 1) throw domain_error("generalized Bott spec needs at least one stage");
    for (int s : sizes)
        if (s < 1) throw domain_error("block sizes must be >= 1");
    for (const auto& [key, row] : blocks) {
        const auto [i, j] = key;
        if (i < 1 || j < 1 || i > k || j > k) throw domain_error("block index out of range");
        if (i >= j) throw domain_error("blocks must be strictly upper triangular");
        if (row.length() != sizes[static_cast<size_t>(j - 1)])
            throw domain_error("block (i,j) must have length n_j");
    }
    BottSpec out;
    out.generalized = true;
    out.sizes = std::move(sizes);
    out.blocks = std::move(blocks);
    return out;
}

LambdaComplex lambda_matrix(const BottSpec& spec) {
    LambdaComplex out;
    if (!spec.generalized) {
        const int n = spec.A.cols();
        const int m = 2 * n;
        if (m > 64) throw capacity_error("crosspolytope exceeds 64 vertices");
        std::vector<Gf2Vector> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            // row i = (e_i | e_i + column i of A)
            uint64_t right = (uint64_t{1} << (i - 1)) | spec.A.column_bits(i);
            uint64_t bits = (uint64_t{1} << (i - 1)) | (right << n);
            rows.emplace_back(m, bits);
        }
        out.lambda = Gf2Matrix(m, rows);
        out.K = make_crosspolytope(n);
    } else {
        const int k = spec.stages();
        int n = 0;
        std::vector<int> offsets(static_cast<size_t>(k) + 1, 0);
        for (int i = 0; i < k; ++i) {
            offsets[static_cast<size_t>(i)] = n;
            n += spec.sizes[static_cast<size_t>(i)];
        }
        offsets[static_cast<size_t>(k)] = n;
        const int m = n + k;
        if (m > 64) throw capacity_error("product of simplices exceeds 64 vertices");

        // Column n+i (vertex i_{n_i+1}) = ones on block i plus the bits of
        // block (i,j) inside block j, for j > i.
        std::vector<uint64_t> right_cols(static_cast<size_t>(k), 0);
        for (int i = 1; i <= k; ++i) {
            uint64_t col = 0;
            for (int a = 0; a < spec.sizes[static_cast<size_t>(i - 1)]; ++a)
                col |= uint64_t{1} << (offsets[static_cast<size_t>(i - 1)] + a);
            for (int j = i + 1; j <= k; ++j) {
                auto it = spec.blocks.find({i, j});
                if (it == spec.blocks.end()) continue;
                col |= it->second.bits() << offsets[static_cast<size_t>(j - 1)];
            }
            right_cols[static_cast<size_t>(i - 1)] = col;
        }
        std::vector<Gf2Vector> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) {
            uint64_t bits = uint64_t{1} << r;
            for (int j = 0; j < k; ++j)
                if ((right_cols[static_cast<size_t>(j)] >> r) & 1) bits |= uint64_t{1} << (n + j);
            rows.emplace_back(m, bits);
        }
        out.lambda = Gf2Matrix(m, rows);
        out.K = make_product_simplices_boundary(spec.sizes);
    }
    if (!is_characteristic(out.K, out.lambda).ok)
        throw internal_error("Λ construction is not characteristic over K");
    return out;
}

Gf2Matrix underlying_matrix(const BottSpec& spec) {
    if (!spec.generalized) {
        // Degenerate view: all n_i = 1, diagonal n_i + 1 = 0 mod 2.
        return spec.A;
    }
    const int k = spec.stages();
    std::vector<Gf2Vector> rows;
    for (int i = 1; i <= k; ++i) {
        uint64_t bits = 0;
        if ((spec.sizes[static_cast<size_t>(i - 1)] + 1) % 2 == 1) bits |= uint64_t{1} << (i - 1);
        for (int j = i + 1; j <= k; ++j) {
            auto it = spec.blocks.find({i, j});
            if (it != spec.blocks.end() && (it->second.weight() % 2 == 1)) bits |= uint64_t{1} << (j - 1);
        }
        rows.emplace_back(k, bits);
    }
    return Gf2Matrix(k, rows);
}

RingPresentation ring_presentation(const BottSpec& spec) {
    RingPresentation out;
    const Gf2Matrix base = underlying_matrix(spec);
    out.ground = base.cols();
    for (uint64_t c : circuits(base)) {
        int degree = 0;
        uint64_t rest = c;
        while (rest) {
            const int i = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            degree += spec.generalized ? spec.sizes[static_cast<size_t>(i - 1)] : 1;
        }
        out.generators.push_back({c, degree});
    }
    return out;
}

std::vector<long long> betti_from_presentation(const RingPresentation& pres, int dim) {
    std::vector<long long> betti(static_cast<size_t>(dim) + 1, 0);
    betti[0] = 1;  // the empty family
    const auto& gens = pres.generators;
    // DFS over circuits in a fixed order with a used-element mask.
    std::vector<std::pair<size_t, std::pair<uint64_t, int>>> stack;  // (next index, (mask, degree))
    stack.push_back({0, {0, 0}});
    while (!stack.empty()) {
        auto [start, state] = stack.back();
        stack.pop_back();
        const auto [mask, degree] = state;
        for (size_t i = start; i < gens.size(); ++i) {
            if (gens[i].circuit & mask) continue;
            const int d = degree + gens[i].degree;
            if (d > dim) continue;
            ++betti[static_cast<size_t>(d)];
            stack.push_back({i + 1, {mask | gens[i].circuit, d}});
        }
    }
    return betti;
}

std::vector<std::pair<int, int>> disjoint_pairs(const RingPresentation& pres) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < pres.generators.size(); ++i)
        for (size_t j = i + 1; j < pres.generators.size(); ++j)
            if ((pres.generators[i].circuit & pres.generators[j].circuit) == 0)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace retorix
