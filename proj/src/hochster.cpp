#include "retorix/hochster.hpp"

#include <algorithm>

#include "retorix/parallel.hpp"

namespace retorix {

ReducedComplexQ build_reduced_complex(const SimplicialComplex& K) {
    ReducedComplexQ out;
    if (K.is_void()) return out;
    const int top = K.top_card();
    out.cells.resize(static_cast<size_t>(top) + 1);
    for (int c = 0; c <= top; ++c) out.cells[static_cast<size_t>(c)] = K.faces_of_card(c);

    out.delta.resize(static_cast<size_t>(top) + 1);
    for (int c = 0; c <= top; ++c) {
        SparseCoboundary& d = out.delta[static_cast<size_t>(c)];
        const auto& lower = out.cells[static_cast<size_t>(c)];
        const auto* upper = (c + 1 <= top) ? &out.cells[static_cast<size_t>(c + 1)] : nullptr;
        d.cols = static_cast<int>(lower.size());
        d.rows = upper ? static_cast<int>(upper->size()) : 0;
        d.columns.resize(lower.size());
        if (!upper) continue;
        // Each (c+1)-face contributes one entry per vertex deletion.
        for (size_t ui = 0; ui < upper->size(); ++ui) {
            uint64_t tau = (*upper)[ui];
            uint64_t rest = tau;
            while (rest) {
                const int v = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                const uint64_t sigma = tau & ~(uint64_t{1} << (v - 1));
                const auto it = std::lower_bound(lower.begin(), lower.end(), sigma);
                if (it == lower.end() || *it != sigma) continue;  // ghost-vertex gap
                const int col = static_cast<int>(it - lower.begin());
                d.columns[static_cast<size_t>(col)].emplace_back(static_cast<int>(ui),
                                                                 Rational(insertion_sign(sigma, v)));
            }
        }
    }
    return out;
}

std::vector<long long> reduced_betti(const SimplicialComplex& K) {
    if (K.is_void()) return {};
    const int top = K.top_card();
    std::vector<long long> rb(static_cast<size_t>(top) + 1, 0);

    // Cone shortcut: a vertex in every facet makes the complex contractible.
    if (top >= 1) {
        uint64_t apex = K.facet_masks().front();
        for (uint64_t f : K.facet_masks()) apex &= f;
        if (apex != 0) return rb;
    }

    ReducedComplexQ rc = build_reduced_complex(K);
    std::vector<long long> ranks(static_cast<size_t>(top) + 1, 0);
    for (int c = 0; c <= top; ++c) {
        const SparseCoboundary& d = rc.delta[static_cast<size_t>(c)];
        if (d.rows == 0 || d.cols == 0) continue;
        ranks[static_cast<size_t>(c)] = sparse_rank_q(d.rows, d.columns);
    }
    for (int c = 0; c <= top; ++c) {
        const long long cells = static_cast<long long>(rc.cells[static_cast<size_t>(c)].size());
        const long long below = (c > 0) ? ranks[static_cast<size_t>(c - 1)] : 0;
        rb[static_cast<size_t>(c)] = cells - ranks[static_cast<size_t>(c)] - below;
    }
    return rb;
}

GradedBettiTable graded_betti(const SimplicialComplex& K, const Gf2Matrix& lambda) {
    if (lambda.cols() != K.vertex_count())
        throw domain_error("Λ must have one column per vertex of K");
    const std::vector<Gf2Vector> omegas = row_space(lambda);

    GradedBettiTable table;
    table.m = K.vertex_count();
    std::vector<std::vector<long long>> per_omega(omegas.size());
    parallel_for(static_cast<int>(omegas.size()), [&](int i) {
        per_omega[static_cast<size_t>(i)] =
            reduced_betti(induced_subcomplex(K, omegas[static_cast<size_t>(i)].bits()));
    });

    // Deterministic merge: omegas are already sorted as integers. Totals
    // run over the full possible range p = 0..top_card(K).
    table.totals.assign(static_cast<size_t>(std::max(K.top_card(), 0)) + 1, 0);
    for (size_t i = 0; i < omegas.size(); ++i) {
        for (size_t p = 0; p < per_omega[i].size(); ++p) {
            const long long dim = per_omega[i][p];
            if (dim == 0) continue;
            table.entries[{static_cast<int>(p), omegas[i].bits()}] = dim;
            table.totals[p] += dim;
        }
    }
    return table;
}

EulerCheck euler_check(const SimplicialComplex& K, const Gf2Matrix& lambda) {
    EulerCheck out;
    const int m = K.vertex_count();
    Integer numerator = 0;
    for (int k = 0; k <= std::min(K.top_card() + 1, m); ++k) {
        const Integer f = (k == 0) ? Integer((K.is_void() ? 0 : 1))
                                   : Integer(K.faces_of_card(k).size());
        const Integer term = f << (m - k);
        numerator += (k % 2 == 0) ? term : -term;
    }
    const int r = rank(lambda);
    const Integer denom = Integer(1) << (m - r);
    if (numerator % denom != 0) throw domain_error("Euler cell count is not divisible by |ker Λ|");
    out.chi_cells = numerator / denom;

    GradedBettiTable table = graded_betti(K, lambda);
    Integer chi = 0;
    for (size_t p = 0; p < table.totals.size(); ++p)
        chi += (p % 2 == 0) ? Integer(table.totals[p]) : -Integer(table.totals[p]);
    out.chi_betti = chi;
    return out;
}

}  // namespace retorix
