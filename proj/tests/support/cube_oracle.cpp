#include "support/cube_oracle.hpp"

#include <algorithm>
#include <utility>

#include "retorix/errors.hpp"
#include "retorix/qlinalg.hpp"

namespace retorix::testing {

namespace {

struct Cell {
    uint64_t sigma;  // 01-coordinates
    uint64_t bits;   // 0/1 values on the complement
    bool operator<(const Cell& o) const {
        return sigma != o.sigma ? sigma < o.sigma : bits < o.bits;
    }
    bool operator==(const Cell& o) const = default;
};

}  // namespace

std::vector<long long> cube_cw_betti(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (m > 12) throw capacity_error("cube oracle is for small m only");
    if (K.is_void()) return {};
    const uint64_t full = mask_all(m);

    // cells grouped by dimension = |sigma|
    std::vector<std::vector<Cell>> cells(static_cast<size_t>(K.top_card()) + 1);
    for (int card = 0; card <= K.top_card(); ++card) {
        for (uint64_t sigma : K.faces_of_card(card)) {
            const uint64_t complement = full & ~sigma;
            // enumerate all 0/1 assignments on the complement
            uint64_t sub = 0;
            while (true) {
                cells[static_cast<size_t>(card)].push_back({sigma, sub});
                if (sub == complement) break;
                sub = (sub - complement) & complement;
            }
        }
        std::sort(cells[static_cast<size_t>(card)].begin(), cells[static_cast<size_t>(card)].end());
    }

    const int top = K.top_card();
    std::vector<long long> ranks(static_cast<size_t>(top) + 1, 0);
    for (int d = 0; d < top; ++d) {
        const auto& lower = cells[static_cast<size_t>(d)];
        const auto& upper = cells[static_cast<size_t>(d + 1)];
        std::vector<std::vector<std::pair<int, Rational>>> columns(lower.size());
        // ∂(c') = Σ_{i in σ'} (-1)^{#01 before i} [(c' with 1_i) - (c' with 0_i)]
        for (size_t ui = 0; ui < upper.size(); ++ui) {
            const Cell& c = upper[ui];
            int before = 0;
            uint64_t rest = c.sigma;
            while (rest) {
                const int i = std::countr_zero(rest);
                rest &= rest - 1;
                const uint64_t sigma_low = c.sigma & ~(uint64_t{1} << i);
                const int sign = (before % 2 == 0) ? 1 : -1;
                for (int value = 0; value <= 1; ++value) {
                    Cell lower_cell{sigma_low, c.bits | (value ? (uint64_t{1} << i) : 0)};
                    const auto it = std::lower_bound(lower.begin(), lower.end(), lower_cell);
                    if (it == lower.end() || !(*it == lower_cell))
                        throw internal_error("cube oracle: missing boundary cell");
                    const int col = static_cast<int>(it - lower.begin());
                    columns[static_cast<size_t>(col)].emplace_back(
                        static_cast<int>(ui), Rational(value ? sign : -sign));
                }
                ++before;
            }
        }
        ranks[static_cast<size_t>(d)] = sparse_rank_q(static_cast<int>(upper.size()), std::move(columns));
    }

    std::vector<long long> betti(static_cast<size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d) {
        const long long below = (d > 0) ? ranks[static_cast<size_t>(d - 1)] : 0;
        betti[static_cast<size_t>(d)] =
            static_cast<long long>(cells[static_cast<size_t>(d)].size()) -
            ranks[static_cast<size_t>(d)] - below;
    }
    return betti;
}

}  // namespace retorix::testing
