#include "retorix/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "retorix/errors.hpp"

namespace retorix {

namespace {

bool circuit_order(uint64_t a, uint64_t b) {
    const int pa = popcount64(a), pb = popcount64(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

std::vector<uint64_t> minimal_supports(std::vector<uint64_t> supports) {
    std::sort(supports.begin(), supports.end(), circuit_order);
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<uint64_t> minimal;
    for (uint64_t s : supports) {
        bool dominated = false;
        for (uint64_t kept : minimal)
            if ((kept & s) == kept) { dominated = true; break; }
        if (!dominated) minimal.push_back(s);
    }
    return minimal;
}

}  // namespace

std::vector<uint64_t> circuits_of_cycle_space(int n, const std::vector<Gf2Vector>& spanning) {
    Gf2Matrix span_matrix(n, spanning);
    Gf2Rref r = rref(span_matrix);
    if (r.rank > kNullityGuard)
        throw capacity_error("circuit enumeration needs nullity <= " + std::to_string(kNullityGuard));
    const size_t count = size_t{1} << r.rank;
    std::vector<uint64_t> sums(count, 0);
    for (int i = 0; i < r.rank; ++i) {
        const size_t block = size_t{1} << i;
        for (size_t s = 0; s < block; ++s)
            sums[block + s] = sums[s] ^ r.reduced[static_cast<size_t>(i)].bits();
    }
    sums.erase(sums.begin());  // drop the zero vector
    return minimal_supports(std::move(sums));
}

std::vector<uint64_t> circuits(const Gf2Matrix& M) {
    Gf2Rref r = rref(M);
    return circuits_of_cycle_space(M.cols(), r.kernel_basis);
}

BinaryMatroid BinaryMatroid::from_matrix(const Gf2Matrix& M) {
    BinaryMatroid out;
    out.n = M.cols();
    out.matrix = M;
    out.circuit_set = circuits(M);
    return out;
}

bool circuit_axioms_hold(const std::vector<uint64_t>& cs) {
    for (uint64_t c : cs)
        if (c == 0) return false;  // (C1)
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            if (i != j && (cs[i] & cs[j]) == cs[i]) return false;  // (C2)
    for (size_t i = 0; i < cs.size(); ++i) {
        for (size_t j = i + 1; j < cs.size(); ++j) {
            uint64_t common = cs[i] & cs[j];
            while (common) {
                const uint64_t e = common & (~common + 1);
                common &= common - 1;
                const uint64_t bound = (cs[i] | cs[j]) & ~e;
                bool found = false;
                for (uint64_t c : cs)
                    if ((c & bound) == c) { found = true; break; }
                if (!found) return false;  // (C3)
            }
        }
    }
    return true;
}

Triangularization triangularize(const Gf2Matrix& B) {
    const int n = B.cols();
    int zero_col = -1;
    for (int j = 1; j <= n; ++j)
        if (B.column_bits(j) == 0) { zero_col = j; break; }
    if (zero_col < 0) throw domain_error("triangularize requires a zero column (a singleton circuit)");

    Triangularization out;
    out.permutation.reserve(static_cast<size_t>(n));
    out.permutation.push_back(zero_col);
    for (int j = 1; j <= n; ++j)
        if (j != zero_col) out.permutation.push_back(j);

    std::vector<uint64_t> cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        cols[static_cast<size_t>(j)] = B.column_bits(out.permutation[static_cast<size_t>(j)]);

    // Basis x_1..x_l of the column space with span(B_1..B_{k+1}) inside
    // span(x_1..x_k): scan columns in order and adopt each new direction.
    std::vector<uint64_t> basis;
    std::vector<std::pair<uint64_t, uint64_t>> elim;  // (reduced vector, coord combo)
    std::vector<uint64_t> coords(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        uint64_t v = cols[static_cast<size_t>(j)];
        uint64_t combo = 0;
        for (const auto& [red, cmb] : elim) {
            const uint64_t low = red & (~red + 1);
            if (v & low) {
                v ^= red;
                combo ^= cmb;
            }
        }
        if (v != 0) {
            basis.push_back(cols[static_cast<size_t>(j)]);
            const uint64_t new_coord = uint64_t{1} << (basis.size() - 1);
            elim.emplace_back(v, combo | new_coord);
            coords[static_cast<size_t>(j)] = new_coord;
        } else {
            coords[static_cast<size_t>(j)] = combo;
        }
    }

    // A[i][j] = i-th coordinate of column j; support lies in rows < j.
    std::vector<Gf2Vector> rows;
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
        uint64_t bits = 0;
        for (int j = 0; j < n; ++j)
            if (i < 64 && ((coords[static_cast<size_t>(j)] >> i) & 1)) bits |= uint64_t{1} << j;
        rows.emplace_back(n, bits);
    }
    out.matrix = Gf2Matrix(n, rows);

    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i)
            if (out.matrix.get(i, j + 1))
                throw internal_error("triangularization produced a non-strict entry");
    }
    return out;
}

Gf2Matrix matrix_from_dependencies(int n, const std::vector<Gf2Vector>& deps) {
    for (const auto& d : deps) {
        if (d.length() != n) throw domain_error("dependency length mismatch");
        if (d.is_zero()) throw domain_error("dependencies must be nonzero");
    }
    Gf2Matrix dep_rows(n, deps);
    Gf2Rref r = rref(dep_rows);
    return Gf2Matrix(n, r.kernel_basis);
}

namespace {

// Canonical encoding of a circuit set under ground-set permutations.
std::vector<uint64_t> permuted_circuits(const std::vector<uint64_t>& cs, const std::vector<int>& perm) {
    std::vector<uint64_t> out;
    out.reserve(cs.size());
    for (uint64_t c : cs) {
        uint64_t image = 0;
        uint64_t rest = c;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            image |= uint64_t{1} << perm[static_cast<size_t>(v)];
        }
        out.push_back(image);
    }
    std::sort(out.begin(), out.end(), circuit_order);
    return out;
}

}  // namespace

long long count_binary_matroids(int n) {
    if (n < 0) throw domain_error("negative ground set");
    if (n > 5) throw capacity_error("matroid counting is limited to n <= 5");
    if (n == 0) return 1;

    // Enumerate subspaces of GF(2)^n once each via their RREF matrices.
    std::vector<std::vector<uint64_t>> subspaces;
    for (int r = 0; r <= n; ++r) {
        std::vector<int> idx(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
        bool more = (r <= n);
        while (more) {
            // free positions: non-pivot columns to the right of each pivot
            std::vector<std::pair<int, int>> free_slots;  // (row, col)
            for (int i = 0; i < r; ++i)
                for (int c = idx[static_cast<size_t>(i)] + 1; c < n; ++c)
                    if (std::find(idx.begin(), idx.end(), c) == idx.end())
                        free_slots.emplace_back(i, c);
            const size_t fill_count = size_t{1} << free_slots.size();
            for (size_t fill = 0; fill < fill_count; ++fill) {
                std::vector<uint64_t> rows(static_cast<size_t>(r), 0);
                for (int i = 0; i < r; ++i)
                    rows[static_cast<size_t>(i)] |= uint64_t{1} << idx[static_cast<size_t>(i)];
                for (size_t f = 0; f < free_slots.size(); ++f)
                    if ((fill >> f) & 1)
                        rows[static_cast<size_t>(free_slots[f].first)] |= uint64_t{1} << free_slots[f].second;
                subspaces.push_back(std::move(rows));
            }
            // next pivot combination
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - r + pos) --pos;
            if (pos < 0) {
                more = false;
            } else {
                ++idx[static_cast<size_t>(pos)];
                for (int i = pos + 1; i < r; ++i)
                    idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
            }
            if (r == 0) more = false;
        }
    }

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::vector<uint64_t>, bool> seen;
    for (const auto& rows : subspaces) {
        std::vector<Gf2Vector> span;
        span.reserve(rows.size());
        for (uint64_t r : rows) span.emplace_back(n, r);
        const std::vector<uint64_t> cs = circuits_of_cycle_space(n, span);
        std::vector<uint64_t> best;
        for (const auto& p : perms) {
            std::vector<uint64_t> cand = permuted_circuits(cs, p);
            if (best.empty() && cs.empty()) { best = cand; break; }
            if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
                best = cand;
        }
        seen[best] = true;
    }
    return static_cast<long long>(seen.size());
}

namespace {

std::vector<std::vector<int>> membership_profiles(int n, const std::vector<uint64_t>& cs) {
    std::vector<std::vector<int>> profiles(static_cast<size_t>(n));
    for (uint64_t c : cs) {
        uint64_t rest = c;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            profiles[static_cast<size_t>(v)].push_back(popcount64(c));
        }
    }
    for (auto& p : profiles) std::sort(p.begin(), p.end());
    return profiles;
}

struct IsoSearch {
    int n;
    const std::vector<uint64_t>& c1;
    const std::vector<uint64_t>& c2;
    std::vector<std::vector<int>> profile1, profile2;  // circuit-size multisets per element
    std::vector<int> image;    // 0-based images, -1 = unassigned
    std::vector<bool> used;

    bool feasible_partial() const {
        // Every circuit's partial image must extend to some same-size circuit
        // of c2; fully assigned circuits must land exactly on one.
        for (uint64_t c : c1) {
            uint64_t mapped = 0;
            int assigned = 0;
            uint64_t rest = c;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (image[static_cast<size_t>(v)] >= 0) {
                    mapped |= uint64_t{1} << image[static_cast<size_t>(v)];
                    ++assigned;
                }
            }
            const int size = popcount64(c);
            bool ok = false;
            for (uint64_t target : c2) {
                if (popcount64(target) != size) continue;
                if ((mapped & target) != mapped) continue;
                if (assigned == size && target != mapped) continue;
                ok = true;
                break;
            }
            if (!ok) return false;
        }
        return true;
    }

    bool extend(int v) {
        if (v == n) {
            // permutation complete: check the image circuit set equals c2
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = image[static_cast<size_t>(i)];
            std::vector<uint64_t> mapped = permuted_circuits(c1, perm);
            std::vector<uint64_t> sorted2 = c2;
            std::sort(sorted2.begin(), sorted2.end(), circuit_order);
            return mapped == sorted2;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            if (profile1[static_cast<size_t>(v)] != profile2[static_cast<size_t>(w)]) continue;
            image[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = true;
            if (feasible_partial() && extend(v + 1)) return true;
            image[static_cast<size_t>(v)] = -1;
            used[static_cast<size_t>(w)] = false;
        }
        return false;
    }
};

}  // namespace

bool circuit_sets_isomorphic(int n, const std::vector<uint64_t>& c1, const std::vector<uint64_t>& c2) {
    if (c1.size() != c2.size()) return false;
    std::vector<int> sizes1, sizes2;
    for (uint64_t c : c1) sizes1.push_back(popcount64(c));
    for (uint64_t c : c2) sizes2.push_back(popcount64(c));
    std::sort(sizes1.begin(), sizes1.end());
    std::sort(sizes2.begin(), sizes2.end());
    if (sizes1 != sizes2) return false;
    IsoSearch search{n,
                     c1,
                     c2,
                     membership_profiles(n, c1),
                     membership_profiles(n, c2),
                     std::vector<int>(static_cast<size_t>(n), -1),
                     std::vector<bool>(static_cast<size_t>(n), false)};
    return search.extend(0);
}

}  // namespace retorix
