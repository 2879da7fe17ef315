#include "retorix/qlinalg.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace retorix {

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix out(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw domain_error("ragged rational matrix");
        for (size_t j = 0; j < rows[i].size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return out;
}

QVector QMatrix::row(int i) const {
    QVector out(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(i, j);
    return out;
}

void QMatrix::append_row(const QVector& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_) throw domain_error("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

QRref rref_q(const QMatrix& m) {
    QRref out;
    out.reduced = m;
    QMatrix& a = out.reduced;
    int next = 0;
    for (int j = 0; j < a.cols() && next < a.rows(); ++j) {
        int found = -1;
        for (int i = next; i < a.rows(); ++i)
            if (a.at(i, j) != 0) { found = i; break; }
        if (found < 0) continue;
        if (found != next)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(found, c), a.at(next, c));
        const Rational inv = Rational(1) / a.at(next, j);
        for (int c = j; c < a.cols(); ++c) a.at(next, c) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == next || a.at(i, j) == 0) continue;
            const Rational factor = a.at(i, j);
            for (int c = j; c < a.cols(); ++c) a.at(i, c) -= factor * a.at(next, c);
        }
        out.pivot_cols.push_back(j);
        ++next;
    }
    out.rank = next;
    return out;
}

std::vector<QVector> kernel_basis_q(const QMatrix& m) {
    QRref r = rref_q(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : r.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<QVector> out;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        QVector v(static_cast<size_t>(m.cols()), Rational(0));
        v[static_cast<size_t>(j)] = 1;
        for (int i = 0; i < r.rank; ++i)
            v[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(i)])] = -r.reduced.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

struct SparseElim {
    // rows as maps col -> value; col index as sets of live row ids
    std::vector<std::unordered_map<int, Rational>> rows;
    std::vector<std::unordered_set<int>> col_rows;

    void erase_entry(int r, int c) {
        rows[static_cast<size_t>(r)].erase(c);
        col_rows[static_cast<size_t>(c)].erase(r);
    }
    void set_entry(int r, int c, Rational v) {
        if (v == 0) {
            erase_entry(r, c);
            return;
        }
        auto [it, inserted] = rows[static_cast<size_t>(r)].try_emplace(c, std::move(v));
        if (!inserted) it->second = std::move(v);
        if (inserted) col_rows[static_cast<size_t>(c)].insert(r);
    }
};

}  // namespace

int sparse_rank_q(int nrows, std::vector<std::vector<std::pair<int, Rational>>> columns) {
    SparseElim e;
    const int ncols = static_cast<int>(columns.size());
    e.rows.resize(static_cast<size_t>(nrows));
    e.col_rows.resize(static_cast<size_t>(ncols));
    for (int c = 0; c < ncols; ++c)
        for (auto& [r, v] : columns[static_cast<size_t>(c)]) {
            if (v == 0) continue;
            e.rows[static_cast<size_t>(r)].emplace(c, std::move(v));
            e.col_rows[static_cast<size_t>(c)].insert(r);
        }

    std::vector<bool> col_live(static_cast<size_t>(ncols), true);
    int rank = 0;
    while (true) {
        // Markowitz-style pivot choice: among unit entries (then all entries)
        // minimize (nnz(row)-1)*(nnz(col)-1).
        int best_r = -1, best_c = -1;
        long long best_score = -1;
        bool best_unit = false;
        for (int c = 0; c < ncols; ++c) {
            if (!col_live[static_cast<size_t>(c)]) continue;
            for (int r : e.col_rows[static_cast<size_t>(c)]) {
                const auto& row = e.rows[static_cast<size_t>(r)];
                auto it = row.find(c);
                const bool unit = (it->second == 1 || it->second == -1);
                const long long score =
                    (static_cast<long long>(row.size()) - 1) *
                    (static_cast<long long>(e.col_rows[static_cast<size_t>(c)].size()) - 1);
                if (best_r < 0 || (unit && !best_unit) || (unit == best_unit && score < best_score)) {
                    best_r = r;
                    best_c = c;
                    best_score = score;
                    best_unit = unit;
                    if (unit && score == 0) goto chosen;
                }
            }
        }
    chosen:
        if (best_r < 0) break;
        ++rank;

        // Eliminate column best_c using row best_r, then retire both.
        const std::unordered_map<int, Rational> pivot_row = e.rows[static_cast<size_t>(best_r)];
        const Rational pivot_val = pivot_row.at(best_c);
        std::vector<int> targets(e.col_rows[static_cast<size_t>(best_c)].begin(),
                                 e.col_rows[static_cast<size_t>(best_c)].end());
        for (int r : targets) {
            if (r == best_r) continue;
            const Rational factor = e.rows[static_cast<size_t>(r)].at(best_c) / pivot_val;
            for (const auto& [c, v] : pivot_row) {
                if (!col_live[static_cast<size_t>(c)]) continue;
                auto it = e.rows[static_cast<size_t>(r)].find(c);
                Rational nv = (it == e.rows[static_cast<size_t>(r)].end() ? Rational(0) : it->second) - factor * v;
                e.set_entry(r, c, std::move(nv));
            }
        }
        for (const auto& [c, v] : pivot_row) e.col_rows[static_cast<size_t>(c)].erase(best_r);
        e.rows[static_cast<size_t>(best_r)].clear();
        col_live[static_cast<size_t>(best_c)] = false;
        for (int r : e.col_rows[static_cast<size_t>(best_c)])
            e.rows[static_cast<size_t>(r)].erase(best_c);
        e.col_rows[static_cast<size_t>(best_c)].clear();
    }
    return rank;
}

QuotientBasis::QuotientBasis(const std::vector<QVector>& Z, const std::vector<QVector>& B) {
    ambient_dim_ = 0;
    if (!Z.empty())
        ambient_dim_ = static_cast<int>(Z[0].size());
    else if (!B.empty())
        ambient_dim_ = static_cast<int>(B[0].size());

    for (const auto& v : Z)
        if (static_cast<int>(v.size()) != ambient_dim_) throw domain_error("ragged Z vectors");
    for (const auto& v : B)
        if (static_cast<int>(v.size()) != ambient_dim_) throw domain_error("ragged B vectors");

    // Incremental elimination state: reduced independent rows with pivots.
    QMatrix reduced(0, ambient_dim_);
    std::vector<int> pivots;
    auto reduce = [&](QVector v) {
        for (int i = 0; i < reduced.rows(); ++i) {
            const int p = pivots[static_cast<size_t>(i)];
            if (v[static_cast<size_t>(p)] == 0) continue;
            const Rational factor = v[static_cast<size_t>(p)];
            for (int j = 0; j < ambient_dim_; ++j) v[static_cast<size_t>(j)] -= factor * reduced.at(i, j);
        }
        return v;
    };
    auto try_insert = [&](const QVector& v) {
        QVector red = reduce(v);
        int p = -1;
        for (int j = 0; j < ambient_dim_; ++j)
            if (red[static_cast<size_t>(j)] != 0) { p = j; break; }
        if (p < 0) return false;
        const Rational inv = Rational(1) / red[static_cast<size_t>(p)];
        for (auto& x : red) x *= inv;
        // keep rows mutually reduced
        for (int i = 0; i < reduced.rows(); ++i) {
            if (reduced.at(i, p) == 0) continue;
            const Rational factor = reduced.at(i, p);
            for (int j = 0; j < ambient_dim_; ++j) reduced.at(i, j) -= factor * red[static_cast<size_t>(j)];
        }
        reduced.append_row(red);
        pivots.push_back(p);
        return true;
    };

    // Span(B) first, keeping an independent subset as b_basis_.
    for (const auto& b : B)
        if (try_insert(b)) b_basis_.push_back(b);
    const int rank_b = reduced.rows();

    // Greedy first-pivot selection of representatives from Z, in order.
    for (size_t zi = 0; zi < Z.size(); ++zi) {
        if (try_insert(Z[zi])) {
            reps_.push_back(Z[zi]);
            rep_indices_.push_back(static_cast<int>(zi));
        }
    }
    const int rank_zb = reduced.rows();

    // span(B) ⊆ span(Z) check: rank(Z) must equal rank(Z ∪ B).
    {
        QMatrix zonly(0, ambient_dim_);
        for (const auto& z : Z) zonly.append_row(z);
        if (rref_q(zonly).rank != rank_zb) throw domain_error("span(B) is not contained in span(Z)");
    }
    (void)rank_b;

    // Precompute elimination of A = [reps | b_basis] (columns) with the
    // row-operation matrix, so coordinates() is a matrix-vector product.
    const int acols = static_cast<int>(reps_.size() + b_basis_.size());
    QMatrix a(ambient_dim_, acols);
    for (int j = 0; j < static_cast<int>(reps_.size()); ++j)
        for (int i = 0; i < ambient_dim_; ++i) a.at(i, j) = reps_[static_cast<size_t>(j)][static_cast<size_t>(i)];
    for (int j = 0; j < static_cast<int>(b_basis_.size()); ++j)
        for (int i = 0; i < ambient_dim_; ++i)
            a.at(i, j + static_cast<int>(reps_.size())) = b_basis_[static_cast<size_t>(j)][static_cast<size_t>(i)];

    QMatrix ops(ambient_dim_, ambient_dim_);
    for (int i = 0; i < ambient_dim_; ++i) ops.at(i, i) = 1;
    int next = 0;
    for (int j = 0; j < acols && next < ambient_dim_; ++j) {
        int found = -1;
        for (int i = next; i < ambient_dim_; ++i)
            if (a.at(i, j) != 0) { found = i; break; }
        if (found < 0) throw internal_error("quotient solver columns must be independent");
        if (found != next)
            for (int c = 0; c < acols; ++c) std::swap(a.at(found, c), a.at(next, c));
        if (found != next)
            for (int c = 0; c < ambient_dim_; ++c) std::swap(ops.at(found, c), ops.at(next, c));
        const Rational inv = Rational(1) / a.at(next, j);
        for (int c = 0; c < acols; ++c) a.at(next, c) *= inv;
        for (int c = 0; c < ambient_dim_; ++c) ops.at(next, c) *= inv;
        for (int i = 0; i < ambient_dim_; ++i) {
            if (i == next || a.at(i, j) == 0) continue;
            const Rational factor = a.at(i, j);
            for (int c = 0; c < acols; ++c) a.at(i, c) -= factor * a.at(next, c);
            for (int c = 0; c < ambient_dim_; ++c) ops.at(i, c) -= factor * ops.at(next, c);
        }
        rref_pivots_.push_back(j);
        ++next;
    }
    rref_a_ = std::move(a);
    ops_ = std::move(ops);
}

QVector QuotientBasis::coordinates(const QVector& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_) throw domain_error("vector dimension mismatch");
    // w = ops * v; rows past the pivot count must vanish for consistency.
    QVector w(static_cast<size_t>(ambient_dim_), Rational(0));
    for (int i = 0; i < ambient_dim_; ++i) {
        Rational s = 0;
        for (int j = 0; j < ambient_dim_; ++j)
            if (ops_.at(i, j) != 0 && v[static_cast<size_t>(j)] != 0) s += ops_.at(i, j) * v[static_cast<size_t>(j)];
        w[static_cast<size_t>(i)] = std::move(s);
    }
    const int rank = static_cast<int>(rref_pivots_.size());
    for (int i = rank; i < ambient_dim_; ++i)
        if (w[static_cast<size_t>(i)] != 0) throw domain_error("vector lies outside span(Z)");

    QVector coords(reps_.size(), Rational(0));
    for (int i = 0; i < rank; ++i) {
        const int col = rref_pivots_[static_cast<size_t>(i)];
        if (col < static_cast<int>(reps_.size())) coords[static_cast<size_t>(col)] = w[static_cast<size_t>(i)];
    }
    return coords;
}

}  // namespace retorix
