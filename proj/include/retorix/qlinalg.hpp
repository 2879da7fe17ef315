#pragma once

#include <vector>

#include "retorix/errors.hpp"
#include "retorix/rational.hpp"

namespace retorix {

// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    static QMatrix from_rows(const std::vector<QVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    QVector row(int i) const;
    void append_row(const QVector& r);

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

struct QRref {
    int rank = 0;
    QMatrix reduced;
    std::vector<int> pivot_cols;  // 0-based
};

// Deterministic reduced row echelon form over Q: pivot = first row with a
// nonzero entry in the first unresolved column. No magnitude pivoting, so
// representatives downstream are reproducible across platforms.
QRref rref_q(const QMatrix& m);

// Basis of {x : Mx = 0}, one vector per free column, ascending.
std::vector<QVector> kernel_basis_q(const QMatrix& m);

// Exact rank of a sparse matrix given as columns of (row, value) entries.
// Elimination prefers ±1 pivots with low fill, so coboundary-style inputs
// stay integral; an arbitrary rational pivot is used only when no unit
// entry remains.
int sparse_rank_q(int rows, std::vector<std::vector<std::pair<int, Rational>>> columns);

// A fixed basis of span(Z)/span(B) together with the coordinate map.
// Representatives are chosen greedily from Z in order (first-pivot rule);
// they are original Z vectors, not reduced combinations.
class QuotientBasis {
public:
    QuotientBasis() = default;
    // Requires span(B) ⊆ span(Z); otherwise throws domain_error.
    QuotientBasis(const std::vector<QVector>& Z, const std::vector<QVector>& B);

    int dimension() const { return static_cast<int>(reps_.size()); }
    const std::vector<QVector>& representatives() const { return reps_; }
    const std::vector<int>& representative_indices() const { return rep_indices_; }

    // Coordinates of [v] in the representative basis, for v in span(Z).
    // Throws domain_error if v lies outside span(Z).
    QVector coordinates(const QVector& v) const;

private:
    int ambient_dim_ = 0;
    std::vector<QVector> reps_;
    std::vector<int> rep_indices_;  // positions in the Z list
    std::vector<QVector> b_basis_;  // independent spanning subset of B
    // Elimination of the column matrix A = [reps | b_basis], precomputed so
    // repeated coordinate queries are cheap: ops_ * A = rref_a_.
    QMatrix rref_a_;
    std::vector<int> rref_pivots_;
    QMatrix ops_;
};

}  // namespace retorix
