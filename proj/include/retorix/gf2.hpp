#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retorix/errors.hpp"

namespace retorix {

class SimplicialComplex;

// All-ones mask for m bits, m <= 64.
inline uint64_t mask_all(int m) {
    if (m <= 0) return 0;
    if (m >= 64) return ~uint64_t{0};
    return (uint64_t{1} << m) - 1;
}

inline int popcount64(uint64_t x) { return std::popcount(x); }

// A GF(2) vector of length m <= 64, identified with the subset
// {i in [m] : bit (i-1) set}. Addition is XOR = symmetric difference.
class Gf2Vector {
public:
    Gf2Vector() : len_(0), bits_(0) {}
    Gf2Vector(int len, uint64_t bits);

    static Gf2Vector zero(int len) { return Gf2Vector(len, 0); }
    static Gf2Vector unit(int len, int vertex);  // e_vertex, 1-based
    static Gf2Vector from_vertices(int len, const std::vector<int>& verts);

    int length() const { return len_; }
    uint64_t bits() const { return bits_; }
    bool get(int vertex) const { return (bits_ >> (vertex - 1)) & 1; }  // 1-based
    int weight() const { return popcount64(bits_); }
    bool is_zero() const { return bits_ == 0; }

    Gf2Vector operator^(const Gf2Vector& o) const;
    Gf2Vector operator&(const Gf2Vector& o) const;
    bool operator==(const Gf2Vector& o) const = default;
    bool operator<(const Gf2Vector& o) const { return bits_ < o.bits_; }

    // parity of |this ∩ other|
    int dot(const Gf2Vector& o) const { return popcount64(bits_ & o.bits_) & 1; }

    std::vector<int> vertices() const;            // ascending, 1-based
    std::string to_string() const;                // "0101...", char i = vertex i

    static Gf2Vector parse(const std::string& s);  // from "0101..."

private:
    int len_;
    uint64_t bits_;
};

struct Gf2Rref {
    int rank = 0;
    std::vector<Gf2Vector> reduced;     // nonzero RREF rows, in pivot order
    std::vector<int> pivot_cols;        // 1-based
    std::vector<Gf2Vector> kernel_basis;
};

// q x m matrix over GF(2); q = 0 (the empty matrix) is legal and yields
// the trivial row space {0}.
class Gf2Matrix {
public:
    Gf2Matrix() : cols_(0) {}
    explicit Gf2Matrix(int cols) : cols_(validate_cols(cols)) {}
    Gf2Matrix(int cols, std::vector<Gf2Vector> rows);
    Gf2Matrix(const std::vector<std::vector<int>>& entries);  // rows of 0/1

    static Gf2Matrix identity(int m);
    static Gf2Matrix from_rows(int cols, const std::vector<uint64_t>& rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const Gf2Vector& row(int i) const { return rows_[i]; }  // 0-based index
    const std::vector<Gf2Vector>& row_vectors() const { return rows_; }
    bool get(int i, int j) const { return (rows_[i].bits() >> (j - 1)) & 1; }  // j 1-based
    uint64_t column_bits(int j) const;  // column j (1-based) packed over rows

    bool operator==(const Gf2Matrix& o) const = default;

    std::string to_text() const;  // one row per line, '0'/'1'

private:
    static int validate_cols(int cols);
    int cols_;
    std::vector<Gf2Vector> rows_;
};

Gf2Rref rref(const Gf2Matrix& m);
int rank(const Gf2Matrix& m);

// All 2^rank(Λ) row-space elements, deduplicated and sorted as integers
// (subset masks); always contains 0. Guard: rank <= 24.
std::vector<Gf2Vector> row_space(const Gf2Matrix& lambda);

constexpr int kRowSpaceRankGuard = 24;

struct CharacteristicCheck {
    bool ok = true;
    std::optional<std::vector<int>> offending_face;  // minimal size, 1-based
};

// Non-singularity over K: the columns Λ(i), i in σ, are linearly independent
// for every face σ. Faces are scanned in increasing dimension so the
// reported offending face has minimal size.
CharacteristicCheck is_characteristic(const SimplicialComplex& K, const Gf2Matrix& lambda);

// Parse a matrix from plain text (one row per line, 0/1 with optional
// separators) or an inline JSON array [[0,1],...].
Gf2Matrix parse_gf2_matrix(const std::string& text);

}  // namespace retorix
