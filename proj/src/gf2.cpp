#include "retorix/gf2.hpp"

#include <algorithm>
#include <sstream>

#include "retorix/complex.hpp"

namespace retorix {

Gf2Vector::Gf2Vector(int len, uint64_t bits) : len_(len), bits_(bits) {
    if (len < 0 || len > 64) throw capacity_error("GF(2) vector length must be in [0, 64]");
    bits_ &= mask_all(len);
}

Gf2Vector Gf2Vector::unit(int len, int vertex) {
    if (vertex < 1 || vertex > len) throw domain_error("unit vector index out of range");
    return Gf2Vector(len, uint64_t{1} << (vertex - 1));
}

Gf2Vector Gf2Vector::from_vertices(int len, const std::vector<int>& verts) {
    uint64_t bits = 0;
    for (int v : verts) {
        if (v < 1 || v > len) throw domain_error("vertex out of range");
        bits |= uint64_t{1} << (v - 1);
    }
    return Gf2Vector(len, bits);
}

Gf2Vector Gf2Vector::operator^(const Gf2Vector& o) const {
    if (len_ != o.len_) throw domain_error("GF(2) vector length mismatch");
    return Gf2Vector(len_, bits_ ^ o.bits_);
}

Gf2Vector Gf2Vector::operator&(const Gf2Vector& o) const {
    if (len_ != o.len_) throw domain_error("GF(2) vector length mismatch");
    return Gf2Vector(len_, bits_ & o.bits_);
}

std::vector<int> Gf2Vector::vertices() const {
    std::vector<int> out;
    for (int i = 1; i <= len_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::string Gf2Vector::to_string() const {
    std::string s(static_cast<size_t>(len_), '0');
    for (int i = 1; i <= len_; ++i)
        if (get(i)) s[static_cast<size_t>(i - 1)] = '1';
    return s;
}

Gf2Vector Gf2Vector::parse(const std::string& s) {
    if (s.size() > 64) throw capacity_error("bit string longer than 64");
    uint64_t bits = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            bits |= uint64_t{1} << i;
        else if (s[i] != '0')
            throw domain_error("bit string must consist of '0'/'1'");
    }
    return Gf2Vector(static_cast<int>(s.size()), bits);
}

int Gf2Matrix::validate_cols(int cols) {
    if (cols < 0 || cols > 64) throw capacity_error("GF(2) matrix must have at most 64 columns");
    return cols;
}

Gf2Matrix::Gf2Matrix(int cols, std::vector<Gf2Vector> rows) : cols_(validate_cols(cols)), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.length() != cols_) throw domain_error("row length does not match column count");
}

Gf2Matrix::Gf2Matrix(const std::vector<std::vector<int>>& entries) {
    cols_ = entries.empty() ? 0 : validate_cols(static_cast<int>(entries[0].size()));
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != cols_) throw domain_error("ragged matrix rows");
        uint64_t bits = 0;
        for (int j = 0; j < cols_; ++j) {
            if (row[j] != 0 && row[j] != 1) throw domain_error("matrix entries must be 0/1");
            if (row[j]) bits |= uint64_t{1} << j;
        }
        rows_.emplace_back(cols_, bits);
    }
}

Gf2Matrix Gf2Matrix::identity(int m) {
    Gf2Matrix out(m);
    for (int i = 1; i <= m; ++i) out.rows_.push_back(Gf2Vector::unit(m, i));
    return out;
}

Gf2Matrix Gf2Matrix::from_rows(int cols, const std::vector<uint64_t>& rows) {
    Gf2Matrix out(cols);
    for (uint64_t r : rows) out.rows_.emplace_back(cols, r);
    return out;
}

uint64_t Gf2Matrix::column_bits(int j) const {
    uint64_t out = 0;
    for (size_t i = 0; i < rows_.size(); ++i)
        if ((rows_[i].bits() >> (j - 1)) & 1) out |= uint64_t{1} << i;
    return out;
}

std::string Gf2Matrix::to_text() const {
    std::string out;
    for (const auto& r : rows_) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

Gf2Rref rref(const Gf2Matrix& m) {
    Gf2Rref out;
    std::vector<uint64_t> work;
    work.reserve(static_cast<size_t>(m.rows()));
    for (const auto& r : m.row_vectors()) work.push_back(r.bits());

    const int cols = m.cols();
    std::vector<int> pivots;
    size_t next = 0;
    for (int j = 0; j < cols && next < work.size(); ++j) {
        const uint64_t bit = uint64_t{1} << j;
        size_t found = work.size();
        for (size_t i = next; i < work.size(); ++i)
            if (work[i] & bit) { found = i; break; }
        if (found == work.size()) continue;
        std::swap(work[next], work[found]);
        for (size_t i = 0; i < work.size(); ++i)
            if (i != next && (work[i] & bit)) work[i] ^= work[next];
        pivots.push_back(j + 1);
        ++next;
    }

    out.rank = static_cast<int>(pivots.size());
    out.pivot_cols = pivots;
    for (size_t i = 0; i < pivots.size(); ++i) out.reduced.emplace_back(cols, work[i]);

    // Kernel basis: one vector per free column, ascending.
    std::vector<bool> is_pivot(static_cast<size_t>(cols) + 1, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int j = 1; j <= cols; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        uint64_t v = uint64_t{1} << (j - 1);
        for (size_t i = 0; i < pivots.size(); ++i)
            if ((work[i] >> (j - 1)) & 1) v |= uint64_t{1} << (pivots[i] - 1);
        out.kernel_basis.emplace_back(cols, v);
    }
    return out;
}

int rank(const Gf2Matrix& m) { return rref(m).rank; }

std::vector<Gf2Vector> row_space(const Gf2Matrix& lambda) {
    Gf2Rref r = rref(lambda);
    if (r.rank > kRowSpaceRankGuard)
        throw capacity_error("row space enumeration needs rank <= " + std::to_string(kRowSpaceRankGuard));
    const size_t count = size_t{1} << r.rank;
    std::vector<uint64_t> sums(count, 0);
    for (int i = 0; i < r.rank; ++i) {
        const size_t block = size_t{1} << i;
        for (size_t s = 0; s < block; ++s) sums[block + s] = sums[s] ^ r.reduced[static_cast<size_t>(i)].bits();
    }
    std::sort(sums.begin(), sums.end());
    std::vector<Gf2Vector> out;
    out.reserve(count);
    for (uint64_t s : sums) out.emplace_back(lambda.cols(), s);
    return out;
}

namespace {

// Rank of a set of column vectors packed as bit masks over the rows.
bool columns_independent(std::vector<uint64_t> cols) {
    for (size_t i = 0; i < cols.size(); ++i) {
        uint64_t v = cols[i];
        if (v == 0) return false;
        const uint64_t low = v & (~v + 1);
        for (size_t j = i + 1; j < cols.size(); ++j)
            if (cols[j] & low) cols[j] ^= v;
    }
    return true;
}

}  // namespace

CharacteristicCheck is_characteristic(const SimplicialComplex& K, const Gf2Matrix& lambda) {
    if (lambda.cols() != K.vertex_count())
        throw domain_error("characteristic matrix must have one column per vertex");
    CharacteristicCheck out;
    std::vector<uint64_t> col_cache(static_cast<size_t>(K.vertex_count()) + 1, 0);
    for (int j = 1; j <= K.vertex_count(); ++j) col_cache[static_cast<size_t>(j)] = lambda.column_bits(j);

    for (int card = 1; card <= K.top_card(); ++card) {
        for (uint64_t face : K.faces_of_card(card)) {
            std::vector<uint64_t> cols;
            uint64_t rest = face;
            while (rest) {
                int v = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                cols.push_back(col_cache[static_cast<size_t>(v)]);
            }
            if (!columns_independent(std::move(cols))) {
                out.ok = false;
                out.offending_face = Gf2Vector(K.vertex_count(), face).vertices();
                return out;
            }
        }
    }
    return out;
}

Gf2Matrix parse_gf2_matrix(const std::string& text) {
    // Inline JSON form.
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        std::vector<std::vector<int>> rows;
        std::vector<int> current;
        bool in_inner = false;
        for (size_t i = first + 1; i < text.size(); ++i) {
            char c = text[i];
            if (c == '[') {
                in_inner = true;
                current.clear();
            } else if (c == ']') {
                if (in_inner) {
                    rows.push_back(current);
                    in_inner = false;
                }
            } else if (c == '0' || c == '1') {
                if (!in_inner) throw domain_error("malformed matrix JSON");
                current.push_back(c - '0');
            } else if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                continue;
            } else {
                throw domain_error("unexpected character in matrix JSON");
            }
        }
        return Gf2Matrix(rows);
    }

    // Plain text: one row per line, 0/1 with optional spaces.
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> row;
        for (char c : line) {
            if (c == '0' || c == '1')
                row.push_back(c - '0');
            else if (c != ' ' && c != '\t' && c != '\r')
                throw domain_error("matrix rows must consist of 0/1");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return Gf2Matrix(rows);
}

}  // namespace retorix
