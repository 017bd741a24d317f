#ifndef QLRC_MATRIX_HPP
#define QLRC_MATRIX_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "galois.hpp"

namespace qlrc {

// Dense matrix over one field of a tower. Entries are element codes; all
// arithmetic goes through the tower's log tables.
class GFMatrix {
public:
    TowerPtr tower;
    int64_t field_order = 0;
    int rows = 0, cols = 0;
    std::vector<int64_t> entries;  // row-major codes

    GFMatrix() = default;
    GFMatrix(TowerPtr t, int64_t field, int r, int c)
        : tower(std::move(t)), field_order(field), rows(r), cols(c), entries(size_t(r) * c, 0) {}

    int64_t& at(int i, int j) { return entries[size_t(i) * cols + j]; }
    int64_t at(int i, int j) const { return entries[size_t(i) * cols + j]; }

    bool operator==(const GFMatrix& o) const {
        return rows == o.rows && cols == o.cols && field_order == o.field_order && entries == o.entries;
    }

    bool entries_in_field() const {
        for (int64_t e : entries)
            if (!tower->in_subfield(e, field_order)) return false;
        return true;
    }

    // First line "rows cols field_order", then one line per row of codes.
    std::string export_text() const {
        std::ostringstream os;
        os << rows << ' ' << cols << ' ' << field_order << '\n';
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j);
            os << '\n';
        }
        return os.str();
    }

    static GFMatrix import_text(TowerPtr t, const std::string& text) {
        std::istringstream is(text);
        int r, c;
        int64_t field;
        if (!(is >> r >> c >> field)) throw error("bad matrix header");
        GFMatrix M(std::move(t), field, r, c);
        for (auto& e : M.entries)
            if (!(is >> e)) throw error("bad matrix body");
        return M;
    }
};

// Reduced row echelon form; pivot selection is leftmost column, topmost row.
inline GFMatrix rref(const GFMatrix& M, std::vector<int>* pivots_out = nullptr) {
    GFMatrix R = M;
    const GaloisTower& F = *R.tower;
    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < R.cols && pr < R.rows; ++pc) {
        int sel = -1;
        for (int i = pr; i < R.rows; ++i)
            if (R.at(i, pc) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = 0; j < R.cols; ++j) std::swap(R.at(sel, j), R.at(pr, j));
        int64_t piv_inv = F.inv(R.at(pr, pc));
        for (int j = pc; j < R.cols; ++j) R.at(pr, j) = F.mul(R.at(pr, j), piv_inv);
        for (int i = 0; i < R.rows; ++i) {
            if (i == pr || R.at(i, pc) == 0) continue;
            int64_t f = R.at(i, pc);
            for (int j = pc; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(pr, j)));
        }
        pivots.push_back(pc);
        ++pr;
    }
    if (pivots_out) *pivots_out = pivots;
    return R;
}

inline int rank(const GFMatrix& M) {
    std::vector<int> pivots;
    rref(M, &pivots);
    return (int)pivots.size();
}

// Canonical RREF with zero rows stripped: the equality witness for row spaces.
inline GFMatrix canonical_rref(const GFMatrix& M) {
    std::vector<int> pivots;
    GFMatrix R = rref(M, &pivots);
    GFMatrix out(R.tower, R.field_order, (int)pivots.size(), R.cols);
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < R.cols; ++j) out.at(i, j) = R.at(i, j);
    return out;
}

// Basis of the right null space {x : M x^T = 0}, one row per basis vector.
inline GFMatrix kernel(const GFMatrix& M) {
    const GaloisTower& F = *M.tower;
    std::vector<int> pivots;
    GFMatrix R = rref(M, &pivots);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < M.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    GFMatrix K(M.tower, M.field_order, (int)free_cols.size(), M.cols);
    for (int b = 0; b < (int)free_cols.size(); ++b) {
        int fc = free_cols[b];
        K.at(b, fc) = 1;
        for (int i = 0; i < (int)pivots.size(); ++i)
            K.at(b, pivots[i]) = F.neg(R.at(i, fc));
    }
    return K;
}

inline bool row_space_equal(const GFMatrix& A, const GFMatrix& B) {
    if (A.cols != B.cols || A.field_order != B.field_order)
        throw dimension_mismatch_error("incompatible shapes for row-space comparison");
    return canonical_rref(A) == canonical_rref(B);
}

inline bool in_row_space(const std::vector<int64_t>& v, const GFMatrix& M) {
    if ((int)v.size() != M.cols) throw dimension_mismatch_error("vector length != column count");
    const GaloisTower& F = *M.tower;
    std::vector<int> pivots;
    GFMatrix R = rref(M, &pivots);
    std::vector<int64_t> w = v;
    for (int i = 0; i < (int)pivots.size(); ++i) {
        int64_t f = w[pivots[i]];
        if (f == 0) continue;
        for (int j = 0; j < M.cols; ++j) w[j] = F.sub(w[j], F.mul(f, R.at(i, j)));
    }
    for (int64_t x : w)
        if (x != 0) return false;
    return true;
}

inline GFMatrix matmul(const GFMatrix& A, const GFMatrix& B) {
    if (A.cols != B.rows) throw dimension_mismatch_error("matmul shape mismatch");
    const GaloisTower& F = *A.tower;
    GFMatrix C(A.tower, A.field_order, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int64_t a = A.at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                if (B.at(k, j) != 0) C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(k, j)));
        }
    return C;
}

} // namespace qlrc

#endif
