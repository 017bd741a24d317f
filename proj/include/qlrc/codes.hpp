#ifndef QLRC_CODES_HPP
#define QLRC_CODES_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace qlrc {

enum class DistanceMethod { automatic, full_enum, column_dependency };

// Immutable linear code, held as a canonical-RREF generator matrix.
class LinearCode {
public:
    TowerPtr tower;
    int64_t field_order = 0;
    int n = 0;
    GFMatrix generator;  // canonical RREF, zero rows stripped

    std::optional<int64_t> distance;  // cached minimum distance
    std::string distance_method;      // "verified" or "predicted"

    LinearCode() = default;

    explicit LinearCode(const GFMatrix& gen)
        : tower(gen.tower), field_order(gen.field_order), n(gen.cols),
          generator(canonical_rref(gen)) {}

    int dim() const { return generator.rows; }

    bool operator==(const LinearCode& o) const {
        return field_order == o.field_order && n == o.n && generator == o.generator;
    }

    static LinearCode full_space(TowerPtr t, int64_t field, int n) {
        GFMatrix G(std::move(t), field, n, n);
        for (int i = 0; i < n; ++i) G.at(i, i) = 1;
        return LinearCode(G);
    }

    static LinearCode zero_code(TowerPtr t, int64_t field, int n) {
        return LinearCode(GFMatrix(std::move(t), field, 0, n));
    }
};

inline LinearCode euclidean_dual(const LinearCode& C) {
    GFMatrix K = kernel(C.generator);
    K.field_order = C.field_order;
    return LinearCode(K);
}

namespace detail {
inline int64_t exact_sqrt(int64_t x) {
    int64_t r = (int64_t)std::llround(std::sqrt((double)x));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x ? r : -1;
}
} // namespace detail

// Hermitian dual over F_{t^2}: Euclidean kernel of the entrywise t-th power
// of the generator.
inline LinearCode hermitian_dual(const LinearCode& C) {
    int64_t t = detail::exact_sqrt(C.field_order);
    if (t < 0) throw field_not_square_error("Hermitian dual needs a square field order");
    GFMatrix G = C.generator;
    for (auto& e : G.entries) e = C.tower->pow(e, t);
    GFMatrix K = kernel(G);
    K.field_order = C.field_order;
    return LinearCode(K);
}

inline LinearCode dual(const LinearCode& C, DualityMode mode) {
    return mode == DualityMode::hermitian ? hermitian_dual(C) : euclidean_dual(C);
}

namespace detail {
inline void check_index_set(const std::vector<int>& T, int n) {
    if (T.empty()) throw empty_index_set_error("index set must be nonempty");
    for (int j : T)
        if (j < 0 || j >= n) throw index_out_of_range_error("coordinate index out of range");
}
} // namespace detail

// Projection of all codewords onto the coordinates in T (0-indexed).
inline LinearCode puncture(const LinearCode& C, const std::vector<int>& T) {
    detail::check_index_set(T, C.n);
    GFMatrix G(C.tower, C.field_order, C.dim(), (int)T.size());
    for (int i = 0; i < C.dim(); ++i)
        for (int j = 0; j < (int)T.size(); ++j) G.at(i, j) = C.generator.at(i, T[j]);
    return LinearCode(G);
}

// Projection onto T of the codewords whose support lies inside T.
inline LinearCode shorten(const LinearCode& C, const std::vector<int>& T) {
    detail::check_index_set(T, C.n);
    std::vector<bool> in_T(C.n, false);
    for (int j : T) in_T[j] = true;
    std::vector<int> comp;
    for (int j = 0; j < C.n; ++j)
        if (!in_T[j]) comp.push_back(j);
    if (comp.empty()) return puncture(C, T);

    // messages m with (mG) vanishing outside T: left kernel of G restricted
    // to the complement columns
    GFMatrix A(C.tower, C.field_order, (int)comp.size(), C.dim());
    for (int i = 0; i < C.dim(); ++i)
        for (int j = 0; j < (int)comp.size(); ++j) A.at(j, i) = C.generator.at(i, comp[j]);
    GFMatrix K = kernel(A);  // rows = messages
    GFMatrix G(C.tower, C.field_order, K.rows, (int)T.size());
    const GaloisTower& F = *C.tower;
    for (int r = 0; r < K.rows; ++r)
        for (int j = 0; j < (int)T.size(); ++j) {
            int64_t acc = 0;
            for (int i = 0; i < C.dim(); ++i)
                acc = F.add(acc, F.mul(K.at(r, i), C.generator.at(i, T[j])));
            G.at(r, j) = acc;
        }
    return LinearCode(G);
}

namespace detail {

// e with sub^e = field; throws if incompatible.
inline int relative_degree(int64_t field, int64_t sub) {
    int64_t t = sub;
    int e = 1;
    while (t < field) { t *= sub; ++e; }
    if (t != field) throw not_a_subfield_error("not a subfield of the code's field");
    return e;
}

// Dual basis of {1, g, ..., g^{e-1}} for F_{big} over F_{sub}, via inverting
// the trace Gram matrix.
inline std::vector<int64_t> dual_basis(const GaloisTower& F, int64_t sub) {
    int e = F.subfield_degree(sub);
    int64_t g = F.big_order > 2 ? F.generator().code : 1;
    std::vector<int64_t> basis(e);
    for (int t = 0; t < e; ++t) basis[t] = F.pow(g, t);

    // Gram matrix T_{ij} = Tr(b_i b_j), inverted by Gauss-Jordan.
    std::vector<std::vector<int64_t>> T(e, std::vector<int64_t>(2 * e, 0));
    for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) T[i][j] = F.trace(F.mul(basis[i], basis[j]), sub);
        T[i][e + i] = 1;
    }
    for (int col = 0; col < e; ++col) {
        int sel = -1;
        for (int i = col; i < e; ++i)
            if (T[i][col] != 0) { sel = i; break; }
        if (sel < 0) throw error("trace form is degenerate");  // cannot happen for separable extensions
        std::swap(T[col], T[sel]);
        int64_t piv = F.inv(T[col][col]);
        for (int j = 0; j < 2 * e; ++j) T[col][j] = F.mul(T[col][j], piv);
        for (int i = 0; i < e; ++i) {
            if (i == col || T[i][col] == 0) continue;
            int64_t f = T[i][col];
            for (int j = 0; j < 2 * e; ++j) T[i][j] = F.sub(T[i][j], F.mul(f, T[col][j]));
        }
    }
    std::vector<int64_t> dual(e, 0);
    for (int t = 0; t < e; ++t)
        for (int j = 0; j < e; ++j) dual[t] = F.add(dual[t], F.mul(T[t][e + j], basis[j]));
    return dual;
}

} // namespace detail

// Codewords of C with all coordinates in F_{target}, as a code over
// F_{target}: the parity constraints of C are expanded over an
// F_{target}-basis of the big field and the joint kernel is taken.
inline LinearCode subfield_subcode(const LinearCode& C, int64_t target) {
    const GaloisTower& F = *C.tower;
    int e = detail::relative_degree(C.field_order, target);
    if (e == 1) return C;
    if (C.field_order != F.big_order)
        throw not_a_subfield_error("subfield subcode is taken from the tower's big field");

    auto dualb = detail::dual_basis(F, target);
    GFMatrix H = kernel(C.generator);
    GFMatrix X(C.tower, target, H.rows * e, C.n);
    for (int i = 0; i < H.rows; ++i)
        for (int t = 0; t < e; ++t)
            for (int j = 0; j < C.n; ++j)
                X.at(i * e + t, j) = F.trace(F.mul(H.at(i, j), dualb[t]), target);
    GFMatrix K = kernel(X);
    K.field_order = target;
    return LinearCode(K);
}

// Componentwise image of C under the trace from the big field to
// F_{target}, as an F_{target}-linear code. The image is spanned by the
// traces of b_t * g_i, b_t running over a basis of C's field over the
// target (scalar multiples by C's field exhaust the span).
inline LinearCode trace_code(const LinearCode& C, int64_t target) {
    const GaloisTower& F = *C.tower;
    int e = detail::relative_degree(C.field_order, target);
    int64_t g_sub = C.field_order == 2 ? 1 : F.from_log((F.big_order - 1) / (C.field_order - 1)).code;
    GFMatrix G(C.tower, target, C.dim() * e, C.n);
    for (int i = 0; i < C.dim(); ++i)
        for (int t = 0; t < e; ++t)
            for (int j = 0; j < C.n; ++j)
                G.at(i * e + t, j) = F.trace(F.mul(F.pow(g_sub, t), C.generator.at(i, j)), target);
    return LinearCode(G);
}

namespace detail {

// Smallest w <= cap such that some w columns of H are linearly dependent;
// 0 if none. H's zero-column case returns 1.
inline int smallest_dependent_columns(const GFMatrix& H, int cap) {
    const GaloisTower& F = *H.tower;
    int n = H.cols;
    for (int w = 1; w <= cap && w <= n; ++w) {
        std::vector<int> idx(w);
        for (int i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            // rank of the selected columns
            std::vector<std::vector<int64_t>> A(H.rows, std::vector<int64_t>(w));
            for (int i = 0; i < H.rows; ++i)
                for (int j = 0; j < w; ++j) A[i][j] = H.at(i, idx[j]);
            int r = 0;
            for (int c = 0; c < w && r < H.rows; ++c) {
                int sel = -1;
                for (int i = r; i < H.rows; ++i)
                    if (A[i][c] != 0) { sel = i; break; }
                if (sel < 0) continue;
                std::swap(A[r], A[sel]);
                int64_t piv = F.inv(A[r][c]);
                for (int j = c; j < w; ++j) A[r][j] = F.mul(A[r][j], piv);
                for (int i = r + 1; i < H.rows; ++i) {
                    if (A[i][c] == 0) continue;
                    int64_t f = A[i][c];
                    for (int j = c; j < w; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
                }
                ++r;
            }
            if (r < w) return w;
            // next combination
            int i = w - 1;
            while (i >= 0 && idx[i] == n - w + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return 0;
}

inline double enum_cost(const LinearCode& C) {
    return std::pow((double)C.field_order, (double)C.dim());
}

// Exhaustive minimum weight over all nonzero messages.
inline int64_t min_weight_full_enum(const LinearCode& C) {
    const GaloisTower& F = *C.tower;
    auto elems = F.subfield_element_codes(C.field_order);
    int k = C.dim(), n = C.n;
    std::vector<int> digit(k, 0);
    std::vector<int64_t> word(n, 0);
    int64_t best = n + 1;
    while (true) {
        // odometer step; word is updated by the delta of the changed digit
        int pos = 0;
        while (pos < k && digit[pos] == (int)elems.size() - 1) {
            int64_t delta = F.sub(elems[0], elems[digit[pos]]);
            for (int j = 0; j < n; ++j)
                word[j] = F.add(word[j], F.mul(delta, C.generator.at(pos, j)));
            digit[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        int64_t delta = F.sub(elems[digit[pos] + 1], elems[digit[pos]]);
        for (int j = 0; j < n; ++j)
            word[j] = F.add(word[j], F.mul(delta, C.generator.at(pos, j)));
        ++digit[pos];
        int64_t wt = 0;
        for (int j = 0; j < n; ++j)
            if (word[j] != 0) ++wt;
        if (wt > 0 && wt < best) {
            best = wt;
            if (best == 1) break;
        }
    }
    return best;
}

} // namespace detail

constexpr double kFullEnumHardCap = 1e8;   // spec feasibility guard
constexpr double kFullEnumCheapCap = 4e6;  // below this, enumeration is the default
constexpr int kColumnDependencyCap = 6;

// Exact minimum distance. full_enum walks all messages; column_dependency
// finds the smallest dependent column set of a parity-check matrix. auto
// picks the cheaper feasible route and cross-checks when both are cheap.
inline int64_t min_distance(const LinearCode& C, DistanceMethod method = DistanceMethod::automatic) {
    if (C.dim() == 0) throw zero_code_error("zero code has no minimum distance");

    auto by_columns = [&](int cap) -> int {
        GFMatrix H = euclidean_dual(C).generator;
        if (H.rows == 0) return 1;  // full space
        return detail::smallest_dependent_columns(H, cap);
    };

    switch (method) {
        case DistanceMethod::full_enum: {
            if (detail::enum_cost(C) > kFullEnumHardCap)
                throw infeasible_error("full enumeration exceeds the 10^8 message cap");
            return detail::min_weight_full_enum(C);
        }
        case DistanceMethod::column_dependency: {
            int d = by_columns(kColumnDependencyCap);
            if (d == 0) throw infeasible_error("no dependent column set of size <= 6");
            return d;
        }
        case DistanceMethod::automatic: {
            double cost = detail::enum_cost(C);
            if (cost <= kFullEnumCheapCap) {
                int64_t d = detail::min_weight_full_enum(C);
                if (d <= kColumnDependencyCap) {
                    int dc = by_columns(kColumnDependencyCap);
                    if (dc != d) throw verification_mismatch_error("distance oracles disagree");
                }
                return d;
            }
            int d = by_columns(kColumnDependencyCap);
            if (d != 0) return d;
            if (cost <= kFullEnumHardCap) return detail::min_weight_full_enum(C);
            throw infeasible_error("minimum distance out of reach for both oracles");
        }
    }
    throw error("unreachable");
}

// True iff every nonzero codeword has weight > w: all column subsets of the
// parity-check matrix of size <= w are independent. Exact, and far cheaper
// than a full enumeration when only a lower bound is needed.
inline bool min_weight_exceeds(const LinearCode& C, int w) {
    if (C.dim() == 0) return true;
    GFMatrix H = euclidean_dual(C).generator;
    if (H.rows == 0) return w < 1;
    return detail::smallest_dependent_columns(H, w) == 0;
}

// All codewords; test oracle for tiny codes only.
inline std::vector<std::vector<int64_t>> all_codewords(const LinearCode& C) {
    if (detail::enum_cost(C) > 2e6) throw infeasible_error("codeword list too large");
    const GaloisTower& F = *C.tower;
    auto elems = F.subfield_element_codes(C.field_order);
    int k = C.dim();
    std::vector<std::vector<int64_t>> out;
    std::vector<int> digit(k, 0);
    while (true) {
        std::vector<int64_t> word(C.n, 0);
        for (int i = 0; i < k; ++i) {
            int64_t c = elems[digit[i]];
            if (c == 0) continue;
            for (int j = 0; j < C.n; ++j)
                word[j] = F.add(word[j], F.mul(c, C.generator.at(i, j)));
        }
        out.push_back(std::move(word));
        int pos = 0;
        while (pos < k && digit[pos] == (int)elems.size() - 1) digit[pos++] = 0;
        if (pos == k) break;
        ++digit[pos];
    }
    return out;
}

} // namespace qlrc

#endif
