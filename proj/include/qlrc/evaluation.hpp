#ifndef QLRC_EVALUATION_HPP
#define QLRC_EVALUATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cosets.hpp"
#include "matrix.hpp"

namespace qlrc {

enum class DomainKind { full, divisor, partial };

inline std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::full: return "full";
        case DomainKind::divisor: return "divisor";
        case DomainKind::partial: return "partial";
    }
    return "?";
}

// Evaluation points {a^i zeta_n^j : 0 <= i < lambda, 0 <= j < n}, listed in
// blocks of n sharing the a^i prefix. a is the primitive N-th root of unity
// and zeta_n = a^{N/n}. The i-th block is the i-th recovery set downstream.
struct EvaluationDomain {
    TowerPtr tower;
    int64_t N = 0;
    int64_t n = 0;
    int64_t lambda = 0;
    DomainKind kind = DomainKind::full;
    std::vector<int64_t> points;  // element codes, length lambda*n

    int64_t length() const { return lambda * n; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(lambda);
        for (int64_t i = 0; i < lambda; ++i)
            for (int64_t j = 0; j < n; ++j) out[i].push_back((int)(i * n + j));
        return out;
    }
};

inline EvaluationDomain build_domain(TowerPtr tower, int64_t N, int64_t n, int64_t lambda) {
    if (n <= 0 || N % n != 0 || (tower->big_order - 1) % N != 0)
        throw divisibility_error("need n | N | q^s - 1");
    if (lambda < 1 || lambda > N / n) throw divisibility_error("need 1 <= lambda <= N/n");
    EvaluationDomain D;
    D.tower = tower;
    D.N = N;
    D.n = n;
    D.lambda = lambda;
    if (lambda * n == N) D.kind = DomainKind::full;
    else if (N % (lambda * n) == 0) D.kind = DomainKind::divisor;
    else D.kind = DomainKind::partial;

    const GaloisTower& F = *tower;
    int64_t a = nth_root_of_unity(F, N).code;
    int64_t zeta = F.pow(a, N / n);
    D.points.reserve(lambda * n);
    for (int64_t i = 0; i < lambda; ++i) {
        int64_t prefix = F.pow(a, i);
        for (int64_t j = 0; j < n; ++j) D.points.push_back(F.mul(prefix, F.pow(zeta, j)));
    }
    return D;
}

// Generator matrix of the evaluation code <ev(X^e) : e in Delta>, rows
// ordered by ascending exponent.
inline GFMatrix evaluation_code(const ExponentSet& delta, const EvaluationDomain& D) {
    if (delta.N != D.N) throw modulus_mismatch_error("exponent modulus != domain modulus");
    const GaloisTower& F = *D.tower;
    GFMatrix G(D.tower, F.big_order, (int)delta.size(), (int)D.length());
    for (int r = 0; r < (int)delta.size(); ++r) {
        int64_t e = delta.elements[r];
        for (int64_t j = 0; j < D.length(); ++j) G.at(r, (int)j) = F.pow(D.points[j], e);
    }
    return G;
}

// Cartesian product Z_1 x ... x Z_w, where Z_1 is an evaluation domain's
// point list and the extra axes live inside F_{frak_q}. Points are
// enumerated with axis 1 fastest.
struct CartesianDomain {
    TowerPtr tower;
    EvaluationDomain axis1;
    std::vector<std::vector<int64_t>> extra_axes;  // element codes per axis

    int64_t beta() const {
        int64_t b = axis1.length();
        for (const auto& z : extra_axes) b *= (int64_t)z.size();
        return b;
    }
};

inline CartesianDomain build_cartesian(const EvaluationDomain& axis1,
                                       const std::vector<std::vector<int64_t>>& extra_axes) {
    const GaloisTower& F = *axis1.tower;
    for (const auto& z : extra_axes) {
        if (z.size() < 2) throw axis_error("each extra axis needs at least 2 points");
        if ((int64_t)z.size() >= F.frak_q) throw axis_error("axis size must be below the working subfield order");
        for (size_t i = 0; i < z.size(); ++i) {
            if (!F.in_subfield(z[i], F.frak_q))
                throw axis_error("extra axis points must lie in the working subfield");
            for (size_t j = i + 1; j < z.size(); ++j)
                if (z[i] == z[j]) throw axis_error("axis points must be distinct");
        }
    }
    return {axis1.tower, axis1, extra_axes};
}

// Generator matrix of the monomial-Cartesian code with exponent set
// Gamma = Delta x {0..n_2-1} x ... x {0..n_w-1}. Rows are ordered with the
// first factor fastest, matching the point order.
inline GFMatrix cartesian_code(const ExponentSet& delta, const CartesianDomain& Z) {
    const GaloisTower& F = *Z.tower;
    for (int64_t e : delta.elements)
        if (e < 0) throw exponent_out_of_range_error("negative exponent");

    std::vector<int64_t> axis_sizes;
    for (const auto& z : Z.extra_axes) axis_sizes.push_back((int64_t)z.size());
    int64_t n_rows = (int64_t)delta.size();
    for (int64_t s : axis_sizes) n_rows *= s;
    int64_t n_cols = Z.beta();
    int64_t n1 = Z.axis1.length();

    GFMatrix G(Z.tower, F.big_order, (int)n_rows, (int)n_cols);
    for (int64_t r = 0; r < n_rows; ++r) {
        int64_t t = r;
        int64_t e1 = delta.elements[t % (int64_t)delta.size()];
        t /= (int64_t)delta.size();
        std::vector<int64_t> e_extra;
        for (int64_t s : axis_sizes) { e_extra.push_back(t % s); t /= s; }
        for (int64_t c = 0; c < n_cols; ++c) {
            int64_t u = c;
            int64_t val = F.pow(Z.axis1.points[u % n1], e1);
            u /= n1;
            for (size_t ax = 0; ax < axis_sizes.size(); ++ax) {
                val = F.mul(val, F.pow(Z.extra_axes[ax][u % axis_sizes[ax]], e_extra[ax]));
                u /= axis_sizes[ax];
            }
            G.at((int)r, (int)c) = val;
        }
    }
    return G;
}

} // namespace qlrc

#endif
