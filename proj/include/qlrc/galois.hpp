#ifndef QLRC_GALOIS_HPP
#define QLRC_GALOIS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "errors.hpp"

namespace qlrc {

enum class DualityMode { euclidean, hermitian };

class GaloisTower;
using TowerPtr = std::shared_ptr<const GaloisTower>;

// Element of F_{q^s}, identified by its integer code: the base-p digit
// vector of its coordinates in the polynomial basis {1, g, ..., g^{m-1}}.
struct FieldElement {
    const GaloisTower* tower = nullptr;
    int64_t code = 0;

    FieldElement() = default;
    FieldElement(const GaloisTower* t, int64_t c) : tower(t), code(c) {}

    bool is_zero() const { return code == 0; }
    bool operator==(const FieldElement& o) const { return code == o.code; }
    bool operator!=(const FieldElement& o) const { return code != o.code; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(int64_t e) const;
    FieldElement frobenius(int k) const;    // x -> x^{p^k}
    FieldElement conj(int64_t t) const;     // x -> x^t (t a subfield order)
};

// The field chain F_p <= F_q <= F_{q^s}, with all arithmetic done in the
// big field through discrete log/antilog tables. frak_q is q in Euclidean
// mode and q^2 in Hermitian mode (which requires s even).
class GaloisTower : public std::enable_shared_from_this<GaloisTower> {
public:
    int64_t p;          // characteristic
    int64_t q;          // base order, q = p^q_exponent
    int q_exponent;
    int s;              // extension degree over F_q
    DualityMode mode;
    int64_t frak_q;     // working subfield order
    int64_t big_order;  // q^s
    int m;              // degree of the big field over F_p
    std::vector<int64_t> prim_poly;  // c_0..c_{m-1} of f = x^m + sum c_i x^i

    static constexpr int64_t kMaxOrder = int64_t(1) << 20;

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement generator() const { return {this, antilog_[1]}; }
    FieldElement element(int64_t code) const {
        if (code < 0 || code >= big_order) throw error("element code out of range");
        return {this, code};
    }
    FieldElement from_log(int64_t k) const {
        int64_t n = big_order - 1;
        return {this, antilog_[((k % n) + n) % n]};
    }

    int64_t log(int64_t code) const {
        if (code == 0) throw division_by_zero_error("log of zero");
        return log_[code];
    }

    int64_t add(int64_t a, int64_t b) const {
        if (p == 2) return a ^ b;
        int64_t r = 0, mul = 1;
        while (a != 0 || b != 0) {
            r += ((a + b) % p) * mul;
            a /= p; b /= p; mul *= p;
        }
        return r;
    }

    int64_t neg(int64_t a) const {
        if (p == 2) return a;
        int64_t r = 0, mul = 1;
        while (a != 0) {
            int64_t d = a % p;
            r += (d == 0 ? 0 : p - d) * mul;
            a /= p; mul *= p;
        }
        return r;
    }

    int64_t sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

    int64_t mul(int64_t a, int64_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (big_order - 1)];
    }

    int64_t inv(int64_t a) const {
        if (a == 0) throw division_by_zero_error("inverse of zero");
        int64_t n = big_order - 1;
        return antilog_[(n - log_[a]) % n];
    }

    int64_t pow(int64_t a, int64_t e) const {
        int64_t n = big_order - 1;
        if (a == 0) {
            if (e == 0) return 1;  // 0^0 = 1 by the evaluation convention
            if (e < 0) throw division_by_zero_error("negative power of zero");
            return 0;
        }
        int64_t k = (log_[a] % n) * (e % n) % n;
        return antilog_[((k % n) + n) % n];
    }

    int64_t frobenius(int64_t a, int k) const {
        int64_t e = 1;
        for (int i = 0; i < k; ++i) e = e * p % (big_order - 1);
        return pow(a, e);
    }

    // Trace from F_{q^s} onto F_{sub_order}: sum of x^{sub_order^i}.
    int64_t trace(int64_t a, int64_t sub_order) const {
        int e = subfield_degree(sub_order);
        int64_t r = 0, x = a;
        for (int i = 0; i < e; ++i) {
            r = add(r, x);
            x = pow(x, sub_order);
        }
        return r;
    }

    bool in_subfield(int64_t a, int64_t sub_order) const {
        return pow(a, sub_order) == a;
    }

    // e with sub_order^e = big_order; throws if sub_order is not in the chain.
    int subfield_degree(int64_t sub_order) const {
        if (sub_order < 2) throw not_a_subfield_error("subfield order must be >= 2");
        int64_t t = sub_order;
        int e = 1;
        while (t < big_order) { t *= sub_order; ++e; }
        if (t != big_order) throw not_a_subfield_error("order does not embed in the tower");
        return e;
    }

    // All element codes of F_{sub_order}, ascending.
    std::vector<int64_t> subfield_element_codes(int64_t sub_order) const {
        subfield_degree(sub_order);
        std::vector<int64_t> out;
        out.reserve(sub_order);
        out.push_back(0);
        int64_t step = (big_order - 1) / (sub_order - 1);
        for (int64_t k = 0; k < sub_order - 1; ++k) out.push_back(antilog_[k * step % (big_order - 1)]);
        std::sort(out.begin(), out.end());
        return out;
    }

    static TowerPtr build(int64_t p, int q_exponent, int s, DualityMode mode);

private:
    std::vector<int64_t> log_;      // code -> exponent of g, log_[0] = -1
    std::vector<int64_t> antilog_;  // exponent -> code

    GaloisTower() = default;
    friend TowerPtr build_tower(int64_t, int, int, DualityMode);
};

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (tower != o.tower) throw tower_mismatch_error("elements from different towers");
    return {tower, tower->add(code, o.code)};
}
inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (tower != o.tower) throw tower_mismatch_error("elements from different towers");
    return {tower, tower->sub(code, o.code)};
}
inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (tower != o.tower) throw tower_mismatch_error("elements from different towers");
    return {tower, tower->mul(code, o.code)};
}
inline FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (tower != o.tower) throw tower_mismatch_error("elements from different towers");
    return {tower, tower->mul(code, tower->inv(o.code))};
}
inline FieldElement FieldElement::operator-() const { return {tower, tower->neg(code)}; }
inline FieldElement FieldElement::inv() const { return {tower, tower->inv(code)}; }
inline FieldElement FieldElement::pow(int64_t e) const { return {tower, tower->pow(code, e)}; }
inline FieldElement FieldElement::frobenius(int k) const { return {tower, tower->frobenius(code, k)}; }
inline FieldElement FieldElement::conj(int64_t t) const { return {tower, tower->pow(code, t)}; }

namespace detail {

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

inline TowerPtr build_tower(int64_t p, int q_exponent, int s, DualityMode mode) {
    if (!detail::is_prime(p)) throw not_prime_error("characteristic must be prime");
    if (q_exponent < 1 || s < 1) throw error("exponents must be positive");
    if (mode == DualityMode::hermitian && s % 2 != 0)
        throw hermitian_needs_even_s_error("Hermitian mode requires even s");

    auto tower = std::shared_ptr<GaloisTower>(new GaloisTower());
    tower->p = p;
    tower->q_exponent = q_exponent;
    tower->s = s;
    tower->mode = mode;
    tower->m = q_exponent * s;

    int64_t q = 1;
    for (int i = 0; i < q_exponent; ++i) {
        q *= p;
        if (q > GaloisTower::kMaxOrder) throw error("field order exceeds 2^20 cap");
    }
    tower->q = q;
    int64_t big = 1;
    for (int i = 0; i < tower->m; ++i) {
        big *= p;
        if (big > GaloisTower::kMaxOrder) throw error("field order exceeds 2^20 cap");
    }
    tower->big_order = big;
    tower->frak_q = (mode == DualityMode::hermitian) ? q * q : q;

    const int m = tower->m;
    const int64_t n = big - 1;
    std::vector<int64_t> digits(m);

    // Ascending scan over coefficient vectors (c_0, ..., c_{m-1}) for the
    // smallest monic primitive polynomial x^m + sum c_i x^i over F_p.
    // Primitivity of the root is tested directly: repeated multiplication
    // by x mod f must not return to 1 before step p^m - 1; the successful
    // scan doubles as the antilog table.
    std::vector<int64_t> antilog(n);
    std::vector<int64_t> logt(big, -1);
    bool found = false;
    for (int64_t scan = 1; scan < big && !found; ++scan) {
        int64_t t = scan;
        for (int i = 0; i < m; ++i) { digits[i] = t % p; t /= p; }
        if (digits[0] == 0) continue;  // x | f rules out primitivity

        std::vector<int64_t> cur(m, 0);
        cur[0] = 1;  // the element 1
        bool ok = true;
        for (int64_t k = 0; k < n; ++k) {
            int64_t code = 0;
            for (int i = m - 1; i >= 0; --i) code = code * p + cur[i];
            if (k > 0 && code == 1) { ok = false; break; }
            antilog[k] = code;
            // multiply by x mod f
            int64_t top = cur[m - 1];
            for (int i = m - 1; i > 0; --i)
                cur[i] = (cur[i - 1] + (p - top * digits[i] % p)) % p;
            cur[0] = (p - top * digits[0] % p) % p;
        }
        if (!ok) continue;
        found = true;
        tower->prim_poly = digits;
    }
    if (!found) throw error("no primitive polynomial found");  // unreachable for valid p, m

    for (int64_t k = 0; k < n; ++k) logt[antilog[k]] = k;
    tower->antilog_ = std::move(antilog);
    tower->log_ = std::move(logt);
    return tower;
}

inline TowerPtr GaloisTower::build(int64_t p, int q_exponent, int s, DualityMode mode) {
    return build_tower(p, q_exponent, s, mode);
}

// a = g^{(q^s-1)/N}, a primitive N-th root of unity.
inline FieldElement nth_root_of_unity(const GaloisTower& tower, int64_t N) {
    if (N <= 0 || (tower.big_order - 1) % N != 0)
        throw does_not_divide_group_order_error("N does not divide q^s - 1");
    return tower.from_log((tower.big_order - 1) / N);
}

inline FieldElement trace_to_subfield(const FieldElement& x, int64_t sub_order) {
    return {x.tower, x.tower->trace(x.code, sub_order)};
}

} // namespace qlrc

#endif
