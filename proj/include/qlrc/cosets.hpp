#ifndef QLRC_COSETS_HPP
#define QLRC_COSETS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"

namespace qlrc {

// A subset of Z_N, stored sorted and deduplicated.
struct ExponentSet {
    int64_t N = 0;
    std::vector<int64_t> elements;

    ExponentSet() = default;
    ExponentSet(int64_t modulus, std::vector<int64_t> elems) : N(modulus) {
        std::set<int64_t> s;
        for (int64_t e : elems) s.insert(((e % N) + N) % N);
        elements.assign(s.begin(), s.end());
    }

    size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
    bool contains(int64_t e) const {
        return std::binary_search(elements.begin(), elements.end(), ((e % N) + N) % N);
    }
    bool operator==(const ExponentSet& o) const { return N == o.N && elements == o.elements; }

    static ExponentSet full(int64_t N) {
        std::vector<int64_t> v(N);
        std::iota(v.begin(), v.end(), 0);
        return {N, std::move(v)};
    }
};

namespace detail {
inline void require_coprime(int64_t z, int64_t N) {
    if (std::gcd(((z % N) + N) % N, N) != 1) throw base_not_coprime_error("base not coprime to modulus");
}
} // namespace detail

// Orbit of e under multiplication by z mod N.
inline ExponentSet cyclotomic_coset(int64_t e, int64_t N, int64_t z) {
    detail::require_coprime(z, N);
    std::vector<int64_t> orbit;
    int64_t x = ((e % N) + N) % N;
    do {
        orbit.push_back(x);
        x = x * (z % N) % N;
    } while (x != orbit.front());
    return {N, std::move(orbit)};
}

// Ascending minimal representatives of all cosets mod N base z; starts at 0.
inline std::vector<int64_t> coset_representatives(int64_t N, int64_t z) {
    detail::require_coprime(z, N);
    std::vector<bool> seen(N, false);
    std::vector<int64_t> reps;
    for (int64_t e = 0; e < N; ++e) {
        if (seen[e]) continue;
        reps.push_back(e);
        int64_t x = e;
        do {
            seen[x] = true;
            x = x * (z % N) % N;
        } while (x != e);
    }
    return reps;
}

inline bool is_complete(const ExponentSet& D, int64_t z) {
    detail::require_coprime(z, D.N);
    for (int64_t e : D.elements)
        if (!D.contains(e * (z % D.N) % D.N)) return false;
    return true;
}

// Smallest z-complete superset: union of the cosets of all elements.
inline ExponentSet complete_closure(const ExponentSet& B, int64_t z) {
    detail::require_coprime(z, B.N);
    std::vector<int64_t> out;
    for (int64_t e : B.elements) {
        auto c = cyclotomic_coset(e, B.N, z);
        out.insert(out.end(), c.elements.begin(), c.elements.end());
    }
    return {B.N, std::move(out)};
}

inline ExponentSet minkowski_sum(const ExponentSet& A, const ExponentSet& B) {
    if (A.N != B.N) throw modulus_mismatch_error("Minkowski sum needs a common modulus");
    std::vector<int64_t> out;
    out.reserve(A.size() * B.size());
    for (int64_t a : A.elements)
        for (int64_t b : B.elements) out.push_back((a + b) % A.N);
    return {A.N, std::move(out)};
}

// D_M: representatives mod M of the elements of D; M must divide N.
inline ExponentSet reduce_mod(const ExponentSet& D, int64_t M) {
    if (M <= 0 || D.N % M != 0) throw not_a_divisor_error("M must divide N");
    std::vector<int64_t> out;
    for (int64_t e : D.elements) out.push_back(e % M);
    return {M, std::move(out)};
}

// -D_M = {M - i mod M}.
inline ExponentSet negate_mod(const ExponentSet& D, int64_t M) {
    if (M <= 0 || D.N % M != 0) throw not_a_divisor_error("M must divide N");
    std::vector<int64_t> out;
    for (int64_t e : D.elements) out.push_back(((M - e % M) % M + M) % M);
    return {M, std::move(out)};
}

// -D_M^q = {M - q*i mod M}.
inline ExponentSet negate_q_mod(const ExponentSet& D, int64_t M, int64_t q) {
    if (M <= 0 || D.N % M != 0) throw not_a_divisor_error("M must divide N");
    std::vector<int64_t> out;
    for (int64_t e : D.elements) out.push_back((((M - q * (e % M)) % M) + M) % M);
    return {M, std::move(out)};
}

// The multiples of n in Z_N: {0, n, 2n, ..., N-n}.
inline ExponentSet a_set(int64_t n, int64_t N) {
    if (n <= 0 || N % n != 0) throw not_a_divisor_error("n must divide N");
    std::vector<int64_t> out;
    for (int64_t x = 0; x < N; x += n) out.push_back(x);
    return {N, std::move(out)};
}

// Union of the cosets of the representatives alpha_t .. alpha_{t'}.
inline ExponentSet delta_range(int t, int t_prime, int64_t N, int64_t z) {
    auto reps = coset_representatives(N, z);
    if (t < 0 || t_prime < t || t_prime >= (int)reps.size())
        throw index_out_of_range_error("representative index out of range");
    std::vector<int64_t> out;
    for (int ell = t; ell <= t_prime; ++ell) {
        auto c = cyclotomic_coset(reps[ell], N, z);
        out.insert(out.end(), c.elements.begin(), c.elements.end());
    }
    return {N, std::move(out)};
}

// Longest run of consecutive integers inside D, restricted to {1, ..., N-1};
// no cyclic wraparound credit.
inline int64_t consecutive_run(const ExponentSet& D) {
    int64_t best = 0, cur = 0, prev = -2;
    for (int64_t e : D.elements) {
        if (e == 0) continue;
        cur = (e == prev + 1) ? cur + 1 : 1;
        best = std::max(best, cur);
        prev = e;
    }
    return best;
}

inline ExponentSet set_difference(const ExponentSet& A, const ExponentSet& B) {
    if (A.N != B.N) throw modulus_mismatch_error("set difference needs a common modulus");
    std::vector<int64_t> out;
    for (int64_t e : A.elements)
        if (!B.contains(e)) out.push_back(e);
    return {A.N, std::move(out)};
}

inline ExponentSet set_intersection(const ExponentSet& A, const ExponentSet& B) {
    if (A.N != B.N) throw modulus_mismatch_error("set intersection needs a common modulus");
    std::vector<int64_t> out;
    for (int64_t e : A.elements)
        if (B.contains(e)) out.push_back(e);
    return {A.N, std::move(out)};
}

// Exponent-level dual: Z_N \ (-Delta_N) in the Euclidean case and
// Z_N \ (-Delta_N^q) in the Hermitian one. Delta must be complete for the
// mode's base.
inline ExponentSet dual_exponents(const ExponentSet& delta, bool hermitian, int64_t q) {
    int64_t base = hermitian ? q * q : q;
    if (!is_complete(delta, base)) throw not_complete_error("set is not complete for the mode's base");
    ExponentSet removed = hermitian ? negate_q_mod(delta, delta.N, q) : negate_mod(delta, delta.N);
    return set_difference(ExponentSet::full(delta.N), removed);
}

// Lift of a subset of Z_n into Z_N (same integers, larger modulus).
inline ExponentSet lift(const ExponentSet& B, int64_t N) {
    if (B.N <= 0 || N % B.N != 0) throw not_a_divisor_error("lift target must be a multiple of N");
    return {N, B.elements};
}

} // namespace qlrc

#endif
