#ifndef QLRC_LOCALITY_HPP
#define QLRC_LOCALITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "codes.hpp"

namespace qlrc {

// Verified (r,delta) recovery structure: one recovery set per coordinate,
// each of size <= r+delta-1 with punctured distance >= delta.
struct LocalityCertificate {
    int64_t r = 0;
    int64_t delta = 0;
    std::vector<std::vector<int>> recovery_sets;  // indexed by coordinate
    std::string method;                           // "structured-blocks" | "exhaustive"
    int64_t classical_defect = -1;                // filled by the caller when (n,k,d) are known
};

namespace detail {

inline bool block_qualifies(const LinearCode& C, const std::vector<int>& J,
                            int64_t r, int64_t delta) {
    if ((int64_t)J.size() > r + delta - 1) return false;
    LinearCode P = puncture(C, J);
    if (P.dim() == 0) return false;
    return min_distance(P) >= delta;
}

} // namespace detail

// Certify (r,delta)-locality. With hint blocks, each coordinate's candidate
// recovery set is the hinted block containing it; without hints, subsets
// J containing the coordinate are searched smallest-first under a
// feasibility cap.
inline LocalityCertificate certify_locality(const LinearCode& C, int64_t r, int64_t delta,
                                            const std::vector<std::vector<int>>& hint_blocks = {}) {
    if (delta < 2) throw error("delta must be at least 2");
    if (r < 1 || r + delta - 1 > C.n) throw error("invalid (r,delta) for this length");

    LocalityCertificate cert;
    cert.r = r;
    cert.delta = delta;
    cert.recovery_sets.resize(C.n);

    if (!hint_blocks.empty()) {
        std::vector<bool> block_ok(hint_blocks.size(), false), block_checked(hint_blocks.size(), false);
        for (int i = 0; i < C.n; ++i) {
            bool covered = false;
            for (size_t b = 0; b < hint_blocks.size(); ++b) {
                const auto& J = hint_blocks[b];
                if (std::find(J.begin(), J.end(), i) == J.end()) continue;
                if (!block_checked[b]) {
                    block_checked[b] = true;
                    block_ok[b] = detail::block_qualifies(C, J, r, delta);
                }
                if (block_ok[b]) {
                    cert.recovery_sets[i] = J;
                    covered = true;
                    break;
                }
            }
            if (!covered)
                throw not_locally_recoverable_error("no qualifying block for coordinate " + std::to_string(i));
        }
        cert.method = "structured-blocks";
        return cert;
    }

    // exhaustive fallback; negative controls and tiny adversarial cases only
    int64_t max_size = r + delta - 1;
    if (C.n > 40 || max_size > 12)
        throw search_infeasible_error("exhaustive recovery-set search capped at n <= 40, |J| <= 12");
    for (int i = 0; i < C.n; ++i) {
        bool found = false;
        for (int64_t sz = delta; sz <= max_size && !found; ++sz) {
            // subsets of size sz containing i
            std::vector<int> others;
            for (int j = 0; j < C.n; ++j)
                if (j != i) others.push_back(j);
            int w = (int)sz - 1;
            std::vector<int> idx(w);
            for (int t = 0; t < w; ++t) idx[t] = t;
            while (!found) {
                std::vector<int> J = {i};
                for (int t = 0; t < w; ++t) J.push_back(others[idx[t]]);
                std::sort(J.begin(), J.end());
                if (detail::block_qualifies(C, J, r, delta)) {
                    cert.recovery_sets[i] = J;
                    found = true;
                    break;
                }
                int t = w - 1;
                while (t >= 0 && idx[t] == (int)others.size() - w + t) --t;
                if (t < 0) break;
                ++idx[t];
                for (int u = t + 1; u < w; ++u) idx[u] = idx[u - 1] + 1;
            }
        }
        if (!found)
            throw not_locally_recoverable_error("no recovery set for coordinate " + std::to_string(i));
    }
    cert.method = "exhaustive";
    return cert;
}

// (n+1) - [k + d + (ceil(k/r)-1)(delta-1)]; zero means the classical
// Singleton-like bound is met with equality.
inline int64_t classical_singleton_defect(int64_t n, int64_t k, int64_t d, int64_t r, int64_t delta) {
    int64_t ceil_kr = (k + r - 1) / r;
    return (n + 1) - (k + d + (ceil_kr - 1) * (delta - 1));
}

// (n+2) - [k + 2d + 2(ceil((n+k)/(2r))-1)(delta-1)].
inline int64_t quantum_singleton_defect(int64_t n, int64_t k, int64_t d, int64_t r, int64_t delta) {
    int64_t ceil_t = (n + k + 2 * r - 1) / (2 * r);
    return (n + 2) - (k + 2 * d + 2 * (ceil_t - 1) * (delta - 1));
}

// Direct operational check that Q'(C) is a quantum (r,delta)-LRC: for every
// recovery set J and every I inside J of size delta-1,
// sigma_I[pi_J(C^perp)] must equal sigma_I(C).
inline bool quantum_locality_criterion(const LinearCode& C, DualityMode mode,
                                       const LocalityCertificate& cert) {
    if (cert.delta < 2) throw error("delta must be at least 2");
    LinearCode D = dual(C, mode);
    // self-orthogonality: C inside its dual
    for (int i = 0; i < C.dim(); ++i) {
        std::vector<int64_t> row(C.generator.entries.begin() + (size_t)i * C.n,
                                 C.generator.entries.begin() + (size_t)(i + 1) * C.n);
        if (!in_row_space(row, D.generator))
            throw not_self_orthogonal_error("code is not self-orthogonal for the requested mode");
    }

    std::vector<std::vector<int>> sets = cert.recovery_sets;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    int w = (int)cert.delta - 1;
    for (const auto& J : sets) {
        if ((int)J.size() < w) return false;
        LinearCode PJ = puncture(D, J);
        std::vector<int> idx(w);
        for (int t = 0; t < w; ++t) idx[t] = t;
        while (true) {
            std::vector<int> I_local(idx.begin(), idx.end());     // positions within J
            std::vector<int> I_global;
            for (int t : idx) I_global.push_back(J[t]);

            LinearCode lhs = shorten(PJ, I_local);
            LinearCode rhs = shorten(C, I_global);
            if (!(lhs == rhs)) return false;

            int t = w - 1;
            while (t >= 0 && idx[t] == (int)J.size() - w + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < w; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return true;
}

} // namespace qlrc

#endif
