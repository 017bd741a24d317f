// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <qlrc/families.hpp>
#include <qlrc/serialize.hpp>

using namespace qlrc;

namespace {

int failures = 0;

void run(int number, const std::string& title, const std::function<void()>& body) {
    try {
        body();
        std::printf("criterion %2d: PASS  %s\n", number, title.c_str());
    } catch (const std::exception& ex) {
        std::printf("criterion %2d: FAIL  %s: %s\n", number, title.c_str(), ex.what());
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw verification_mismatch_error(what);
}

LinearCode random_code(const TowerPtr& t, int64_t field, int k, int n, std::mt19937& rng) {
    GFMatrix G(t, field, k, n);
    std::uniform_int_distribution<int64_t> dist(0, field - 1);
    for (auto& e : G.entries) e = dist(rng);
    return LinearCode(G);
}

void criterion_1() {
    auto inst = build_family_instance({FamilyId::A, 2, 4, 3, 1, {}});
    require(inst.classical_n == 15 && inst.classical_k == 9 && inst.classical_d == 3,
            "classical parameters != [15,9,3]");
    require(inst.tower->frak_q == 4, "classical field != F_4");
    require(inst.certificate.r == 3 && inst.certificate.delta == 3 &&
                inst.certificate.method == "structured-blocks",
            "locality certificate != structured (3,3)");
    require(inst.classical_defect == 0, "classical defect != 0");
    require(inst.record.q == 2 && inst.record.n == 15 && inst.record.k == 3 && inst.record.d == 3,
            "quantum record != [[15,3,3]]_2");
    require(inst.record.quantum_defect == 0, "quantum defect != 0");
    require(inst.record.pure && inst.record.optimal, "record not pure/optimal");
    require(inst.record.d_method == "verified", "distance not oracle-verified");
    require(min_weight_exceeds(inst.inner, 3), "dis(inner) <= 3");
}

void criterion_2() {
    auto inst = build_family_instance({FamilyId::B, 5, 2, 6, 1, {}});
    require(inst.mode == DualityMode::euclidean, "mode != Euclidean");
    require(inst.classical_n == 24 && inst.classical_k == 18 && inst.classical_d == 2,
            "classical parameters != [24,18,2]");
    require(inst.certificate.r == 3 && inst.certificate.delta == 2, "locality != (3,2)");
    require(inst.record.q == 5 && inst.record.n == 24 && inst.record.k == 12 && inst.record.d == 2,
            "quantum record != [[24,12,2]]_5");
    require(inst.classical_defect == 0 && inst.record.quantum_defect == 0, "defects != 0");
}

void criterion_3() {
    for (int64_t v = 1; v <= 3; ++v) {
        auto inst = build_family_instance({FamilyId::C2, 3, 4, 2, v, {}});
        require(inst.classical_n == 16 && inst.classical_k == 16 - 2 * v &&
                    inst.classical_d == v + 1,
                "classical parameters != [16,16-2v,v+1] at v=" + std::to_string(v));
        require(min_distance(inst.outer, DistanceMethod::column_dependency) == v + 1,
                "column-dependency oracle disagrees at v=" + std::to_string(v));
        require(inst.certificate.r == 8 - v && inst.certificate.delta == v + 1,
                "locality != (8-v, v+1) at v=" + std::to_string(v));
        require(inst.record.n == 16 && inst.record.k == 16 - 4 * v && inst.record.d == v + 1,
                "quantum record != [[16,16-4v,v+1]] at v=" + std::to_string(v));
        require(inst.record.quantum_defect == 0, "quantum defect != 0 at v=" + std::to_string(v));
        // The printed qudit dimension 3 only survives at v=1. For v >= 2 the
        // subfield subcode is provably not Hermitian self-orthogonal (the
        // exponent set meets -3 times itself mod 16), so the builder keeps the
        // same [[16,16-4v,v+1]] shape via the Euclidean pairing over F_9.
        // Both the positive v=1 claim and the v>=2 refutation are checked.
        if (v == 1) {
            require(inst.mode == DualityMode::hermitian && inst.record.q == 3,
                    "v=1 instance is not a Hermitian qutrit code");
        } else {
            require(!is_dual_containing(dual(inst.inner, DualityMode::hermitian),
                                        DualityMode::hermitian),
                    "expected Hermitian refutation missing at v=" + std::to_string(v));
            require(inst.mode == DualityMode::euclidean && inst.record.q == 9,
                    "Euclidean fallback record is off at v=" + std::to_string(v));
        }
    }
}

void criterion_4() {
    auto base = build_family_instance({FamilyId::A, 2, 4, 3, 1, {}});
    auto ext = cartesian_extend(base, {2});
    require(ext.record.n == 30 && ext.record.k == 6 && ext.record.d == 3 && ext.record.q == 2,
            "quantum record != [[30,6,3]]_2");
    require(ext.certificate.r == 3 && ext.certificate.delta == 3, "locality != (3,3)");
    require(ext.classical_defect == 0 && ext.record.quantum_defect == 0, "defects != 0");
    require(ext.outer.dim() == 18, "dual dimension != 18");
    require(min_distance(ext.outer, DistanceMethod::column_dependency) == 3,
            "column-dependency oracle disagrees on the length-30 dual");
}

void criterion_5() {
    std::mt19937 rng(20250826);
    int checked = 0;
    for (int64_t prime : {2, 3}) {
        auto t = prime == 2 ? build_tower(2, 1, 2, DualityMode::hermitian)
                            : build_tower(3, 1, 2, DualityMode::hermitian);
        int64_t field = prime * prime;
        for (int trial = 0; trial < 260; ++trial) {
            int n = 4 + (int)(rng() % 17);  // 4..20
            int k = 1 + (int)(rng() % n);
            auto C = random_code(t, field, k, n, rng);
            if (C.dim() == 0) continue;
            int tsz = 1 + (int)(rng() % n);
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> T(all.begin(), all.begin() + tsz);
            std::sort(T.begin(), T.end());
            require(euclidean_dual(puncture(C, T)) == shorten(euclidean_dual(C), T),
                    "Euclidean puncture/shorten duality failed");
            require(hermitian_dual(puncture(C, T)) == shorten(hermitian_dual(C), T),
                    "Hermitian puncture/shorten duality failed");
            ++checked;
        }
    }
    require(checked >= 500, "fewer than 500 random pairs checked");
}

// all frak_q-complete unions of cyclotomic cosets with |Delta| <= 12, checked
// against the trace/subcode duality chain
void criterion_6() {
    struct Setup { TowerPtr t; int64_t N; };
    std::vector<Setup> setups = {{build_tower(2, 1, 4, DualityMode::hermitian), 15},
                                 {build_tower(5, 1, 2, DualityMode::euclidean), 24}};
    for (const auto& su : setups) {
        const int64_t frak_q = su.t->frak_q;
        auto D = build_domain(su.t, su.N, su.N, 1);
        auto reps = coset_representatives(su.N, frak_q);
        int m = (int)reps.size();
        int checked = 0;
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int64_t> elems;
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) {
                    auto c = cyclotomic_coset(reps[b], su.N, frak_q);
                    elems.insert(elems.end(), c.elements.begin(), c.elements.end());
                }
            ExponentSet delta{su.N, std::move(elems)};
            if ((int64_t)delta.size() > 12) continue;
            auto ddual = dual_exponents(delta, false, frak_q);
            LinearCode H(evaluation_code(delta, D));
            LinearCode Hd(evaluation_code(ddual, D));
            require(trace_code(Hd, frak_q) == euclidean_dual(subfield_subcode(H, frak_q)),
                    "trace/subcode duality chain failed at N=" + std::to_string(su.N));
            ++checked;
        }
        require(checked > 0, "no complete sets enumerated");
    }
}

void criterion_7() {
    struct Setup { TowerPtr t; int64_t N, n; };
    std::vector<Setup> setups = {{build_tower(2, 1, 4, DualityMode::euclidean), 15, 5},
                                 {build_tower(5, 1, 2, DualityMode::euclidean), 24, 4},
                                 {build_tower(3, 1, 4, DualityMode::euclidean), 16, 8}};
    for (const auto& su : setups) {
        const GaloisTower& F = *su.t;
        auto D = build_domain(su.t, su.N, su.n, su.N / su.n);
        LinearCode C(evaluation_code(a_set(su.n, su.N), D));
        require(C.dim() == su.N / su.n, "A-code dimension != N/n");
        // explicit witness: the indicator of the n-th roots of unity, scaled
        std::vector<int64_t> w(su.N, 0);
        for (int64_t j = 0; j < su.N; ++j)
            for (int64_t e = 0; e < su.N; e += su.n)
                w[j] = F.add(w[j], F.pow(D.points[j], e));
        int64_t wt = 0;
        for (int64_t x : w)
            if (x != 0) ++wt;
        require(wt == su.n, "witness weight != n");
        require(in_row_space(w, C.generator), "witness not in the code");
        require(min_weight_exceeds(C, (int)su.n - 1), "a word lighter than n exists");
    }
}

void criterion_8() {
    struct Setup { TowerPtr t; int64_t N; };
    // the advertised base grid {2,4,3,9} is only coprime to 15 and 63; N=24
    // gets its own workable bases 5 and 25 instead
    std::vector<Setup> setups = {{build_tower(2, 1, 4, DualityMode::euclidean), 15},
                                 {build_tower(2, 1, 4, DualityMode::hermitian), 15},
                                 {build_tower(5, 1, 2, DualityMode::euclidean), 24},
                                 {build_tower(5, 1, 2, DualityMode::hermitian), 24},
                                 {build_tower(2, 1, 6, DualityMode::euclidean), 63},
                                 {build_tower(2, 1, 6, DualityMode::hermitian), 63}};
    int dim_checks = 0, dist_checks = 0;
    for (const auto& su : setups) {
        const int64_t frak_q = su.t->frak_q;
        auto D = build_domain(su.t, su.N, su.N, 1);
        auto reps = coset_representatives(su.N, frak_q);
        int m = (int)reps.size();
        for (int tlo = 0; tlo < m; ++tlo)
            for (int thi = tlo; thi < m; ++thi) {
                auto delta = delta_range(tlo, thi, su.N, frak_q);
                LinearCode S = subfield_subcode(LinearCode(evaluation_code(delta, D)), frak_q);
                require((int64_t)S.dim() == (int64_t)delta.size(),
                        "subcode dimension != sum of coset sizes");
                ++dim_checks;
                if (tlo > 1 || thi + 1 >= m) continue;
                int64_t bound = reps[thi + 1] + (tlo == 0 ? 1 : 0);
                LinearCode dualS = euclidean_dual(S);
                if (dualS.dim() == 0) continue;
                auto comb = [](int64_t n, int64_t k) {
                    double r = 1;
                    for (int64_t i = 0; i < k; ++i) r = r * (double)(n - i) / (double)(i + 1);
                    return r;
                };
                if (detail::enum_cost(dualS) <= kFullEnumCheapCap) {
                    require(min_distance(dualS, DistanceMethod::full_enum) >= bound,
                            "dual distance below the designed bound");
                    ++dist_checks;
                } else if (bound - 1 <= kColumnDependencyCap && comb(su.N, bound - 1) <= 1e5) {
                    require(min_weight_exceeds(dualS, (int)bound - 1),
                            "dual distance below the designed bound");
                    ++dist_checks;
                }
            }
    }
    require(dim_checks > 200 && dist_checks > 25, "suite covered too few cases");
}

void criterion_9() {
    std::vector<int64_t> bases = {2, 3, 5, 7};
    int checked = 0;
    for (int64_t N = 2; N <= 120; ++N)
        for (int64_t n = 1; n <= N; ++n) {
            if (N % n != 0) continue;
            auto A = a_set(n, N);
            for (int64_t z : bases) {
                if (std::gcd(z, N) != 1) continue;
                require(is_complete(A, z), "A-set not complete");
                if (n < 2 || std::gcd(z, n) != 1) continue;
                auto reps = coset_representatives(n, z);
                int m = (int)reps.size();
                // all unions of up to 3 cosets mod n
                for (int a = 0; a < m; ++a)
                    for (int b = a; b < m; ++b)
                        for (int c = b; c < m; ++c) {
                            std::vector<int64_t> elems;
                            for (int idx : {a, b, c}) {
                                auto cs = cyclotomic_coset(reps[idx], n, z);
                                elems.insert(elems.end(), cs.elements.begin(), cs.elements.end());
                            }
                            ExponentSet B{n, std::move(elems)};
                            auto sum = minkowski_sum(A, lift(B, N));
                            require(is_complete(sum, z), "A+B not complete");
                            if (set_intersection(B, negate_mod(B, n)).empty())
                                require(set_intersection(sum, negate_mod(sum, N)).empty(),
                                        "Delta meets -Delta despite disjoint B");
                            if (set_intersection(B, negate_q_mod(B, n, z)).empty())
                                require(set_intersection(sum, negate_q_mod(sum, N, z)).empty(),
                                        "Delta meets -q*Delta despite disjoint B");
                            ++checked;
                        }
            }
        }
    require(checked > 10000, "suite covered too few cases");
}

void criterion_10() {
    auto rows = table_one({2, 3, 4, 5}, 64);
    int verified = 0;
    auto find = [&](const std::string& fam, int64_t n, int64_t k, int64_t d) {
        for (const auto& row : rows)
            if (row.family == fam && row.n == n && row.k == k && row.d == d && row.verified)
                return true;
        return false;
    };
    for (const auto& row : rows) {
        require(row.n <= 64, "row exceeds the length cap");
        if (row.verified) ++verified;
    }
    require(find("A", 15, 3, 3), "missing verified [[15,3,3]] row");
    require(find("B", 24, 12, 2), "missing verified [[24,12,2]] row");
    require(find("C2", 16, 12, 2) && find("C2", 16, 8, 3) && find("C2", 16, 4, 4),
            "missing verified C2 ladder rows");
    require(find("cartA", 30, 6, 3), "missing verified [[30,6,3]] row");
    require(verified >= 10, "too few matrix-verified rows");
}

} // namespace

int main() {
    run(1, "family A flagship [[15,3,3]]_2", criterion_1);
    run(2, "family B [[24,12,2]]_5", criterion_2);
    run(3, "lambda=2 ladder [[16,16-4v,v+1]]", criterion_3);
    run(4, "Cartesian extension [[30,6,3]]_2", criterion_4);
    run(5, "puncture/shorten duality, 500+ random pairs", criterion_5);
    run(6, "trace/subcode duality chain, exhaustive", criterion_6);
    run(7, "block-indicator distance equals block size", criterion_7);
    run(8, "designed dimension and dual-distance bounds", criterion_8);
    run(9, "completeness and disjointness property suites", criterion_9);
    run(10, "parameter table reproduction, q in {2,3,4,5}", criterion_10);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures ? 1 : 0;
}
