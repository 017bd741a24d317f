#include <doctest.h>

#include <qlrc/cosets.hpp>

using namespace qlrc;

namespace {
ExponentSet es(int64_t N, std::vector<int64_t> v) { return {N, std::move(v)}; }
}

TEST_CASE("cyclotomic cosets") {
    CHECK(cyclotomic_coset(2, 15, 4) == es(15, {2, 8}));
    CHECK(cyclotomic_coset(0, 15, 2) == es(15, {0}));
    CHECK(cyclotomic_coset(3, 15, 2) == es(15, {3, 6, 9, 12}));
    CHECK_THROWS_AS(cyclotomic_coset(1, 15, 3), base_not_coprime_error);
}

TEST_CASE("coset representatives") {
    CHECK(coset_representatives(15, 2) == std::vector<int64_t>{0, 1, 3, 5, 7});
    CHECK(coset_representatives(15, 4) == std::vector<int64_t>{0, 1, 2, 3, 5, 6, 7, 10, 11});
    CHECK(coset_representatives(2, 3) == std::vector<int64_t>{0, 1});
}

TEST_CASE("coset partition of Z_N") {
    for (int64_t N : {15, 24, 63}) {
        for (int64_t z : {2, 5, 11}) {
            if (std::gcd(z, N) != 1) continue;
            std::vector<bool> seen(N, false);
            for (int64_t rep : coset_representatives(N, z)) {
                auto c = cyclotomic_coset(rep, N, z);
                CHECK(c.contains(rep));
                CHECK(rep == c.elements.front());
                for (int64_t e : c.elements) {
                    CHECK(!seen[e]);
                    seen[e] = true;
                }
            }
            for (int64_t i = 0; i < N; ++i) CHECK(seen[i]);
        }
    }
}

TEST_CASE("completeness") {
    CHECK(is_complete(es(5, {2, 3}), 4));
    CHECK(!is_complete(es(5, {1}), 4));
    CHECK(is_complete(es(5, {}), 4));
}

TEST_CASE("complete closure") {
    CHECK(complete_closure(es(15, {1}), 4) == es(15, {1, 4}));
    CHECK(complete_closure(es(15, {3}), 2) == es(15, {3, 6, 9, 12}));
    auto D = es(15, {3, 6, 9, 12});
    CHECK(complete_closure(D, 2) == D);
}

TEST_CASE("Minkowski sums") {
    CHECK(minkowski_sum(es(15, {0, 5, 10}), es(15, {2, 3})) == es(15, {2, 3, 7, 8, 12, 13}));
    auto A = es(15, {1, 4, 7});
    CHECK(minkowski_sum(A, es(15, {0})) == A);
    // brute-force oracle: A + full nonzero set
    std::vector<int64_t> all;
    for (int64_t i = 1; i < 15; ++i) all.push_back(i);
    std::set<int64_t> expected;
    for (int64_t a : {0, 5, 10})
        for (int64_t b : all) expected.insert((a + b) % 15);
    CHECK(minkowski_sum(es(15, {0, 5, 10}), es(15, all)) ==
          es(15, std::vector<int64_t>(expected.begin(), expected.end())));
    CHECK_THROWS_AS(minkowski_sum(es(15, {1}), es(5, {1})), modulus_mismatch_error);
}

TEST_CASE("modular reduction and negation") {
    CHECK(reduce_mod(es(15, {2, 3, 7, 8, 12, 13}), 5) == es(5, {2, 3}));
    auto D = es(15, {1, 2, 4});
    CHECK(reduce_mod(D, 15) == D);
    CHECK(reduce_mod(es(15, {0, 5, 10}), 5) == es(5, {0}));

    CHECK(negate_mod(es(5, {2, 3}), 5) == es(5, {2, 3}));
    CHECK(negate_q_mod(es(5, {2, 3}), 5, 2) == es(5, {1, 4}));
    CHECK(negate_mod(es(5, {0}), 5) == es(5, {0}));
    CHECK_THROWS_AS(reduce_mod(es(15, {1}), 4), not_a_divisor_error);
}

TEST_CASE("a_set") {
    CHECK(a_set(5, 15) == es(15, {0, 5, 10}));
    CHECK(a_set(15, 15) == es(15, {0}));
    CHECK(a_set(4, 24) == es(24, {0, 4, 8, 12, 16, 20}));
}

TEST_CASE("delta ranges") {
    CHECK(delta_range(1, 1, 15, 2) == es(15, {1, 2, 4, 8}));
    CHECK(delta_range(0, 0, 15, 2) == es(15, {0}));
    CHECK(delta_range(1, 2, 15, 2) == es(15, {1, 2, 3, 4, 6, 8, 9, 12}));
    CHECK_THROWS_AS(delta_range(1, 9, 15, 2), index_out_of_range_error);
}

TEST_CASE("consecutive runs exclude zero and do not wrap") {
    CHECK(consecutive_run(es(15, {2, 3, 7, 8, 12, 13})) == 2);
    CHECK(consecutive_run(es(15, {})) == 0);
    CHECK(consecutive_run(es(15, {1, 2, 3, 4})) == 4);
    CHECK(consecutive_run(es(15, {0, 1, 2})) == 2);    // 0 gives no credit
    CHECK(consecutive_run(es(15, {13, 14, 0, 1})) == 2);  // no wraparound
}

TEST_CASE("dual exponent sets") {
    std::vector<int64_t> rest;
    for (int64_t i = 1; i < 15; ++i) rest.push_back(i);
    CHECK(dual_exponents(es(15, {0}), false, 2) == es(15, rest));
    CHECK(dual_exponents(ExponentSet::full(15), false, 2) == es(15, {}));

    auto delta = es(15, {2, 3, 7, 8, 12, 13});
    std::set<int64_t> removed;
    for (int64_t e : delta.elements) removed.insert(((15 - 2 * e) % 15 + 15) % 15);
    std::vector<int64_t> expect;
    for (int64_t i = 0; i < 15; ++i)
        if (!removed.count(i)) expect.push_back(i);
    CHECK(dual_exponents(delta, true, 2) == es(15, expect));
    CHECK_THROWS_AS(dual_exponents(es(15, {1}), false, 2), not_complete_error);
}

TEST_CASE("a_set is z-complete and sums with complete sets stay complete") {
    for (int64_t N : {12, 15, 20, 24, 30}) {
        for (int64_t n = 1; n <= N; ++n) {
            if (N % n != 0) continue;
            for (int64_t z : {2, 3, 5, 7, 11}) {
                if (std::gcd(z, N) != 1) continue;
                auto A = a_set(n, N);
                CHECK(is_complete(A, z));
                // B: one coset mod n, lifted
                if (std::gcd(z, n) != 1) continue;
                for (int64_t e = 0; e < n; ++e) {
                    auto B = cyclotomic_coset(e, n, z);
                    auto sum = minkowski_sum(A, lift(B, N));
                    CHECK(is_complete(sum, z));
                }
            }
        }
    }
}

TEST_CASE("A + lift(B) collects exactly the residues of B mod n") {
    for (auto [N, n] : {std::pair<int64_t, int64_t>{15, 5}, {24, 4}, {63, 9}}) {
        auto A = a_set(n, N);
        ExponentSet B{n, {1, 2, n - 1}};
        auto sum = minkowski_sum(A, lift(B, N));
        for (int64_t x = 0; x < N; ++x) CHECK(sum.contains(x) == B.contains(x % n));
    }
}
