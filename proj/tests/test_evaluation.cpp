#include <doctest.h>

#include <set>

#include <qlrc/evaluation.hpp>

using namespace qlrc;

TEST_CASE("domain construction and kind classification") {
    auto t = build_tower(2, 1, 4, DualityMode::hermitian);  // F_16 over F_4
    auto D = build_domain(t, 15, 5, 3);
    CHECK(D.kind == DomainKind::full);
    CHECK(D.length() == 15);
    CHECK(build_domain(t, 15, 5, 1).kind == DomainKind::divisor);
    CHECK(build_domain(t, 15, 5, 2).kind == DomainKind::partial);
    CHECK(build_domain(t, 15, 15, 1).kind == DomainKind::full);
    CHECK_THROWS_AS(build_domain(t, 15, 4, 1), divisibility_error);
    CHECK_THROWS_AS(build_domain(t, 7, 7, 1), divisibility_error);
    CHECK_THROWS_AS(build_domain(t, 15, 5, 4), divisibility_error);
}

TEST_CASE("points are the expected nonzero roots of unity, in block order") {
    auto t = build_tower(2, 1, 4, DualityMode::hermitian);
    const GaloisTower& F = *t;
    auto D = build_domain(t, 15, 5, 3);
    int64_t a = nth_root_of_unity(F, 15).code;
    int64_t zeta = F.pow(a, 3);
    std::set<int64_t> distinct;
    for (int64_t i = 0; i < 3; ++i)
        for (int64_t j = 0; j < 5; ++j) {
            int64_t pt = D.points[i * 5 + j];
            CHECK(pt == F.mul(F.pow(a, i), F.pow(zeta, j)));
            CHECK(pt != 0);
            CHECK(F.pow(pt, 15) == 1);
            distinct.insert(pt);
        }
    CHECK(distinct.size() == 15);

    auto blocks = D.blocks();
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(blocks[2] == std::vector<int>{10, 11, 12, 13, 14});
    // within a block the ratio of consecutive points is the fixed n-th root
    for (const auto& blk : blocks)
        for (size_t j = 1; j < blk.size(); ++j)
            CHECK(D.points[blk[j]] == F.mul(D.points[blk[j - 1]], zeta));
}

TEST_CASE("full domain over F_25") {
    auto t = build_tower(5, 1, 2, DualityMode::euclidean);
    auto D = build_domain(t, 24, 4, 6);
    CHECK(D.kind == DomainKind::full);
    std::set<int64_t> distinct(D.points.begin(), D.points.end());
    CHECK(distinct.size() == 24);  // all of F_25^*
    CHECK(!distinct.count(0));
}

TEST_CASE("evaluation code rows and rank") {
    auto t = build_tower(2, 1, 4, DualityMode::hermitian);
    const GaloisTower& F = *t;
    auto D = build_domain(t, 15, 5, 3);

    // exponent 0 evaluates to the all-ones word
    auto G0 = evaluation_code(ExponentSet{15, {0}}, D);
    for (int j = 0; j < 15; ++j) CHECK(G0.at(0, j) == 1);

    // the full exponent set spans the whole space on a full domain
    auto Gfull = evaluation_code(ExponentSet::full(15), D);
    CHECK(rank(Gfull) == 15);

    // distinct exponents stay independent on a full domain
    ExponentSet delta{15, {0, 1, 2, 4, 7, 11}};
    auto G = evaluation_code(delta, D);
    CHECK(G.rows == 6);
    CHECK(rank(G) == 6);

    // row order follows ascending exponent: row for e is ev(x^e)
    for (size_t r = 0; r < delta.size(); ++r)
        for (int j = 0; j < 15; ++j)
            CHECK(G.at((int)r, j) == F.pow(D.points[j], delta.elements[r]));

    CHECK_THROWS_AS(evaluation_code(ExponentSet{5, {1}}, D), modulus_mismatch_error);
}

TEST_CASE("evaluation is multiplicative in the exponent") {
    auto t = build_tower(5, 1, 2, DualityMode::euclidean);
    const GaloisTower& F = *t;
    auto D = build_domain(t, 24, 4, 6);
    auto G = evaluation_code(ExponentSet{24, {3, 5, 8}}, D);
    for (int j = 0; j < 24; ++j)
        CHECK(G.at(2, j) == F.mul(G.at(0, j), F.pow(D.points[j], 5)));
}

TEST_CASE("cartesian domain validation") {
    auto t = build_tower(2, 1, 4, DualityMode::hermitian);  // frak_q = 4
    auto D = build_domain(t, 15, 5, 3);
    auto f4 = t->subfield_element_codes(4);
    REQUIRE(f4.size() == 4);

    auto Z = build_cartesian(D, {{f4[0], f4[1]}});
    CHECK(Z.beta() == 30);

    CHECK_THROWS_AS(build_cartesian(D, {{f4[0]}}), axis_error);
    CHECK_THROWS_AS(build_cartesian(D, {{f4[0], f4[1], f4[2], f4[3]}}), axis_error);
    CHECK_THROWS_AS(build_cartesian(D, {{f4[0], f4[0]}}), axis_error);
    int64_t outside = -1;
    for (int64_t c = 0; c < t->big_order; ++c)
        if (!t->in_subfield(c, 4)) { outside = c; break; }
    REQUIRE(outside >= 0);
    CHECK_THROWS_AS(build_cartesian(D, {{f4[0], outside}}), axis_error);
}

TEST_CASE("cartesian code structure") {
    auto t = build_tower(2, 1, 4, DualityMode::hermitian);
    const GaloisTower& F = *t;
    auto D = build_domain(t, 15, 5, 3);
    auto f4 = t->subfield_element_codes(4);
    auto Z = build_cartesian(D, {{f4[0], f4[2]}});  // includes 0: relies on 0^0 = 1

    ExponentSet delta{15, {0, 1, 4}};
    auto G = cartesian_code(delta, Z);
    CHECK(G.rows == 6);
    CHECK(G.cols == 30);
    CHECK(rank(G) == 6);

    // axis 1 is fastest in both rows and columns: the first |delta| rows use
    // extra exponent 0, so restricted to the first 15 columns they reproduce
    // the plain evaluation code
    auto G1 = evaluation_code(delta, D);
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 15; ++j) CHECK(G.at(r, j) == G1.at(r, j));

    // columns 15..29 use second-axis point f4[2]; rows 3..5 carry one factor of it
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 15; ++j) {
            CHECK(G.at(r + 3, j) == 0);  // second-axis point 0, exponent 1
            CHECK(G.at(r, 15 + j) == G1.at(r, j));
            CHECK(G.at(r + 3, 15 + j) == F.mul(f4[2], G1.at(r, j)));
        }
}
