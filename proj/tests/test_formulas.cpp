#include <doctest.h>

#include "rblock/errors.hpp"
#include "rblock/formulas.hpp"
#include "rblock/region.hpp"
#include "rblock/tiling.hpp"
#include "rblock/verify.hpp"

using namespace rblock;

TEST_CASE("alpha and beta statistics") {
    CHECK(alpha_beta(BlockProfile({1, 1})) == AlphaBeta{0, 1});
    CHECK(alpha_beta(BlockProfile({4})) == AlphaBeta{0, 0});
    // r=(2,0,2,1,3): S=(2,2,4,5,8), differences 6,6,4,3,0
    CHECK(alpha_beta(BlockProfile({2, 0, 2, 1, 3})) ==
          AlphaBeta{15 + 15 + 6 + 3 + 0, 19});
}

TEST_CASE("block (q,t) product") {
    CHECK(block_qt_product(BlockProfile({1, 1})) ==
          MPoly::parse("t") * MPoly::parse("q + 1") * MPoly::parse("t + 1") *
              MPoly::parse("q*t + 1"));
    for (int m = 1; m <= 5; ++m) {
        MPoly expect = MPoly::one();
        for (int i = 1; i <= m; ++i)
            expect *= MPoly::one() + MPoly(Monomial(i - 1, 1), 1);
        CAPTURE(m);
        CHECK(block_qt_product(BlockProfile(std::vector<int>(1, m))) == expect);
    }
    CHECK(block_qt_product(BlockProfile({1, 1, 1})).eval_all_ones() == BigInt(64));
}

TEST_CASE("block counts") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(block_count_product(BlockProfile(std::vector<int>(n, 1))) ==
              BigInt::two_pow(static_cast<unsigned long>(n * (n + 1) / 2)));
    }
    CHECK(block_count_product(BlockProfile({2, 2})) == BigInt(96));
    CHECK(block_count_product(BlockProfile({2, 2, 2})) == BigInt(12096));
}

TEST_CASE("plane partition products") {
    CHECK(block_pp_qt_product(BlockProfile({1})) == MPoly::parse("t + 1"));
    CHECK(block_pp_volume_product(BlockProfile({1})) == MPoly::parse("q + 1"));
    CHECK(block_pp_qt_product(BlockProfile({1, 1})).eval_all_ones() == BigInt(8));
    CHECK(block_pp_volume_product(BlockProfile({2})) ==
          MPoly::parse("q + 1") * MPoly::parse("q^3 + 1"));
}

TEST_CASE("plane partition products are substitutions of the tiling product") {
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m + n <= 7; ++m) {
            for (const auto& rv : compositions(m, n)) {
                BlockProfile r(rv);
                CAPTURE(r.to_string());
                MPoly pp = block_pp_qt_product(r);
                CHECK(pp == block_qt_product(r).substitute_q_power(2));
                CHECK(block_pp_volume_product(r) == pp.substitute_t_to_q());
            }
        }
    }
}

TEST_CASE("qt product at q = t = 1 gives the count") {
    for (int n = 1; n <= 7; ++n) {
        for (int m = 1; m + n <= 8; ++m) {
            for (const auto& rv : compositions(m, n)) {
                BlockProfile r(rv);
                CAPTURE(r.to_string());
                CHECK(block_qt_product(r).eval_all_ones() == block_count_product(r));
            }
        }
    }
}

TEST_CASE("r = (2,...,2) counts factor through the ASM numbers") {
    for (int n = 1; n <= 5; ++n) {
        BigInt expect = BigInt::two_pow(2ul * n) *
                        BigInt::pow(BigInt(3), static_cast<unsigned long>(n * (n - 1) / 2)) *
                        asm_count(n);
        CAPTURE(n);
        CHECK(block_count_product(BlockProfile(std::vector<int>(n, 2))) == expect);
    }
}

TEST_CASE("signed-sum product side") {
    // l = 0: the same formula degenerates to prod (1+x_i) * M_x(T(n,m;P_min))
    BlockProfile r({1, 1});
    BlockProfile rp({0, 0});
    MPoly expect = weighted_region_sum(
        TrapezoidRegion(2, 2, min_right_dents(r)).triangles(), WeightKind::x);
    expect *= (MPoly::one() + MPoly::x(1)) * (MPoly::one() + MPoly::x(2));
    CHECK(signed_sum_product(r, rp, 2, 2, 0) == expect);

    // m = n = l = 1
    MPoly base = weighted_region_sum(TrapezoidRegion(2, 1, {1, 2}, {2}).triangles(),
                                     WeightKind::x);
    CHECK(signed_sum_product(BlockProfile({2}), BlockProfile({1}), 1, 1, 1) ==
          (MPoly::one() + MPoly::x(1)) * base);

    // m=2, n=2, l=1, r=(1,2): the region is T(3,2;P_min,{2})
    BlockProfile r12({1, 2});
    BlockProfile rp10({1, 0});
    MPoly base2 = weighted_region_sum(
        TrapezoidRegion(3, 2, min_right_dents(r12), {2}).triangles(), WeightKind::x);
    CHECK(signed_sum_product(r12, rp10, 2, 2, 1) ==
          (MPoly::one() + MPoly::x(1)) * (MPoly::one() + MPoly::x(2)) * base2);

    CHECK_THROWS_AS(signed_sum_product(BlockProfile({2}), BlockProfile({2}), 1, 1, 1),
                    invalid_input);
    CHECK_THROWS_AS(signed_sum_product(BlockProfile({1}), BlockProfile({1}), 1, 1, 1),
                    invalid_input);
}

TEST_CASE("box formulas") {
    CHECK(macmahon_count(1, 1, 1) == BigInt(2));
    CHECK(macmahon_q(1, 1, 1) == MPoly::parse("q + 1"));
    CHECK(macmahon_count(2, 2, 2) == BigInt(20));
    CHECK_THROWS_AS(macmahon_count(2, 2, 0), invalid_input);
    CHECK_THROWS_AS(macmahon_q(0, 1, 1), invalid_input);

    CHECK(sym_pp_q(1, 1) == MPoly::parse("q + 1"));
    CHECK(sym_pp_count(1, 1) == BigInt(2));
    CHECK(sym_pp_count(2, 1) == BigInt(4));
    CHECK(sym_pp_count(2, 2) == BigInt(10));
}

TEST_CASE("ASM numbers") {
    CHECK(asm_count(1) == BigInt(1));
    CHECK(asm_count(3) == BigInt(7));
    CHECK(asm_count(4) == BigInt(42));
    CHECK_THROWS_AS(asm_count(0), invalid_input);
}

TEST_CASE("hexagon counts match the box product") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 2; ++c) {
                CAPTURE(a); CAPTURE(b); CAPTURE(c);
                CHECK(BigInt(static_cast<long>(
                          count_tilings(HexagonRegion(a, b, c).triangles()))) ==
                      macmahon_count(a, b, c));
            }
}
