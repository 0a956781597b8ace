#include <doctest.h>

#include <algorithm>

#include "rblock/errors.hpp"
#include "rblock/region.hpp"
#include "rblock/verify.hpp"

using namespace rblock;

TEST_CASE("right dent sets satisfy the window condition") {
    auto sets = right_dent_sets(BlockProfile({1, 1}), 4);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0] == std::vector<int>({1, 3}));
    CHECK(sets[1] == std::vector<int>({1, 4}));
    CHECK(sets[2] == std::vector<int>({2, 3}));
    CHECK(sets[3] == std::vector<int>({2, 4}));

    // single block: the m+1 m-subsets of [m+1]
    for (int m = 1; m <= 5; ++m) {
        auto single = right_dent_sets(BlockProfile({m}), m + 1);
        CHECK(single.size() == static_cast<std::size_t>(m + 1));
        CHECK(single == subsets(m + 1, m));
    }

    CHECK(right_dent_sets(BlockProfile({2, 0, 2, 1, 3}), 13).size() == 72);
    CHECK_THROWS_AS(right_dent_sets(BlockProfile({1, 1}), 5), invalid_input);
}

TEST_CASE("dent set counts are the product of window sizes") {
    for (int n = 1; n <= 5; ++n) {
        for (int m = 0; m <= 6; ++m) {
            for (const auto& rv : compositions(m, n)) {
                BlockProfile r(rv);
                std::size_t expect = 1;
                for (int k = 1; k <= n; ++k) expect *= r.r(k) + 1;
                CAPTURE(r.to_string());
                CHECK(right_dent_sets(r, m + n).size() == expect);
            }
        }
    }
}

TEST_CASE("left dent sets") {
    auto a = left_dent_sets(BlockProfile({1}), 2);
    CHECK(a == std::vector<std::vector<int>>({{1}, {2}}));
    auto b = left_dent_sets(BlockProfile({0, 0, 0}), 3);
    REQUIRE(b.size() == 1);
    CHECK(b[0].empty());
    auto c = left_dent_sets(BlockProfile({1, 0}), 3);
    CHECK(c == std::vector<std::vector<int>>({{1}, {2}}));
}

TEST_CASE("extremal dent sets") {
    CHECK(min_right_dents(BlockProfile({2, 0, 2, 1, 3})) ==
          std::vector<int>({1, 2, 5, 6, 8, 10, 11, 12}));
    for (int l = 1; l <= 4; ++l) {
        std::vector<int> ones(l, 1);
        std::vector<int> expect;
        for (int k = 1; k <= l; ++k) expect.push_back(2 * k);
        CHECK(max_left_dents(BlockProfile(ones)) == expect);
    }
    CHECK(min_right_dents(BlockProfile({4})) == std::vector<int>({1, 2, 3, 4}));

    // extremal sets are members of the generated families
    BlockProfile r({2, 1, 0});
    auto sets = right_dent_sets(r, r.sum() + r.parts());
    CHECK(std::find(sets.begin(), sets.end(), min_right_dents(r)) != sets.end());
    BlockProfile rp({1, 0, 1});
    auto lsets = left_dent_sets(rp, rp.sum() + rp.parts());
    CHECK(std::find(lsets.begin(), lsets.end(), max_left_dents(rp)) != lsets.end());
}

TEST_CASE("dent distances") {
    std::vector<int> P = {1, 3, 5, 7, 8, 10, 12, 13};
    std::vector<int> Pmin = {1, 2, 5, 6, 8, 10, 11, 12};
    CHECK(dent_distance(P, Pmin, DentDirection::above_min) == 4);
    CHECK(dent_distance(Pmin, Pmin, DentDirection::above_min) == 0);
    CHECK(dent_distance({1}, {2}, DentDirection::below_max) == 1);
    CHECK_THROWS_AS(dent_distance({1}, {1, 2}, DentDirection::above_min),
                    invalid_input);
}

TEST_CASE("region triangle sets") {
    CHECK(HexagonRegion(1, 1, 1).triangles().triangles.size() == 6);
    CHECK(TrapezoidRegion(1, 1, {1}).triangles().triangles.size() == 2);
    CHECK(TrapezoidRegion(2, 2, {1, 3}).triangles().triangles.size() == 10);
    CHECK(HexagonRegion(2, 3, 4).triangles().triangles.size() ==
          2 * (2 * 3 + 3 * 4 + 4 * 2));

    CHECK_THROWS_AS(HexagonRegion(0, 1, 1), invalid_input);
    CHECK_THROWS_AS(TrapezoidRegion(1, 1, {5}), invalid_input);
    CHECK_THROWS_AS(TrapezoidRegion(1, 1, {1, 1}), invalid_input);
    CHECK_THROWS_AS(TrapezoidRegion(2, 2, {}, {3}), invalid_input);
}

TEST_CASE("dent labels land on the stated boundary triangles") {
    // Right boundary labels 1..m+h bottom to top, left labels 1..h.
    TrapezoidRegion trap(2, 3, {1, 5}, {2});
    TriangleSet set = trap.triangles();
    CHECK(set.index_of({0, 0, Pointing::left}) == -1);      // label 1 removed
    CHECK(set.index_of({0, 8, Pointing::left}) == -1);      // label 5 removed
    CHECK(set.index_of({0, 2, Pointing::left}) >= 0);       // label 2 present
    CHECK(set.index_of({-3, 5, Pointing::right}) == -1);    // left label 2 removed
    CHECK(set.index_of({-3, 3, Pointing::right}) >= 0);     // left label 1 present
}

TEST_CASE("balance, parity, and tileability") {
    // A balanced region has an even triangle count, and an unbalanced one is
    // never tileable (every lozenge covers one triangle of each pointing).
    // Note even count alone does not imply balance: removing |P| labels
    // shifts the pointing difference by m - |P|, which can be a nonzero even
    // number.
    for (int h = 1; h <= 3; ++h)
        for (int m = 1; m <= 3; ++m)
            for (int np = 0; np <= std::min(3, m + h); ++np)
                for (const auto& P : subsets(m + h, np)) {
                    TriangleSet set = TrapezoidRegion(h, m, P).triangles();
                    CAPTURE(h); CAPTURE(m); CAPTURE(np);
                    if (set.is_balanced()) CHECK(set.triangles.size() % 2 == 0);
                }
}

TEST_CASE("profile-generated dent sets always balance the trapezoid") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m + n <= 6; ++m)
            for (const auto& rv : compositions(m, n)) {
                BlockProfile r(rv);
                for (const auto& P : right_dent_sets(r, m + n)) {
                    TriangleSet set = TrapezoidRegion(n, m, P).triangles();
                    CHECK(set.is_balanced());
                    CHECK(set.triangles.size() % 2 == 0);
                }
            }
}

TEST_CASE("hexagons are balanced") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                CHECK(HexagonRegion(a, b, c).triangles().is_balanced());
}
