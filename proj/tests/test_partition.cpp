#include <doctest.h>

#include <algorithm>

#include "rblock/errors.hpp"
#include "rblock/partition.hpp"
#include "rblock/region.hpp"
#include "rblock/verify.hpp"
#include "support/oracles.hpp"

using namespace rblock;

TEST_CASE("partition canonical form and containment") {
    CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
    CHECK(Partition{}.empty());
    CHECK(Partition({4, 4, 3}).sum() == 11);
    CHECK_THROWS_AS(Partition({1, 2}), invalid_input);
    CHECK_THROWS_AS(Partition({2, -1}), invalid_input);

    CHECK(contains(Partition{1}, Partition{2, 1}));
    CHECK(contains(Partition{}, Partition{5, 3, 1}));
    CHECK_FALSE(contains(Partition{2}, Partition{1, 1}));
}

TEST_CASE("strip classification") {
    CHECK(strip_check(SkewShape({2, 1}, {1})) == StripClass{StripKind::both, 2});
    CHECK(strip_check(SkewShape({1, 1}, {})) == StripClass{StripKind::vertical, 2});
    CHECK(strip_check(SkewShape({2, 2}, {})) == StripClass{StripKind::neither, 4});
    CHECK(strip_check(SkewShape({2}, {})) == StripClass{StripKind::horizontal, 2});
    CHECK(strip_check(SkewShape({3, 1}, {1})) ==
          StripClass{StripKind::horizontal, 3});
    CHECK_THROWS_AS(SkewShape({1}, {2}), invalid_input);
}

TEST_CASE("block profile partial sums") {
    BlockProfile r({2, 0, 2, 1, 3});
    CHECK(r.parts() == 5);
    CHECK(r.sum() == 8);
    CHECK(r.partial_sum(0) == 0);
    CHECK(r.partial_sum(3) == 4);
    CHECK(r.to_string() == "(2,0,2,1,3)");
    CHECK_THROWS_AS(BlockProfile({1, -1}), invalid_input);
}

TEST_CASE("dent labels map to partitions") {
    CHECK(partition_from_dents({1, 3, 5, 7, 8, 10, 12, 13}, 8) ==
          Partition({5, 5, 4, 3, 3, 2, 1}));
    CHECK(partition_from_dents({1, 2, 3, 4}, 4) == Partition{});
    CHECK(partition_from_dents({1, 2, 5, 6, 8, 10, 11, 12}, 8) ==
          Partition({4, 4, 4, 3, 2, 2}));

    CHECK_THROWS_AS(partition_from_dents({1, 2}, 3), invalid_input);
    CHECK_THROWS_AS(partition_from_dents({2, 2}, 2), invalid_input);
    CHECK_THROWS_AS(partition_from_dents({1, 1}, 2), invalid_input);
}

TEST_CASE("extremal partitions from the exponent notation") {
    auto [lo1, hi1] = lambda_min_max(BlockProfile({1, 1, 1}));
    CHECK(lo1 == Partition({2, 1}));
    CHECK(hi1 == Partition({3, 2, 1}));

    auto [lo2, hi2] = lambda_min_max(BlockProfile({4}));
    CHECK(lo2 == Partition{});
    CHECK(hi2 == Partition({1, 1, 1, 1}));

    auto [lo3, hi3] = lambda_min_max(BlockProfile({2, 0, 2, 1, 3}));
    CHECK(lo3 == Partition({4, 4, 4, 3, 2, 2}));
    CHECK(hi3 == Partition({5, 5, 5, 4, 3, 3, 1, 1}));
}

TEST_CASE("vertical strip successors") {
    CHECK(vertical_strip_successors(Partition{1}, 1, 2) ==
          std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(vertical_strip_successors(Partition{}, 0, 3) ==
          std::vector<Partition>{Partition{}});
    CHECK(vertical_strip_successors(Partition{1, 1}, 2, 2) ==
          std::vector<Partition>{Partition{2, 2}});
}

TEST_CASE("vertical strip successors agree with the brute-force filter") {
    auto bases = testing::partitions_of(0, 4, 4);
    for (int boxes = 0; boxes <= 4; ++boxes) {
        auto more = testing::partitions_of(boxes, 4, 4);
        bases.insert(bases.end(), more.begin(), more.end());
    }
    for (const Partition& base : bases) {
        for (int size = 0; size <= 3; ++size) {
            for (int max_rows = 1; max_rows <= 4; ++max_rows) {
                std::vector<Partition> expected;
                for (const Partition& cand : testing::partitions_of(
                         base.sum() + size, base.part(1) + size, max_rows)) {
                    if (!contains(base, cand)) continue;
                    bool vertical = true;
                    for (int i = 1; i <= cand.rows(); ++i)
                        if (cand.part(i) - base.part(i) > 1) vertical = false;
                    if (vertical) expected.push_back(cand);
                }
                if (base.sum() + size == 0) expected.push_back(Partition{});
                auto got = vertical_strip_successors(base, size, max_rows);
                std::sort(expected.begin(), expected.end(),
                          [](const Partition& a, const Partition& b) { return b < a; });
                expected.erase(std::unique(expected.begin(), expected.end()),
                               expected.end());
                CAPTURE(base.to_string()); CAPTURE(size); CAPTURE(max_rows);
                CHECK(got == expected);
            }
        }
    }
}

TEST_CASE("horizontal strip predecessors") {
    auto got = horizontal_strip_predecessors(Partition{2, 1}, 1);
    CHECK(got == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(horizontal_strip_predecessors(Partition{2, 2}, 1) ==
          std::vector<Partition>{Partition{2, 1}});
    // removing two boxes from the same column is not a horizontal strip
    CHECK(horizontal_strip_predecessors(Partition{1, 1}, 2).empty());
}

TEST_CASE("dents map is injective on admissible sets") {
    BlockProfile r({2, 1, 0, 2});
    auto sets = right_dent_sets(r, r.sum() + r.parts());
    std::vector<Partition> images;
    for (const auto& P : sets)
        images.push_back(partition_from_dents(P, r.sum()));
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
}

TEST_CASE("admissible dent partitions sit between the extremal ones") {
    // lambda(P_min) ⊆ lambda(P) ⊆ lambda(P_max) and lambda(P)/lambda(P_min)
    // is a vertical strip of size d(P), exhaustively for |r| + n <= 8.
    for (int n = 1; n <= 7; ++n) {
        for (int m = 1; m + n <= 8; ++m) {
            for (const auto& rv : compositions(m, n)) {
                BlockProfile r(rv);
                auto [lo, hi] = lambda_min_max(r);
                auto pmin = min_right_dents(r);
                for (const auto& P : right_dent_sets(r, m + n)) {
                    Partition lam = partition_from_dents(P, m);
                    CAPTURE(r.to_string()); CAPTURE(lam.to_string());
                    CHECK(contains(lo, lam));
                    CHECK(contains(lam, hi));
                    StripClass strip = strip_check(SkewShape(lam, lo));
                    CHECK((strip.kind == StripKind::vertical ||
                           strip.kind == StripKind::both));
                    CHECK(strip.boxes ==
                          dent_distance(P, pmin, DentDirection::above_min));
                }
            }
        }
    }
}
