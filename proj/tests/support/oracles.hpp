#ifndef RBLOCK_TESTS_ORACLES_HPP
#define RBLOCK_TESTS_ORACLES_HPP

// Independent brute-force oracles used only by tests.  These deliberately
// avoid the library's closed forms and recurrences: they enumerate objects
// one by one from the definitions.

#include <vector>

#include "rblock/mpoly.hpp"
#include "rblock/partition.hpp"

namespace rblock::testing {

// Total (q,t)-weight of east/south paths from (x,y) to (z,w), enumerated
// step by step.  A south step from (px, py) to (px, py-1) weighs
// q^{py-px-1} t; east steps weigh 1.
inline MPoly enumerate_path_weight(int x, int y, int z, int w) {
    if (x > z || y < w) return MPoly::zero();
    if (x == z && y == w) return MPoly::one();
    MPoly total;
    if (x < z) total += enumerate_path_weight(x + 1, y, z, w);
    if (y > w)
        total += MPoly(Monomial(y - x - 1, 1), 1) *
                 enumerate_path_weight(x, y - 1, z, w);
    return total;
}

// All partitions of exactly `boxes` boxes with parts <= max_part and at most
// max_rows rows.
inline std::vector<Partition> partitions_of(int boxes, int max_part, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_rows) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, boxes, max_part);
    return out;
}

// Gaussian binomial via its subset-sum generating function:
// [n k]_q = sum over k-subsets S of {0,...,n-1} of q^{sum S - k(k-1)/2}.
inline MPoly subset_q_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return MPoly::zero();
    MPoly total;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next, int left) -> void {
        if (left == 0) {
            int s = 0;
            for (int v : pick) s += v;
            total.add_term(Monomial::q_power(s - k * (k - 1) / 2), 1);
            return;
        }
        for (int v = next; v <= n - left; ++v) {
            pick.push_back(v);
            self(self, v + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, k);
    return total;
}

} // namespace rblock::testing

#endif
