#ifndef RBLOCK_SCHUR_HPP
#define RBLOCK_SCHUR_HPP

#include <utility>
#include <vector>

#include "rblock/mpoly.hpp"
#include "rblock/partition.hpp"

namespace rblock {

// Skew Schur polynomial s_{outer/inner}(x_1..x_m) by direct semistandard
// tableau enumeration (entries <= m, rows weakly increase, columns strictly
// increase).  Throws if inner is not contained in outer; the zero polynomial
// falls out naturally when some column of the shape is deeper than m.
MPoly skew_schur(const Partition& outer, const Partition& inner, int m);

// s_lambda(q^0, ..., q^{m-1}) via the product formula, evaluated with exact
// bracket cancellation.  Requires lambda to have at most m parts.
MPoly principal_spec(const Partition& lambda, int m);

// i-th elementary symmetric polynomial in m variables; e_0 = 1, zero for
// i < 0 or i > m.
MPoly elementary_sym(int i, int m);

// Expansion partitions of s_lambda * e_i: all lambda+ with lambda+/lambda an
// i-vertical strip and at most m rows, descending lex order.
std::vector<Partition> dual_pieri_expand(const Partition& lambda, int i, int m);

struct SkewPieriTerm {
    int sign; // +1 or -1
    Partition outer; // lambda+
    Partition inner; // mu-
    bool operator==(const SkewPieriTerm&) const = default;
};

// Signed expansion of s_{lambda/mu} * e_i: over k = 0..i, sign (-1)^k, with
// lambda+/lambda an (i-k)-vertical strip (rows capped at m + rows(mu)) and
// mu/mu- a k-horizontal strip.
std::vector<SkewPieriTerm> skew_dual_pieri_expand(const Partition& lambda,
                                                  const Partition& mu, int i, int m);

// Both sides of the split-product identity for a set partition I ∪ J = [N]:
// LHS = prod over pairs in I of [i2-i1]_q; RHS = the same product over J
// times a factorial ratio.
std::pair<MPoly, MPoly> split_product_sides(const std::vector<int>& I,
                                            const std::vector<int>& J, int N);

} // namespace rblock

#endif
