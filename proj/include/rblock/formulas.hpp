#ifndef RBLOCK_FORMULAS_HPP
#define RBLOCK_FORMULAS_HPP

#include "rblock/bigint.hpp"
#include "rblock/mpoly.hpp"
#include "rblock/partition.hpp"
#include "rblock/tiling.hpp"

namespace rblock {

// alpha = sum_i C(S_n - S_i, 2), beta = sum_i (S_n - S_i).
struct AlphaBeta {
    long alpha;
    long beta;
    bool operator==(const AlphaBeta&) const = default;
};
AlphaBeta alpha_beta(const BlockProfile& profile);

// Closed product form of the (q,t) generating function of r-block
// diagonally symmetric tilings of H(m,m,n):
//   prod_{i=1}^m (1 + q^{i-1} t) q^alpha t^beta *
//   prod_{i<j} [S_j-S_i+j-i]_q prod_i [S_n+i-1]_q! /
//   (prod_i [S_i+i-1]_q! [S_n-S_i+n-i]_q!)
MPoly block_qt_product(const BlockProfile& profile);

// The same count unweighted: 2^m times the integer factorial ratio.
BigInt block_count_product(const BlockProfile& profile);

// (q,t) generating function of r-block symmetric plane partitions: the
// block product with q replaced by q^2 (alpha doubled, prefactor in q^2).
MPoly block_pp_qt_product(const BlockProfile& profile);

// Volume generating function of r-block symmetric plane partitions (t := q).
MPoly block_pp_volume_product(const BlockProfile& profile);

// Signed-enumeration identity value: prod (1 + x_i) times the x-weighted
// tiling count of the extremal region T(n+l, m; P_min, P'_max).  Requires
// |r| = m + l and r' = (1^l, 0^{n-l}) with l <= n.
MPoly signed_sum_product(const BlockProfile& profile,
                         const BlockProfile& profile_prime, int m, int n, int l,
                         TilingLimits limits = {});

// MacMahon box product: count and volume generating function of PP^c(a x b).
BigInt macmahon_count(int a, int b, int c);
MPoly macmahon_q(int a, int b, int c);

// Transpose-symmetric boxed plane partitions: half-size generating function
// and plain count.
MPoly sym_pp_q(int m, int n);
BigInt sym_pp_count(int m, int n);

// prod_{k=0}^{n-1} (3k+1)!/(n+k)!  (1, 2, 7, 42, ...).
BigInt asm_count(int n);

} // namespace rblock

#endif
