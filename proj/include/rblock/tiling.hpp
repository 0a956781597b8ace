#ifndef RBLOCK_TILING_HPP
#define RBLOCK_TILING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rblock/mpoly.hpp"
#include "rblock/region.hpp"

namespace rblock {

enum class LozengeKind { horizontal = 0, positive = 1, negative = 2 };

// Two adjacent unit triangles; every lozenge pairs one pointing-left with
// one pointing-right triangle.  The shared edge determines the kind:
//   horizontal : same vertical edge            (long diagonal horizontal)
//   negative   : right at (x-1, u+1)           (long diagonal falls left-to-right)
//   positive   : right at (x-1, u-1)           (long diagonal rises)
struct Lozenge {
    Triangle left;  // the pointing-left member
    Triangle right; // the pointing-right member

    LozengeKind kind() const;
    // Number of full columns strictly between the lozenge's right vertical
    // edge and the boundary line; only meaningful for negative lozenges.
    int column_from_right(int right_line) const { return right_line - left.x; }
    bool operator==(const Lozenge&) const = default;
    auto operator<=>(const Lozenge&) const = default;
};

const char* to_string(LozengeKind k);

struct Tiling {
    std::vector<Lozenge> lozenges; // sorted
    bool operator==(const Tiling&) const = default;
};

struct TilingLimits {
    std::uint64_t max_tilings = 5'000'000;
};

// Deterministic exhaustive backtracking: branch on the least uncovered
// triangle, at most three placements per branch.  Throws size_limit_error
// once more than limits.max_tilings complete tilings have been visited.
void for_each_tiling(const TriangleSet& region,
                     const std::function<void(const Tiling&)>& visit,
                     TilingLimits limits = {});

std::vector<Tiling> enumerate_tilings(const TriangleSet& region,
                                      TilingLimits limits = {});
std::uint64_t count_tilings(const TriangleSet& region, TilingLimits limits = {});

// Checks the partition invariant: lozenges cover every triangle of the
// region exactly once.
bool tiles_region(const Tiling& tiling, const TriangleSet& region);

enum class WeightKind { x, qt };

// Product over negative lozenges of x_{k+1}, k = column_from_right; other
// lozenges weigh 1.
MPoly tiling_weight_x(const Tiling& tiling, const TriangleSet& region);

// Sum of tiling weights over all tilings; qt applies x_k -> q^{k-1} t.
MPoly weighted_region_sum(const TriangleSet& region, WeightKind weight,
                          TilingLimits limits = {});

// M^r summed over all admissible right dent sets of T(n, m; P).
MPoly block_symmetric_sum(const BlockProfile& profile, int m, int n,
                          WeightKind weight, TilingLimits limits = {});

// Signed sum over (P, P') of (-1)^{d'(P')} M_x(T(n+l, m; P, P')).
MPoly signed_block_sum(const BlockProfile& profile, const BlockProfile& profile_prime,
                       int m, int n, int l, TilingLimits limits = {});

struct SymmetricHexagonResult {
    std::uint64_t count = 0;
    MPoly qt_genfun; // sum over tilings of the (q,t)-weight of the left half
};

// Enumerates lozenge tilings of H(m,m,n) that are mirror-symmetric about the
// vertical axis and whose k-th axis cell holds exactly r_k full horizontal
// lozenges.  Works on the hexagon directly; independent of the trapezoid
// decomposition.
SymmetricHexagonResult enumerate_symmetric_hexagon(const BlockProfile& profile,
                                                   int m, int n,
                                                   TilingLimits limits = {});

// Reference implementation: enumerate every tiling of the hexagon and filter
// afterwards.  Only sensible for small hexagons; used to validate the
// incremental version.
SymmetricHexagonResult enumerate_symmetric_hexagon_by_filter(
    const BlockProfile& profile, int m, int n, TilingLimits limits = {});

} // namespace rblock

#endif
