#ifndef RBLOCK_REGION_HPP
#define RBLOCK_REGION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "rblock/partition.hpp"

namespace rblock {

// Unit triangles on the triangular lattice with one vertical line family.
//
// Coordinates: vertical lattice lines sit at integer abscissa x (regions
// live at x <= 0, with the right boundary on x = 0).  Heights are measured
// in HALF-units u (doubled), so every lattice vertex is an integer pair
// (x, u) with u =	x (mod 2).  A unit triangle is determined by its unique
// vertical edge - the segment from (x, u) to (x, u+2) - plus the side its
// apex is on:
//
//   pointing left  : apex at (x-1, u+1), body between lines x-1 and x
//   pointing right : apex at (x+1, u+1), body between lines x and x+1
//
// The "left-pointing" boundary triangles along a right boundary are
// exactly the pointing-left ones whose vertical edge lies on that boundary
// line.
enum class Pointing : std::uint8_t { left = 0, right = 1 };

struct Triangle {
    int x = 0;
    int u = 0;
    Pointing pointing = Pointing::left;

    bool operator==(const Triangle&) const = default;
    // (row, column-from-right, orientation): the tiler branches on the
    // least uncovered triangle in this order.
    auto key() const { return std::tuple(u, -x, static_cast<int>(pointing)); }
    friend std::strong_ordering operator<=>(const Triangle& a, const Triangle& b) {
        return a.key() <=> b.key();
    }
};

// A region materialized as its sorted triangle set.  `right_line` is the
// lattice line weights are measured from (column k of a negative lozenge =
// number of full columns between its right edge and that line).  `dents`
// records boundary triangles that were removed, for rendering.
struct TriangleSet {
    std::vector<Triangle> triangles; // sorted, unique
    int right_line = 0;
    std::vector<Triangle> dents;
    std::string label;

    int count_pointing(Pointing p) const;
    bool is_balanced() const {
        return count_pointing(Pointing::left) == count_pointing(Pointing::right);
    }
    int index_of(const Triangle& t) const; // -1 if absent
};

// Hexagon H(a,b,c): sides a,b,c,a,b,c clockwise from the top-left oblique
// side; the c-sides are vertical.  Right vertical side on x = 0 spanning
// u in [0, 2c].
struct HexagonRegion {
    int a, b, c;
    HexagonRegion(int a_, int b_, int c_);
    TriangleSet triangles() const;
    std::string to_string() const;
};

// Trapezoid T(height, width): left vertical side `height`, right vertical
// side `height + width`, oblique top and bottom of length `width`.  The
// right boundary is x = 0 with left-pointing triangles labelled 1..w+h
// bottom-to-top; the left boundary is x = -width with right-pointing
// triangles labelled 1..h bottom-to-top.  Dent labels are removed from the
// triangle set.
struct TrapezoidRegion {
    int height;
    int width;
    std::vector<int> right_dents; // P, strictly increasing labels
    std::vector<int> left_dents;  // P', strictly increasing labels

    TrapezoidRegion(int height_, int width_, std::vector<int> P,
                    std::vector<int> Pprime = {});
    TriangleSet triangles() const;
    std::string to_string() const;
};

// All P subseteq [m_plus_n] with |P ∩ ([S_k+k] \ [S_{k-1}+k-1])| = r_k for
// every k, in lexicographic order.  Requires sum(r) + parts(r) == m_plus_n.
std::vector<std::vector<int>> right_dent_sets(const BlockProfile& profile,
                                              int m_plus_n);

// Same window condition for the left boundary: P' subseteq [n_plus_l] with
// |P' ∩ ([S'_k+k] \ [S'_{k-1}+k-1])| = r'_k.
std::vector<std::vector<int>> left_dent_sets(const BlockProfile& profile,
                                             int n_plus_l);

// P_min = [N] \ {S_k + k}: the window-wise minimal admissible label set.
std::vector<int> min_right_dents(const BlockProfile& profile);
// P'_max = [N] \ {S'_{k-1} + k}: the window-wise maximal admissible set.
std::vector<int> max_left_dents(const BlockProfile& profile);
// Convenience pair (P_min of `profile`, P'_max of `profile_prime`).
std::pair<std::vector<int>, std::vector<int>> extremal_dents(
    const BlockProfile& profile, const BlockProfile& profile_prime);

enum class DentDirection { above_min, below_max };

// d(P) = sum(P) - sum(P_ref) or d'(P') = sum(P_ref) - sum(P').
int dent_distance(const std::vector<int>& dents, const std::vector<int>& reference,
                  DentDirection direction);

} // namespace rblock

#endif
