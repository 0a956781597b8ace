#ifndef RBLOCK_PLANEPARTITION_HPP
#define RBLOCK_PLANEPARTITION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rblock/mpoly.hpp"
#include "rblock/partition.hpp"

namespace rblock {

// Boxed plane partition: an a x b matrix of entries in [0, c], weakly
// decreasing along rows and columns.
class PlanePartition {
public:
    PlanePartition(std::vector<std::vector<int>> entries, int bound);

    int row_count() const { return static_cast<int>(entries_.size()); }
    int col_count() const {
        return entries_.empty() ? 0 : static_cast<int>(entries_[0].size());
    }
    int bound() const { return bound_; }
    int at(int i, int j) const { return entries_[i][j]; } // 0-based
    const std::vector<std::vector<int>>& entries() const { return entries_; }

    bool is_transpose_symmetric() const;
    std::string to_string() const;
    bool operator==(const PlanePartition&) const = default;

private:
    std::vector<std::vector<int>> entries_;
    int bound_;
};

struct PPWeights {
    long total;        // |pi|
    long diagonal;     // |pi|_d
    long off_diagonal; // |pi|_n
    bool operator==(const PPWeights&) const = default;
};

PPWeights pp_weights(const PlanePartition& pi);
// |pi|' = sum over i <= j (the "half-size" of a symmetric plane partition).
long pp_half_size(const PlanePartition& pi);

struct PPLimits {
    int max_cells = 9; // a*b
    int max_bound = 4; // c
};

// All of PP^c(a x b) in lexicographic (row-major) order.
std::vector<PlanePartition> enumerate_pp(int a, int b, int c, PPLimits limits = {});
void for_each_pp(int a, int b, int c, const std::function<void(const PlanePartition&)>& visit,
                 PPLimits limits = {});

// Transpose symmetry plus the diagonal window rule: pi_{i,i} in {k-1, k}
// whenever i lies in [S_n - S_{k-1}] \ [S_n - S_k].
bool is_r_block_symmetric(const PlanePartition& pi, const BlockProfile& profile, int n);

struct RBlockPPLimits {
    int max_m = 8;
    int max_bound = 8;
};

// Sum of q^{|pi|_n} t^{|pi|_d} over block-symmetric members of PP^n(m x m),
// enumerated directly from the matrix definition (never via tilings).
MPoly r_block_pp_genfun(int m, int n, const BlockProfile& profile,
                        RBlockPPLimits limits = {});

// Volume generating function of PP^c(a x b): sum of q^{|pi|}.
MPoly pp_volume_genfun(int a, int b, int c, PPLimits limits = {});

// Sum of q^{|pi|'} over transpose-symmetric members of PP^n(m x m).
MPoly sym_pp_halfsize_genfun(int m, int n, PPLimits limits = {});

} // namespace rblock

#endif
