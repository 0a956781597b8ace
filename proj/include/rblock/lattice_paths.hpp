#ifndef RBLOCK_LATTICE_PATHS_HPP
#define RBLOCK_LATTICE_PATHS_HPP

#include <utility>
#include <vector>

#include "rblock/mpoly.hpp"
#include "rblock/partition.hpp"

namespace rblock {

// Total (q,t)-weight of east/south lattice paths from (a,b) to the origin,
// where a south step from height y at abscissa x weighs q^{y-x-1} t and east
// steps weigh 1.  Closed form: q^{b(b-1)/2} t^b [b-a choose b]_q; zero when
// a > 0, b < 0 or b < a.
MPoly path_weight_closed(int a, int b);

// Same value by the memoized two-term recurrence
// w(a,b) = w(a+1,b) + q^{b-a-1} t w(a,b-1).
MPoly path_weight_recursive(int a, int b);

class PolyMatrix {
public:
    explicit PolyMatrix(int dim);
    static PolyMatrix identity(int dim);

    int dim() const { return dim_; }
    MPoly& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * dim_ + j]; }
    const MPoly& at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * dim_ + j];
    }

private:
    int dim_;
    std::vector<MPoly> cells_;
};

// Matrix A of merged-endpoint path weights: entry (i,j) is
// sum_{k=0}^{r_j} w((i, m+i) -> (S_{j-1}+j+k, S_{j-1}+j+k)), evaluated via
// translation invariance and the closed form.  det A equals the weighted
// count of r-block diagonally symmetric tilings.
PolyMatrix lgv_matrix(const BlockProfile& profile, int m, int n);

MPoly det_cofactor(const PolyMatrix& mat);
// Fraction-free elimination; every division is exact in Z[q,t,x] or the
// routine throws internal_error.
MPoly det_bareiss(const PolyMatrix& mat);
// Cofactor expansion up to dim 4, Bareiss beyond.
MPoly det_polymatrix(const PolyMatrix& mat);

// Krattenthaler's determinant at integer parameters: returns
// (det(q^{j L_i} [M over L_i + j]_q), closed-form product) for comparison.
std::pair<MPoly, MPoly> krattenthaler_sides(const std::vector<int>& L, int M, int n);

} // namespace rblock

#endif
