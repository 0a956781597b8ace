#include "rblock/planepartition.hpp"

#include <algorithm>

#include "rblock/errors.hpp"

namespace rblock {

PlanePartition::PlanePartition(std::vector<std::vector<int>> entries, int bound)
    : entries_(std::move(entries)), bound_(bound) {
    if (entries_.empty() || entries_[0].empty() || bound_ < 0)
        throw invalid_input("plane partition needs a nonempty matrix and bound >= 0");
    const std::size_t cols = entries_[0].size();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != cols)
            throw invalid_input("plane partition rows have unequal length");
        for (std::size_t j = 0; j < cols; ++j) {
            int v = entries_[i][j];
            if (v < 0 || v > bound_)
                throw invalid_input("plane partition entry outside [0, c]");
            if (j > 0 && entries_[i][j - 1] < v)
                throw invalid_input("plane partition rows must weakly decrease");
            if (i > 0 && entries_[i - 1][j] < v)
                throw invalid_input("plane partition columns must weakly decrease");
        }
    }
}

bool PlanePartition::is_transpose_symmetric() const {
    if (row_count() != col_count()) return false;
    for (int i = 0; i < row_count(); ++i)
        for (int j = 0; j < i; ++j)
            if (entries_[i][j] != entries_[j][i]) return false;
    return true;
}

std::string PlanePartition::to_string() const {
    std::string s;
    for (const auto& row : entries_) {
        s += '[';
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(row[j]);
        }
        s += ']';
    }
    return s;
}

PPWeights pp_weights(const PlanePartition& pi) {
    long total = 0, diag = 0;
    for (int i = 0; i < pi.row_count(); ++i)
        for (int j = 0; j < pi.col_count(); ++j) {
            total += pi.at(i, j);
            if (i == j) diag += pi.at(i, j);
        }
    return {total, diag, total - diag};
}

long pp_half_size(const PlanePartition& pi) {
    long s = 0;
    for (int i = 0; i < pi.row_count(); ++i)
        for (int j = i; j < pi.col_count(); ++j) s += pi.at(i, j);
    return s;
}

void for_each_pp(int a, int b, int c,
                 const std::function<void(const PlanePartition&)>& visit,
                 PPLimits limits) {
    if (a < 1 || b < 1 || c < 0)
        throw invalid_input("plane partition box needs a, b >= 1 and c >= 0");
    if (a * b > limits.max_cells || c > limits.max_bound)
        throw size_limit_error("plane partition box " + std::to_string(a) + "x" +
                               std::to_string(b) + "x" + std::to_string(c) +
                               " exceeds the enumeration guard (a*b <= " +
                               std::to_string(limits.max_cells) +
                               ", c <= " + std::to_string(limits.max_bound) + ")");
    std::vector<std::vector<int>> mat(a, std::vector<int>(b, 0));
    // Row-major fill; each entry ranges over 0..min(above, left), ascending,
    // which makes the visit order lexicographic.
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == a) {
            visit(PlanePartition(mat, c));
            return;
        }
        int ni = j + 1 == b ? i + 1 : i;
        int nj = j + 1 == b ? 0 : j + 1;
        int cap = c;
        if (i > 0) cap = std::min(cap, mat[i - 1][j]);
        if (j > 0) cap = std::min(cap, mat[i][j - 1]);
        for (int v = 0; v <= cap; ++v) {
            mat[i][j] = v;
            rec(ni, nj);
        }
        mat[i][j] = 0;
    };
    rec(0, 0);
}

std::vector<PlanePartition> enumerate_pp(int a, int b, int c, PPLimits limits) {
    std::vector<PlanePartition> out;
    for_each_pp(a, b, c, [&](const PlanePartition& p) { out.push_back(p); }, limits);
    return out;
}

namespace {

// The window of admissible diagonal values: pi_{i,i} in {k-1, k} where k is
// the unique index with S_n - S_k < i <= S_n - S_{k-1}.
int diagonal_window(const BlockProfile& profile, int i) {
    const int n = profile.parts();
    const int total = profile.sum();
    for (int k = 1; k <= n; ++k)
        if (total - profile.partial_sum(k) < i && i <= total - profile.partial_sum(k - 1))
            return k;
    throw internal_error("diagonal index outside every block window");
}

} // namespace

bool is_r_block_symmetric(const PlanePartition& pi, const BlockProfile& profile,
                          int n) {
    const int m = profile.sum();
    if (pi.row_count() != m || pi.col_count() != m || pi.bound() != n)
        throw invalid_input("plane partition shape does not match the profile: need " +
                            std::to_string(m) + "x" + std::to_string(m) +
                            " with bound " + std::to_string(n));
    if (!pi.is_transpose_symmetric()) return false;
    for (int i = 1; i <= m; ++i) {
        int k = diagonal_window(profile, i);
        int v = pi.at(i - 1, i - 1);
        if (v != k - 1 && v != k) return false;
    }
    return true;
}

MPoly r_block_pp_genfun(int m, int n, const BlockProfile& profile,
                        RBlockPPLimits limits) {
    if (profile.sum() != m || profile.parts() != n)
        throw invalid_input("profile " + profile.to_string() +
                            " does not match m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
    if (m > limits.max_m || n > limits.max_bound)
        throw size_limit_error("block-symmetric enumeration guard: m <= " +
                               std::to_string(limits.max_m) + ", n <= " +
                               std::to_string(limits.max_bound));
    // A symmetric matrix is determined by its upper triangle; monotonicity of
    // the full matrix reduces to row monotonicity within the triangle plus
    // column monotonicity where the cell above is still in the triangle.
    std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
    MPoly sum;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == m) {
            long total = 0, diag = 0;
            for (int r = 0; r < m; ++r) {
                diag += mat[r][r];
                total += mat[r][r];
                for (int c = r + 1; c < m; ++c) total += 2 * mat[r][c];
            }
            sum.add_term(Monomial(static_cast<int>(total - diag),
                                  static_cast<int>(diag)),
                         1);
            return;
        }
        int ni = j + 1 == m ? i + 1 : i;
        int nj = j + 1 == m ? i + 1 : j + 1;
        int cap = n;
        if (j > i) cap = std::min(cap, mat[i][j - 1]);
        if (i > 0) cap = std::min(cap, mat[i - 1][j]);
        int lo = 0;
        if (i == j) {
            int k = diagonal_window(profile, i + 1);
            lo = std::max(lo, k - 1);
            cap = std::min(cap, k);
        }
        for (int v = lo; v <= cap; ++v) {
            mat[i][j] = v;
            if (j > i) mat[j][i] = v;
            rec(ni, nj);
        }
        mat[i][j] = 0;
        if (j > i) mat[j][i] = 0;
    };
    rec(0, 0);
    return sum;
}

MPoly pp_volume_genfun(int a, int b, int c, PPLimits limits) {
    MPoly sum;
    for_each_pp(
        a, b, c,
        [&](const PlanePartition& p) {
            sum.add_term(Monomial::q_power(static_cast<int>(pp_weights(p).total)), 1);
        },
        limits);
    return sum;
}

MPoly sym_pp_halfsize_genfun(int m, int n, PPLimits limits) {
    MPoly sum;
    for_each_pp(
        m, m, n,
        [&](const PlanePartition& p) {
            if (p.is_transpose_symmetric())
                sum.add_term(Monomial::q_power(static_cast<int>(pp_half_size(p))), 1);
        },
        limits);
    return sum;
}

} // namespace rblock
