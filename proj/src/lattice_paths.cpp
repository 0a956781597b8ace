#include "rblock/lattice_paths.hpp"

#include <functional>
#include <map>
#include <string>

#include "rblock/errors.hpp"
#include "rblock/qcalc.hpp"

namespace rblock {

MPoly path_weight_closed(int a, int b) {
    if (a > 0 || b < 0 || b < a) return MPoly::zero();
    return MPoly(Monomial(b * (b - 1) / 2, b), 1) * q_binomial(b - a, b);
}

MPoly path_weight_recursive(int a, int b) {
    static thread_local std::map<std::pair<int, int>, MPoly> memo;
    if (a > 0 || b < 0 || b < a) return MPoly::zero();
    if (a == 0 && b == 0) return MPoly::one();
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    MPoly v = path_weight_recursive(a + 1, b);
    if (b >= 1) v += MPoly(Monomial(b - a - 1, 1), 1) * path_weight_recursive(a, b - 1);
    memo.emplace(std::pair{a, b}, v);
    return v;
}

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw invalid_input("matrix dimension must be >= 1");
    cells_.resize(static_cast<std::size_t>(dim) * dim);
}

PolyMatrix PolyMatrix::identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = MPoly::one();
    return m;
}

PolyMatrix lgv_matrix(const BlockProfile& profile, int m, int n) {
    if (profile.sum() != m || profile.parts() != n)
        throw invalid_input("profile " + profile.to_string() +
                            " does not match m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
    PolyMatrix A(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            MPoly entry;
            for (int k = 0; k <= profile.r(j); ++k) {
                int v = profile.partial_sum(j - 1) + j + k;
                entry += path_weight_closed(i - v, m + i - v);
            }
            A.at(i - 1, j - 1) = std::move(entry);
        }
    }
    return A;
}

MPoly det_cofactor(const PolyMatrix& mat) {
    const int n = mat.dim();
    if (n == 1) return mat.at(0, 0);
    // Expand along the first column, skipping zero entries.
    MPoly det;
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    std::function<MPoly(std::vector<int>, int)> rec =
        [&](std::vector<int> live, int col) -> MPoly {
        if (live.size() == 1) return mat.at(live[0], col);
        MPoly acc;
        for (std::size_t k = 0; k < live.size(); ++k) {
            const MPoly& pivot = mat.at(live[k], col);
            if (pivot.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(live.size() - 1);
            for (std::size_t t = 0; t < live.size(); ++t)
                if (t != k) rest.push_back(live[t]);
            MPoly sub = rec(std::move(rest), col + 1);
            if (k % 2 == 0)
                acc += pivot * sub;
            else
                acc -= pivot * sub;
        }
        return acc;
    };
    return rec(rows, 0);
}

MPoly det_bareiss(const PolyMatrix& mat) {
    const int n = mat.dim();
    PolyMatrix B = mat;
    MPoly prev = MPoly::one();
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (B.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!B.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return MPoly::zero();
            for (int c = 0; c < n; ++c) std::swap(B.at(k, c), B.at(swap_row, c));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MPoly num = B.at(k, k) * B.at(i, j) - B.at(i, k) * B.at(k, j);
                B.at(i, j) = num.divide_exact(prev);
            }
            B.at(i, k) = MPoly::zero();
        }
        prev = B.at(k, k);
    }
    MPoly det = B.at(n - 1, n - 1);
    return negate ? -det : det;
}

MPoly det_polymatrix(const PolyMatrix& mat) {
    return mat.dim() <= 4 ? det_cofactor(mat) : det_bareiss(mat);
}

std::pair<MPoly, MPoly> krattenthaler_sides(const std::vector<int>& L, int M, int n) {
    if (n < 1 || static_cast<int>(L.size()) != n)
        throw invalid_input("need n >= 1 values L_1..L_n");
    for (int i = 0; i < n; ++i) {
        if (M - L[i] - 1 < 0 || L[i] < 0)
            throw invalid_input("parameters out of range: need 0 <= L_i <= M - 1");
        if (i > 0 && L[i] > L[i - 1])
            throw invalid_input("parameters out of range: L must be weakly decreasing");
    }
    PolyMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            A.at(i, j - 1) = MPoly::q(j * L[i]) * q_binomial(M, L[i] + j);
    MPoly lhs = det_polymatrix(A);

    long qexp = 0;
    for (int i = 0; i < n; ++i) qexp += static_cast<long>(i + 1) * L[i];
    QProductRatio ratio;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ratio.mul_bracket(L[i] - L[j]);
    for (int i = 0; i < n; ++i) {
        ratio.mul_factorial(L[i] + n, -1);
        ratio.mul_factorial(M + i, +1); // [M + i - 1]! at 1-based i
        ratio.mul_factorial(M - L[i] - 1, -1);
    }
    MPoly rhs = MPoly::q(static_cast<int>(qexp)) * ratio.value();
    return {lhs, rhs};
}

} // namespace rblock
