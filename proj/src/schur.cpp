#include "rblock/schur.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rblock/errors.hpp"
#include "rblock/qcalc.hpp"

namespace rblock {

MPoly skew_schur(const Partition& outer, const Partition& inner, int m) {
    if (!contains(inner, outer))
        throw invalid_input("skew Schur: " + inner.to_string() +
                            " not contained in " + outer.to_string());
    if (m < 0) throw invalid_input("skew Schur needs m >= 0");
    const int rows = outer.rows();
    // fill[i][j] holds the entry of cell (i+1, j+1); only cells with
    // inner_i < j <= outer_i exist.
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(outer.part(i + 1), 0);
    std::vector<int> content(m + 1, 0);
    MPoly sum;

    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == rows) {
            std::vector<std::pair<int, int>> xs;
            for (int v = 1; v <= m; ++v)
                if (content[v]) xs.emplace_back(v, content[v]);
            sum.add_term(Monomial(0, 0, std::move(xs)), 1);
            return;
        }
        if (j >= outer.part(i + 1)) {
            rec(i + 1, inner.part(i + 2));
            return;
        }
        int lo = 1;
        if (j > inner.part(i + 1)) lo = std::max(lo, fill[i][j - 1]);
        // Column-strict against the cell above, when that cell is in the shape.
        if (i > 0 && j < outer.part(i) && j >= inner.part(i))
            lo = std::max(lo, fill[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            fill[i][j] = v;
            ++content[v];
            rec(i, j + 1);
            --content[v];
        }
    };
    rec(0, inner.part(1));
    return sum;
}

MPoly principal_spec(const Partition& lambda, int m) {
    if (lambda.rows() > m)
        throw invalid_input("principal specialization: " + lambda.to_string() +
                            " has more than " + std::to_string(m) + " parts");
    if (m < 1) return lambda.empty() ? MPoly::one() : MPoly::zero();
    // prod_{i<j} (q^{l_i} - q^{l_j}) / (q^{j-1} - q^{i-1}) with
    // l_i = lambda_i + m - i; each factor contributes q^{min} (q-1) [diff]_q,
    // and the (q-1)'s cancel pairwise.
    long qexp = 0;
    QProductRatio ratio;
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            int li = lambda.part(i) + m - i;
            int lj = lambda.part(j) + m - j;
            qexp += lj - (i - 1);
            ratio.mul_bracket(li - lj, +1);
            ratio.mul_bracket(j - i, -1);
        }
    }
    if (qexp < 0) throw internal_error("negative q-power in principal specialization");
    return MPoly::q(static_cast<int>(qexp)) * ratio.value();
}

MPoly elementary_sym(int i, int m) {
    if (i < 0 || i > m) return MPoly::zero();
    if (i == 0) return MPoly::one();
    MPoly sum;
    std::vector<int> pick(i);
    std::function<void(int, int)> rec = [&](int pos, int next) {
        if (pos == i) {
            std::vector<std::pair<int, int>> xs;
            for (int v : pick) xs.emplace_back(v, 1);
            sum.add_term(Monomial(0, 0, std::move(xs)), 1);
            return;
        }
        for (int v = next; v <= m - (i - pos - 1); ++v) {
            pick[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return sum;
}

std::vector<Partition> dual_pieri_expand(const Partition& lambda, int i, int m) {
    return vertical_strip_successors(lambda, i, m);
}

std::vector<SkewPieriTerm> skew_dual_pieri_expand(const Partition& lambda,
                                                  const Partition& mu, int i, int m) {
    if (!contains(mu, lambda))
        throw invalid_input("skew dual Pieri: " + mu.to_string() +
                            " not contained in " + lambda.to_string());
    if (i < 0) return {};
    std::vector<SkewPieriTerm> out;
    // Rows of lambda+ are capped at m + rows(mu): deeper shapes have a
    // first column longer than m even after removing mu-, so their skew
    // Schur polynomial vanishes in m variables.
    const int row_cap = m + mu.rows();
    for (int k = 0; k <= i; ++k) {
        auto uppers = vertical_strip_successors(lambda, i - k, row_cap);
        auto lowers = horizontal_strip_predecessors(mu, k);
        for (const auto& up : uppers)
            for (const auto& lo : lowers)
                out.push_back({k % 2 == 0 ? +1 : -1, up, lo});
    }
    return out;
}

std::pair<MPoly, MPoly> split_product_sides(const std::vector<int>& I,
                                            const std::vector<int>& J, int N) {
    if (N < 1) throw invalid_input("split product needs N >= 1");
    std::set<int> seen;
    for (int v : I) seen.insert(v);
    for (int v : J) seen.insert(v);
    if (static_cast<int>(I.size() + J.size()) != N ||
        static_cast<int>(seen.size()) != N || *seen.begin() < 1 ||
        *seen.rbegin() > N)
        throw invalid_input("I and J must partition [N]");

    MPoly lhs = MPoly::one();
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b)
            lhs *= q_int(std::abs(I[b] - I[a]));

    QProductRatio ratio;
    for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = a + 1; b < J.size(); ++b)
            ratio.mul_bracket(std::abs(J[b] - J[a]), +1);
    for (int x = 1; x <= N - 1; ++x) ratio.mul_factorial(x, +1);
    for (int j : J) {
        ratio.mul_factorial(j - 1, -1);
        ratio.mul_factorial(N - j, -1);
    }
    return {lhs, ratio.value()};
}

} // namespace rblock
