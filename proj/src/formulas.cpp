#include "rblock/formulas.hpp"

#include <string>

#include "rblock/errors.hpp"
#include "rblock/qcalc.hpp"
#include "rblock/region.hpp"

namespace rblock {

AlphaBeta alpha_beta(const BlockProfile& profile) {
    const int n = profile.parts();
    const int total = profile.sum();
    long alpha = 0, beta = 0;
    for (int i = 1; i <= n; ++i) {
        long d = total - profile.partial_sum(i);
        alpha += d * (d - 1) / 2;
        beta += d;
    }
    return {alpha, beta};
}

namespace {

// The bracket ratio shared by the (q,t) product and its plane-partition
// variant.
QProductRatio block_ratio(const BlockProfile& profile) {
    const int n = profile.parts();
    QProductRatio ratio;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            ratio.mul_bracket(profile.partial_sum(j) - profile.partial_sum(i) + j - i);
    for (int i = 1; i <= n; ++i) {
        ratio.mul_factorial(profile.sum() + i - 1, +1);
        ratio.mul_factorial(profile.partial_sum(i) + i - 1, -1);
        ratio.mul_factorial(profile.sum() - profile.partial_sum(i) + n - i, -1);
    }
    return ratio;
}

} // namespace

MPoly block_qt_product(const BlockProfile& profile) {
    const int m = profile.sum();
    auto [alpha, beta] = alpha_beta(profile);
    MPoly result(Monomial(static_cast<int>(alpha), static_cast<int>(beta)), 1);
    for (int i = 1; i <= m; ++i)
        result *= MPoly::one() + MPoly(Monomial(i - 1, 1), 1);
    return result * block_ratio(profile).value();
}

BigInt block_count_product(const BlockProfile& profile) {
    const int n = profile.parts();
    const int m = profile.sum();
    BigInt num = BigInt::two_pow(static_cast<unsigned long>(m));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j)
            num *= BigInt(profile.partial_sum(j) - profile.partial_sum(i) + j - i);
        num *= BigInt::factorial(static_cast<unsigned long>(m + i - 1));
    }
    BigInt den(1);
    for (int i = 1; i <= n; ++i) {
        den *= BigInt::factorial(
            static_cast<unsigned long>(profile.partial_sum(i) + i - 1));
        den *= BigInt::factorial(
            static_cast<unsigned long>(m - profile.partial_sum(i) + n - i));
    }
    return num.div_exact(den);
}

MPoly block_pp_qt_product(const BlockProfile& profile) {
    const int m = profile.sum();
    auto [alpha, beta] = alpha_beta(profile);
    MPoly result(Monomial(static_cast<int>(2 * alpha), static_cast<int>(beta)), 1);
    for (int i = 1; i <= m; ++i)
        result *= MPoly::one() + MPoly(Monomial(2 * i - 2, 1), 1);
    return result * block_ratio(profile).value().substitute_q_power(2);
}

MPoly block_pp_volume_product(const BlockProfile& profile) {
    const int m = profile.sum();
    auto [alpha, beta] = alpha_beta(profile);
    MPoly result = MPoly::q(static_cast<int>(2 * alpha + beta));
    for (int i = 1; i <= m; ++i) result *= MPoly::one() + MPoly::q(2 * i - 1);
    return result * block_ratio(profile).value().substitute_q_power(2);
}

MPoly signed_sum_product(const BlockProfile& profile,
                         const BlockProfile& profile_prime, int m, int n, int l,
                         TilingLimits limits) {
    if (l < 0 || l > n)
        throw invalid_input("signed-sum product needs 0 <= l <= n");
    if (profile.parts() != n || profile.sum() != m + l)
        throw invalid_input("profile " + profile.to_string() +
                            " must have n parts summing to m + l");
    if (profile_prime.parts() != n)
        throw invalid_input("left profile must have n parts");
    for (int k = 1; k <= n; ++k) {
        int expect = k <= l ? 1 : 0;
        if (profile_prime.r(k) != expect)
            throw invalid_input("left profile must be (1^l, 0^{n-l}), got " +
                                profile_prime.to_string());
    }
    auto [Pmin, Ppmax] = extremal_dents(profile, profile_prime);
    TrapezoidRegion trap(n + l, m, Pmin, Ppmax);
    MPoly base = weighted_region_sum(trap.triangles(), WeightKind::x, limits);
    for (int i = 1; i <= m; ++i) base *= MPoly::one() + MPoly::x(i);
    return base;
}

BigInt macmahon_count(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw invalid_input("box sides must be positive integers");
    BigInt num(1), den(1);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) {
            num *= BigInt(c + i + j - 1);
            den *= BigInt(i + j - 1);
        }
    return num.div_exact(den);
}

MPoly macmahon_q(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw invalid_input("box sides must be positive integers");
    QProductRatio ratio;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) {
            ratio.mul_bracket(c + i + j - 1, +1);
            ratio.mul_bracket(i + j - 1, -1);
        }
    return ratio.value();
}

MPoly sym_pp_q(int m, int n) {
    if (m < 1 || n < 1)
        throw invalid_input("symmetric box needs m, n >= 1");
    QProductRatio ratio;
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            ratio.mul_bracket(n + i + j - 1, +1);
            ratio.mul_bracket(i + j - 1, -1);
        }
    return ratio.value();
}

BigInt sym_pp_count(int m, int n) {
    if (m < 1 || n < 1)
        throw invalid_input("symmetric box needs m, n >= 1");
    BigInt num(1), den(1);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            num *= BigInt(n + i + j - 1);
            den *= BigInt(i + j - 1);
        }
    return num.div_exact(den);
}

BigInt asm_count(int n) {
    if (n < 1) throw invalid_input("need n >= 1");
    BigInt num(1), den(1);
    for (int k = 0; k < n; ++k) {
        num *= BigInt::factorial(static_cast<unsigned long>(3 * k + 1));
        den *= BigInt::factorial(static_cast<unsigned long>(n + k));
    }
    return num.div_exact(den);
}

} // namespace rblock
