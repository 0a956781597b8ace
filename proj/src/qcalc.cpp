#include "rblock/qcalc.hpp"

#include <string>
#include <utility>

#include "rblock/errors.hpp"

namespace rblock {

MPoly q_int(int k) {
    MPoly r;
    for (int i = 0; i < k; ++i) r.add_term(Monomial::q_power(i), 1);
    return r;
}

MPoly q_factorial(int k) {
    if (k < 0) throw invalid_input("q-factorial of a negative integer");
    MPoly r = MPoly::one();
    for (int i = 2; i <= k; ++i) r *= q_int(i);
    return r;
}

MPoly q_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return MPoly::zero();
    if (k == 0 || k == n) return MPoly::one();
    // Cached across calls; the table only ever holds desk-scale entries.
    static thread_local std::map<std::pair<int, int>, MPoly> memo;
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    MPoly v = q_binomial(n - 1, k) + MPoly::q(n - k) * q_binomial(n - 1, k - 1);
    memo.emplace(std::pair{n, k}, v);
    return v;
}

QProductRatio& QProductRatio::mul_bracket(int k, int mult) {
    if (mult != 0) mult_[k] += mult;
    return *this;
}

QProductRatio& QProductRatio::mul_factorial(int k, int mult) {
    if (k < 0)
        throw invalid_input("q-factorial of a negative integer in product");
    for (int i = 2; i <= k; ++i) mul_bracket(i, mult);
    return *this;
}

MPoly QProductRatio::value() const {
    // [k]_q = 0 for k <= 0: poisons a denominator, annihilates a numerator.
    for (const auto& [k, m] : mult_)
        if (k <= 0 && m < 0)
            throw internal_error("zero q-bracket [" + std::to_string(k) +
                                 "] in a denominator");
    for (const auto& [k, m] : mult_)
        if (k <= 0 && m > 0) return MPoly::zero();

    MPoly num = MPoly::one();
    MPoly den = MPoly::one();
    for (const auto& [k, m] : mult_) {
        if (m == 0 || k == 1) continue; // [1]_q = 1
        MPoly b = q_int(k).pow(static_cast<unsigned>(m > 0 ? m : -m));
        if (m > 0)
            num *= b;
        else
            den *= b;
    }
    if (den == MPoly::one()) return num;
    return num.divide_exact(den);
}

} // namespace rblock
