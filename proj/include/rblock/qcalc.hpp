#ifndef RBLOCK_QCALC_HPP
#define RBLOCK_QCALC_HPP

#include <map>

#include "rblock/mpoly.hpp"

namespace rblock {

// [k]_q = 1 + q + ... + q^{k-1}; zero for k <= 0.
MPoly q_int(int k);

// [k]_q! = [k]_q [k-1]_q ... [1]_q with [0]_q! = 1.  Negative k is an error.
MPoly q_factorial(int k);

// Gaussian binomial [n k]_q, computed by the division-free Pascal-type
// recurrence [n k] = [n-1 k] + q^{n-k} [n-1 k-1]; zero unless n >= k >= 0.
MPoly q_binomial(int n, int k);

// A formal product PROD [k]_q^{m_k} over integers k with multiplicities of
// either sign, materialized into an exact polynomial.  Identical brackets
// cancel first ([1]_q is a unit); whatever denominator survives is removed
// by one exact polynomial division.  If the ratio is not a polynomial the
// materialization throws internal_error - every ratio assembled by the
// closed-form evaluators is a polynomial when the input is admissible.
class QProductRatio {
public:
    QProductRatio& mul_bracket(int k, int mult = 1);
    QProductRatio& mul_factorial(int k, int mult = 1);
    MPoly value() const;

private:
    std::map<int, int> mult_;
};

} // namespace rblock

#endif
