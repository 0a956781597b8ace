#ifndef RBLOCK_MONOMIAL_HPP
#define RBLOCK_MONOMIAL_HPP

#include <compare>
#include <utility>
#include <vector>

namespace rblock {

// Power product q^a t^b x_{i1}^{e1} x_{i2}^{e2} ...  The x part is a sparse
// exponent list sorted by variable index (1-based), zero exponents never
// stored.  Monomials are totally ordered graded-lexicographically on
// (total degree, q, t, x1, x2, ...), which fixes the canonical term order of
// every polynomial in the project.
class Monomial {
public:
    Monomial() = default;
    Monomial(int q_exp, int t_exp) : q_(q_exp), t_(t_exp) {}
    Monomial(int q_exp, int t_exp, std::vector<std::pair<int, int>> x_exps);

    static Monomial q_power(int e) { return {e, 0}; }
    static Monomial t_power(int e) { return {0, e}; }
    static Monomial x_power(int index, int e);

    int q() const { return q_; }
    int t() const { return t_; }
    const std::vector<std::pair<int, int>>& x() const { return x_; }
    int x_exponent(int index) const;
    int max_x_index() const { return x_.empty() ? 0 : x_.back().first; }

    int total_degree() const;
    bool is_unit() const { return q_ == 0 && t_ == 0 && x_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Componentwise difference o = *this * result; caller checks divides().
    Monomial divide_into(const Monomial& numerator) const;

    bool operator==(const Monomial& o) const = default;
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    int q_ = 0;
    int t_ = 0;
    std::vector<std::pair<int, int>> x_; // (index, exponent), index ascending
};

} // namespace rblock

#endif
