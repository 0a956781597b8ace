#ifndef RBLOCK_MPOLY_HPP
#define RBLOCK_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rblock/bigint.hpp"
#include "rblock/monomial.hpp"

namespace rblock {

// Sparse exact-coefficient polynomial in q, t, x1..xm.  Canonical form: the
// term map never stores a zero coefficient, so equality of values is
// equality of maps.  All operations are pure; every value is safe to share
// across threads once constructed.
class MPoly {
public:
    using TermMap = std::map<Monomial, BigInt>;

    MPoly() = default;
    MPoly(long constant); // NOLINT(google-explicit-constructor)
    explicit MPoly(BigInt constant);
    MPoly(Monomial m, BigInt coeff);

    static MPoly zero() { return {}; }
    static MPoly one() { return MPoly(1); }
    static MPoly q(int e = 1) { return {Monomial::q_power(e), 1}; }
    static MPoly t(int e = 1) { return {Monomial::t_power(e), 1}; }
    static MPoly x(int index, int e = 1) { return {Monomial::x_power(index, e), 1}; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(const Monomial& m) const;
    int total_degree() const; // -1 for the zero polynomial
    int max_x_index() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator-() const;
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly& add_term(const Monomial& m, const BigInt& c);
    MPoly pow(unsigned e) const;

    bool operator==(const MPoly& o) const = default;

    // x_k -> q^{k-1} t  (the (q,t)-weight specialization)
    MPoly substitute_qt() const;
    // x_k -> q^{k-1}    (principal specialization)
    MPoly substitute_x_principal() const;
    // q -> q^s, s >= 1
    MPoly substitute_q_power(int s) const;
    // t -> q
    MPoly substitute_t_to_q() const;
    // x_i <-> x_j
    MPoly swap_x(int i, int j) const;
    // q = t = x_k = 1
    BigInt eval_all_ones() const;

    // Multivariate exact division in Z[q,t,x].  try_divide returns nullopt
    // when the divisor does not divide exactly; divide_exact throws
    // internal_error instead (an inexact division here is always a ring bug).
    std::optional<MPoly> try_divide(const MPoly& divisor) const;
    MPoly divide_exact(const MPoly& divisor) const;

    // Canonical text form, terms in descending graded-lex order, e.g.
    // "q*t^2 + q*t + t + 1" or "2*q^2*x1 - x2".  parse() accepts exactly
    // this grammar (plus flexible whitespace) and round-trips to_string().
    std::string to_string() const;
    static MPoly parse(std::string_view text);

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

} // namespace rblock

#endif
