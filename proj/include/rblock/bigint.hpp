#ifndef RBLOCK_BIGINT_HPP
#define RBLOCK_BIGINT_HPP

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rblock {

// Arbitrary-precision signed integer with value semantics.  Backed by GMP;
// the wrapper keeps the surface down to what the generating functions need
// (exact +,-,*, exact division with a divisibility check, powers,
// factorials, decimal I/O).
class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); } // NOLINT(google-explicit-constructor)
    explicit BigInt(std::string_view decimal);

    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(long n) {
        mpz_mul_si(v_, v_, n);
        return *this;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return mpz_cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = mpz_cmp(a.v_, b.v_);
        return c <=> 0;
    }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool is_odd() const { return mpz_odd_p(v_) != 0; }

    bool divisible_by(const BigInt& d) const;
    // Exact quotient; throws internal_error if *this is not a multiple of d.
    BigInt div_exact(const BigInt& d) const;

    static BigInt pow(const BigInt& base, unsigned long e);
    static BigInt two_pow(unsigned long e);
    static BigInt factorial(unsigned long n);
    static BigInt binomial(unsigned long n, unsigned long k);

    std::string to_string() const;
    // Narrowing accessor for tests / CLI; throws invalid_input on overflow.
    long to_long() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    mpz_t v_;
};

} // namespace rblock

#endif
