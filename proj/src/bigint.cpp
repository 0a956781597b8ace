#include "rblock/bigint.hpp"

#include <climits>
#include <ostream>

#include "rblock/errors.hpp"

namespace rblock {

BigInt::BigInt(std::string_view decimal) {
    std::string s(decimal);
    if (s.empty() || mpz_init_set_str(v_, s.c_str(), 10) != 0) {
        mpz_clear(v_);
        mpz_init(v_);
        throw invalid_input("not a decimal integer: '" + s + "'");
    }
}

bool BigInt::divisible_by(const BigInt& d) const {
    if (d.is_zero()) return false;
    return mpz_divisible_p(v_, d.v_) != 0;
}

BigInt BigInt::div_exact(const BigInt& d) const {
    if (!divisible_by(d))
        throw internal_error("inexact integer division: " + to_string() + " / " +
                             d.to_string());
    BigInt r;
    mpz_divexact(r.v_, v_, d.v_);
    return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.v_, base.v_, e);
    return r;
}

BigInt BigInt::two_pow(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.v_, 2, e);
    return r;
}

BigInt BigInt::factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.v_, n);
    return r;
}

BigInt BigInt::binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.v_, n, k);
    return r;
}

std::string BigInt::to_string() const {
    char* raw = mpz_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

long BigInt::to_long() const {
    if (!mpz_fits_slong_p(v_))
        throw invalid_input("integer too large for a machine word: " + to_string());
    return mpz_get_si(v_);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
}

} // namespace rblock
