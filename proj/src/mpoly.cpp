#include "rblock/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "rblock/errors.hpp"

namespace rblock {

MPoly::MPoly(long constant) {
    if (constant != 0) terms_.emplace(Monomial{}, BigInt(constant));
}

MPoly::MPoly(BigInt constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

MPoly::MPoly(Monomial m, BigInt coeff) {
    if (!coeff.is_zero()) terms_.emplace(std::move(m), std::move(coeff));
}

BigInt MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

int MPoly::max_x_index() const {
    int m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_x_index());
    return m;
}

MPoly& MPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::one();
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

MPoly MPoly::substitute_qt() const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        int dq = m.q(), dt = m.t();
        for (const auto& [idx, e] : m.x()) {
            dq += (idx - 1) * e;
            dt += e;
        }
        r.add_term(Monomial(dq, dt), c);
    }
    return r;
}

MPoly MPoly::substitute_x_principal() const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        int dq = m.q();
        for (const auto& [idx, e] : m.x()) dq += (idx - 1) * e;
        r.add_term(Monomial(dq, m.t()), c);
    }
    return r;
}

MPoly MPoly::substitute_q_power(int s) const {
    if (s < 1) throw invalid_input("q-power substitution needs s >= 1");
    MPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial n(m.q() * s, m.t(), m.x());
        r.add_term(n, c);
    }
    return r;
}

MPoly MPoly::substitute_t_to_q() const {
    MPoly r;
    for (const auto& [m, c] : terms_)
        r.add_term(Monomial(m.q() + m.t(), 0, m.x()), c);
    return r;
}

MPoly MPoly::swap_x(int i, int j) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<int, int>> xs;
        xs.reserve(m.x().size());
        for (const auto& [idx, e] : m.x())
            xs.emplace_back(idx == i ? j : idx == j ? i : idx, e);
        r.add_term(Monomial(m.q(), m.t(), std::move(xs)), c);
    }
    return r;
}

BigInt MPoly::eval_all_ones() const {
    BigInt s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::optional<MPoly> MPoly::try_divide(const MPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    MPoly quotient;
    MPoly rem = *this;
    const auto& dlead = *divisor.terms_.rbegin(); // largest monomial
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!dlead.first.divides(rlead.first)) return std::nullopt;
        if (!rlead.second.divisible_by(dlead.second)) return std::nullopt;
        Monomial qm = dlead.first.divide_into(rlead.first);
        BigInt qc = rlead.second.div_exact(dlead.second);
        quotient.add_term(qm, qc);
        rem -= MPoly(qm, qc) * divisor;
    }
    return quotient;
}

MPoly MPoly::divide_exact(const MPoly& divisor) const {
    auto q = try_divide(divisor);
    if (!q)
        throw internal_error("inexact polynomial division: (" + to_string() +
                             ") / (" + divisor.to_string() + ")");
    return *q;
}

namespace {

void append_var(std::string& out, const char* name, int e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) out += '*';
    first_factor = false;
    out += name;
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
}

std::string term_body(const Monomial& m, const BigInt& abs_coeff) {
    std::string out;
    bool first = true;
    if (!(abs_coeff == BigInt(1)) || m.is_unit()) {
        out += abs_coeff.to_string();
        first = false;
    }
    append_var(out, "q", m.q(), first);
    append_var(out, "t", m.t(), first);
    for (const auto& [idx, e] : m.x()) {
        std::string name = "x" + std::to_string(idx);
        append_var(out, name.c_str(), e, first);
    }
    return out;
}

} // namespace

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        bool negative = it->second.sign() < 0;
        BigInt abs = negative ? -it->second : it->second;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_body(it->first, abs);
    }
    return out;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    [[noreturn]] void fail(const std::string& why) {
        throw invalid_input("polynomial parse error at offset " +
                            std::to_string(pos) + ": " + why);
    }

    std::string read_digits() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(s.substr(start, pos - start));
    }

    int read_exponent() {
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip_ws();
            return std::stoi(read_digits());
        }
        return 1;
    }

    // One term: [coeff] [* var^e]... ; returns (monomial, coefficient).
    std::pair<Monomial, BigInt> read_term() {
        skip_ws();
        BigInt coeff(1);
        bool saw_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = BigInt(read_digits());
            saw_coeff = true;
        }
        int qe = 0, te = 0;
        std::vector<std::pair<int, int>> xs;
        bool expect_factor = !saw_coeff;
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                expect_factor = true;
                skip_ws();
            }
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == 'q') {
                ++pos;
                qe += read_exponent();
            } else if (c == 't') {
                ++pos;
                te += read_exponent();
            } else if (c == 'x') {
                ++pos;
                int idx = std::stoi(read_digits());
                int e = read_exponent();
                xs.emplace_back(idx, e);
            } else if (expect_factor && !saw_coeff) {
                fail("expected a factor");
            } else {
                break;
            }
            expect_factor = false;
            saw_coeff = true;
        }
        if (!saw_coeff) fail("empty term");
        // Merge duplicate variables like x1*x1.
        std::sort(xs.begin(), xs.end());
        std::vector<std::pair<int, int>> merged;
        for (const auto& [idx, e] : xs) {
            if (!merged.empty() && merged.back().first == idx)
                merged.back().second += e;
            else
                merged.emplace_back(idx, e);
        }
        return {Monomial(qe, te, std::move(merged)), coeff};
    }
};

} // namespace

MPoly MPoly::parse(std::string_view text) {
    Parser p{text};
    MPoly out;
    if (p.done()) p.fail("empty input");
    bool negative = false;
    p.skip_ws();
    if (p.peek() == '-') {
        negative = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        auto [m, c] = p.read_term();
        out.add_term(m, negative ? -c : c);
        if (p.done()) break;
        char op = p.peek();
        if (op == '+')
            negative = false;
        else if (op == '-')
            negative = true;
        else
            p.fail(std::string("unexpected character '") + op + "'");
        ++p.pos;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    return os << p.to_string();
}

} // namespace rblock
