#include "rblock/monomial.hpp"

#include <algorithm>

#include "rblock/errors.hpp"

namespace rblock {

Monomial::Monomial(int q_exp, int t_exp, std::vector<std::pair<int, int>> x_exps)
    : q_(q_exp), t_(t_exp), x_(std::move(x_exps)) {
    std::sort(x_.begin(), x_.end());
    std::erase_if(x_, [](const auto& p) { return p.second == 0; });
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (x_[i].first < 1 || x_[i].second < 0 ||
            (i + 1 < x_.size() && x_[i].first == x_[i + 1].first))
            throw invalid_input("malformed x-exponent list in monomial");
    }
}

Monomial Monomial::x_power(int index, int e) {
    if (index < 1) throw invalid_input("x variable index must be >= 1");
    Monomial m;
    if (e != 0) m.x_.emplace_back(index, e);
    return m;
}

int Monomial::x_exponent(int index) const {
    auto it = std::lower_bound(x_.begin(), x_.end(), std::pair<int, int>{index, 0});
    if (it != x_.end() && it->first == index) return it->second;
    return 0;
}

int Monomial::total_degree() const {
    int d = q_ + t_;
    for (const auto& [idx, e] : x_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.q_ = q_ + o.q_;
    r.t_ = t_ + o.t_;
    r.x_.reserve(x_.size() + o.x_.size());
    auto a = x_.begin(), b = o.x_.begin();
    while (a != x_.end() || b != o.x_.end()) {
        if (b == o.x_.end() || (a != x_.end() && a->first < b->first)) {
            r.x_.push_back(*a++);
        } else if (a == x_.end() || b->first < a->first) {
            r.x_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.x_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (q_ > o.q_ || t_ > o.t_) return false;
    for (const auto& [idx, e] : x_)
        if (e > o.x_exponent(idx)) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const {
    Monomial r;
    r.q_ = numerator.q_ - q_;
    r.t_ = numerator.t_ - t_;
    for (const auto& [idx, e] : numerator.x_) {
        int d = e - x_exponent(idx);
        if (d != 0) r.x_.emplace_back(idx, d);
    }
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
    if (auto c = q_ <=> o.q_; c != 0) return c;
    if (auto c = t_ <=> o.t_; c != 0) return c;
    // Lexicographic on (x1, x2, ...): at the smallest index where the
    // exponents differ, the larger exponent wins.
    auto a = x_.begin(), b = o.x_.begin();
    while (a != x_.end() && b != o.x_.end()) {
        if (a->first != b->first) {
            // The side whose next index is smaller has a positive exponent
            // where the other has zero.
            return a->first < b->first ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
        }
        if (auto c = a->second <=> b->second; c != 0) return c;
        ++a;
        ++b;
    }
    if (a != x_.end()) return std::strong_ordering::greater;
    if (b != o.x_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

} // namespace rblock
