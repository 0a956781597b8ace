#include "rblock/partition.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>

#include "rblock/errors.hpp"

namespace rblock {

namespace {

std::vector<int> canonicalize(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw invalid_input("negative partition part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw invalid_input("partition parts must be weakly decreasing");
    }
    return parts;
}

} // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(canonicalize(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(canonicalize(std::move(parts))) {}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > rows()) return 0;
    return parts_[i - 1];
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!contains(inner, outer))
        throw invalid_input("skew shape " + outer.to_string() + "/" +
                            inner.to_string() + ": inner not contained in outer");
}

StripClass strip_check(const SkewShape& shape) {
    bool horizontal = true, vertical = true;
    // Row i holds boxes in columns inner_i+1 .. outer_i.
    for (int i = 1; i <= shape.outer.rows(); ++i) {
        if (shape.outer.part(i) - shape.inner.part(i) > 1) vertical = false;
        // Column overlap with the row below: both rows occupy a common
        // column iff inner_i < outer_{i+1}.
        if (shape.inner.part(i) < shape.outer.part(i + 1)) horizontal = false;
    }
    int k = shape.box_count();
    if (horizontal && vertical) return {StripKind::both, k};
    if (horizontal) return {StripKind::horizontal, k};
    if (vertical) return {StripKind::vertical, k};
    return {StripKind::neither, k};
}

BlockProfile::BlockProfile(std::vector<int> r) : r_(std::move(r)) {
    if (r_.empty()) throw invalid_input("block profile needs at least one part");
    s_.resize(r_.size() + 1, 0);
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (r_[i] < 0) throw invalid_input("block profile parts must be >= 0");
        s_[i + 1] = s_[i] + r_[i];
    }
}

BlockProfile::BlockProfile(std::initializer_list<int> r)
    : BlockProfile(std::vector<int>(r)) {}

std::string BlockProfile::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r_[i]);
    }
    s += ')';
    return s;
}

Partition partition_from_dents(const std::vector<int>& dents, int expected_len) {
    if (static_cast<int>(dents.size()) != expected_len)
        throw invalid_input("dent set has " + std::to_string(dents.size()) +
                            " labels, expected " + std::to_string(expected_len));
    std::vector<int> parts(dents.size());
    for (std::size_t i = 0; i < dents.size(); ++i) {
        int idx = static_cast<int>(i) + 1;
        if (dents[i] < idx)
            throw invalid_input("invalid dent set: label p_" + std::to_string(idx) +
                                " = " + std::to_string(dents[i]) + " below " +
                                std::to_string(idx));
        if (i > 0 && dents[i] <= dents[i - 1])
            throw invalid_input("invalid dent set: labels must strictly increase");
        parts[dents.size() - 1 - i] = dents[i] - idx;
    }
    return Partition(std::move(parts));
}

std::pair<Partition, Partition> lambda_min_max(const BlockProfile& profile) {
    std::vector<int> lo, hi;
    int n = profile.parts();
    for (int k = n; k >= 1; --k) {
        for (int rep = 0; rep < profile.r(k); ++rep) {
            lo.push_back(k - 1);
            hi.push_back(k);
        }
    }
    return {Partition(std::move(lo)), Partition(std::move(hi))};
}

std::vector<Partition> vertical_strip_successors(const Partition& base, int size,
                                                 int max_rows) {
    std::vector<Partition> out;
    if (size < 0 || max_rows < 0) return out;
    // Every successor contains base, so it has at least base.rows() rows.
    if (base.rows() > max_rows) return out;
    const int rows = std::min(max_rows, base.rows() + size);
    // A vertical strip adds at most one box per row: successor_i = base_i + e_i
    // with e_i in {0,1}, subject to weak decrease.
    std::vector<int> eps(rows, 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == rows) {
            if (remaining == 0) {
                std::vector<int> parts(rows);
                for (int i = 0; i < rows; ++i) parts[i] = base.part(i + 1) + eps[i];
                out.emplace_back(Partition(std::move(parts)));
            }
            return;
        }
        if (remaining > rows - row) return;
        eps[row] = 0;
        rec(row + 1, remaining);
        if (remaining > 0) {
            // the first row is unconstrained from above
            int above = row == 0 ? INT_MAX : base.part(row) + eps[row - 1];
            if (base.part(row + 1) + 1 <= above) {
                eps[row] = 1;
                rec(row + 1, remaining - 1);
                eps[row] = 0;
            }
        }
    };
    rec(0, size);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

std::vector<Partition> horizontal_strip_predecessors(const Partition& base, int size) {
    std::vector<Partition> out;
    if (size < 0) return out;
    int rows = base.rows();
    std::vector<int> shrunk(std::max(rows, 1));
    std::function<void(int, int)> rec = [&](int row, int removed) {
        if (row == rows) {
            if (removed == size) {
                std::vector<int> parts(shrunk.begin(), shrunk.begin() + rows);
                out.emplace_back(Partition(std::move(parts)));
            }
            return;
        }
        // base/mu_minus is a horizontal strip iff base_{i+1} <= mu_i <= base_i
        // (the interlacing condition).
        int lo = base.part(row + 2);
        int hi = base.part(row + 1);
        for (int v = hi; v >= lo; --v) {
            int rm = hi - v;
            if (removed + rm > size) continue;
            shrunk[row] = v;
            rec(row + 1, removed + rm);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rblock
