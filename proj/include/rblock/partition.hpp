#ifndef RBLOCK_PARTITION_HPP
#define RBLOCK_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rblock {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros trimmed.  Comparisons and containment zero-pad, so a value
// behaves like its infinite zero-extended part sequence.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }
    int sum() const; // |lambda|
    int part(int i) const; // 1-based, zero beyond the last row
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const; // "(4,4,3)"; "()" when empty

private:
    std::vector<int> parts_;
};

// inner_i <= outer_i for all rows (zero-padded).
bool contains(const Partition& inner, const Partition& outer);

// Skew diagram outer/inner; construction rejects inner ⊄ outer.
struct SkewShape {
    Partition outer;
    Partition inner;
    SkewShape(Partition outer_, Partition inner_);
    int box_count() const { return outer.sum() - inner.sum(); }
};

enum class StripKind { vertical, horizontal, both, neither };

struct StripClass {
    StripKind kind;
    int boxes;
    bool operator==(const StripClass&) const = default;
};

// Classifies outer/inner: at most one box per row and column -> both;
// per row only -> horizontal; per column only -> vertical; else neither.
StripClass strip_check(const SkewShape& shape);

// The tuple r = (r_1,...,r_n) of non-negative block sizes with its partial
// sums S_0 = 0, S_k = r_1 + ... + r_k.
class BlockProfile {
public:
    explicit BlockProfile(std::vector<int> r);
    BlockProfile(std::initializer_list<int> r);

    int parts() const { return static_cast<int>(r_.size()); }
    int sum() const { return s_.back(); }          // S_n = |r|
    int r(int k) const { return r_[k - 1]; }       // 1-based
    int partial_sum(int k) const { return s_[k]; } // S_k, k = 0..n
    const std::vector<int>& values() const { return r_; }

    bool operator==(const BlockProfile&) const = default;
    std::string to_string() const; // "(2,0,2,1,3)"

private:
    std::vector<int> r_;
    std::vector<int> s_;
};

// Dent labels {p_1 < ... < p_len} |-> (p_len - len, ..., p_2 - 2, p_1 - 1),
// trimmed.  Rejects non-increasing input, wrong length, or p_i < i.
Partition partition_from_dents(const std::vector<int>& dents, int expected_len);

// (lambda(P_min), lambda(P_max)) = ((n-1)^{r_n}...0^{r_1}, n^{r_n}...1^{r_1}),
// expanded directly from the exponent notation.
std::pair<Partition, Partition> lambda_min_max(const BlockProfile& profile);

// All partitions obtained from base by adding a vertical strip of exactly
// `size` boxes, restricted to at most max_rows rows, in descending lex order.
std::vector<Partition> vertical_strip_successors(const Partition& base, int size,
                                                 int max_rows);

// All mu_minus ⊆ base with base/mu_minus a horizontal strip of exactly
// `size` boxes, in descending lex order.
std::vector<Partition> horizontal_strip_predecessors(const Partition& base, int size);

} // namespace rblock

#endif
