#ifndef RBLOCK_VERIFY_HPP
#define RBLOCK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rblock {

struct SuiteResult {
    std::string suite;
    long long instances = 0;
    long long failures = 0;
    std::string first_counterexample;

    bool ok() const { return failures == 0; }
    template <class Describe> void tally(bool pass, Describe&& describe) {
        ++instances;
        if (!pass) {
            if (failures == 0) first_counterexample = describe();
            ++failures;
        }
    }
};

// Exhaustive composition list of m into n non-negative parts, lex order.
std::vector<std::vector<int>> compositions(int m, int n);
// All k-subsets of [1..n] in lex order.
std::vector<std::vector<int>> subsets(int n, int k);

// Triple agreement on every profile with |r| + parts <= max_size:
// dent-set brute force == LGV determinant == closed product.
SuiteResult verify_thm1(int max_size);

// 2^{n(n+1)/2} for the all-ones profile: closed form up to max_formula_n,
// hexagon enumeration up to max_brute_n.
SuiteResult verify_offdiag(int max_formula_n, int max_brute_n);

// r = (2,...,2): hexagon counts / (2^{2n} 3^{n(n-1)/2}) give 1, 2, 7; the
// closed form extends to 42.
SuiteResult verify_asm_specialization(int max_brute_n, int max_formula_n);

// Plane-partition generating functions against the closed products (and the
// volume specialization t := q) for every profile with m + n <= max_size.
SuiteResult verify_block_pp(int max_size);

// Signed enumeration identity across m <= max_m, n <= max_n,
// l <= min(n, max_l), r' = (1^l, 0^{n-l}), all admissible r.
SuiteResult verify_signed_sum(int max_m, int max_n, int max_l);

// Dented-trapezoid weights equal skew Schur polynomials for every dent pair
// with height + m <= max_height_plus_m.
SuiteResult verify_ayyer_fischer(int max_height_plus_m);

// Box product formulas against brute-force enumeration (hexagon tilings and
// plane partitions) for sides <= max_abc; transpose-symmetric variants for
// m, n <= max_sym.
SuiteResult verify_macmahon(int max_abc, int max_sym);

// Closed path weight == recurrence on [-range,0] x [0,range]; both vanish
// outside the admissible cone.
SuiteResult verify_lemma31(int range);

// Determinant evaluation against its product form for n <= max_n, weakly
// decreasing 0 <= L_i <= 4, L_i < M <= max_M.
SuiteResult verify_lemma32(int max_n, int max_M);

// Split-product identity for every I ⊆ [N], N <= max_N.
SuiteResult verify_split_product(int max_N);

// Dual Pieri and skew dual Pieri as polynomial identities for
// |lambda| <= max_boxes, i <= max_i, m <= max_m.
SuiteResult verify_pieri(int max_boxes, int max_i, int max_m);

// Independent oracles: symmetric hexagon enumeration count equals the
// dent-set sum at q = t = 1 for every profile with m + n <= max_size.
SuiteResult verify_cross_oracle(int max_size);

// Randomized ring axioms + serialization round-trips for MPoly.
SuiteResult verify_mpoly_axioms(std::uint64_t seed, int rounds);

// Every acceptance suite at its default scale; max_size scales the
// m+n-bounded suites.
std::vector<SuiteResult> verify_all(int max_size);

} // namespace rblock

#endif
