// Acceptance suite: one line per criterion, exit status = number of failed
// criteria.  Each criterion runs at full scale with exact comparisons.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rblock/formulas.hpp"
#include "rblock/lattice_paths.hpp"
#include "rblock/planepartition.hpp"
#include "rblock/tiling.hpp"
#include "rblock/verify.hpp"
#include "support/oracles.hpp"

using namespace rblock;

namespace {

int failures = 0;

void report(int index, const std::string& what, const SuiteResult& res,
            double seconds) {
    std::printf("[%d/9] %s criterion %d: %s (%lld instances, %.1fs)\n", index,
                res.ok() ? "PASS" : "FAIL", index, what.c_str(), res.instances,
                seconds);
    if (!res.ok()) {
        std::printf("        first counterexample: %s\n",
                    res.first_counterexample.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

template <class Fn> void criterion(int index, const std::string& what, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult res;
    try {
        res = fn();
    } catch (const std::exception& e) {
        res.suite = "exception";
        res.instances += 1;
        res.failures += 1;
        res.first_counterexample = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(index, what, res, seconds);
}

SuiteResult merge(std::initializer_list<SuiteResult> parts) {
    SuiteResult total;
    for (const auto& p : parts) {
        total.instances += p.instances;
        if (p.failures && total.failures == 0)
            total.first_counterexample = p.suite + ": " + p.first_counterexample;
        total.failures += p.failures;
    }
    return total;
}

// Criterion 8 includes an enumeration oracle for the closed path weight that
// lives on the test side only.
SuiteResult lemma31_enumeration(int range) {
    SuiteResult res{"lemma31_enumeration"};
    for (int a = -range; a <= 0; ++a)
        for (int b = 0; b <= range; ++b)
            res.tally(path_weight_closed(a, b) ==
                          testing::enumerate_path_weight(a, b, 0, 0),
                      [&] {
                          return "(a,b)=(" + std::to_string(a) + "," +
                                 std::to_string(b) + ")";
                      });
    return res;
}

} // namespace

int main() {
    criterion(1,
              "triple agreement of dent-set enumeration, path determinant, and "
              "closed product for every profile with m+n <= 6",
              [] { return verify_thm1(6); });

    criterion(2,
              "all-ones profiles count 2^{n(n+1)/2}: closed form n <= 6, hexagon "
              "enumeration n <= 4",
              [] { return verify_offdiag(6, 4); });

    criterion(3,
              "r=(2,...,2) counts are 2^{2n} 3^{n(n-1)/2} times 1, 2, 7 "
              "(enumeration, n <= 3) and 42 (closed form, n = 4)",
              [] { return verify_asm_specialization(3, 4); });

    criterion(4,
              "block symmetric plane partition generating functions match the "
              "closed products (and their volume form) for m+n <= 6",
              [] { return verify_block_pp(6); });

    criterion(5,
              "signed enumeration equals the extremal-region product for m,n <= 3, "
              "l <= min(n,2), all admissible profiles",
              [] { return verify_signed_sum(3, 3, 2); });

    criterion(6,
              "dented trapezoid weights equal skew Schur polynomials for "
              "height+m <= 7",
              [] { return verify_ayyer_fischer(7); });

    criterion(7,
              "box product formulas vs brute force: sides <= 3, symmetric boxes "
              "m,n <= 3",
              [] { return verify_macmahon(3, 3); });

    criterion(8,
              "path-weight identities (closed = recurrence = enumeration), the "
              "determinant product, split products, and dual Pieri expansions",
              [] {
                  return merge({verify_lemma31(6), lemma31_enumeration(6),
                                verify_lemma32(3, 6), verify_split_product(6),
                                verify_pieri(4, 3, 3)});
              });

    criterion(9,
              "independent oracles: symmetric hexagon enumeration equals the "
              "dent-set sum at q=t=1 for m+n <= 6",
              [] { return verify_cross_oracle(6); });

    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
