#include "rblock/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "rblock/formulas.hpp"
#include "rblock/lattice_paths.hpp"
#include "rblock/planepartition.hpp"
#include "rblock/qcalc.hpp"
#include "rblock/schur.hpp"
#include "rblock/tiling.hpp"

namespace rblock {

std::vector<std::vector<int>> compositions(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n >= 1 && m >= 0) rec(0, m);
    return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int pos, int next) {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - pos - 1); ++v) {
            cur[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

namespace {

std::string profile_instance(const BlockProfile& r, int m, int n) {
    std::ostringstream os;
    os << "r=" << r.to_string() << " (m=" << m << ", n=" << n << ")";
    return os.str();
}

std::string set_to_string(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// (m, n, r) triples over all profiles with m + n <= max_size, m, n >= 1.
template <class Fn> void for_each_profile(int max_size, Fn&& fn) {
    for (int n = 1; n < max_size; ++n)
        for (int m = 1; m + n <= max_size; ++m)
            for (const auto& r : compositions(m, n)) fn(BlockProfile(r), m, n);
}

} // namespace

SuiteResult verify_thm1(int max_size) {
    SuiteResult res{"thm1"};
    for_each_profile(max_size, [&](const BlockProfile& r, int m, int n) {
        MPoly brute = block_symmetric_sum(r, m, n, WeightKind::qt);
        MPoly det = det_polymatrix(lgv_matrix(r, m, n));
        MPoly closed = block_qt_product(r);
        res.tally(brute == det && det == closed, [&] {
            return profile_instance(r, m, n) + ": brute=" + brute.to_string() +
                   " det=" + det.to_string() + " closed=" + closed.to_string();
        });
    });
    return res;
}

SuiteResult verify_offdiag(int max_formula_n, int max_brute_n) {
    SuiteResult res{"offdiag"};
    for (int n = 1; n <= max_formula_n; ++n) {
        std::vector<int> ones(n, 1);
        BlockProfile r(ones);
        BigInt target = BigInt::two_pow(static_cast<unsigned long>(n * (n + 1) / 2));
        BigInt closed = block_count_product(r);
        res.tally(closed == target, [&] {
            return "closed form at n=" + std::to_string(n) + ": " +
                   closed.to_string() + " != " + target.to_string();
        });
        if (n <= max_brute_n) {
            auto hex = enumerate_symmetric_hexagon(r, n, n);
            res.tally(BigInt(static_cast<long>(hex.count)) == target, [&] {
                return "hexagon enumeration at n=" + std::to_string(n) + ": " +
                       std::to_string(hex.count) + " != " + target.to_string();
            });
        }
    }
    return res;
}

SuiteResult verify_asm_specialization(int max_brute_n, int max_formula_n) {
    SuiteResult res{"asm"};
    for (int n = 1; n <= max_formula_n; ++n) {
        std::vector<int> twos(n, 2);
        BlockProfile r(twos);
        BigInt factor = BigInt::two_pow(2ul * n) *
                        BigInt::pow(BigInt(3), static_cast<unsigned long>(n * (n - 1) / 2));
        BigInt expected = factor * asm_count(n);
        BigInt closed = block_count_product(r);
        res.tally(closed == expected, [&] {
            return "closed form r=(2^" + std::to_string(n) + "): " + closed.to_string() +
                   " != " + expected.to_string();
        });
        if (n <= max_brute_n) {
            auto hex = enumerate_symmetric_hexagon(r, 2 * n, n, {50'000'000});
            BigInt brute(static_cast<long>(hex.count));
            res.tally(brute == expected && brute.div_exact(factor) == asm_count(n), [&] {
                return "hexagon enumeration r=(2^" + std::to_string(n) + "): " +
                       std::to_string(hex.count) + " != " + expected.to_string();
            });
        }
    }
    return res;
}

SuiteResult verify_block_pp(int max_size) {
    SuiteResult res{"thm15"};
    for_each_profile(max_size, [&](const BlockProfile& r, int m, int n) {
        MPoly direct = r_block_pp_genfun(m, n, r);
        MPoly closed = block_pp_qt_product(r);
        res.tally(direct == closed, [&] {
            return profile_instance(r, m, n) + ": direct=" + direct.to_string() +
                   " closed=" + closed.to_string();
        });
        MPoly volume = direct.substitute_t_to_q();
        MPoly volume_closed = block_pp_volume_product(r);
        res.tally(volume == volume_closed, [&] {
            return profile_instance(r, m, n) + " volume: " + volume.to_string() +
                   " != " + volume_closed.to_string();
        });
    });
    return res;
}

SuiteResult verify_signed_sum(int max_m, int max_n, int max_l) {
    SuiteResult res{"thm2"};
    for (int m = 1; m <= max_m; ++m) {
        for (int n = 1; n <= max_n; ++n) {
            for (int l = 0; l <= std::min(n, max_l); ++l) {
                std::vector<int> rp(n, 0);
                for (int i = 0; i < l; ++i) rp[i] = 1;
                BlockProfile rprime(rp);
                for (const auto& rv : compositions(m + l, n)) {
                    BlockProfile r(rv);
                    MPoly lhs = signed_block_sum(r, rprime, m, n, l);
                    MPoly rhs = signed_sum_product(r, rprime, m, n, l);
                    res.tally(lhs == rhs, [&] {
                        return "r=" + r.to_string() + " r'=" + rprime.to_string() +
                               " (m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                               ", l=" + std::to_string(l) + "): " + lhs.to_string() +
                               " != " + rhs.to_string();
                    });
                }
            }
        }
    }
    return res;
}

SuiteResult verify_ayyer_fischer(int max_height_plus_m) {
    SuiteResult res{"ayyer_fischer"};
    for (int h = 1; h < max_height_plus_m; ++h) {
        for (int m = 1; h + m <= max_height_plus_m; ++m) {
            for (int l = 0; l <= h; ++l) {
                for (const auto& P : subsets(m + h, m + l)) {
                    Partition lambda = partition_from_dents(P, m + l);
                    for (const auto& Pp : subsets(h, l)) {
                        Partition mu = partition_from_dents(Pp, l);
                        TrapezoidRegion trap(h, m, P, Pp);
                        MPoly weights =
                            weighted_region_sum(trap.triangles(), WeightKind::x);
                        MPoly schur = contains(mu, lambda)
                                          ? skew_schur(lambda, mu, m)
                                          : MPoly::zero();
                        res.tally(weights == schur, [&] {
                            return trap.to_string() + ": tilings=" +
                                   weights.to_string() +
                                   " schur=" + schur.to_string();
                        });
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult verify_macmahon(int max_abc, int max_sym) {
    SuiteResult res{"macmahon"};
    for (int a = 1; a <= max_abc; ++a)
        for (int b = 1; b <= max_abc; ++b)
            for (int c = 1; c <= max_abc; ++c) {
                BigInt tilings(
                    static_cast<long>(count_tilings(HexagonRegion(a, b, c).triangles())));
                BigInt closed = macmahon_count(a, b, c);
                res.tally(tilings == closed, [&] {
                    return "H(" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ") count: " + tilings.to_string() +
                           " != " + closed.to_string();
                });
                MPoly volume = pp_volume_genfun(a, b, c);
                MPoly volume_closed = macmahon_q(a, b, c);
                res.tally(volume == volume_closed, [&] {
                    return "box " + std::to_string(a) + "x" + std::to_string(b) + "x" +
                           std::to_string(c) + " volume: " + volume.to_string() +
                           " != " + volume_closed.to_string();
                });
            }
    for (int m = 1; m <= max_sym; ++m)
        for (int n = 1; n <= max_sym; ++n) {
            MPoly half = sym_pp_halfsize_genfun(m, n);
            MPoly closed = sym_pp_q(m, n);
            res.tally(half == closed, [&] {
                return "symmetric " + std::to_string(m) + "x" + std::to_string(m) + "x" +
                       std::to_string(n) + ": " + half.to_string() + " != " +
                       closed.to_string();
            });
            res.tally(half.eval_all_ones() == sym_pp_count(m, n), [&] {
                return "symmetric count " + std::to_string(m) + "," + std::to_string(n);
            });
        }
    return res;
}

SuiteResult verify_lemma31(int range) {
    SuiteResult res{"lemma31"};
    for (int a = -range; a <= 0; ++a)
        for (int b = 0; b <= range; ++b) {
            MPoly closed = path_weight_closed(a, b);
            MPoly rec = path_weight_recursive(a, b);
            res.tally(closed == rec, [&] {
                return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                       "): closed=" + closed.to_string() + " rec=" + rec.to_string();
            });
        }
    // Outside the admissible cone both forms vanish.
    for (int a = 1; a <= range; ++a)
        res.tally(path_weight_closed(a, a).is_zero() &&
                      path_weight_recursive(a, a).is_zero(),
                  [&] { return "nonzero weight at a=" + std::to_string(a) + ">0"; });
    for (int b = -range; b < 0; ++b)
        res.tally(path_weight_closed(-1, b).is_zero() &&
                      path_weight_recursive(-1, b).is_zero(),
                  [&] { return "nonzero weight at b=" + std::to_string(b) + "<0"; });
    return res;
}

SuiteResult verify_lemma32(int max_n, int max_M) {
    SuiteResult res{"lemma32"};
    for (int n = 1; n <= max_n; ++n)
        for (int M = 1; M <= max_M; ++M)
            for (const auto& Lset : subsets(std::min(5, M), n)) {
                // subsets() yields increasing 1-based values; shift to 0..4
                // and reverse into strictly decreasing order.
                std::vector<int> L;
                for (auto it = Lset.rbegin(); it != Lset.rend(); ++it)
                    L.push_back(*it - 1);
                auto [lhs, rhs] = krattenthaler_sides(L, M, n);
                res.tally(lhs == rhs, [&] {
                    return "L=" + set_to_string(L) + " M=" + std::to_string(M) +
                           ": det=" + lhs.to_string() + " product=" + rhs.to_string();
                });
            }
    return res;
}

SuiteResult verify_split_product(int max_N) {
    SuiteResult res{"split_product"};
    for (int N = 1; N <= max_N; ++N) {
        for (int k = 0; k <= N; ++k) {
            for (const auto& J : subsets(N, k)) {
                std::vector<int> I;
                for (int v = 1; v <= N; ++v)
                    if (!std::binary_search(J.begin(), J.end(), v)) I.push_back(v);
                auto [lhs, rhs] = split_product_sides(I, J, N);
                res.tally(lhs == rhs, [&] {
                    return "N=" + std::to_string(N) + " J=" + set_to_string(J) +
                           ": " + lhs.to_string() + " != " + rhs.to_string();
                });
            }
        }
    }
    return res;
}

namespace {

// All partitions with at most max_boxes boxes (including the empty one).
std::vector<Partition> partitions_up_to(int max_boxes) {
    std::vector<Partition> out;
    out.emplace_back();
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            out.emplace_back(Partition(cur));
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(max_boxes, max_boxes);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SuiteResult verify_pieri(int max_boxes, int max_i, int max_m) {
    SuiteResult res{"pieri"};
    auto shapes = partitions_up_to(max_boxes);
    for (const Partition& lambda : shapes) {
        for (int m = 1; m <= max_m; ++m) {
            MPoly s_lambda = lambda.rows() <= m ? skew_schur(lambda, {}, m)
                                                : MPoly::zero();
            for (int i = 0; i <= max_i; ++i) {
                MPoly lhs = s_lambda * elementary_sym(i, m);
                MPoly rhs;
                for (const Partition& up : dual_pieri_expand(lambda, i, m))
                    rhs += skew_schur(up, {}, m);
                res.tally(lhs == rhs, [&] {
                    return "dual Pieri " + lambda.to_string() + " i=" +
                           std::to_string(i) + " m=" + std::to_string(m);
                });
            }
            for (const Partition& mu : shapes) {
                if (mu == Partition{} || !contains(mu, lambda)) continue;
                for (int i = 0; i <= max_i; ++i) {
                    MPoly lhs = skew_schur(lambda, mu, m) * elementary_sym(i, m);
                    MPoly rhs;
                    for (const auto& term :
                         skew_dual_pieri_expand(lambda, mu, i, m)) {
                        MPoly s = contains(term.inner, term.outer)
                                      ? skew_schur(term.outer, term.inner, m)
                                      : MPoly::zero();
                        if (term.sign > 0)
                            rhs += s;
                        else
                            rhs -= s;
                    }
                    res.tally(lhs == rhs, [&] {
                        return "skew dual Pieri " + lambda.to_string() + "/" +
                               mu.to_string() + " i=" + std::to_string(i) +
                               " m=" + std::to_string(m);
                    });
                }
            }
        }
    }
    return res;
}

SuiteResult verify_cross_oracle(int max_size) {
    SuiteResult res{"cross_oracle"};
    for_each_profile(max_size, [&](const BlockProfile& r, int m, int n) {
        auto hex = enumerate_symmetric_hexagon(r, m, n);
        BigInt dent_sum = block_symmetric_sum(r, m, n, WeightKind::qt).eval_all_ones();
        res.tally(BigInt(static_cast<long>(hex.count)) == dent_sum, [&] {
            return profile_instance(r, m, n) + ": hexagon=" +
                   std::to_string(hex.count) + " dent-sum=" + dent_sum.to_string();
        });
    });
    return res;
}

namespace {

MPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(0, 3), coeff(-4, 4),
        xidx(1, 3);
    MPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<std::pair<int, int>> xs;
        int nx = expo(rng) % 3;
        for (int j = 0; j < nx; ++j) {
            int idx = xidx(rng), e = expo(rng);
            if (e > 0) xs.emplace_back(idx, e);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end(),
                             [](auto& a, auto& b) { return a.first == b.first; }),
                 xs.end());
        p.add_term(Monomial(expo(rng), expo(rng), xs), BigInt(coeff(rng)));
    }
    return p;
}

} // namespace

SuiteResult verify_mpoly_axioms(std::uint64_t seed, int rounds) {
    SuiteResult res{"mpoly"};
    std::mt19937_64 rng(seed);
    for (int round = 0; round < rounds; ++round) {
        MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        auto describe = [&] {
            return "round " + std::to_string(round) + ": a=" + a.to_string() +
                   " b=" + b.to_string() + " c=" + c.to_string();
        };
        res.tally((a + b) + c == a + (b + c), describe);
        res.tally(a + b == b + a, describe);
        res.tally(a * b == b * a, describe);
        res.tally((a * b) * c == a * (b * c), describe);
        res.tally(a * (b + c) == a * b + a * c, describe);
        res.tally(a - a == MPoly::zero(), describe);
        res.tally(MPoly::parse(a.to_string()) == a, describe);
    }
    return res;
}

std::vector<SuiteResult> verify_all(int max_size) {
    std::vector<SuiteResult> out;
    out.push_back(verify_thm1(max_size));
    out.push_back(verify_offdiag(6, 4));
    out.push_back(verify_asm_specialization(3, 4));
    out.push_back(verify_block_pp(max_size));
    out.push_back(verify_signed_sum(3, 3, 2));
    out.push_back(verify_ayyer_fischer(max_size + 1));
    out.push_back(verify_macmahon(3, 3));
    out.push_back(verify_lemma31(6));
    out.push_back(verify_lemma32(3, 6));
    out.push_back(verify_split_product(6));
    out.push_back(verify_pieri(4, 3, 3));
    out.push_back(verify_cross_oracle(max_size));
    return out;
}

} // namespace rblock
