#include "rblock/tiling.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "rblock/errors.hpp"

namespace rblock {

LozengeKind Lozenge::kind() const {
    if (right.x == left.x && right.u == left.u) return LozengeKind::horizontal;
    if (right.x == left.x - 1 && right.u == left.u + 1) return LozengeKind::negative;
    if (right.x == left.x - 1 && right.u == left.u - 1) return LozengeKind::positive;
    throw internal_error("triangles do not form a lozenge");
}

const char* to_string(LozengeKind k) {
    switch (k) {
    case LozengeKind::horizontal: return "horizontal";
    case LozengeKind::positive: return "positive";
    case LozengeKind::negative: return "negative";
    }
    return "?";
}

namespace {

Lozenge make_lozenge(const Triangle& a, const Triangle& b) {
    if (a.pointing == b.pointing) throw internal_error("lozenge needs opposite pointings");
    return a.pointing == Pointing::left ? Lozenge{a, b} : Lozenge{b, a};
}

// Shared backtracking core.  Candidate partners of each triangle are
// precomputed as indices into the sorted triangle vector; the search always
// extends the least uncovered triangle, which fixes the output order.
struct CoverSearch {
    const TriangleSet& region;
    std::vector<std::array<int, 3>> candidates;
    std::vector<int> partner;
    std::uint64_t visited = 0;
    std::uint64_t cap;

    explicit CoverSearch(const TriangleSet& region_, std::uint64_t cap_)
        : region(region_), cap(cap_) {
        const auto& tris = region.triangles;
        candidates.resize(tris.size());
        partner.assign(tris.size(), -1);
        for (std::size_t i = 0; i < tris.size(); ++i) {
            const Triangle& t = tris[i];
            std::array<Triangle, 3> cand;
            if (t.pointing == Pointing::left) {
                cand = {Triangle{t.x - 1, t.u - 1, Pointing::right},
                        Triangle{t.x, t.u, Pointing::right},
                        Triangle{t.x - 1, t.u + 1, Pointing::right}};
            } else {
                cand = {Triangle{t.x + 1, t.u + 1, Pointing::left},
                        Triangle{t.x, t.u, Pointing::left},
                        Triangle{t.x + 1, t.u - 1, Pointing::left}};
            }
            std::array<int, 3> idx;
            for (int j = 0; j < 3; ++j) idx[j] = region.index_of(cand[j]);
            std::sort(idx.begin(), idx.end());
            candidates[i] = idx;
        }
    }

    template <class PlaceFn, class UnplaceFn, class LeafFn>
    void dfs(int from, const PlaceFn& place, const UnplaceFn& unplace,
             const LeafFn& leaf) {
        int n = static_cast<int>(partner.size());
        int t = from;
        while (t < n && partner[t] != -1) ++t;
        if (t == n) {
            if (++visited > cap)
                throw size_limit_error("tiling enumeration exceeded limit of " +
                                       std::to_string(cap) + " tilings (" +
                                       region.label + ")");
            leaf();
            return;
        }
        for (int p : candidates[t]) {
            if (p < 0 || partner[p] != -1 || p == t) continue;
            partner[t] = p;
            partner[p] = t;
            if (place(t, p)) {
                dfs(t + 1, place, unplace, leaf);
                unplace(t, p);
            }
            partner[t] = -1;
            partner[p] = -1;
        }
    }

    Tiling current_tiling() const {
        Tiling out;
        const auto& tris = region.triangles;
        for (std::size_t i = 0; i < tris.size(); ++i) {
            int j = partner[i];
            if (j > static_cast<int>(i))
                out.lozenges.push_back(make_lozenge(tris[i], tris[j]));
        }
        std::sort(out.lozenges.begin(), out.lozenges.end());
        return out;
    }
};

constexpr auto kNoOpPlace = [](int, int) { return true; };
constexpr auto kNoOpUnplace = [](int, int) {};

} // namespace

void for_each_tiling(const TriangleSet& region,
                     const std::function<void(const Tiling&)>& visit,
                     TilingLimits limits) {
    if (region.triangles.empty()) {
        // The empty region has exactly one (empty) tiling.
        visit(Tiling{});
        return;
    }
    if (region.triangles.size() % 2 != 0 || !region.is_balanced()) return;
    CoverSearch search(region, limits.max_tilings);
    search.dfs(0, kNoOpPlace, kNoOpUnplace,
               [&] { visit(search.current_tiling()); });
}

std::vector<Tiling> enumerate_tilings(const TriangleSet& region, TilingLimits limits) {
    std::vector<Tiling> out;
    for_each_tiling(region, [&](const Tiling& t) { out.push_back(t); }, limits);
    return out;
}

std::uint64_t count_tilings(const TriangleSet& region, TilingLimits limits) {
    std::uint64_t n = 0;
    for_each_tiling(region, [&](const Tiling&) { ++n; }, limits);
    return n;
}

bool tiles_region(const Tiling& tiling, const TriangleSet& region) {
    std::vector<Triangle> covered;
    covered.reserve(tiling.lozenges.size() * 2);
    for (const Lozenge& l : tiling.lozenges) {
        l.kind(); // validates adjacency
        covered.push_back(l.left);
        covered.push_back(l.right);
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
        return false; // overlap
    return covered == region.triangles;
}

MPoly tiling_weight_x(const Tiling& tiling, const TriangleSet& region) {
    std::map<int, int> exps;
    for (const Lozenge& l : tiling.lozenges)
        if (l.kind() == LozengeKind::negative)
            exps[l.column_from_right(region.right_line) + 1] += 1;
    std::vector<std::pair<int, int>> xs(exps.begin(), exps.end());
    return {Monomial(0, 0, std::move(xs)), 1};
}

MPoly weighted_region_sum(const TriangleSet& region, WeightKind weight,
                          TilingLimits limits) {
    MPoly sum;
    for_each_tiling(
        region,
        [&](const Tiling& t) {
            if (weight == WeightKind::x) {
                sum += tiling_weight_x(t, region);
            } else {
                int dq = 0, dt = 0;
                for (const Lozenge& l : t.lozenges)
                    if (l.kind() == LozengeKind::negative) {
                        dq += l.column_from_right(region.right_line);
                        dt += 1;
                    }
                sum.add_term(Monomial(dq, dt), 1);
            }
        },
        limits);
    return sum;
}

MPoly block_symmetric_sum(const BlockProfile& profile, int m, int n,
                          WeightKind weight, TilingLimits limits) {
    if (profile.sum() != m || profile.parts() != n)
        throw invalid_input("profile " + profile.to_string() +
                            " does not match m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
    MPoly sum;
    for (const auto& P : right_dent_sets(profile, m + n)) {
        TrapezoidRegion trap(n, m, P);
        sum += weighted_region_sum(trap.triangles(), weight, limits);
    }
    return sum;
}

MPoly signed_block_sum(const BlockProfile& profile, const BlockProfile& profile_prime,
                       int m, int n, int l, TilingLimits limits) {
    if (profile.parts() != n || profile_prime.parts() != n)
        throw invalid_input("both profiles need exactly n parts");
    if (profile.sum() != m + l || profile_prime.sum() != l)
        throw invalid_input("signed sum needs |r| = m + l and |r'| = l");
    const auto Pmax = max_left_dents(profile_prime);
    MPoly sum;
    for (const auto& P : right_dent_sets(profile, m + n + l)) {
        for (const auto& Pp : left_dent_sets(profile_prime, n + l)) {
            int d = dent_distance(Pp, Pmax, DentDirection::below_max);
            TrapezoidRegion trap(n + l, m, P, Pp);
            MPoly w = weighted_region_sum(trap.triangles(), WeightKind::x, limits);
            if (d % 2 == 0)
                sum += w;
            else
                sum -= w;
        }
    }
    return sum;
}

namespace {

struct HexagonMirror {
    std::vector<int> mirror;        // triangle index involution
    std::map<int, int> cell_of_u;   // axis lozenge lower edge -> cell (0-based)
    int axis_line = 0;

    HexagonMirror(const TriangleSet& set, const BlockProfile& profile, int m, int n) {
        axis_line = -m;
        mirror.resize(set.triangles.size());
        for (std::size_t i = 0; i < set.triangles.size(); ++i) {
            const Triangle& t = set.triangles[i];
            Triangle refl{2 * axis_line - t.x, t.u,
                          t.pointing == Pointing::left ? Pointing::right
                                                       : Pointing::left};
            int j = set.index_of(refl);
            if (j < 0) throw internal_error("hexagon is not mirror symmetric");
            mirror[i] = j;
        }
        // Axis runs over u in [-m, 2n+m]; cell k spans 2(r_k + 1) half-units.
        for (int k = 1; k <= n; ++k) {
            int lo = -m + 2 * (profile.partial_sum(k - 1) + k - 1);
            int hi = -m + 2 * (profile.partial_sum(k) + k);
            for (int u = lo; u + 2 <= hi; u += 2) cell_of_u[u] = k - 1;
        }
    }

    int cell(int u) const {
        auto it = cell_of_u.find(u);
        if (it == cell_of_u.end())
            throw internal_error("axis lozenge does not sit inside a single cell");
        return it->second;
    }
};

void accumulate_left_half_weight(const Tiling& t, int axis_line,
                                 SymmetricHexagonResult& out) {
    int dq = 0, dt = 0;
    for (const Lozenge& l : t.lozenges) {
        if (l.kind() == LozengeKind::negative && l.left.x <= axis_line) {
            dq += axis_line - l.left.x;
            dt += 1;
        }
    }
    out.count += 1;
    out.qt_genfun.add_term(Monomial(dq, dt), 1);
}

void validate_symmetric_args(const BlockProfile& profile, int m, int n) {
    if (profile.sum() != m || profile.parts() != n)
        throw invalid_input("profile " + profile.to_string() +
                            " does not match m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
}

} // namespace

SymmetricHexagonResult enumerate_symmetric_hexagon(const BlockProfile& profile,
                                                   int m, int n,
                                                   TilingLimits limits) {
    validate_symmetric_args(profile, m, n);
    TriangleSet set = HexagonRegion(m, m, n).triangles();
    HexagonMirror mir(set, profile, m, n);
    const auto& tris = set.triangles;

    std::vector<int> cell_count(n, 0);
    SymmetricHexagonResult result;
    CoverSearch search(set, limits.max_tilings);

    // Prune as soon as a placement contradicts the mirror image of an
    // earlier one, or overfills a cell.  cell_delta tracks what to undo.
    auto place = [&](int t, int p) {
        for (int idx : {t, p}) {
            int mi = mir.mirror[idx];
            if (search.partner[mi] != -1 &&
                search.partner[mi] != mir.mirror[search.partner[idx]])
                return false;
        }
        if (tris[t].x == mir.axis_line && tris[p].x == mir.axis_line) {
            int c = mir.cell(std::min(tris[t].u, tris[p].u));
            if (++cell_count[c] > profile.r(c + 1)) {
                --cell_count[c];
                return false;
            }
        }
        return true;
    };
    // Runs only after a successful place(), so the decrement mirrors the
    // increment exactly.
    auto unplace = [&](int t, int p) {
        if (tris[t].x == mir.axis_line && tris[p].x == mir.axis_line)
            --cell_count[mir.cell(std::min(tris[t].u, tris[p].u))];
    };
    auto leaf = [&] {
        for (int k = 1; k <= n; ++k)
            if (cell_count[k - 1] != profile.r(k)) return;
        accumulate_left_half_weight(search.current_tiling(), mir.axis_line, result);
    };
    if (!set.triangles.empty() && set.triangles.size() % 2 == 0)
        search.dfs(0, place, unplace, leaf);
    return result;
}

SymmetricHexagonResult enumerate_symmetric_hexagon_by_filter(
    const BlockProfile& profile, int m, int n, TilingLimits limits) {
    validate_symmetric_args(profile, m, n);
    TriangleSet set = HexagonRegion(m, m, n).triangles();
    HexagonMirror mir(set, profile, m, n);

    SymmetricHexagonResult result;
    for_each_tiling(
        set,
        [&](const Tiling& t) {
            for (const Lozenge& l : t.lozenges) {
                Triangle rl{2 * mir.axis_line - l.right.x, l.right.u, Pointing::left};
                Triangle rr{2 * mir.axis_line - l.left.x, l.left.u, Pointing::right};
                Lozenge reflected{rl, rr};
                if (!std::binary_search(t.lozenges.begin(), t.lozenges.end(),
                                        reflected))
                    return;
            }
            std::vector<int> cell_count(n, 0);
            for (const Lozenge& l : t.lozenges)
                if (l.kind() == LozengeKind::horizontal &&
                    l.left.x == mir.axis_line)
                    cell_count[mir.cell(l.left.u)] += 1;
            for (int k = 1; k <= n; ++k)
                if (cell_count[k - 1] != profile.r(k)) return;
            accumulate_left_half_weight(t, mir.axis_line, result);
        },
        limits);
    return result;
}

} // namespace rblock
