#include "rblock/region.hpp"

#include <algorithm>
#include <numeric>

#include "rblock/errors.hpp"

namespace rblock {

int TriangleSet::count_pointing(Pointing p) const {
    return static_cast<int>(
        std::count_if(triangles.begin(), triangles.end(),
                      [p](const Triangle& t) { return t.pointing == p; }));
}

int TriangleSet::index_of(const Triangle& t) const {
    auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
    if (it != triangles.end() && *it == t)
        return static_cast<int>(it - triangles.begin());
    return -1;
}

namespace {

void sort_unique(std::vector<Triangle>& tris) {
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
}

void validate_dents(const std::vector<int>& dents, int max_label, const char* side) {
    for (std::size_t i = 0; i < dents.size(); ++i) {
        if (dents[i] < 1 || dents[i] > max_label)
            throw invalid_input(std::string(side) + " dent label " +
                                std::to_string(dents[i]) + " outside 1.." +
                                std::to_string(max_label));
        if (i > 0 && dents[i] <= dents[i - 1])
            throw invalid_input(std::string(side) +
                                " dent labels must strictly increase");
    }
}

} // namespace

HexagonRegion::HexagonRegion(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
    if (a < 1 || b < 1 || c < 1)
        throw invalid_input("hexagon sides must be positive: " + to_string());
}

std::string HexagonRegion::to_string() const {
    return "H(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
}

TriangleSet HexagonRegion::triangles() const {
    // Vertices, clockwise: (0,0) (0,2c) (-b,2c+b) (-a-b,2c+b-a) (-a-b,b-a)
    // (-a,-a).  Convexity makes membership three vertex checks.
    auto inside = [&](int X, int U) {
        return X <= 0 && X >= -(a + b) && U >= X && U >= -2 * a - X &&
               U <= 2 * c - X && U <= 2 * c + 2 * b + X;
    };
    TriangleSet set;
    set.right_line = 0;
    set.label = to_string();
    for (int x = -(a + b); x <= 0; ++x) {
        for (int u = -2 * a; u <= 2 * c + 2 * b; ++u) {
            if (((u - x) % 2 + 2) % 2 != 0) continue;
            if (!inside(x, u) || !inside(x, u + 2)) continue;
            if (inside(x - 1, u + 1)) set.triangles.push_back({x, u, Pointing::left});
            if (inside(x + 1, u + 1)) set.triangles.push_back({x, u, Pointing::right});
        }
    }
    sort_unique(set.triangles);
    return set;
}

TrapezoidRegion::TrapezoidRegion(int height_, int width_, std::vector<int> P,
                                 std::vector<int> Pprime)
    : height(height_), width(width_), right_dents(std::move(P)),
      left_dents(std::move(Pprime)) {
    if (height < 1 || width < 1)
        throw invalid_input("trapezoid needs height >= 1 and width >= 1");
    validate_dents(right_dents, width + height, "right");
    validate_dents(left_dents, height, "left");
}

std::string TrapezoidRegion::to_string() const {
    std::string s = "T(" + std::to_string(height) + "," + std::to_string(width) + ";{";
    for (std::size_t i = 0; i < right_dents.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(right_dents[i]);
    }
    s += '}';
    if (!left_dents.empty()) {
        s += ",{";
        for (std::size_t i = 0; i < left_dents.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(left_dents[i]);
        }
        s += '}';
    }
    s += ')';
    return s;
}

TriangleSet TrapezoidRegion::triangles() const {
    // Right boundary x = 0 spans u in [0, 2(width+height)]; going left the
    // bottom rises along u = -x and the top falls along u = 2(width+height)+x.
    const int top = 2 * (width + height);
    auto inside = [&](int X, int U) {
        return X <= 0 && X >= -width && U >= -X && U <= top + X;
    };
    TriangleSet set;
    set.right_line = 0;
    set.label = to_string();
    for (int x = -width + 1; x <= 0; ++x) {
        for (int u = 0; u <= top; ++u) {
            if (((u - x) % 2 + 2) % 2 != 0) continue;
            if (inside(x, u) && inside(x, u + 2) && inside(x - 1, u + 1))
                set.triangles.push_back({x, u, Pointing::left});
        }
    }
    for (int x = -width; x <= -1; ++x) {
        for (int u = 0; u <= top; ++u) {
            if (((u - x) % 2 + 2) % 2 != 0) continue;
            if (inside(x, u) && inside(x, u + 2) && inside(x + 1, u + 1))
                set.triangles.push_back({x, u, Pointing::right});
        }
    }
    sort_unique(set.triangles);
    for (int p : right_dents) set.dents.push_back({0, 2 * (p - 1), Pointing::left});
    for (int p : left_dents)
        set.dents.push_back({-width, width + 2 * (p - 1), Pointing::right});
    for (const Triangle& d : set.dents) {
        int idx = set.index_of(d);
        if (idx < 0) throw internal_error("dent triangle missing from region");
        set.triangles.erase(set.triangles.begin() + idx);
    }
    return set;
}

std::vector<std::vector<int>> right_dent_sets(const BlockProfile& profile,
                                              int m_plus_n) {
    const int n = profile.parts();
    if (profile.sum() + n != m_plus_n)
        throw invalid_input("profile " + profile.to_string() + " does not fit " +
                            std::to_string(m_plus_n) + " labels (needs |r| + n)");
    // Window k is [S_{k-1}+k-1+1 .. S_k+k], size r_k + 1; an admissible set
    // omits exactly one label per window.  Iterate the omitted tuple.
    std::vector<std::vector<int>> out;
    std::vector<int> omit(n);
    for (int k = 0; k < n; ++k) omit[k] = profile.partial_sum(k) + k + 1;
    while (true) {
        std::vector<int> set;
        set.reserve(m_plus_n - n);
        for (int label = 1, k = 0; label <= m_plus_n; ++label) {
            while (k < n && label > profile.partial_sum(k + 1) + k + 1) ++k;
            if (label != omit[k]) set.push_back(label);
        }
        out.push_back(std::move(set));
        int k = n - 1;
        while (k >= 0 && omit[k] == profile.partial_sum(k + 1) + k + 1) {
            omit[k] = profile.partial_sum(k) + k + 1;
            --k;
        }
        if (k < 0) break;
        ++omit[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> left_dent_sets(const BlockProfile& profile,
                                             int n_plus_l) {
    return right_dent_sets(profile, n_plus_l);
}

std::vector<int> min_right_dents(const BlockProfile& profile) {
    const int n = profile.parts();
    const int total = profile.sum() + n;
    std::vector<int> out;
    out.reserve(total - n);
    for (int label = 1, k = 1; label <= total; ++label) {
        if (k <= n && label == profile.partial_sum(k) + k)
            ++k;
        else
            out.push_back(label);
    }
    return out;
}

std::vector<int> max_left_dents(const BlockProfile& profile) {
    const int n = profile.parts();
    const int total = profile.sum() + n;
    std::vector<int> skip;
    for (int k = 1; k <= n; ++k) skip.push_back(profile.partial_sum(k - 1) + k);
    std::vector<int> out;
    for (int label = 1; label <= total; ++label)
        if (!std::binary_search(skip.begin(), skip.end(), label))
            out.push_back(label);
    return out;
}

std::pair<std::vector<int>, std::vector<int>> extremal_dents(
    const BlockProfile& profile, const BlockProfile& profile_prime) {
    return {min_right_dents(profile), max_left_dents(profile_prime)};
}

int dent_distance(const std::vector<int>& dents, const std::vector<int>& reference,
                  DentDirection direction) {
    if (dents.size() != reference.size())
        throw invalid_input("dent distance needs sets of equal cardinality");
    int sum = std::accumulate(dents.begin(), dents.end(), 0);
    int ref = std::accumulate(reference.begin(), reference.end(), 0);
    return direction == DentDirection::above_min ? sum - ref : ref - sum;
}

} // namespace rblock
