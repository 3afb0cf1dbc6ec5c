#include "twotype/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "twotype/errors.hpp"

namespace twotype {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]]; // path halving
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::uint64_t component_size(std::uint32_t root) const { return size_[root]; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint64_t> size_;
};

CcdfTable ccdf_from_hist(const std::vector<std::uint64_t>& hist, std::uint64_t group_size) {
    CcdfTable table;
    if (group_size == 0 || hist.empty()) return table;
    // Suffix sums over the degrees actually present, starting at k = 1.
    std::uint64_t count = 0;
    std::vector<CcdfEntry> rev;
    for (std::size_t k = hist.size(); k-- > 1;) {
        count += hist[k];
        if (hist[k] > 0)
            rev.push_back({static_cast<std::uint64_t>(k), count,
                           static_cast<double>(count) / static_cast<double>(group_size)});
    }
    table.assign(rev.rbegin(), rev.rend());
    return table;
}

void bump(std::vector<std::uint64_t>& hist, std::uint64_t k) {
    if (hist.size() <= k) hist.resize(k + 1, 0);
    ++hist[k];
}

} // namespace

ComponentReport components(const TypedGraph& g) {
    ComponentReport rep;
    if (g.n == 0) return rep;
    UnionFind uf(g.n);
    for (const Edge& e : g.edges) uf.unite(e.u, e.v);

    std::vector<std::uint64_t> size_of_root(g.n, 0);
    for (std::uint64_t v = 0; v < g.n; ++v) ++size_of_root[uf.find(static_cast<std::uint32_t>(v))];

    std::uint32_t largest_root = 0;
    std::uint64_t largest = 0;
    for (std::uint64_t r = 0; r < g.n; ++r) {
        if (size_of_root[r] > largest) {
            largest = size_of_root[r];
            largest_root = static_cast<std::uint32_t>(r);
        }
        if (size_of_root[r] > 0) rep.sizes_desc.push_back(size_of_root[r]);
    }
    std::sort(rep.sizes_desc.begin(), rep.sizes_desc.end(), std::greater<>());
    rep.largest_fraction = static_cast<double>(largest) / static_cast<double>(g.n);
    for (std::uint64_t v = 0; v < g.n; ++v) {
        if (uf.find(static_cast<std::uint32_t>(v)) != largest_root) continue;
        if (g.types[v] == VertexType::Type1) ++rep.largest_type1; else ++rep.largest_type2;
    }
    return rep;
}

std::vector<std::uint64_t> top_k_component_sizes(const TypedGraph& g, std::size_t k) {
    if (k < 1) throw std::invalid_argument("top_k_component_sizes: k must be >= 1");
    const ComponentReport rep = components(g);
    std::vector<std::uint64_t> out(k, 0);
    for (std::size_t i = 0; i < k && i < rep.sizes_desc.size(); ++i) out[i] = rep.sizes_desc[i];
    return out;
}

DegreeReport degree_report(const TypedGraph& g) {
    DegreeReport rep;
    const VertexDegrees deg = total_and_per_type_degrees(g);

    std::array<std::vector<std::uint64_t>, 2> pair_hist[2]; // [from][to]
    std::array<double, 2> sum_to[2] = {{0, 0}, {0, 0}};
    for (std::uint64_t v = 0; v < g.n; ++v) {
        const int ti = type_index(g.types[v]);
        ++rep.n_type[ti];
        bump(rep.hist[ti], deg.total[v]);
        bump(pair_hist[ti][0], deg.to_type1[v]);
        bump(pair_hist[ti][1], deg.to_type2[v]);
        sum_to[ti][0] += deg.to_type1[v];
        sum_to[ti][1] += deg.to_type2[v];
    }
    for (int i = 0; i < 2; ++i) {
        rep.ccdf[i] = ccdf_from_hist(rep.hist[i], rep.n_type[i]);
        for (int j = 0; j < 2; ++j) {
            rep.pair_ccdf[i][j] = ccdf_from_hist(pair_hist[i][j], rep.n_type[i]);
            rep.cross_mean[i][j] = rep.n_type[i] == 0
                                       ? std::numeric_limits<double>::quiet_NaN()
                                       : sum_to[i][j] / static_cast<double>(rep.n_type[i]);
        }
    }

    // Product-moment correlation of (D->1, D->2) within each type; undefined
    // (not zero) when either marginal has no variance.
    for (int i = 0; i < 2; ++i) {
        const std::uint64_t ni = rep.n_type[i];
        if (ni < 2) continue;
        const double m1 = rep.cross_mean[i][0];
        const double m2 = rep.cross_mean[i][1];
        double c11 = 0, c22 = 0, c12 = 0;
        for (std::uint64_t v = 0; v < g.n; ++v) {
            if (type_index(g.types[v]) != i) continue;
            const double d1 = deg.to_type1[v] - m1;
            const double d2 = deg.to_type2[v] - m2;
            c11 += d1 * d1;
            c22 += d2 * d2;
            c12 += d1 * d2;
        }
        if (c11 > 0.0 && c22 > 0.0) rep.cross_correlation[i] = c12 / std::sqrt(c11 * c22);
    }
    return rep;
}

ExponentFit fit_tail_exponent(const CcdfTable& ccdf, std::uint64_t k_min, std::uint64_t k_max) {
    if (k_min >= k_max) throw std::invalid_argument("fit_tail_exponent: need k_min < k_max");
    std::vector<double> xs, ys;
    for (const CcdfEntry& e : ccdf) {
        if (e.k < k_min || e.k > k_max || !(e.fraction_ge > 0.0)) continue;
        xs.push_back(std::log(static_cast<double>(e.k)));
        ys.push_back(std::log(e.fraction_ge));
    }
    if (xs.size() < 5)
        throw InsufficientData("fit_tail_exponent: only " + std::to_string(xs.size()) +
                               " usable CCDF points in [" + std::to_string(k_min) + "," +
                               std::to_string(k_max) + "], need 5 (tail too short)");
    const std::size_t n = xs.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    ExponentFit fit;
    fit.gamma_hat = -sxy / sxx;
    fit.k_min = k_min;
    fit.k_max = k_max;
    fit.n_points = n;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

std::uint64_t default_fit_kmax(const CcdfTable& ccdf, std::uint64_t min_count) {
    std::uint64_t best = 0;
    for (const CcdfEntry& e : ccdf)
        if (e.count_ge >= min_count) best = std::max(best, e.k);
    return best;
}

double giant_fraction_fixed_point(double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("giant_fraction_fixed_point: lambda must be >= 0");
    if (lambda <= 1.0) return 0.0;
    double s = 1.0;
    for (int i = 0; i < 1000000; ++i) {
        const double next = 1.0 - std::exp(-lambda * s);
        if (std::abs(next - s) < 1e-15) return next;
        s = next;
    }
    return s;
}

} // namespace twotype
