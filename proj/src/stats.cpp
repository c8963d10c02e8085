#include "dyckmap/stats.hpp"

#include <algorithm>

#include "dyckmap/sigma.hpp"

namespace dyckmap {

int unpaired_count(const DyckPath& path, int a, int k, int* tunnel_pairs_inside) {
    const int m = path.length();
    if (a < 1 || a > m || k < 1 || k > m)
        throw error(errc::index_out_of_range, "window parameters out of [1, 2n]");
    const Pairing tau = tunneling(path);
    auto inside = [&](int x) {
        const int off = ((x - a) % m + m) % m;
        return off < k;
    };
    int unpaired = 0;
    for (int off = 0; off < k; ++off) {
        const int i = (a - 1 + off) % m + 1;
        if (!inside(tau.partner(i))) ++unpaired;
    }
    if (tunnel_pairs_inside) *tunnel_pairs_inside = (k - unpaired) / 2;
    return unpaired;
}

Perm stat_sigma(int a, int n) {
    const int m = 2 * n;
    if (a < 1 || a > m)
        throw error(errc::index_out_of_range, "window start out of [1, 2n]");
    std::vector<int> images(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) images[static_cast<size_t>(j - 1)] = (a + j - 2) % m + 1;
    return Perm(std::move(images));
}

StatHistogram unpaired_histogram(int n, int a, int k, int cap) {
    StatHistogram hist;
    for_each_path(n, [&](const DyckPath& p) { hist[unpaired_count(p, a, k)] += 1; }, cap);
    return hist;
}

StatHistogram height_histogram(int n, int k, int cap) {
    StatHistogram hist;
    for_each_path(n, [&](const DyckPath& p) { hist[p.height(k)] += 1; }, cap);
    return hist;
}

bool equidistribution_check(int n, int a, int k, int cap) {
    if (unpaired_histogram(n, a, k, cap) != height_histogram(n, k, cap)) return false;
    // pointwise transport through the rotation CCP
    const Perm sigma = stat_sigma(a, n);
    bool pointwise = true;
    for_each_path(
        n,
        [&](const DyckPath& p) {
            if (pointwise && unpaired_count(p, a, k) != sigma_path(sigma, p).height(k))
                pointwise = false;
        },
        cap);
    return pointwise;
}

BigInt height_level_count(int n, int k, int l) {
    if (l < 0 || (k + l) % 2 != 0) return 0;
    const int t = (k + l) / 2;
    const BigInt numerator = BigInt(l + 1) * (l + 1) * binomial(k + 1, t + 1) *
                             binomial(2 * n - k + 1, n - t);
    const BigInt denominator = BigInt(k + 1) * (2 * n - k + 1);
    if (numerator % denominator != 0)
        throw std::logic_error("height level count is not integral");
    return numerator / denominator;
}

int u_max(const DyckPath& path, int a) {
    int best = 0;
    for (int k = 1; k <= path.length(); ++k)
        best = std::max(best, unpaired_count(path, a, k));
    return best;
}

int peak_height(const DyckPath& path) {
    return path.peak_height();
}

bool umax_equidistribution_check(int n, int a, int cap) {
    StatHistogram umax_hist, peak_hist;
    for_each_path(
        n,
        [&](const DyckPath& p) {
            umax_hist[u_max(p, a)] += 1;
            peak_hist[peak_height(p)] += 1;
        },
        cap);
    return umax_hist == peak_hist;
}

}  // namespace dyckmap
