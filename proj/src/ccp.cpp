#include "dyckmap/ccp.hpp"

#include <cassert>
#include <unordered_set>

namespace dyckmap {

namespace {

int next_on_circle(int i, int m) { return i % m + 1; }
int prev_on_circle(int i, int m) { return (i + m - 2) % m + 1; }

// First unpaired element at or after i in the direction encoded by the
// parent array; path-halving keeps traversals amortized near O(1).
int find_unpaired(std::vector<int>& parent, int i) {
    while (parent[static_cast<size_t>(i)] != i) {
        parent[static_cast<size_t>(i)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
        i = parent[static_cast<size_t>(i)];
    }
    return i;
}

}  // namespace

bool is_ccp(const Perm& sigma) {
    const int m = sigma.length();
    if (m % 2 != 0) return false;
    int lo = sigma.apply(1), hi = lo;
    for (int k = 2; k <= m; ++k) {
        const int v = sigma.apply(k);
        if (v == next_on_circle(hi, m)) {
            hi = v;
        } else if (v == prev_on_circle(lo, m)) {
            lo = v;
        } else {
            return false;
        }
    }
    return true;
}

BigInt count_ccps(unsigned n) {
    return BigInt(n) * pow2(2 * n - 1);
}

void for_each_ccp(int n, const std::function<void(const Perm&)>& visit, int cap) {
    if (n < 1) throw error(errc::index_out_of_range, "size must be positive");
    if (n > cap)
        throw error(errc::cap_exceeded, "CCP enumeration of S_" + std::to_string(2 * n) +
                                            " exceeds cap " + std::to_string(cap));
    const int m = 2 * n;
    std::vector<int> images(static_cast<size_t>(m));
    for (int first = 1; first <= m; ++first) {
        const int bits = m - 2;
        for (unsigned long mask = 0; mask < (1UL << bits); ++mask) {
            images[0] = first;
            int lo = first, hi = first;
            // bit 0 of the extension string is the choice at position 2
            for (int j = 0; j < bits; ++j) {
                const bool counterclockwise = (mask >> (bits - 1 - j)) & 1UL;
                if (counterclockwise) {
                    lo = prev_on_circle(lo, m);
                    images[static_cast<size_t>(j + 1)] = lo;
                } else {
                    hi = next_on_circle(hi, m);
                    images[static_cast<size_t>(j + 1)] = hi;
                }
            }
            // last entry is forced
            images[static_cast<size_t>(m - 1)] = next_on_circle(hi, m);
            visit(Perm(images));
        }
    }
}

std::vector<Perm> enumerate_ccps(int n, int cap) {
    std::vector<Perm> out;
    for_each_ccp(n, [&](const Perm& p) { out.push_back(p); }, cap);
    return out;
}

DyckPath invert(const Perm& sigma, const DyckPath& path) {
    const int m = path.length();
    if (sigma.length() != m)
        throw error(errc::size_mismatch, "permutation and path sizes differ");
    if (!is_ccp(sigma))
        throw error(errc::not_ccp, "inverse algorithm needs a circularly connected permutation");

    std::vector<int> tau(static_cast<size_t>(m + 1), 0);
    // skip pointers toward the first unpaired element, one per direction
    std::vector<int> skip_cw(static_cast<size_t>(m + 1));
    std::vector<int> skip_ccw(static_cast<size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
        skip_cw[static_cast<size_t>(i)] = i;
        skip_ccw[static_cast<size_t>(i)] = i;
    }
    auto mark_paired = [&](int x) {
        skip_cw[static_cast<size_t>(x)] = next_on_circle(x, m);
        skip_ccw[static_cast<size_t>(x)] = prev_on_circle(x, m);
    };

    int lo = sigma.apply(1), hi = lo;
    for (int k = 2; k <= m; ++k) {
        const int s = sigma.apply(k);
        const bool extends_cw = s == next_on_circle(hi, m);
        const bool extends_ccw = s == prev_on_circle(lo, m);
        if (path.step(k) == Step::Down) {
            // w is the block endpoint next to s; traverse inward from it.
            // When both endpoints qualify (only possible in the last
            // iteration) take the counterclockwise neighbor s-1 = hi.
            int v;
            if (extends_cw) {
                v = find_unpaired(skip_ccw, hi);
            } else {
                v = find_unpaired(skip_cw, lo);
            }
            assert(!(extends_cw && extends_ccw) ||
                   find_unpaired(skip_ccw, hi) == find_unpaired(skip_cw, lo));
            tau[static_cast<size_t>(s)] = v;
            tau[static_cast<size_t>(v)] = s;
            mark_paired(s);
            mark_paired(v);
        }
        if (extends_cw) hi = s;
        else lo = s;
    }

    return path_from_tunneling(Pairing(std::vector<int>(tau.begin() + 1, tau.end())));
}

bool is_injective_on_paths(const Perm& sigma, int n, int cap) {
    if (sigma.length() != 2 * n)
        throw error(errc::size_mismatch, "permutation size is not 2n");
    std::unordered_set<std::string> images;
    bool injective = true;
    for_each_path(
        n,
        [&](const DyckPath& d) {
            if (injective && !images.insert(sigma_path(sigma, d).word()).second)
                injective = false;
        },
        cap);
    return injective;
}

}  // namespace dyckmap
