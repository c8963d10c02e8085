#include "dyckmap/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "dyckmap/sigma.hpp"

namespace dyckmap {

BigInt l_weight(const DyckPath& path) {
    BigInt out = 1;
    for (int d : path.down_positions()) out *= path.height(d - 1);
    return out;
}

IdentityCheckResult double_factorial_identity_check(int n, int cap) {
    IdentityCheckResult result;
    result.lhs = 0;
    for_each_path(n, [&](const DyckPath& p) { result.lhs += l_weight(p); }, cap);
    result.rhs = double_factorial_odd(static_cast<unsigned>(n));
    result.ok = result.lhs == result.rhs;
    return result;
}

namespace {

struct GeneratorSearch {
    const std::vector<int>& ups;    // up-step positions of P
    const std::vector<int>& downs;  // down-step positions of P
    const Pairing& tau_q;
    std::vector<int> images;          // sigma under construction, 0 = unset
    std::vector<bool> value_used;     // entries of [2n] already placed
    std::vector<bool> tunnel_closed;  // tunnel of sigma_{u_i} already consumed
    const std::function<void(const Perm&)>& visit;

    // Stage one: place sigma on the up positions of P so that each lands
    // in a distinct tunnel of Q.
    void assign_ups(size_t i) {
        if (i == ups.size()) {
            assign_downs(0);
            return;
        }
        const int m = tau_q.length();
        for (int v = 1; v <= m; ++v) {
            if (value_used[static_cast<size_t>(v)]) continue;
            if (value_used[static_cast<size_t>(tau_q.partner(v))]) continue;  // tunnel taken
            value_used[static_cast<size_t>(v)] = true;
            images[static_cast<size_t>(ups[i] - 1)] = v;
            assign_ups(i + 1);
            value_used[static_cast<size_t>(v)] = false;
        }
        images[static_cast<size_t>(ups[i] - 1)] = 0;
    }

    // Stage two: for each down position d_k choose an open tunnel whose
    // representative appeared before d_k, and close it.
    void assign_downs(size_t k) {
        if (k == downs.size()) {
            visit(Perm(images));
            return;
        }
        const int d = downs[k];
        for (size_t i = 0; i < ups.size(); ++i) {
            if (ups[i] > d) break;
            if (tunnel_closed[i]) continue;
            const int v = tau_q.partner(images[static_cast<size_t>(ups[i] - 1)]);
            tunnel_closed[i] = true;
            value_used[static_cast<size_t>(v)] = true;
            images[static_cast<size_t>(d - 1)] = v;
            assign_downs(k + 1);
            value_used[static_cast<size_t>(v)] = false;
            tunnel_closed[i] = false;
        }
        images[static_cast<size_t>(d - 1)] = 0;
    }
};

int first_parity_change_from_left(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if ((v[i] & 1) != (v[i + 1] & 1)) return static_cast<int>(i) + 1;
    return 0;  // unreachable for valid permutations of [2n]
}

void require_n_at_least_3(const Perm& sigma) {
    if (sigma.length() < 6)
        throw error(errc::size_too_small, "requires n >= 3");
}

}  // namespace

void for_each_generator(const DyckPath& p, const DyckPath& q,
                        const std::function<void(const Perm&)>& visit) {
    if (p.length() != q.length())
        throw error(errc::size_mismatch, "paths have different sizes");
    const auto ups = p.up_positions();
    const auto downs = p.down_positions();
    const Pairing tau_q = tunneling(q);
    GeneratorSearch search{
        ups,
        downs,
        tau_q,
        std::vector<int>(static_cast<size_t>(p.length()), 0),
        std::vector<bool>(static_cast<size_t>(p.length() + 1), false),
        std::vector<bool>(ups.size(), false),
        visit,
    };
    search.assign_ups(0);
}

std::vector<Perm> generators(const DyckPath& p, const DyckPath& q) {
    std::vector<Perm> out;
    for_each_generator(p, q, [&](const Perm& s) { out.push_back(s); });
    return out;
}

BigInt count_generators(const DyckPath& p) {
    const unsigned n = static_cast<unsigned>(p.size());
    return pow2(n) * factorial(n) * l_weight(p);
}

ParityPair parity(const Perm& sigma) {
    const auto& v = sigma.images();
    std::vector<int> reversed(v.rbegin(), v.rend());
    return ParityPair{first_parity_change_from_left(v),
                      first_parity_change_from_left(reversed)};
}

std::vector<Perm> family(const Perm& sigma) {
    require_n_at_least_3(sigma);
    const int m = sigma.length();
    std::vector<Perm> out;
    for (int swap_front = 0; swap_front < 2; ++swap_front) {
        for (int swap_back = 0; swap_back < 2; ++swap_back) {
            std::vector<int> images = sigma.images();
            if (swap_front) std::swap(images[0], images[1]);
            if (swap_back) std::swap(images[static_cast<size_t>(m - 2)],
                                     images[static_cast<size_t>(m - 1)]);
            out.emplace_back(std::move(images));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool are_friends(const Perm& lam, const Perm& mu) {
    if (lam.length() != mu.length()) return false;
    const ParityPair par = parity(lam);
    if (parity(mu) != par) return false;
    const int m = lam.length();
    std::vector<int> lp, mp;
    for (int i = 1; i <= par.a; ++i) {
        lp.push_back(lam.apply(i));
        mp.push_back(mu.apply(i));
    }
    std::sort(lp.begin(), lp.end());
    std::sort(mp.begin(), mp.end());
    if (lp != mp) return false;
    for (int i = par.a + 1; i <= m - par.b; ++i)
        if (lam.apply(i) != mu.apply(i)) return false;
    return true;
}

bool is_destroying_triple(const Perm& lam, const Perm& mu, int i, int j, int k,
                          DestroyingTriple* witness) {
    const int m = lam.length();
    auto consecutive_base = [m](int x, int y) -> int {
        // returns p with {x, y} = {p, p+1 mod m}, or 0
        if (y == x % m + 1) return x;
        if (x == y % m + 1) return y;
        return 0;
    };
    auto all_distinct = [m](int p, int q, int r) {
        const int p1 = p % m + 1;
        return p != q && p != r && p1 != q && p1 != r && q != r;
    };
    // configuration A: {lam_i, lam_j} consecutive, {mu_j, mu_k} mixed parity
    if (int p = consecutive_base(lam.apply(i), lam.apply(j)); p != 0) {
        const int q = mu.apply(j), r = mu.apply(k);
        if ((q & 1) != (r & 1) && all_distinct(p, q, r)) {
            if (witness) *witness = DestroyingTriple{i, j, k, p, q, r};
            return true;
        }
    }
    // configuration B: roles of lam and mu swapped
    if (int p = consecutive_base(mu.apply(j), mu.apply(k)); p != 0) {
        const int q = lam.apply(i), r = lam.apply(j);
        if ((q & 1) != (r & 1) && all_distinct(p, q, r)) {
            if (witness) *witness = DestroyingTriple{i, j, k, p, q, r};
            return true;
        }
    }
    return false;
}

std::optional<DestroyingTriple> find_destroying_triple(const Perm& lam, const Perm& mu) {
    if (lam.length() != mu.length())
        throw error(errc::size_mismatch, "permutations of different sizes");
    const int m = lam.length();
    DestroyingTriple triple;
    for (int i = 1; i <= m - 2; ++i)
        for (int j = i + 1; j <= m - 1; ++j)
            for (int k = j + 1; k <= m; ++k)
                if (is_destroying_triple(lam, mu, i, j, k, &triple)) return triple;
    return std::nullopt;
}

ClassKey class_key(const Perm& sigma) {
    require_n_at_least_3(sigma);
    const int m = sigma.length();
    const int n = m / 2;
    const ParityPair par = parity(sigma);
    ClassKey key;
    key.parity = par;
    if (par.a == n && par.b == n) return key;  // one class per Theorem 3 (1)
    if (par.a == n - 1 && par.b == n - 1) {
        // only the middle two entries matter, as a set
        key.middle = {sigma.apply(n), sigma.apply(n + 1)};
        std::sort(key.middle.begin(), key.middle.end());
        return key;
    }
    // Boundary windows: the family move widens a size-1 side to its
    // two-entry set, which is exactly Theorem 3 (4)-(5).
    const int left = std::max(par.a, 2);
    const int right = std::max(par.b, 2);
    for (int i = 1; i <= left; ++i) key.prefix_set.push_back(sigma.apply(i));
    for (int i = left + 1; i <= m - right; ++i) key.middle.push_back(sigma.apply(i));
    for (int i = m - right + 1; i <= m; ++i) key.suffix_set.push_back(sigma.apply(i));
    std::sort(key.prefix_set.begin(), key.prefix_set.end());
    std::sort(key.suffix_set.begin(), key.suffix_set.end());
    return key;
}

std::string ClassKey::to_string() const {
    std::ostringstream out;
    out << '(' << parity.a << ',' << parity.b << ")|";
    for (int v : prefix_set) out << v << ' ';
    out << '|';
    for (int v : middle) out << v << ' ';
    out << '|';
    for (int v : suffix_set) out << v << ' ';
    return out.str();
}

bool same_class_bruteforce(const Perm& lam, const Perm& mu, int cap) {
    if (lam.length() != mu.length())
        throw error(errc::size_mismatch, "permutations of different sizes");
    if (lam.length() % 2 != 0)
        throw error(errc::size_mismatch, "odd permutation size");
    bool same = true;
    for_each_path(
        lam.length() / 2,
        [&](const DyckPath& d) {
            if (same && !(sigma_path(lam, d) == sigma_path(mu, d))) same = false;
        },
        cap);
    return same;
}

BigInt class_size(const Perm& sigma) {
    require_n_at_least_3(sigma);
    const unsigned n = static_cast<unsigned>(sigma.length() / 2);
    const ParityPair par = parity(sigma);
    if (par.a == static_cast<int>(n) && par.b == static_cast<int>(n))
        return 2 * factorial(n) * factorial(n);
    if (par.a == static_cast<int>(n) - 1 && par.b == static_cast<int>(n) - 1)
        return 2 * factorial(n - 1) * factorial(n - 1);
    return factorial(static_cast<unsigned>(std::max(par.a, 2))) *
           factorial(static_cast<unsigned>(std::max(par.b, 2)));
}

BigInt parity_census(unsigned n, int a, int b) {
    const int ni = static_cast<int>(n);
    if (a < 1 || b < 1 || a > ni || b > ni) return 0;
    if (a == ni && b == ni) return 2 * factorial(n) * factorial(n);
    if (a == ni || b == ni) return 0;
    return 2 * factorial(n) * factorial(n) *
           (binomial(2 * ni - 2 - a - b, ni - 2) + binomial(2 * ni - 2 - a - b, ni - 1 - a));
}

BigInt num_classes(unsigned n) {
    if (n == 0) return 0;
    if (n == 1) return 1;  // brute force; the closed formula assumes n >= 3
    if (n == 2) return 3;
    const int ni = static_cast<int>(n);
    BigInt total = 1 - BigInt(n) * n;
    for (int a = 1; a < ni; ++a) {
        for (int b = 1; b < ni; ++b) {
            const BigInt cell =
                factorial(n) * factorial(n) /
                (factorial(static_cast<unsigned>(std::max(a, 2))) *
                 factorial(static_cast<unsigned>(std::max(b, 2)))) *
                (binomial(2 * ni - 2 - a - b, ni - 2) +
                 binomial(2 * ni - 2 - a - b, ni - 1 - a));
            total += 2 * cell;
        }
    }
    return total;
}

}  // namespace dyckmap
