#include "dyckmap/sigma.hpp"

namespace dyckmap {

namespace {

void require_same_size(int lhs, int rhs) {
    if (lhs != rhs)
        throw error(errc::size_mismatch, "permutation and path sizes differ");
}

}  // namespace

DyckPath sigma_path(const Perm& sigma, const DyckPath& path) {
    require_same_size(sigma.length(), path.length());
    const Pairing tau = tunneling(path);
    const int m = path.length();
    std::vector<bool> seen(static_cast<size_t>(m + 1), false);  // membership in sigma_[k]
    std::vector<Step> steps(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) {
        const int s = sigma.apply(k);
        seen[static_cast<size_t>(s)] = true;
        steps[static_cast<size_t>(k - 1)] =
            seen[static_cast<size_t>(tau.partner(s))] ? Step::Down : Step::Up;
    }
    return DyckPath(std::move(steps));
}

std::set<int> prefix_set(const Perm& sigma, int k) {
    if (k < 1 || k > sigma.length())
        throw error(errc::index_out_of_range, "prefix length out of [1, 2n]");
    std::set<int> out;
    for (int i = 1; i <= k; ++i) out.insert(sigma.apply(i));
    return out;
}

Pairing permuted_rep(const DyckPath& path, const Perm& sigma) {
    require_same_size(sigma.length(), path.length());
    const Pairing tau = tunneling(path);
    std::vector<int> partner(static_cast<size_t>(path.length()));
    for (int k = 1; k <= path.length(); ++k)
        partner[static_cast<size_t>(sigma.apply(k) - 1)] = sigma.apply(tau.partner(k));
    return Pairing(std::move(partner));
}

std::optional<DyckPath> rep_as_path(const DyckPath& path, const Perm& sigma) {
    const Pairing rep = permuted_rep(path, sigma);
    if (!is_noncrossing(rep)) return std::nullopt;
    return path_from_tunneling(rep);
}

bool compose_action_check(const DyckPath& path, const Perm& lam, const Perm& mu) {
    const auto mu_image = rep_as_path(path, mu);
    if (!mu_image)
        throw error(errc::hypothesis_violated, "D^mu is not a path");
    const Pairing lhs = permuted_rep(path, lam.compose(mu));
    const Pairing rhs = permuted_rep(*mu_image, lam);
    return lhs == rhs;
}

}  // namespace dyckmap
