#pragma once

#include <optional>
#include <set>

#include "dyckmap/dyck.hpp"
#include "dyckmap/perm.hpp"

namespace dyckmap {

// The sigma-path of D: step k is Up iff the tunnel partner of step
// sigma_k of D has not appeared among sigma_1..sigma_k. Always a valid
// Dyck path.
DyckPath sigma_path(const Perm& sigma, const DyckPath& path);

// {sigma_1, ..., sigma_k}
std::set<int> prefix_set(const Perm& sigma, int k);

// Tunneling of the permuted circular representation D^sigma, i.e. the
// conjugation sigma ∘ tau_D ∘ sigma^{-1}. Not necessarily non-crossing.
Pairing permuted_rep(const DyckPath& path, const Perm& sigma);

// The path whose circular representation is D^sigma, when there is one.
std::optional<DyckPath> rep_as_path(const DyckPath& path, const Perm& sigma);

// Checks D^{lam∘mu} = (D^mu)^lam given that D^mu is a path; throws
// hypothesis_violated otherwise.
bool compose_action_check(const DyckPath& path, const Perm& lam, const Perm& mu);

}  // namespace dyckmap
