#pragma once

#include <functional>
#include <vector>

#include "dyckmap/dyck.hpp"
#include "dyckmap/perm.hpp"
#include "dyckmap/sigma.hpp"

namespace dyckmap {

// A permutation is circularly connected (CCP) when every prefix set
// {sigma_1..sigma_k} is a circular block of size k.
bool is_ccp(const Perm& sigma);

// n * 2^(2n-1), the number of CCPs in S_2n.
BigInt count_ccps(unsigned n);

// Streams every CCP of S_2n exactly once: sigma_1 ascending, then the
// binary extension string (0 = clockwise end, 1 = counterclockwise end)
// ascending.
void for_each_ccp(int n, const std::function<void(const Perm&)>& visit,
                  int cap = kDefaultEnumerationCap);
std::vector<Perm> enumerate_ccps(int n, int cap = kDefaultEnumerationCap);

// The inverse map: returns Q with sigma_path(sigma, Q) == path. Throws
// not_ccp when sigma is not circularly connected.
DyckPath invert(const Perm& sigma, const DyckPath& path);

// Brute force over D_n: are all sigma-path images distinct? Agrees with
// is_ccp by the characterization theorem.
bool is_injective_on_paths(const Perm& sigma, int n, int cap = kDefaultEnumerationCap);

}  // namespace dyckmap
