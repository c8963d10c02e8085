#pragma once

#include <map>

#include "dyckmap/dyck.hpp"
#include "dyckmap/perm.hpp"

namespace dyckmap {

// Histogram over statistic levels; counts over all of D_n sum to Cat_n.
using StatHistogram = std::map<int, BigInt>;

// Number of steps in the circular window {a, ..., a+k-1} whose tunnel
// partner falls outside the window. tunnel_pairs_inside (when given)
// receives t_{a,k}, the number of tunnels internal to the window.
int unpaired_count(const DyckPath& path, int a, int k, int* tunnel_pairs_inside = nullptr);

// The rotation sigma_j = a+j-1 (mod 2n): a CCP whose k-prefix is the
// window {a, ..., a+k-1} for every k at once, transporting u_{a,k} to
// the height statistic h_k.
Perm stat_sigma(int a, int n);

// Histograms of u_{a,k} and h_k over D_n match, and the transport
// identity u_{a,k}(P) = h_k(sigma^{(a)}(P)) holds pointwise.
bool equidistribution_check(int n, int a, int k, int cap = kDefaultEnumerationCap);

// |{P in D_n : h_k(P) = l}| in closed form; 0 for parity-impossible l.
BigInt height_level_count(int n, int k, int l);

// max over window lengths k of u_{a,k}(P).
int u_max(const DyckPath& path, int a);

int peak_height(const DyckPath& path);

// Histogram of u_max^(a) matches the histogram of the peak height.
bool umax_equidistribution_check(int n, int a, int cap = kDefaultEnumerationCap);

StatHistogram unpaired_histogram(int n, int a, int k, int cap = kDefaultEnumerationCap);
StatHistogram height_histogram(int n, int k, int cap = kDefaultEnumerationCap);

}  // namespace dyckmap
