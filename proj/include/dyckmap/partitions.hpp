#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyckmap/dyck.hpp"
#include "dyckmap/perm.hpp"

namespace dyckmap {

// Position of the first adjacent parity change from the left (a) and
// from the right (b).
struct ParityPair {
    int a = 0;
    int b = 0;

    bool operator==(const ParityPair&) const = default;
    auto operator<=>(const ParityPair&) const = default;
};

// Canonical fingerprint of a ~-equivalence class for n >= 3: two
// permutations get equal keys iff they generate identical maps on D_n.
struct ClassKey {
    ParityPair parity;
    std::vector<int> prefix_set;   // sorted boundary set on the left
    std::vector<int> middle;       // exact entries between the boundaries
    std::vector<int> suffix_set;   // sorted boundary set on the right

    bool operator==(const ClassKey&) const = default;
    auto operator<=>(const ClassKey&) const = default;
    std::string to_string() const;
};

// Index triple i < j < k whose witness values force lam and mu into
// different classes (given equal parity).
struct DestroyingTriple {
    int i = 0, j = 0, k = 0;
    int p = 0;  // the circularly consecutive pair is {p, p+1 mod 2n}
    int q = 0;
    int r = 0;  // q and r have opposite parity
};

struct IdentityCheckResult {
    BigInt lhs;
    BigInt rhs;
    bool ok = false;
};

// L_P: product over down-step positions d of height(P, d-1).
BigInt l_weight(const DyckPath& path);

// Sum of L_P over D_n against (2n-1)!!.
IdentityCheckResult double_factorial_identity_check(int n, int cap = kDefaultEnumerationCap);

// All sigma with sigma_path(sigma, Q) = P, generated by the two free
// stages (tunnel-representative assignment, then the i* choices) rather
// than filtering S_2n.
void for_each_generator(const DyckPath& p, const DyckPath& q,
                        const std::function<void(const Perm&)>& visit);
std::vector<Perm> generators(const DyckPath& p, const DyckPath& q);

// 2^n * n! * L_P, without enumeration.
BigInt count_generators(const DyckPath& p);

ParityPair parity(const Perm& sigma);

// The four permutations agreeing with sigma except possibly for the
// order of the first two and of the last two entries. Requires n >= 3.
std::vector<Perm> family(const Perm& sigma);

// Equal parity (a,b), equal prefix sets on [a], identical entries on
// [a+1, 2n-b].
bool are_friends(const Perm& lam, const Perm& mu);

bool is_destroying_triple(const Perm& lam, const Perm& mu, int i, int j, int k,
                          DestroyingTriple* witness = nullptr);

// First destroying triple in lexicographic (i, j, k) order, if any.
std::optional<DestroyingTriple> find_destroying_triple(const Perm& lam, const Perm& mu);

ClassKey class_key(const Perm& sigma);  // requires n >= 3

// Ground-truth oracle: sigma_path(lam, D) == sigma_path(mu, D) for all
// D in D_n.
bool same_class_bruteforce(const Perm& lam, const Perm& mu, int cap = kDefaultEnumerationCap);

BigInt class_size(const Perm& sigma);  // requires n >= 3

// |{sigma in S_2n : par(sigma) = (a, b)}| in closed form.
BigInt parity_census(unsigned n, int a, int b);

// Number of ~-equivalence classes; closed formula for n >= 3, known
// brute-force values (1 and 3) for n <= 2.
BigInt num_classes(unsigned n);

}  // namespace dyckmap
