#pragma once

#include <optional>
#include <vector>

#include "dyckmap/dyck.hpp"
#include "dyckmap/perm.hpp"

namespace dyckmap {

// Element of the rotation/reflection subgroup of S_2n in normal form
// rho^rotation or rho^rotation ∘ omega. The group has 4n elements.
struct DihedralElement {
    int rotation = 0;  // in [0, 2n)
    bool reflected = false;

    Perm to_perm(int n) const;
    DihedralElement compose(const DihedralElement& other, int n) const;
    DihedralElement inverse(int n) const;

    bool operator==(const DihedralElement&) const = default;
};

Perm rho(int n);    // k -> k+1 (mod 2n)
Perm omega(int n);  // k -> 2n-k (mod 2n)

std::vector<DihedralElement> dihedral_elements(int n);
std::vector<Perm> dihedral_group(int n);

// True iff D^g is a path for every D in D_n; equivalently g is in the
// dihedral subgroup. On failure *witness (when given) receives a path
// whose permuted representation crosses.
bool preserves_paths(const Perm& g, int n, std::optional<DyckPath>* witness = nullptr,
                     int cap = kDefaultEnumerationCap);

// Orbit of D under the dihedral action, sorted and deduplicated.
std::vector<DyckPath> action_orbit(const DyckPath& path);

}  // namespace dyckmap
