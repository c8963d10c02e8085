#include "dyckmap/dihedral.hpp"

#include <algorithm>

#include "dyckmap/sigma.hpp"

namespace dyckmap {

namespace {

int wrap(int x, int m) { return (x % m + m) % m == 0 ? m : (x % m + m) % m; }

}  // namespace

Perm DihedralElement::to_perm(int n) const {
    const int m = 2 * n;
    std::vector<int> images(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) {
        const int x = reflected ? m - k : k;
        images[static_cast<size_t>(k - 1)] = wrap(x + rotation, m);
    }
    return Perm(std::move(images));
}

DihedralElement DihedralElement::compose(const DihedralElement& other, int n) const {
    const int m = 2 * n;
    if (!reflected)
        return DihedralElement{(rotation + other.rotation) % m, other.reflected};
    return DihedralElement{((rotation - other.rotation) % m + m) % m, !other.reflected};
}

DihedralElement DihedralElement::inverse(int n) const {
    const int m = 2 * n;
    if (reflected) return *this;  // reflections are involutions
    return DihedralElement{(m - rotation) % m, false};
}

Perm rho(int n) {
    return DihedralElement{1, false}.to_perm(n);
}

Perm omega(int n) {
    return DihedralElement{0, true}.to_perm(n);
}

std::vector<DihedralElement> dihedral_elements(int n) {
    std::vector<DihedralElement> out;
    out.reserve(static_cast<size_t>(4 * n));
    for (int r = 0; r < 2 * n; ++r) out.push_back(DihedralElement{r, false});
    for (int r = 0; r < 2 * n; ++r) out.push_back(DihedralElement{r, true});
    return out;
}

std::vector<Perm> dihedral_group(int n) {
    std::vector<Perm> out;
    out.reserve(static_cast<size_t>(4 * n));
    for (const DihedralElement& e : dihedral_elements(n)) out.push_back(e.to_perm(n));
    return out;
}

bool preserves_paths(const Perm& g, int n, std::optional<DyckPath>* witness, int cap) {
    if (g.length() != 2 * n)
        throw error(errc::size_mismatch, "permutation size is not 2n");
    bool preserved = true;
    for_each_path(
        n,
        [&](const DyckPath& d) {
            if (preserved && !is_noncrossing(permuted_rep(d, g))) {
                preserved = false;
                if (witness) *witness = d;
            }
        },
        cap);
    return preserved;
}

std::vector<DyckPath> action_orbit(const DyckPath& path) {
    const int n = path.size();
    std::vector<DyckPath> orbit;
    for (const Perm& g : dihedral_group(n)) {
        auto image = rep_as_path(path, g);
        if (!image)
            throw error(errc::hypothesis_violated, "dihedral image is not a path");
        orbit.push_back(std::move(*image));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

}  // namespace dyckmap
