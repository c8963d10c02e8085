#include "dyckmap/render.hpp"

#include <sstream>

#include "dyckmap/sigma.hpp"

namespace dyckmap {

std::string render_chords(const DyckPath& path, const std::optional<Perm>& sigma) {
    if (path.size() > 26)
        throw error(errc::too_large, "chord rendering is limited to n <= 26");
    if (sigma && sigma->length() != path.length())
        throw error(errc::size_mismatch, "permutation and path sizes differ");

    const Pairing tau = tunneling(path);
    auto label = [&](int k) { return sigma ? sigma->apply(k) : k; };

    std::ostringstream out;
    out << "word: " << path.word() << '\n';
    out << "vertices (clockwise):";
    for (int k = 1; k <= path.length(); ++k) out << ' ' << label(k);
    out << '\n';
    out << "chords:";
    for (int u : path.up_positions())
        out << " (" << label(u) << ',' << label(tau.partner(u)) << ')';
    out << '\n';
    return out.str();
}

}  // namespace dyckmap
