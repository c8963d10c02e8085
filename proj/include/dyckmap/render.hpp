#pragma once

#include <optional>
#include <string>

#include "dyckmap/dyck.hpp"
#include "dyckmap/perm.hpp"

namespace dyckmap {

// ASCII chord diagram: clockwise vertex labels and the chord list. With
// sigma, renders the permuted circular representation. Throws too_large
// for n > 26.
std::string render_chords(const DyckPath& path, const std::optional<Perm>& sigma = std::nullopt);

}  // namespace dyckmap
