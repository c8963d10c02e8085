#pragma once

#include <string>
#include <vector>

#include "dyckmap/error.hpp"

namespace dyckmap {

// Permutation of [m] in one-line notation, 1-based.
class Perm {
  public:
    explicit Perm(std::vector<int> images);

    static Perm identity(int m);
    static Perm parse(const std::string& csv);  // "1,4,2,..." or "142..." when m <= 9

    int length() const { return static_cast<int>(images_.size()); }
    int apply(int i) const;  // sigma(i), 1-based
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    Perm compose(const Perm& other) const;  // this ∘ other

    std::string to_string() const;  // comma-separated

    bool operator==(const Perm& other) const { return images_ == other.images_; }
    auto operator<=>(const Perm& other) const { return images_ <=> other.images_; }

  private:
    std::vector<int> images_;
};

}  // namespace dyckmap
