#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dyckmap/bigint.hpp"
#include "dyckmap/error.hpp"

namespace dyckmap {

// Default enumeration cap: Cat_12 = 208012 paths.
inline constexpr int kDefaultEnumerationCap = 12;

enum class Step : std::uint8_t { Up, Down };

// A Dyck path of size n: 2n steps, n Up and n Down, no prefix dipping
// below the axis. Immutable after construction; the constructor
// enforces the invariants.
class DyckPath {
  public:
    explicit DyckPath(std::vector<Step> steps);

    int size() const { return n_; }                           // half-length n
    int length() const { return static_cast<int>(steps_.size()); }
    Step step(int k) const;                                   // 1-based
    const std::vector<Step>& steps() const { return steps_; }

    // Height after step k; k = 0 is allowed and returns 0.
    int height(int k) const;
    int peak_height() const;

    std::vector<int> up_positions() const;    // 1-based, sorted
    std::vector<int> down_positions() const;

    std::string word() const;  // lowercase u/d

    bool operator==(const DyckPath& other) const { return steps_ == other.steps_; }
    auto operator<=>(const DyckPath& other) const { return steps_ <=> other.steps_; }

  private:
    std::vector<Step> steps_;
    int n_;
};

// Fixed-point-free involution on [2n], 1-based. Chord diagram on the
// circle with vertices 1..2n.
class Pairing {
  public:
    explicit Pairing(std::vector<int> partner);

    int length() const { return static_cast<int>(partner_.size()); }
    int size() const { return length() / 2; }
    int partner(int i) const;  // 1-based

    std::string to_string() const;  // comma-separated one-line notation

    bool operator==(const Pairing& other) const { return partner_ == other.partner_; }

  private:
    std::vector<int> partner_;
};

// Circular block {start, start+1, ..., start+size-1} with wraparound
// into [1, 2n].
struct Block {
    int start = 1;
    int size = 0;

    bool contains(int x, int modulus) const;
};

// Accepts u/d, U/D and (/) on input.
DyckPath parse_word(const std::string& text);

// Parenthesis matching: each Down pairs with the nearest unmatched
// earlier Up.
Pairing tunneling(const DyckPath& path);

// True iff no two chords cross on the circle.
bool is_noncrossing(const Pairing& pairing);

// Inverse of tunneling(); throws crossing_pairing if no path exists.
DyckPath path_from_tunneling(const Pairing& pairing);

// Streams D_n in lexicographic order with Up < Down. Throws
// cap_exceeded when n is above the cap.
void for_each_path(int n, const std::function<void(const DyckPath&)>& visit,
                   int cap = kDefaultEnumerationCap);
std::vector<DyckPath> enumerate_paths(int n, int cap = kDefaultEnumerationCap);

BigInt catalan(unsigned n);

}  // namespace dyckmap
