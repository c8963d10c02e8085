#pragma once

#include <stdexcept>
#include <string>

namespace dyckmap {

enum class errc {
    non_alphabet,
    unbalanced,
    prefix_violation,
    odd_length,
    crossing_pairing,
    size_mismatch,
    index_out_of_range,
    cap_exceeded,
    not_ccp,
    size_too_small,
    hypothesis_violated,
    too_large,
};

// Single exception type for all domain errors; the code distinguishes
// the failure modes named in the public contracts.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

const char* errc_name(errc code);

}  // namespace dyckmap
