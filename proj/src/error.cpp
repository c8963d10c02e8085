#include "dyckmap/error.hpp"

namespace dyckmap {

const char* errc_name(errc code) {
    switch (code) {
        case errc::non_alphabet: return "NonAlphabet";
        case errc::unbalanced: return "Unbalanced";
        case errc::prefix_violation: return "PrefixViolation";
        case errc::odd_length: return "OddLength";
        case errc::crossing_pairing: return "CrossingPairing";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_ccp: return "NotCcp";
        case errc::size_too_small: return "SizeTooSmall";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::too_large: return "TooLarge";
    }
    return "Unknown";
}

}  // namespace dyckmap
