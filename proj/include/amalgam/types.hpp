#pragma once

#include <cstddef>
#include <cstdint>

namespace amalgam {

/// Position of an element in its ring's canonical enumeration.
using Element = std::uint16_t;

/// Size caps shared by constructors, law checks and ideal enumeration.
struct Limits {
    std::size_t max_order = 4096;
    std::size_t law_check_order = 64;
    std::size_t law_samples = 100000;
    std::size_t max_ideals = std::size_t{1} << 16;
};

}  // namespace amalgam
