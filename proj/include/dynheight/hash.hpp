#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dynheight/lift.hpp"

namespace dynheight {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

std::string hex64(std::uint64_t h);

/// Hash of the canonical (content-normalized) wire coefficients; equal for
/// every lift of the same map.
std::string map_id(const HomogeneousLift& F);

}  // namespace dynheight
