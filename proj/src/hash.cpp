#include "dynheight/hash.hpp"

#include <cstdio>

namespace dynheight {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string map_id(const HomogeneousLift& F) {
  const HomogeneousLift G = F.normalized();
  std::string text = "d=" + std::to_string(G.degree());
  for (const auto& c : G.wire_coefficients()) text += "," + c.get_str();
  return hex64(fnv1a64(text));
}

}  // namespace dynheight
