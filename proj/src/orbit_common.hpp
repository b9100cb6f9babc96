#pragma once

#include <cstddef>
#include <string>

#include "helixlab/error.hpp"
#include "helixlab/lattice.hpp"
#include "helixlab/mutation.hpp"
#include "helixlab/orbit.hpp"

namespace helixlab::detail {

inline std::size_t scan_volume(long bound, std::size_t n, std::size_t limit) {
  if (bound < 0) throw Error(Errc::CapExceeded, "height bound must be nonnegative");
  const std::size_t side = 2 * static_cast<std::size_t>(bound) + 1;
  std::size_t volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (volume > limit / side) {
      throw Error(Errc::CapExceeded, "scan of (2*" + std::to_string(bound) + "+1)^" +
                                         std::to_string(n) + " candidates exceeds the limit " +
                                         std::to_string(limit));
    }
    volume *= side;
  }
  return volume;
}

inline bool first_nonzero_positive(const KVector& v) {
  for (const auto& c : v.coords()) {
    if (c != 0) return c > 0;
  }
  return false;
}

/// Generator g in 0..2(n-1)-1: L1..L(n-1) then R1..R(n-1).
inline Move generator(std::size_t g, std::size_t n) {
  const std::size_t half = n - 1;
  return g < half ? Move{Side::Left, g + 1} : Move{Side::Right, g - half + 1};
}

inline bool within_cap(const Collection& c, const SearchCaps& caps) {
  return !caps.height_cap || c.height() <= *caps.height_cap;
}

}  // namespace helixlab::detail
