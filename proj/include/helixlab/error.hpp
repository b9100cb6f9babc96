#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace helixlab {

enum class Errc {
  DimensionMismatch,
  ZeroVector,
  NotInLattice,
  NoSolution,
  NotSODBasis,
  BadPosition,
  ParseError,
  CapExceeded,
  AmbientMismatch,
  ZeroRank,
  InvalidGram,
  InvalidPreset,
};

std::string_view errc_name(Errc code);

/// Library error. Every failure path named in the public API throws this
/// with a code from Errc; callers (the CLI in particular) map codes to exit
/// statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace helixlab
