#pragma once

// Seeded random inputs for property tests.

#include <random>

#include "helixlab/chern.hpp"
#include "helixlab/lattice.hpp"
#include "helixlab/mutation.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline helixlab::KVector small_vector(Rng& rng, std::size_t n, long span = 6) {
  helixlab::KVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform(rng, -span, span);
  return v;
}

inline helixlab::BraidWord word(Rng& rng, std::size_t n, std::size_t max_len) {
  helixlab::BraidWord w;
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    const auto side = uniform(rng, 0, 1) ? helixlab::Side::Left : helixlab::Side::Right;
    w.push_back({side, static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n) - 1))});
  }
  return w;
}

inline helixlab::Collection basis(Rng& rng, const helixlab::GramForm& g, std::size_t max_len) {
  return helixlab::apply_word(g, helixlab::reference_basis(g.rank()), word(rng, g.rank(), max_len));
}

inline helixlab::Rational rational(Rng& rng, long span = 20, long max_den = 12) {
  return helixlab::ratio(uniform(rng, -span, span), uniform(rng, 1, max_den));
}

inline helixlab::RationalCharacter rational_character(Rng& rng) {
  return {rational(rng), rational(rng), rational(rng), rational(rng)};
}

}  // namespace gen
