#pragma once

// Braid group action on semiorthogonal bases by left and right mutations,
// the Serre operator, and the helix shift.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "helixlab/lattice.hpp"
#include "helixlab/matrix.hpp"

namespace helixlab {

enum class Side { Left, Right };

struct Move {
  Side side;
  std::size_t position;  // 1-based, mutates the pair (position, position + 1)

  bool operator==(const Move&) const = default;
};

/// Sequence of moves, applied left to right. Text form: "L1 R2 L3".
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Move> moves) : moves_(std::move(moves)) {}

  /// Throws ParseError on malformed text. Does not check positions against a
  /// rank; apply_word does that.
  static BraidWord parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Move>& moves() const noexcept { return moves_; }
  bool empty() const noexcept { return moves_.empty(); }
  std::size_t length() const noexcept { return moves_.size(); }
  void push_back(Move m) { moves_.push_back(m); }

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<Move> moves_;
};

/// Applies one move with no precondition check. Positions are 1-based.
/// Used by the orbit kernels; everything else goes through mutate().
void mutate_in_place(const GramForm& g, Collection& c, Side side, std::size_t position);

/// Left:  (u, v) -> (v - chi(u,v) u, u)
/// Right: (u, v) -> (v, u - chi(u,v) v)
/// Throws NotSODBasis if c is not a semiorthogonal basis, BadPosition if the
/// position is outside 1..n-1.
Collection mutate(const GramForm& g, const Collection& c, Side side, std::size_t position);

Collection apply_word(const GramForm& g, const Collection& c, const BraidWord& w);

struct SerreOperator {
  IntMatrix kappa;  // -G^{-1} G^T

  /// Class-level action of - (x) K. On a threefold the shift [3] flips the
  /// sign of the Serre functor, so this is kappa itself.
  IntMatrix twist_by_K() const;
  /// Class-level action of - (x) (-K), i.e. kappa^{-1}.
  IntMatrix twist_by_minus_K() const;

  KVector apply(const KVector& v) const;
};

SerreOperator serre_operator(const GramForm& g);

enum class HelixDirection { Forward, Backward };

/// Forward: (u1, ..., un) -> (u2, ..., un, t u1) with t the twist by -K.
/// Backward is its inverse.
Collection helix_shift(const GramForm& g, const Collection& c, HelixDirection dir);

}  // namespace helixlab
