#pragma once

// Restriction of threefold classes to a generic anticanonical K3 surface S
// with Picard rank one, polarized by H_S = H|_S with H_S^2 = k d.

#include <optional>

#include "helixlab/chern.hpp"
#include "helixlab/number.hpp"

namespace helixlab {

/// v = (r, c1 = a H_S, s = ch2 + r) on S.
struct MukaiVector {
  Integer r;
  Rational a;
  Rational s;
  Integer polarization;  // H_S^2

  bool operator==(const MukaiVector&) const = default;
};

MukaiVector restrict_to_k3(const FanoPreset& v, const ChernCharacter& x);

/// <v,w> = a_v a_w H_S^2 - r_v s_w - r_w s_v. Throws AmbientMismatch.
/// chi_S(v, w) = -<v, w>.
Rational mukai_pair(const MukaiVector& v, const MukaiVector& w);

bool is_spherical_class(const MukaiVector& v);

/// a / r. Throws ZeroRank.
Rational slope(const ChernCharacter& x);
Rational slope(const MukaiVector& v);

/// 2 r c2 - (r - 1) c1^2, computed as <v,v> + 2 r^2. Throws ZeroRank for r <= 0.
Rational discriminant(const MukaiVector& v);

/// Numeric inputs of the rank-2 restriction-to-curves argument.
///
/// The computed discriminant is always 2r^2 - 2 for spherical classes. For
/// rank 2 the argument in the literature quotes 4c2 - c1^2 = 2 and the
/// threshold k >= Delta/2 + 1 = 2; that quoted value is carried separately
/// since it does not agree with the normalization used here (which gives 6).
struct BogomolovReport {
  Integer index;
  Integer rank;
  bool spherical = false;
  Rational discriminant;
  Rational computed_threshold;     // discriminant / 2 + 1
  bool computed_satisfied = false;  // k >= computed_threshold
  std::optional<Rational> quoted_discriminant;  // 2, rank 2 only
  std::optional<Rational> quoted_threshold;     // 2, rank 2 only
  std::optional<bool> quoted_satisfied;
  bool index_hypothesis = false;  // k >= 2
};

BogomolovReport bogomolov_restriction_report(const FanoPreset& v, const MukaiVector& m);

}  // namespace helixlab
