#pragma once

// Chern characters on a Fano threefold with Picard rank one.
//
// Cohomology is generated by H (divisor), L (curve), P (point) with
// H*H = d L, H*L = P, L*L = 0. A character is ch = r + aH + bL + cP.

#include <optional>
#include <string>
#include <vector>

#include "helixlab/lattice.hpp"
#include "helixlab/number.hpp"

namespace helixlab {

struct ChernCharacter {
  Integer r;
  Integer a;
  Rational b;
  Rational c;

  ChernCharacter operator+(const ChernCharacter& rhs) const;
  ChernCharacter operator-(const ChernCharacter& rhs) const;
  ChernCharacter operator-() const;
  friend ChernCharacter operator*(const Integer& s, const ChernCharacter& x);

  /// 2b and 6c integral.
  bool satisfies_integrality() const;

  bool operator==(const ChernCharacter&) const = default;
};

/// Rational Chern data, used where integrality is not assumed (e.g. when
/// the character is a symbolic or random test input).
struct RationalCharacter {
  Rational r, a, b, c;
  bool operator==(const RationalCharacter&) const = default;
};

RationalCharacter as_rational(const ChernCharacter& x);

struct FanoPreset {
  std::string name;
  Integer degree;  // d = H^3
  Integer index;   // k, with -K = kH
  int b2 = 1;
  int b3 = 0;
  std::optional<IntMatrix> gram;                   // raw; validate_preset checks shape
  std::optional<std::vector<ChernCharacter>> basis_ch;

  // Todd class td = 1 + tau1 H + tau2 L + tau3 P.
  Rational tau1() const;
  Rational tau2() const;
  Rational tau3() const;

  bool has_lattice() const { return gram.has_value() && basis_ch.has_value(); }
  /// Throws InvalidPreset if absent, InvalidGram if malformed.
  GramForm gram_form() const;
  const std::vector<ChernCharacter>& basis() const;

  bool operator==(const FanoPreset&) const = default;
};

/// chi(x, y) = integral of ch(x)^dual * ch(y) * td(X).
Rational hrr_euler(const FanoPreset& v, const ChernCharacter& x, const ChernCharacter& y);
Rational hrr_euler(const FanoPreset& v, const RationalCharacter& x, const RationalCharacter& y);

/// x * exp(mH).
ChernCharacter twist(const FanoPreset& v, const ChernCharacter& x, const Integer& m);
RationalCharacter twist(const FanoPreset& v, const RationalCharacter& x, const Integer& m);

enum class TwistDirection { ByK, ByMinusK };

ChernCharacter canonical_twist(const FanoPreset& v, const ChernCharacter& x, TwistDirection dir);
RationalCharacter canonical_twist(const FanoPreset& v, const RationalCharacter& x,
                                  TwistDirection dir);

/// ch(O(m)).
ChernCharacter line_bundle(const FanoPreset& v, const Integer& m);

/// Integer coordinates of x in the preset's reference basis.
/// Throws NoSolution (inconsistent) or NotInLattice (non-integral).
KVector to_coordinates(const FanoPreset& v, const ChernCharacter& x);
/// Inverse direction: sum of xi_i * basis_ch[i].
ChernCharacter from_coordinates(const FanoPreset& v, const KVector& xi);

struct PresetVerdict {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

PresetVerdict validate_preset(const FanoPreset& v);

// Shipped presets. p3 and q3 carry reference collections; v5 and v22 carry
// only (d, k) and need a user-supplied lattice.
FanoPreset preset_p3();
FanoPreset preset_q3();
FanoPreset preset_v5();
FanoPreset preset_v22();
std::vector<FanoPreset> builtin_presets();
std::optional<FanoPreset> find_builtin_preset(const std::string& name);

}  // namespace helixlab
