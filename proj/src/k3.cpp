#include "helixlab/k3.hpp"

#include "helixlab/error.hpp"

namespace helixlab {

MukaiVector restrict_to_k3(const FanoPreset& v, const ChernCharacter& x) {
  // ch2(x).(-K) = k b points; the sqrt(td_S) shift adds r to ch2.
  return {x.r, Rational(x.a), Rational(v.index) * x.b + Rational(x.r), v.index * v.degree};
}

Rational mukai_pair(const MukaiVector& v, const MukaiVector& w) {
  if (v.polarization != w.polarization) {
    throw Error(Errc::AmbientMismatch, "polarizations " + v.polarization.get_str() + " and " +
                                           w.polarization.get_str() + " differ");
  }
  Rational p = v.a * w.a * Rational(v.polarization) - Rational(v.r) * w.s - Rational(w.r) * v.s;
  p.canonicalize();
  return p;
}

bool is_spherical_class(const MukaiVector& v) { return mukai_pair(v, v) == -2; }

Rational slope(const ChernCharacter& x) {
  if (x.r == 0) throw Error(Errc::ZeroRank, "slope of a rank-0 class");
  return ratio(x.a, x.r);
}

Rational slope(const MukaiVector& v) {
  if (v.r == 0) throw Error(Errc::ZeroRank, "slope of a rank-0 Mukai vector");
  return v.a / Rational(v.r);
}

Rational discriminant(const MukaiVector& v) {
  if (v.r <= 0) throw Error(Errc::ZeroRank, "discriminant needs positive rank");
  return mukai_pair(v, v) + Rational(2 * v.r * v.r);
}

BogomolovReport bogomolov_restriction_report(const FanoPreset& v, const MukaiVector& m) {
  BogomolovReport rep;
  rep.index = v.index;
  rep.rank = m.r;
  rep.spherical = is_spherical_class(m);
  rep.discriminant = discriminant(m);
  rep.computed_threshold = rep.discriminant / 2 + 1;
  rep.computed_satisfied = Rational(v.index) >= rep.computed_threshold;
  if (m.r == 2) {
    rep.quoted_discriminant = Rational(2);
    rep.quoted_threshold = *rep.quoted_discriminant / 2 + 1;
    rep.quoted_satisfied = Rational(v.index) >= *rep.quoted_threshold;
  }
  rep.index_hypothesis = v.index >= 2;
  return rep;
}

}  // namespace helixlab
