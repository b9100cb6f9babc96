#include "helixlab/chern.hpp"

#include <array>

#include "helixlab/error.hpp"

namespace helixlab {

ChernCharacter ChernCharacter::operator+(const ChernCharacter& rhs) const {
  return {r + rhs.r, a + rhs.a, b + rhs.b, c + rhs.c};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& rhs) const {
  return {r - rhs.r, a - rhs.a, b - rhs.b, c - rhs.c};
}

ChernCharacter ChernCharacter::operator-() const { return {-r, -a, -b, -c}; }

ChernCharacter operator*(const Integer& s, const ChernCharacter& x) {
  return {s * x.r, s * x.a, Rational(s) * x.b, Rational(s) * x.c};
}

bool ChernCharacter::satisfies_integrality() const {
  return is_integer(Rational(2) * b) && is_integer(Rational(6) * c);
}

RationalCharacter as_rational(const ChernCharacter& x) {
  return {Rational(x.r), Rational(x.a), x.b, x.c};
}

Rational FanoPreset::tau1() const { return ratio(index, 2); }

Rational FanoPreset::tau2() const {
  Rational q = Rational(index * index * degree) + ratio(24, index);
  return q / 12;
}

Rational FanoPreset::tau3() const { return 1; }

GramForm FanoPreset::gram_form() const {
  if (!gram) throw Error(Errc::InvalidPreset, "preset '" + name + "' has no Gram form");
  return GramForm(*gram);
}

const std::vector<ChernCharacter>& FanoPreset::basis() const {
  if (!basis_ch) {
    throw Error(Errc::InvalidPreset, "preset '" + name + "' has no reference Chern characters");
  }
  return *basis_ch;
}

Rational hrr_euler(const FanoPreset& v, const RationalCharacter& x, const RationalCharacter& y) {
  const Rational d(v.degree);
  const Rational top = x.r * y.c - y.r * x.c + (y.a * x.b - x.a * y.b);
  const Rational curve = x.r * y.b + y.r * x.b - d * x.a * y.a;
  const Rational divisor = x.r * y.a - y.r * x.a;
  Rational chi = top + v.tau1() * curve + v.tau2() * divisor + v.tau3() * x.r * y.r;
  chi.canonicalize();
  return chi;
}

Rational hrr_euler(const FanoPreset& v, const ChernCharacter& x, const ChernCharacter& y) {
  return hrr_euler(v, as_rational(x), as_rational(y));
}

RationalCharacter twist(const FanoPreset& v, const RationalCharacter& x, const Integer& m) {
  const Rational d(v.degree);
  const Rational q(m);
  RationalCharacter out;
  out.r = x.r;
  out.a = x.a + x.r * q;
  out.b = x.b + q * d * x.a + x.r * q * q * d / 2;
  out.c = x.c + q * x.b + (q * q * d / 2) * x.a + x.r * q * q * q * d / 6;
  return out;
}

ChernCharacter twist(const FanoPreset& v, const ChernCharacter& x, const Integer& m) {
  RationalCharacter t = twist(v, as_rational(x), m);
  return {x.r, t.a.get_num(), t.b, t.c};
}

namespace {

Integer twist_amount(const FanoPreset& v, TwistDirection dir) {
  return dir == TwistDirection::ByK ? Integer(-v.index) : v.index;
}

}  // namespace

ChernCharacter canonical_twist(const FanoPreset& v, const ChernCharacter& x, TwistDirection dir) {
  return twist(v, x, twist_amount(v, dir));
}

RationalCharacter canonical_twist(const FanoPreset& v, const RationalCharacter& x,
                                  TwistDirection dir) {
  return twist(v, x, twist_amount(v, dir));
}

ChernCharacter line_bundle(const FanoPreset& v, const Integer& m) {
  return twist(v, ChernCharacter{1, 0, 0, 0}, m);
}

namespace {

std::array<Rational, 4> components(const ChernCharacter& x) {
  return {Rational(x.r), Rational(x.a), x.b, x.c};
}

}  // namespace

KVector to_coordinates(const FanoPreset& v, const ChernCharacter& x) {
  const auto& basis = v.basis();
  const std::size_t n = basis.size();
  // Augmented 4 x (n + 1) system: columns are the basis characters.
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    auto col = components(basis[j]);
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  auto rhs = components(x);
  for (std::size_t i = 0; i < 4; ++i) m[i][n] = rhs[i];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < 4; ++col) {
    std::size_t p = row;
    while (p < 4 && m[p][col] == 0) ++p;
    if (p == 4) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j <= n; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < 4; ++i) {
    if (m[i][n] != 0) throw Error(Errc::NoSolution, "character is not in the span of the basis");
  }
  if (pivot_col.size() != n) {
    throw Error(Errc::InvalidPreset, "reference characters are linearly dependent");
  }
  KVector xi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& q = m[i][n];
    if (!is_integer(q)) {
      throw Error(Errc::NotInLattice, "coordinate " + std::to_string(pivot_col[i] + 1) + " is " +
                                          to_string(q));
    }
    xi[pivot_col[i]] = q.get_num();
  }
  return xi;
}

ChernCharacter from_coordinates(const FanoPreset& v, const KVector& xi) {
  const auto& basis = v.basis();
  if (xi.size() != basis.size()) {
    throw Error(Errc::DimensionMismatch, "coordinate vector length " + std::to_string(xi.size()) +
                                             " vs basis length " + std::to_string(basis.size()));
  }
  ChernCharacter out{0, 0, 0, 0};
  for (std::size_t i = 0; i < basis.size(); ++i) out = out + xi[i] * basis[i];
  return out;
}

PresetVerdict validate_preset(const FanoPreset& v) {
  PresetVerdict out;
  auto fail = [&](std::string msg) { out.violations.push_back(std::move(msg)); };

  if (v.degree <= 0) fail("degree must be positive, got " + v.degree.get_str());
  if (v.index < 1 || v.index > 4) {
    fail("index must be in 1..4, got " + v.index.get_str());
  } else if (Integer(24) % v.index != 0) {
    fail("24/k is not an integer for k = " + v.index.get_str());
  }
  if (v.b2 != 1) fail("b2 must be 1, got " + std::to_string(v.b2));
  if (v.b3 != 0) fail("b3 must be 0, got " + std::to_string(v.b3));
  if (v.tau3() != 1) fail("chi(O_X) must be 1");
  if (!out.ok()) return out;

  const ChernCharacter o{1, 0, 0, 0};
  if (hrr_euler(v, o, o) != 1) fail("chi(O, O) = " + to_string(hrr_euler(v, o, o)) + ", expected 1");

  if (v.gram.has_value() != v.basis_ch.has_value()) {
    fail("gram and basis_ch must be given together");
    return out;
  }
  if (!v.gram) return out;

  const IntMatrix& g = *v.gram;
  const auto& basis = *v.basis_ch;
  const std::size_t n = g.size();
  if (basis.size() != n) {
    fail("basis_ch has " + std::to_string(basis.size()) + " entries, gram has rank " +
         std::to_string(n));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].satisfies_integrality()) {
      fail("basis_ch[" + std::to_string(i + 1) + "] violates integrality of 2b and 6c");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j && g(i, j) != 1) fail("gram" + at + " = " + g(i, j).get_str() + ", expected 1");
      if (j < i && g(i, j) != 0) fail("gram" + at + " = " + g(i, j).get_str() + ", expected 0");
      const Rational chi = hrr_euler(v, basis[i], basis[j]);
      if (chi != Rational(g(i, j))) {
        fail("gram" + at + " = " + g(i, j).get_str() + " but Riemann-Roch gives " +
             to_string(chi));
      }
    }
  }
  if (out.ok()) {
    try {
      for (std::size_t i = 0; i < n; ++i) {
        if (to_coordinates(v, basis[i]) != KVector::unit(n, i)) {
          fail("basis_ch[" + std::to_string(i + 1) + "] does not map to its own coordinate");
        }
      }
    } catch (const Error& e) {
      fail(std::string("reference characters do not form a basis: ") + e.what());
    }
  }
  return out;
}

}  // namespace helixlab
