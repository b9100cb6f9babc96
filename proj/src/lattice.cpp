#include "helixlab/lattice.hpp"

#include <string>

#include "helixlab/error.hpp"

namespace helixlab {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": expected rank " +
                                             std::to_string(want) + ", got " +
                                             std::to_string(got));
  }
}

}  // namespace

KVector::KVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

KVector KVector::unit(std::size_t n, std::size_t i) {
  KVector v(n);
  v.coords_.at(i) = 1;
  return v;
}

bool KVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Integer KVector::height() const {
  Integer h = 0;
  for (const auto& c : coords_) {
    Integer a = abs_value(c);
    if (a > h) h = a;
  }
  return h;
}

KVector KVector::operator-() const {
  KVector out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

KVector KVector::operator+(const KVector& rhs) const {
  require_size(rhs.size(), size(), "vector sum");
  KVector out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.coords_[i] += rhs.coords_[i];
  return out;
}

KVector KVector::operator-(const KVector& rhs) const {
  require_size(rhs.size(), size(), "vector difference");
  KVector out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.coords_[i] -= rhs.coords_[i];
  return out;
}

KVector operator*(const Integer& s, const KVector& v) {
  KVector out(v);
  for (auto& c : out.coords_) c *= s;
  return out;
}

std::strong_ordering KVector::operator<=>(const KVector& rhs) const {
  if (auto c = size() <=> rhs.size(); c != 0) return c;
  for (std::size_t i = 0; i < size(); ++i) {
    const int c = cmp(coords_[i], rhs.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

GramForm::GramForm(IntMatrix entries) : m_(std::move(entries)) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_(i, i) != 1) {
      throw Error(Errc::InvalidGram, "diagonal entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(i + 1) + ") is not 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (m_(i, j) != 0) {
        throw Error(Errc::InvalidGram, "entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ") below the diagonal is " +
                                           m_(i, j).get_str());
      }
    }
  }
}

Integer Collection::height() const {
  Integer h = 0;
  for (const auto& e : elements) {
    Integer eh = e.height();
    if (eh > h) h = eh;
  }
  return h;
}

std::strong_ordering Collection::operator<=>(const Collection& rhs) const {
  if (auto c = size() <=> rhs.size(); c != 0) return c;
  for (std::size_t i = 0; i < size(); ++i) {
    if (auto c = elements[i] <=> rhs.elements[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t KVectorHash::operator()(const KVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v.coords()) h = h * 0x100000001b3ULL ^ hash_integer(x);
  return h;
}

std::size_t CollectionHash::operator()(const Collection& c) const noexcept {
  std::size_t h = c.size();
  for (const auto& e : c.elements)
    for (const auto& x : e.coords()) h = h * 0x100000001b3ULL ^ hash_integer(x);
  return h;
}

Collection reference_basis(std::size_t n) {
  Collection c;
  c.elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.elements.push_back(KVector::unit(n, i));
  return c;
}

Integer euler_pair(const GramForm& g, const KVector& u, const KVector& v) {
  const std::size_t n = g.rank();
  require_size(u.size(), n, "euler_pair left argument");
  require_size(v.size(), n, "euler_pair right argument");
  Integer sum = 0;
  Integer row;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    row = 0;
    for (std::size_t j = i; j < n; ++j) {
      if (v[j] != 0) row += g(i, j) * v[j];
    }
    sum += u[i] * row;
  }
  return sum;
}

bool is_exceptional(const GramForm& g, const KVector& u) { return euler_pair(g, u, u) == 1; }

bool SodVerdict::ok() const {
  for (bool e : exceptional)
    if (!e) return false;
  return violations.empty() && unimodular;
}

SodVerdict check_sod_basis(const GramForm& g, const Collection& c) {
  const std::size_t n = g.rank();
  require_size(c.size(), n, "collection length");
  for (const auto& e : c.elements) require_size(e.size(), n, "collection element");

  SodVerdict v;
  v.exceptional.reserve(n);
  for (const auto& e : c.elements) v.exceptional.push_back(is_exceptional(g, e));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer chi = euler_pair(g, c[j], c[i]);
      if (chi != 0) v.violations.push_back({j + 1, i + 1, std::move(chi)});
    }
  }
  v.determinant = coordinate_matrix(c).determinant();
  v.unimodular = abs_value(v.determinant) == 1;
  return v;
}

KVector canonicalize(const KVector& v) {
  for (const auto& c : v.coords()) {
    if (c == 0) continue;
    return c < 0 ? -v : v;
  }
  throw Error(Errc::ZeroVector, "cannot canonicalize the zero class");
}

Collection canonicalize(const Collection& c) {
  Collection out;
  out.elements.reserve(c.size());
  for (const auto& e : c.elements) out.elements.push_back(canonicalize(e));
  return out;
}

IntMatrix coordinate_matrix(const Collection& c) {
  const std::size_t n = c.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_size(c[i].size(), n, "coordinate matrix row");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[i][j];
  }
  return m;
}

}  // namespace helixlab
