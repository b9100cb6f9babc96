#pragma once

// Integer model of K0 with its Euler form: classes, Gram forms, collections,
// and the semiorthogonal-basis predicate.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "helixlab/matrix.hpp"
#include "helixlab/number.hpp"

namespace helixlab {

/// Coordinates of a class in K0 with respect to the reference basis.
class KVector {
 public:
  KVector() = default;
  explicit KVector(std::size_t n) : coords_(n) {}
  explicit KVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  KVector(std::initializer_list<long> coords);

  /// i-th standard basis vector (0-based).
  static KVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  /// Max absolute coordinate.
  Integer height() const;

  KVector operator-() const;
  KVector operator+(const KVector& rhs) const;
  KVector operator-(const KVector& rhs) const;
  friend KVector operator*(const Integer& s, const KVector& v);

  bool operator==(const KVector& rhs) const { return coords_ == rhs.coords_; }
  std::strong_ordering operator<=>(const KVector& rhs) const;

 private:
  std::vector<Integer> coords_;
};

/// Euler form on the reference basis: unit diagonal, zero below it.
class GramForm {
 public:
  /// Throws Error(InvalidGram) unless the matrix is unit upper triangular.
  explicit GramForm(IntMatrix entries);

  std::size_t rank() const noexcept { return m_.size(); }
  const IntMatrix& matrix() const noexcept { return m_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  bool operator==(const GramForm&) const = default;

 private:
  IntMatrix m_;
};

/// Ordered tuple of classes; the lattice shadow of an exceptional collection.
struct Collection {
  std::vector<KVector> elements;

  std::size_t size() const noexcept { return elements.size(); }
  const KVector& operator[](std::size_t i) const { return elements[i]; }
  KVector& operator[](std::size_t i) { return elements[i]; }

  Integer height() const;

  bool operator==(const Collection& rhs) const { return elements == rhs.elements; }
  std::strong_ordering operator<=>(const Collection& rhs) const;
};

struct KVectorHash {
  std::size_t operator()(const KVector& v) const noexcept;
};

struct CollectionHash {
  std::size_t operator()(const Collection& c) const noexcept;
};

Collection reference_basis(std::size_t n);

/// u^T G v.
Integer euler_pair(const GramForm& g, const KVector& u, const KVector& v);

bool is_exceptional(const GramForm& g, const KVector& u);

struct PairViolation {
  std::size_t later;    // 1-based index j
  std::size_t earlier;  // 1-based index i < j
  Integer chi;          // chi(u_j, u_i), nonzero
};

struct SodVerdict {
  std::vector<bool> exceptional;           // per element
  std::vector<PairViolation> violations;   // every j > i with chi(u_j, u_i) != 0
  Integer determinant;
  bool unimodular = false;

  bool ok() const;
};

SodVerdict check_sod_basis(const GramForm& g, const Collection& c);

/// Negates v if its first nonzero coordinate is negative. Throws ZeroVector.
KVector canonicalize(const KVector& v);
Collection canonicalize(const Collection& c);

/// The n x n matrix whose rows are the elements of c.
IntMatrix coordinate_matrix(const Collection& c);

}  // namespace helixlab
