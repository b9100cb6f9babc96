#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "helixlab/number.hpp"

namespace helixlab {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::size_t n, std::vector<Integer> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  IntMatrix transposed() const;
  IntMatrix operator-() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Integer> operator*(const std::vector<Integer>& v) const;

  bool operator==(const IntMatrix&) const = default;

  /// Fraction-free (Bareiss) elimination; exact.
  Integer determinant() const;

  /// Exact inverse; nullopt when the matrix is not invertible over Z.
  std::optional<IntMatrix> integer_inverse() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace helixlab
