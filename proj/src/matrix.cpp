#include "helixlab/matrix.hpp"

#include <utility>

#include "helixlab/error.hpp"

namespace helixlab {

IntMatrix::IntMatrix(std::size_t n, std::vector<Integer> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != n_ * n_) {
    throw Error(Errc::DimensionMismatch, "matrix of size " + std::to_string(n_) + " needs " +
                                             std::to_string(n_ * n_) + " entries, got " +
                                             std::to_string(entries_.size()));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(*this);
  for (auto& e : m.entries_) e = -e;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (rhs.n_ != n_) throw Error(Errc::DimensionMismatch, "matrix product size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& v) const {
  if (v.size() != n_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Integer> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<Integer> a = entries_;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n_ + j]; };
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Integer num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

std::optional<IntMatrix> IntMatrix::integer_inverse() const {
  // Gauss-Jordan over Q on [A | I].
  const std::size_t w = 2 * n_;
  std::vector<Rational> m(n_ * w);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i * w + j] = Rational((*this)(i, j));
    m[i * w + n_ + i] = 1;
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && m[piv * w + col] == 0) ++piv;
    if (piv == n_) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < w; ++j) std::swap(m[piv * w + j], m[col * w + j]);
    const Rational inv = 1 / m[col * w + col];
    for (std::size_t j = 0; j < w; ++j) m[col * w + j] *= inv;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || m[i * w + col] == 0) continue;
      const Rational f = m[i * w + col];
      for (std::size_t j = 0; j < w; ++j) m[i * w + j] -= f * m[col * w + j];
    }
  }
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& q = m[i * w + n_ + j];
      if (!is_integer(q)) return std::nullopt;
      out(i, j) = q.get_num();
    }
  return out;
}

}  // namespace helixlab
