#pragma once

// Dense square matrices over an exact commutative ring.
//
// The element type T must provide +, -, *, ==, and the free functions
// zero_like(const T&), one_like(const T&) and is_zero(const T&). The Bareiss
// determinant additionally needs exact_div(const T&, const T&).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arbor/errors.hpp"

namespace arbor {

template <class T>
class RingMatrix {
 public:
  /// n x n matrix filled with `zero`. The zero also serves as the ring
  /// prototype for empty matrices.
  RingMatrix(std::size_t n, const T& zero) : n_(n), zero_(zero), entries_(n * n, zero) {}

  std::size_t size() const noexcept { return n_; }
  const T& zero() const noexcept { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("matrix index out of range");
    return entries_[i * n_ + j];
  }

  static RingMatrix identity(std::size_t n, const T& zero) {
    RingMatrix m(n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  /// Removes row i and column j.
  RingMatrix minor(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("minor index out of range");
    RingMatrix out(n_ - 1, zero_);
    for (std::size_t r = 0, rr = 0; r < n_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < n_; ++c) {
        if (c == j) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  /// Square block starting at (row, col).
  RingMatrix block(std::size_t row, std::size_t col, std::size_t len) const {
    if (row + len > n_ || col + len > n_) throw IndexOutOfRange("block out of range");
    RingMatrix out(len, zero_);
    for (std::size_t r = 0; r < len; ++r)
      for (std::size_t c = 0; c < len; ++c) out(r, c) = (*this)(row + r, col + c);
    return out;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.n_ != b.n_) throw IndexOutOfRange("matrix size mismatch");
    RingMatrix out(a.n_, a.zero_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& lhs = a(i, k);
        if (is_zero(lhs)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) {
          const T& rhs = b(k, j);
          if (!is_zero(rhs)) out(i, j) = out(i, j) + lhs * rhs;
        }
      }
    return out;
  }

  /// Entry-wise image under a ring map.
  template <class F>
  auto map(F&& f, const decltype(f(std::declval<const T&>()))& zero) const {
    RingMatrix<decltype(f(std::declval<const T&>()))> out(n_, zero);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t n_;
  T zero_;
  std::vector<T> entries_;
};

/// Division-free Laplace expansion, memoized over column subsets
/// (O(n 2^n) ring operations). Valid over any commutative ring.
template <class T>
T det_cofactor(const RingMatrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return one_like(m.zero());
  if (n > 20) throw SearchSpaceTooLarge("cofactor expansion limited to dimension 20");
  const std::size_t full = (std::size_t{1} << n);
  // det[S] = determinant of the last |S| rows restricted to the columns in S.
  std::vector<T> det(full, m.zero());
  det[0] = one_like(m.zero());
  for (std::size_t s = 1; s < full; ++s) {
    const auto rows = static_cast<std::size_t>(__builtin_popcountll(s));
    const std::size_t row = n - rows;
    T acc = m.zero();
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      const T& entry = m(row, j);
      const T& sub = det[s & ~(std::size_t{1} << j)];
      if (!is_zero(entry) && !is_zero(sub)) {
        if (position % 2 == 0) {
          acc = acc + entry * sub;
        } else {
          acc = acc - entry * sub;
        }
      }
      ++position;
    }
    det[s] = std::move(acc);
  }
  return det[full - 1];
}

/// Bareiss fraction-free elimination. Pivot: first nonzero entry at or below
/// the diagonal in the current column; a zero column gives determinant 0.
template <class T>
T det_bareiss(RingMatrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return one_like(m.zero());
  T previous = one_like(m.zero());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return m.zero();
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    const T p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = p * m(i, j);
        if (!is_zero(lead) && !is_zero(m(k, j))) value = value - lead * m(k, j);
        m(i, j) = exact_div(value, previous);
      }
      m(i, k) = m.zero();
    }
    previous = p;
  }
  T result = m(n - 1, n - 1);
  if (negate) result = m.zero() - result;
  return result;
}

/// Exact determinant over an integral domain. Small matrices are cross-checked
/// against cofactor expansion.
template <class T>
T det_fraction_free(const RingMatrix<T>& m) {
  T result = det_bareiss(m);
  if (m.size() <= 4 && !(result == det_cofactor(m))) {
    throw ConsistencyError("Bareiss determinant disagrees with cofactor expansion");
  }
  return result;
}

}  // namespace arbor
