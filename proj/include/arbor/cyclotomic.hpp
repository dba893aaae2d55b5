#pragma once

// Z[zeta_p][E] for a prime p, on the basis 1, zeta, ..., zeta^(p-2).

#include <vector>

#include "arbor/group_algebra.hpp"
#include "arbor/poly.hpp"

namespace arbor {

class NormNotRational : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Cyclotomic {
 public:
  /// Zero in Z[zeta_p]; p must be prime.
  explicit Cyclotomic(unsigned p);

  static Cyclotomic scalar(unsigned p, const IntPoly& c);
  /// c * zeta^j for any integer j.
  static Cyclotomic zeta_power(unsigned p, long j, const IntPoly& c = IntPoly::constant(1));

  unsigned prime() const noexcept { return p_; }
  /// Coefficient of zeta^j, 0 <= j <= p-2.
  const IntPoly& coeff(unsigned j) const { return coeffs_.at(j); }
  bool is_zero() const noexcept;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(Cyclotomic a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  // Reduces p raw power coefficients with zeta^(p-1) = -(1 + ... + zeta^(p-2)).
  static Cyclotomic from_powers(unsigned p, std::vector<IntPoly> powers);
  void check_same(const Cyclotomic& other) const;

  unsigned p_;
  std::vector<IntPoly> coeffs_;
};

inline Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic(x.prime()); }
inline Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic::scalar(x.prime(), IntPoly::constant(1)); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

/// zeta -> zeta^i, 1 <= i <= p-1; throws IndexOutOfRange otherwise.
Cyclotomic galois_conjugate(const Cyclotomic& x, unsigned i);

/// Product of all conjugates; throws NormNotRational if it leaves Z[E].
IntPoly field_norm(const Cyclotomic& x);

/// Element g^j of Z/p maps to zeta^j. Requires a cyclic group of prime order.
Cyclotomic embed(const ReducedGA& x);

/// a / b, exact in Z[zeta_p][E]; throws NotDivisible or DivisionByZero.
Cyclotomic exact_div(const Cyclotomic& a, const Cyclotomic& b);

bool is_prime(unsigned n) noexcept;

std::string to_string(const Cyclotomic& x, const VarNames& names);

}  // namespace arbor
