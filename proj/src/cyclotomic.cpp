#include "arbor/cyclotomic.hpp"

#include "arbor/errors.hpp"

namespace arbor {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Cyclotomic::Cyclotomic(unsigned p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic modulus must be prime");
  coeffs_.resize(p - 1);
}

Cyclotomic Cyclotomic::from_powers(unsigned p, std::vector<IntPoly> powers) {
  Cyclotomic x(p);
  const IntPoly top = powers[p - 1];
  for (unsigned j = 0; j + 1 < p; ++j) x.coeffs_[j] = std::move(powers[j]) - top;
  return x;
}

Cyclotomic Cyclotomic::scalar(unsigned p, const IntPoly& c) { return zeta_power(p, 0, c); }

Cyclotomic Cyclotomic::zeta_power(unsigned p, long j, const IntPoly& c) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic modulus must be prime");
  std::vector<IntPoly> powers(p);
  const long r = ((j % static_cast<long>(p)) + p) % p;
  powers[r] = c;
  return from_powers(p, std::move(powers));
}

bool Cyclotomic::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void Cyclotomic::check_same(const Cyclotomic& other) const {
  if (p_ != other.p_) throw GroupMismatch("cyclotomic elements of different primes");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_same(other);
  for (unsigned j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_same(other);
  for (unsigned j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same(b);
  const unsigned p = a.p_;
  std::vector<IntPoly> powers(p);
  for (unsigned i = 0; i + 1 < p; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j + 1 < p; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      powers[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic::from_powers(p, std::move(powers));
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Cyclotomic galois_conjugate(const Cyclotomic& x, unsigned i) {
  const unsigned p = x.prime();
  if (i < 1 || i >= p) throw IndexOutOfRange("Galois conjugate index must lie in 1..p-1");
  Cyclotomic out(p);
  for (unsigned j = 0; j + 1 < p; ++j) {
    if (!x.coeff(j).is_zero()) out += Cyclotomic::zeta_power(p, static_cast<long>(i) * j, x.coeff(j));
  }
  return out;
}

IntPoly field_norm(const Cyclotomic& x) {
  Cyclotomic prod = x;
  for (unsigned i = 2; i < x.prime(); ++i) prod = prod * galois_conjugate(x, i);
  for (unsigned j = 1; j + 1 < x.prime(); ++j) {
    if (!prod.coeff(j).is_zero()) throw NormNotRational("norm has an irrational component");
  }
  return prod.coeff(0);
}

Cyclotomic embed(const ReducedGA& x) {
  const FiniteGroup& G = x.group();
  if (G.kind() != GroupKind::cyclic || !is_prime(static_cast<unsigned>(G.order()))) {
    throw std::invalid_argument("embedding needs a cyclic group of prime order");
  }
  const auto p = static_cast<unsigned>(G.order());
  Cyclotomic out(p);
  for (unsigned j = 1; j < p; ++j) {
    if (!x.coeff(j).is_zero()) out += Cyclotomic::zeta_power(p, j, x.coeff(j));
  }
  return out;
}

Cyclotomic exact_div(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Z[zeta]");
  const unsigned p = b.prime();
  Cyclotomic cofactor = Cyclotomic::scalar(p, IntPoly::constant(1));
  for (unsigned i = 2; i < p; ++i) cofactor = cofactor * galois_conjugate(b, i);
  const IntPoly norm = field_norm(b);
  const Cyclotomic scaled = a * cofactor;
  std::vector<IntPoly> powers(p);
  for (unsigned j = 0; j + 1 < p; ++j) powers[j] = exact_div(scaled.coeff(j), norm);
  Cyclotomic out(p);
  for (unsigned j = 0; j + 1 < p; ++j) {
    if (!powers[j].is_zero()) out += Cyclotomic::zeta_power(p, j, powers[j]);
  }
  return out;
}

std::string to_string(const Cyclotomic& x, const VarNames& names) {
  std::string out;
  for (unsigned j = 0; j + 1 < x.prime(); ++j) {
    if (x.coeff(j).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(x.coeff(j), names) + ")";
    if (j == 1) out += "*z";
    if (j > 1) out += "*z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace arbor
