#pragma once

// Sparse multivariate polynomials over Z in edge-weight indeterminates.
//
// Terms are kept sorted in descending graded-lexicographic order, where a
// smaller VarId is the more significant variable. Two polynomials are equal
// iff their term lists are identical.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arbor {

using Integer = mpz_class;
using VarId = std::uint32_t;

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bidirectional map between variable names and VarIds.
class VarNames {
 public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> names);

  /// Returns the id of `name`, adding it if unseen.
  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;
  /// Display name; unnamed ids print as "x<id>".
  std::string name(VarId id) const;
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exponent = 1);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(VarId v) const noexcept;
  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  /// this / divisor, or nullopt when divisor does not divide this.
  std::optional<Monomial> quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

class IntPoly {
 public:
  IntPoly() = default;

  static IntPoly constant(const Integer& c);
  static IntPoly variable(VarId v);
  static IntPoly monomial(Monomial m, const Integer& c = 1);
  /// Accepts terms in any order, with repeats and zero coefficients.
  static IntPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  /// Greatest term in the monomial order. Precondition: nonzero.
  const Term& leading_term() const;
  /// Coefficient of `m` (zero when absent).
  Integer coefficient(const Monomial& m) const;
  /// The constant value, when the polynomial has no variables.
  std::optional<Integer> constant_value() const;
  std::uint32_t total_degree() const noexcept;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend IntPoly operator-(IntPoly a);

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // descending, nonzero coefficients
};

/// p / q in Z[E]. Throws DivisionByZero when q = 0 and NotDivisible when the
/// leading-term reduction leaves a remainder.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);
/// Coefficient-wise division by a nonzero integer; throws NotDivisible.
IntPoly exact_div(const IntPoly& p, const Integer& k);

/// Value at all variables = 1.
Integer eval_ones(const IntPoly& p);

/// Common total degree of all terms; 0 for the zero polynomial.
std::optional<std::uint32_t> homogeneous_degree(const IntPoly& p);

/// Canonical text form, e.g. "3*a^2*c^2*d^2 + 6*a*b*c^2*d^2".
std::string to_string(const IntPoly& p, const VarNames& names);
std::string to_string(const Monomial& m, const VarNames& names);

/// Parses the canonical grammar (and any reordering of it). Unknown names are
/// interned into `names`.
IntPoly parse_poly(std::string_view text, VarNames& names);

// Ring helpers used by the generic matrix code.
inline IntPoly zero_like(const IntPoly&) { return {}; }
inline IntPoly one_like(const IntPoly&) { return IntPoly::constant(1); }
inline bool is_zero(const IntPoly& p) { return p.is_zero(); }

}  // namespace arbor
