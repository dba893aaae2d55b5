#pragma once

// The reduced group algebra Z[G]/(sum of all g), with coefficients in Z[E].

#include <vector>

#include "arbor/group.hpp"
#include "arbor/matrix.hpp"
#include "arbor/poly.hpp"

namespace arbor {

/// Element of Z̄[G][E] in canonical form: the identity coefficient is zero
/// (c_1 * sum_g g is subtracted, which vanishes in the quotient).
class ReducedGA {
 public:
  /// Zero element over `group`.
  explicit ReducedGA(GroupPtr group);

  /// coeff * g.
  static ReducedGA element(GroupPtr group, FiniteGroup::Element g, const IntPoly& coeff = IntPoly::constant(1));
  /// coeff * 1.
  static ReducedGA scalar(GroupPtr group, const IntPoly& coeff);
  /// Builds from raw group-algebra coefficients (one per element) and canonicalizes.
  static ReducedGA from_coefficients(GroupPtr group, std::vector<IntPoly> coeffs);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const IntPoly& coeff(FiniteGroup::Element g) const { return coeffs_.at(g); }
  bool is_zero() const noexcept;

  ReducedGA& operator+=(const ReducedGA& other);
  ReducedGA& operator-=(const ReducedGA& other);
  friend ReducedGA operator+(ReducedGA a, const ReducedGA& b) { return a += b; }
  friend ReducedGA operator-(ReducedGA a, const ReducedGA& b) { return a -= b; }
  friend ReducedGA operator*(const ReducedGA& a, const ReducedGA& b);
  friend ReducedGA operator*(ReducedGA a, const IntPoly& c);
  friend ReducedGA operator-(ReducedGA a);
  friend bool operator==(const ReducedGA& a, const ReducedGA& b);

 private:
  void check_same_group(const ReducedGA& other) const;
  void canonicalize();

  GroupPtr group_;
  std::vector<IntPoly> coeffs_;
};

inline ReducedGA zero_like(const ReducedGA& x) { return ReducedGA(x.group_ptr()); }
inline ReducedGA one_like(const ReducedGA& x) { return ReducedGA::scalar(x.group_ptr(), IntPoly::constant(1)); }
inline bool is_zero(const ReducedGA& x) { return x.is_zero(); }

enum class MultiplicationSide {
  right,  ///< basis h maps to h * x
  left,   ///< basis h maps to x * h
};

/// Matrix of multiplication by x on the Z[E]-basis of Z̄[G] given by the
/// non-identity elements (in element order). Row h holds the canonical
/// coefficients of the image of h, so the matrix acts on row vectors.
RingMatrix<IntPoly> reduced_regular_representation(const ReducedGA& x,
                                                   MultiplicationSide side = MultiplicationSide::right);

/// Determinant by cofactor expansion; throws NonAbelianGroup.
ReducedGA det_group_algebra(const RingMatrix<ReducedGA>& m);

/// Z̄[Z/2] is Z with the non-identity element acting as -1.
IntPoly sign_specialize(const ReducedGA& x);

std::string to_string(const ReducedGA& x, const VarNames& names);

}  // namespace arbor
