#include "arbor/group_algebra.hpp"

#include "arbor/errors.hpp"

namespace arbor {

ReducedGA::ReducedGA(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("ReducedGA requires a group");
  coeffs_.resize(group_->order());
}

ReducedGA ReducedGA::element(GroupPtr group, FiniteGroup::Element g, const IntPoly& coeff) {
  ReducedGA x(std::move(group));
  if (!x.group_->contains(g)) throw IndexOutOfRange("group element out of range");
  x.coeffs_[g] = coeff;
  x.canonicalize();
  return x;
}

ReducedGA ReducedGA::scalar(GroupPtr group, const IntPoly& coeff) {
  return element(std::move(group), FiniteGroup::identity(), coeff);
}

ReducedGA ReducedGA::from_coefficients(GroupPtr group, std::vector<IntPoly> coeffs) {
  ReducedGA x(std::move(group));
  if (coeffs.size() != x.coeffs_.size()) throw std::invalid_argument("coefficient count must equal group order");
  x.coeffs_ = std::move(coeffs);
  x.canonicalize();
  return x;
}

bool ReducedGA::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void ReducedGA::check_same_group(const ReducedGA& other) const {
  if (group_ != other.group_ && !group_->equivalent(*other.group_)) {
    throw GroupMismatch("reduced group algebra elements over different groups");
  }
}

void ReducedGA::canonicalize() {
  if (coeffs_[0].is_zero()) return;
  const IntPoly shift = coeffs_[0];
  for (auto& c : coeffs_) c -= shift;
}

ReducedGA& ReducedGA::operator+=(const ReducedGA& other) {
  check_same_group(other);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] += other.coeffs_[g];
  return *this;
}

ReducedGA& ReducedGA::operator-=(const ReducedGA& other) {
  check_same_group(other);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] -= other.coeffs_[g];
  return *this;
}

ReducedGA operator*(const ReducedGA& a, const ReducedGA& b) {
  a.check_same_group(b);
  const FiniteGroup& G = *a.group_;
  ReducedGA out(a.group_);
  for (FiniteGroup::Element g = 0; g < G.order(); ++g) {
    if (a.coeffs_[g].is_zero()) continue;
    for (FiniteGroup::Element h = 0; h < G.order(); ++h) {
      if (b.coeffs_[h].is_zero()) continue;
      out.coeffs_[G.mul(g, h)] += a.coeffs_[g] * b.coeffs_[h];
    }
  }
  out.canonicalize();
  return out;
}

ReducedGA operator*(ReducedGA a, const IntPoly& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

ReducedGA operator-(ReducedGA a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

bool operator==(const ReducedGA& a, const ReducedGA& b) {
  a.check_same_group(b);
  return a.coeffs_ == b.coeffs_;
}

RingMatrix<IntPoly> reduced_regular_representation(const ReducedGA& x, MultiplicationSide side) {
  const FiniteGroup& G = x.group();
  const std::size_t dim = G.order() - 1;
  RingMatrix<IntPoly> m(dim, IntPoly{});
  for (FiniteGroup::Element h = 1; h < G.order(); ++h) {
    const ReducedGA basis = ReducedGA::element(x.group_ptr(), h);
    const ReducedGA image = side == MultiplicationSide::right ? basis * x : x * basis;
    for (FiniteGroup::Element r = 1; r < G.order(); ++r) m(h - 1, r - 1) = image.coeff(r);
  }
  return m;
}

ReducedGA det_group_algebra(const RingMatrix<ReducedGA>& m) {
  if (!m.zero().group().is_abelian()) {
    throw NonAbelianGroup("determinant over a non-commutative group algebra is undefined");
  }
  return det_cofactor(m);
}

IntPoly sign_specialize(const ReducedGA& x) {
  if (x.group().order() != 2) throw std::invalid_argument("sign specialization needs a group of order 2");
  return -x.coeff(1);
}

std::string to_string(const ReducedGA& x, const VarNames& names) {
  std::string out;
  for (FiniteGroup::Element g = 1; g < x.group().order(); ++g) {
    if (x.coeff(g).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(x.coeff(g), names) + ")*" + x.group().label(g);
  }
  return out.empty() ? "0" : out;
}

}  // namespace arbor
