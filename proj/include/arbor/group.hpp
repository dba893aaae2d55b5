#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace arbor {

class GroupAxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GroupKind { cyclic, symmetric, table };

/// A finite group given by its multiplication table. Element 0 is always the
/// identity. Cyclic groups index g^i as element i; symmetric groups list the
/// permutations of {0..k-1} in lexicographic order and multiply by
/// composition, (a*b)(x) = a(b(x)).
class FiniteGroup {
 public:
  using Element = std::uint32_t;

  static std::shared_ptr<const FiniteGroup> cyclic(std::size_t order);
  static std::shared_ptr<const FiniteGroup> symmetric(std::size_t degree);
  /// Validates closure, identity at 0, inverses and associativity.
  static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<Element>> mul);
  static std::shared_ptr<const FiniteGroup> direct_product(const FiniteGroup& a, const FiniteGroup& b);

  GroupKind kind() const noexcept { return kind_; }
  /// Order for cyclic groups, degree for symmetric groups, order for tables.
  std::size_t parameter() const noexcept { return parameter_; }
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  bool is_abelian() const noexcept { return abelian_; }
  bool contains(std::size_t a) const noexcept { return a < order_; }

  /// Symmetric groups only: the 0-based images of element `a`.
  std::span<const std::uint32_t> permutation(Element a) const;
  std::optional<Element> element_of_permutation(std::span<const std::uint32_t> images) const;

  /// "1", "g", "g^2" for cyclic groups; one-line notation "[2,1,3]" for
  /// symmetric groups; "e<i>" for tables.
  std::string label(Element a) const;

  /// Same kind, parameter and table.
  bool equivalent(const FiniteGroup& other) const noexcept;

  std::vector<std::vector<Element>> table() const;

 private:
  FiniteGroup() = default;
  void finish();

  GroupKind kind_ = GroupKind::table;
  std::size_t parameter_ = 0;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::vector<std::uint32_t>> perms_;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace arbor
