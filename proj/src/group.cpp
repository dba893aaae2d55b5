#include "arbor/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace arbor {

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(std::size_t order) {
  if (order == 0) throw GroupAxiomError("cyclic group order must be positive");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = GroupKind::cyclic;
  g->parameter_ = order;
  g->order_ = order;
  g->table_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) g->table_[a * order + b] = static_cast<Element>((a + b) % order);
  g->finish();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(std::size_t degree) {
  if (degree == 0 || degree > 7) throw GroupAxiomError("symmetric group degree must be in 1..7");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = GroupKind::symmetric;
  g->parameter_ = degree;
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    g->perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  g->order_ = g->perms_.size();
  std::map<std::vector<std::uint32_t>, Element> index;
  for (std::size_t i = 0; i < g->perms_.size(); ++i) index.emplace(g->perms_[i], static_cast<Element>(i));
  g->table_.resize(g->order_ * g->order_);
  std::vector<std::uint32_t> composed(degree);
  for (std::size_t a = 0; a < g->order_; ++a) {
    for (std::size_t b = 0; b < g->order_; ++b) {
      for (std::size_t x = 0; x < degree; ++x) composed[x] = g->perms_[a][g->perms_[b][x]];
      g->table_[a * g->order_ + b] = index.at(composed);
    }
  }
  g->finish();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::vector<std::vector<Element>> mul) {
  const std::size_t n = mul.size();
  if (n == 0) throw GroupAxiomError("multiplication table is empty");
  for (const auto& row : mul) {
    if (row.size() != n) throw GroupAxiomError("multiplication table is not square");
    for (auto x : row)
      if (x >= n) throw GroupAxiomError("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[0][a] != a || mul[a][0] != a) throw GroupAxiomError("element 0 is not the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n), seen_col(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen_row[mul[a][b]] || seen_col[mul[b][a]]) throw GroupAxiomError("table is not a Latin square");
      seen_row[mul[a][b]] = true;
      seen_col[mul[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw GroupAxiomError("multiplication is not associative");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = GroupKind::table;
  g->parameter_ = n;
  g->order_ = n;
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g->table_[a * n + b] = mul[a][b];
  g->finish();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  // (x, y) is encoded as x * |b| + y, so the identity stays at 0.
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Element>> mul(na * nb, std::vector<Element>(na * nb));
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t y1 = 0; y1 < nb; ++y1)
      for (std::size_t x2 = 0; x2 < na; ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2)
          mul[x1 * nb + y1][x2 * nb + y2] =
              static_cast<Element>(a.mul(static_cast<Element>(x1), static_cast<Element>(x2)) * nb +
                                   b.mul(static_cast<Element>(y1), static_cast<Element>(y2)));
  return from_table(std::move(mul));
}

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == 0) inverse_[a] = static_cast<Element>(b);
  abelian_ = true;
  for (std::size_t a = 0; a < order_ && abelian_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) {
        abelian_ = false;
        break;
      }
}

std::span<const std::uint32_t> FiniteGroup::permutation(Element a) const {
  if (kind_ != GroupKind::symmetric) throw std::logic_error("permutation() on a non-symmetric group");
  return perms_.at(a);
}

std::optional<FiniteGroup::Element> FiniteGroup::element_of_permutation(std::span<const std::uint32_t> images) const {
  if (kind_ != GroupKind::symmetric) return std::nullopt;
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    if (std::equal(perms_[i].begin(), perms_[i].end(), images.begin(), images.end())) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::string FiniteGroup::label(Element a) const {
  switch (kind_) {
    case GroupKind::cyclic:
      if (a == 0) return "1";
      if (a == 1) return "g";
      return "g^" + std::to_string(a);
    case GroupKind::symmetric: {
      std::string s = "[";
      for (std::size_t i = 0; i < perms_[a].size(); ++i) {
        if (i) s += ',';
        s += std::to_string(perms_[a][i] + 1);
      }
      return s + "]";
    }
    case GroupKind::table:
      break;
  }
  return "e" + std::to_string(a);
}

bool FiniteGroup::equivalent(const FiniteGroup& other) const noexcept {
  return kind_ == other.kind_ && parameter_ == other.parameter_ && table_ == other.table_;
}

std::vector<std::vector<FiniteGroup::Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) out[a][b] = table_[a * order_ + b];
  return out;
}

}  // namespace arbor
