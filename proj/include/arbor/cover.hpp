#pragma once

// k-fold covers of voltage graphs. Cover vertex (v, sheet) has index
// sheet * n + v, so sheets are blocks of n vertices and sheet 0 comes first.
// For group voltages sheet x is group element x, with sheet 0 the identity.

#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

struct LiftedEdge {
  std::size_t base_edge;
  std::uint32_t source_sheet;
  std::size_t source;  ///< cover vertex index
  std::size_t target;  ///< cover vertex index
};

class CoverGraph {
 public:
  const VoltageGraph& base() const noexcept { return base_; }
  std::size_t sheets() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return base_.vertex_count() * k_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<LiftedEdge>& edges() const noexcept { return edges_; }

  std::size_t vertex_index(std::size_t base_vertex, std::size_t sheet) const {
    return sheet * base_.vertex_count() + base_vertex;
  }
  std::size_t base_vertex(std::size_t cover_vertex) const { return cover_vertex % base_.vertex_count(); }
  std::size_t sheet_of(std::size_t cover_vertex) const { return cover_vertex / base_.vertex_count(); }
  VarId weight(const LiftedEdge& e) const { return base_.edge(e.base_edge).weight; }
  /// "v^s" with 1-based sheets.
  std::string vertex_label(std::size_t cover_vertex) const;

 private:
  friend CoverGraph build_cover(const VoltageGraph& g);
  VoltageGraph base_;
  std::size_t k_ = 1;
  std::vector<LiftedEdge> edges_;
};

/// One lifted edge (v, x) -> (w, sigma_e(x)) per base edge and sheet, ordered
/// sheet-major.
CoverGraph build_cover(const VoltageGraph& g);

/// The cover as a plain graph whose edges keep their base variables. A
/// one-sheet cover returns the base graph itself.
VoltageGraph as_plain_graph(const CoverGraph& c);

/// A deck transformation as a permutation of cover vertex indices.
using DeckTransformation = std::vector<std::size_t>;

inline constexpr std::size_t default_deck_budget = 1'000'000;

/// All automorphisms commuting with the projection. Throws SearchSpaceTooLarge
/// once `budget` partial assignments have been explored.
std::vector<DeckTransformation> deck_group(const CoverGraph& c, std::size_t budget = default_deck_budget);

/// True iff the deck group is transitive on every fiber.
bool is_regular_cover(const CoverGraph& c, std::size_t budget = default_deck_budget);

/// Outgoing non-loop edges of v get h * nu(e), incoming non-loop edges get
/// nu(e) * h^-1. Throws VoltageKindMismatch for permutation voltages.
VoltageGraph gauge_transform(const VoltageGraph& g, std::size_t v, FiniteGroup::Element h);

/// The cover as a graph document plus a "projection" table mapping every
/// cover vertex and edge to (base index, 1-based sheet).
nlohmann::json serialize_cover(const CoverGraph& c);

}  // namespace arbor
