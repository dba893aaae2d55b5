#pragma once

// Weighted directed multigraphs with one indeterminate per edge and a voltage
// per edge: either a group element or a permutation of the sheets.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "arbor/group.hpp"
#include "arbor/poly.hpp"

namespace arbor {

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DanglingVertexIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateWeightName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VoltageKindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 0-based one-line notation: sheet x goes to perm[x].
using Permutation = std::vector<std::uint32_t>;
using Voltage = std::variant<FiniteGroup::Element, Permutation>;

struct SheetCount {
  std::size_t k = 1;
};
/// Group voltages, or permutation voltages on k sheets (k = 1 is a plain graph).
using VoltageContext = std::variant<GroupPtr, SheetCount>;

struct Vertex {
  std::size_t index;
  std::string label;
};

struct Edge {
  std::size_t id;
  std::size_t source;
  std::size_t target;
  VarId weight;
  Voltage voltage;
};

class VoltageGraph {
 public:
  /// Plain graph: one sheet, identity voltages.
  VoltageGraph();
  explicit VoltageGraph(VoltageContext context);

  std::size_t add_vertex(std::string label);
  /// Interns `weight_name`; throws DuplicateWeightName if an edge already uses it.
  std::size_t add_edge(std::size_t source, std::size_t target, std::string_view weight_name, Voltage voltage);
  /// Identity voltage.
  std::size_t add_edge(std::size_t source, std::size_t target, std::string_view weight_name);
  /// Reuses an existing variable; several edges may share it.
  std::size_t add_edge_with_weight(std::size_t source, std::size_t target, VarId weight, Voltage voltage);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }
  Vertex vertex(std::size_t index) const;
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  /// Index of the first vertex with this label.
  std::optional<std::size_t> find_vertex(std::string_view label) const;

  /// Edge ids with the given source (resp. target); loops appear in both.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }

  const VarNames& names() const noexcept { return names_; }
  VarNames& names() noexcept { return names_; }
  void set_names(VarNames names) { names_ = std::move(names); }

  const VoltageContext& context() const noexcept { return context_; }
  bool has_group() const noexcept { return std::holds_alternative<GroupPtr>(context_); }
  /// Throws VoltageKindMismatch for permutation voltages.
  const GroupPtr& group() const;
  /// |G| for group voltages, k otherwise.
  std::size_t sheet_count() const noexcept;
  /// The action of the edge's voltage on sheets; group elements act by left multiplication.
  Permutation sheet_permutation(std::size_t edge_id) const;
  bool has_shared_weights() const noexcept { return shared_weights_; }

  /// Replaces the voltage of an edge (validated against the context).
  void set_voltage(std::size_t edge_id, Voltage voltage);
  Voltage identity_voltage() const;

 private:
  void check_voltage(const Voltage& v) const;
  void check_vertex(std::size_t v) const;

  VoltageContext context_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  VarNames names_;
  std::vector<bool> weight_used_;
  bool shared_weights_ = false;
};

/// Same graph with each group voltage replaced by its left-multiplication permutation.
VoltageGraph to_permutation_voltages(const VoltageGraph& g);
/// Same vertices and weights, voltages dropped.
VoltageGraph underlying_graph(const VoltageGraph& g);

GroupPtr parse_group(const nlohmann::json& spec);
nlohmann::json serialize_group(const FiniteGroup& group);

/// Schema:
///   {"vertices": ["1", "2"] | n,
///    "group": {"type": "cyclic", "order": 3}   (or "sheets": k, or neither),
///    "edges": [{"source": 0, "target": 1, "weight": "a", "voltage": ...}]}
/// Endpoints are 0-based indices or vertex labels. Cyclic voltages are
/// exponents, table voltages element indices, symmetric and sheet voltages
/// 1-based one-line arrays. A missing voltage is the identity. Shared weight
/// names are accepted only when the document carries a "projection" key.
VoltageGraph parse_graph(const nlohmann::json& doc);
VoltageGraph parse_graph(std::string_view text);
inline VoltageGraph parse_graph(const std::string& text) { return parse_graph(std::string_view(text)); }
inline VoltageGraph parse_graph(const char* text) { return parse_graph(std::string_view(text)); }
nlohmann::json serialize_graph(const VoltageGraph& g);

nlohmann::json voltage_to_json(const VoltageGraph& g, const Voltage& v);
std::string voltage_label(const VoltageGraph& g, const Voltage& v);

}  // namespace arbor
