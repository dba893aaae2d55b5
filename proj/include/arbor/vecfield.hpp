#pragma once

// Vector fields: one chosen outgoing edge per vertex.

#include <functional>
#include <vector>

#include "arbor/graph.hpp"
#include "arbor/group_algebra.hpp"

namespace arbor {

struct VectorField {
  std::vector<std::size_t> choice;               ///< edge id per vertex
  std::vector<std::vector<std::size_t>> cycles;  ///< edge ids, in traversal order
};

inline constexpr std::size_t default_vector_field_bound = 1'000'000;

/// Number of vector fields (product of out-degrees), saturating at SIZE_MAX.
std::size_t vector_field_count(const VoltageGraph& g);

/// Cycle decomposition of a functional graph given by `choice`.
std::vector<std::vector<std::size_t>> vector_field_cycles(const VoltageGraph& g,
                                                          const std::vector<std::size_t>& choice);

void for_each_vector_field(const VoltageGraph& g, const std::function<void(const VectorField&)>& visit,
                           std::size_t bound = default_vector_field_bound);
std::vector<VectorField> enumerate_vector_fields(const VoltageGraph& g,
                                                 std::size_t bound = default_vector_field_bound);

IntPoly vector_field_weight(const VoltageGraph& g, const VectorField& f);
Monomial vector_field_monomial(const VoltageGraph& g, const VectorField& f);

/// Product of the edge voltages of a cycle; requires an abelian group.
FiniteGroup::Element cycle_voltage(const VoltageGraph& g, const std::vector<std::size_t>& cycle);

/// Sum over vector fields of wt * prod over cycles (1 - nu(c)).
ReducedGA omega(const VoltageGraph& g, std::size_t bound = default_vector_field_bound);

/// Sum over vector fields whose cycles all carry the non-identity voltage of
/// 2^(#cycles) * wt. Accepts a group of order 2 or two sheets.
IntPoly negative_vector_field_sum(const VoltageGraph& g, std::size_t bound = default_vector_field_bound);

/// Whether every cycle of f carries the non-identity voltage (order-2 voltages).
bool is_negative(const VoltageGraph& g, const VectorField& f);

}  // namespace arbor
