#include "arbor/vecfield.hpp"

#include <limits>

#include "arbor/errors.hpp"

namespace arbor {

std::size_t vector_field_count(const VoltageGraph& g) {
  std::size_t count = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.out_edges(v).size();
    if (d == 0) return 0;
    if (count > std::numeric_limits<std::size_t>::max() / d) return std::numeric_limits<std::size_t>::max();
    count *= d;
  }
  return count;
}

std::vector<std::vector<std::size_t>> vector_field_cycles(const VoltageGraph& g,
                                                          const std::vector<std::size_t>& choice) {
  const std::size_t n = g.vertex_count();
  // 0 = unvisited, 1 = on the current walk, 2 = finished.
  std::vector<int> state(n, 0);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      v = g.edge(choice[v]).target;
    }
    if (state[v] == 1) {
      std::vector<std::size_t> cycle;
      std::size_t u = v;
      do {
        cycle.push_back(choice[u]);
        u = g.edge(choice[u]).target;
      } while (u != v);
      cycles.push_back(std::move(cycle));
    }
    for (std::size_t u = start; state[u] == 1; u = g.edge(choice[u]).target) state[u] = 2;
  }
  return cycles;
}

void for_each_vector_field(const VoltageGraph& g, const std::function<void(const VectorField&)>& visit,
                           std::size_t bound) {
  const std::size_t total = vector_field_count(g);
  if (total == 0) return;
  if (total > bound) throw SearchSpaceTooLarge("too many vector fields to enumerate");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> digit(n, 0);
  VectorField f;
  f.choice.resize(n);
  for (std::size_t count = 0; count < total; ++count) {
    for (std::size_t v = 0; v < n; ++v) f.choice[v] = g.out_edges(v)[digit[v]];
    f.cycles = vector_field_cycles(g, f.choice);
    visit(f);
    for (std::size_t v = 0; v < n; ++v) {
      if (++digit[v] < g.out_edges(v).size()) break;
      digit[v] = 0;
    }
  }
}

std::vector<VectorField> enumerate_vector_fields(const VoltageGraph& g, std::size_t bound) {
  std::vector<VectorField> out;
  for_each_vector_field(g, [&](const VectorField& f) { out.push_back(f); }, bound);
  return out;
}

Monomial vector_field_monomial(const VoltageGraph& g, const VectorField& f) {
  std::vector<Monomial::Factor> factors;
  for (std::size_t id : f.choice) factors.emplace_back(g.edge(id).weight, 1);
  return Monomial::from_factors(std::move(factors));
}

IntPoly vector_field_weight(const VoltageGraph& g, const VectorField& f) {
  return IntPoly::monomial(vector_field_monomial(g, f));
}

FiniteGroup::Element cycle_voltage(const VoltageGraph& g, const std::vector<std::size_t>& cycle) {
  const FiniteGroup& G = *g.group();
  if (!G.is_abelian()) throw NonAbelianGroup("cycle voltage needs an abelian group");
  FiniteGroup::Element x = FiniteGroup::identity();
  for (std::size_t id : cycle) x = G.mul(x, std::get<FiniteGroup::Element>(g.edge(id).voltage));
  return x;
}

ReducedGA omega(const VoltageGraph& g, std::size_t bound) {
  const GroupPtr& G = g.group();
  if (!G->is_abelian()) throw NonAbelianGroup("omega needs an abelian group");
  ReducedGA total(G);
  const ReducedGA one = ReducedGA::scalar(G, IntPoly::constant(1));
  for_each_vector_field(
      g,
      [&](const VectorField& f) {
        ReducedGA term = ReducedGA::scalar(G, vector_field_weight(g, f));
        for (const auto& c : f.cycles) term = term * (one - ReducedGA::element(G, cycle_voltage(g, c)));
        total += term;
      },
      bound);
  return total;
}

namespace {

bool cycle_is_negative(const VoltageGraph& g, const std::vector<std::size_t>& cycle) {
  if (g.has_group()) return cycle_voltage(g, cycle) != FiniteGroup::identity();
  bool swapped = false;
  for (std::size_t id : cycle) swapped ^= std::get<Permutation>(g.edge(id).voltage)[0] == 1;
  return swapped;
}

}  // namespace

bool is_negative(const VoltageGraph& g, const VectorField& f) {
  if (g.sheet_count() != 2) throw VoltageKindMismatch("negative vector fields need order-2 voltages");
  for (const auto& c : f.cycles)
    if (!cycle_is_negative(g, c)) return false;
  return true;
}

IntPoly negative_vector_field_sum(const VoltageGraph& g, std::size_t bound) {
  if (g.sheet_count() != 2) throw VoltageKindMismatch("negative vector fields need order-2 voltages");
  std::vector<Term> terms;
  for_each_vector_field(
      g,
      [&](const VectorField& f) {
        if (!is_negative(g, f)) return;
        Integer coeff = 1;
        coeff <<= f.cycles.size();
        terms.push_back(Term{vector_field_monomial(g, f), coeff});
      },
      bound);
  return IntPoly::from_terms(std::move(terms));
}

}  // namespace arbor
