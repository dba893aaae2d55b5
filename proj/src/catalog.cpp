#include "arbor/catalog.hpp"

namespace arbor {

namespace {

void add_vertices(VoltageGraph& g, std::size_t n) {
  for (std::size_t v = 1; v <= n; ++v) g.add_vertex(std::to_string(v));
}

Permutation one_line(std::initializer_list<std::uint32_t> images) {
  Permutation p;
  for (auto x : images) p.push_back(x - 1);
  return p;
}

}  // namespace

VoltageGraph z3_triangle() {
  VoltageGraph g(FiniteGroup::cyclic(3));
  add_vertices(g, 3);
  g.add_edge(0, 0, "a", FiniteGroup::Element{1});
  g.add_edge(0, 1, "b", FiniteGroup::Element{0});
  g.add_edge(1, 2, "c", FiniteGroup::Element{2});
  g.add_edge(2, 0, "d", FiniteGroup::Element{2});
  g.add_edge(2, 1, "e", FiniteGroup::Element{0});
  return g;
}

VoltageGraph permuted_triangle() {
  VoltageGraph g(SheetCount{3});
  add_vertices(g, 3);
  g.add_edge(0, 0, "a", one_line({3, 2, 1}));
  g.add_edge(0, 1, "b", one_line({2, 3, 1}));
  g.add_edge(1, 2, "c", one_line({1, 2, 3}));
  g.add_edge(2, 0, "d", one_line({1, 2, 3}));
  g.add_edge(2, 1, "e", one_line({1, 3, 2}));
  return g;
}

VoltageGraph signed_triangle() {
  VoltageGraph g(FiniteGroup::cyclic(2));
  add_vertices(g, 3);
  g.add_edge(0, 1, "a", FiniteGroup::Element{0});
  g.add_edge(1, 0, "b", FiniteGroup::Element{1});
  g.add_edge(0, 2, "c", FiniteGroup::Element{0});
  g.add_edge(2, 0, "d", FiniteGroup::Element{1});
  g.add_edge(1, 2, "e", FiniteGroup::Element{0});
  return g;
}

VoltageGraph cyclic_loop(std::size_t order) {
  VoltageGraph g(FiniteGroup::cyclic(order));
  add_vertices(g, 1);
  g.add_edge(0, 0, "a", FiniteGroup::Element{order > 1 ? 1u : 0u});
  return g;
}

VoltageGraph signed_two_cycle() {
  VoltageGraph g(FiniteGroup::cyclic(2));
  add_vertices(g, 2);
  g.add_edge(0, 1, "a", FiniteGroup::Element{1});
  g.add_edge(1, 0, "b", FiniteGroup::Element{0});
  return g;
}

}  // namespace arbor
