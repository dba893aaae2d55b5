#pragma once

#include <numeric>
#include <random>
#include <functional>

#include "arbor/catalog.hpp"
#include "arbor/cyclotomic.hpp"
#include "arbor/cover.hpp"
#include "arbor/experiments.hpp"
#include "arbor/laplacian.hpp"
#include "arbor/spanning.hpp"
#include "arbor/vecfield.hpp"

namespace arbor::testing {

inline IntPoly P(const char* text, VarNames& names) { return parse_poly(text, names); }

inline IntPoly random_poly(Rng& rng, std::size_t vars = 4, std::size_t max_terms = 4, int max_exp = 2, int max_coeff = 5) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp), coeff(-max_coeff, max_coeff);
  std::vector<Term> terms;
  const std::size_t count = nterms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Monomial::Factor> f;
    for (VarId v = 0; v < vars; ++v) f.emplace_back(v, exp(rng));
    terms.push_back(Term{Monomial::from_factors(std::move(f)), Integer(coeff(rng))});
  }
  return IntPoly::from_terms(std::move(terms));
}

inline PolyMatrix random_matrix(Rng& rng, std::size_t n, std::size_t max_terms = 2) {
  PolyMatrix m(n, IntPoly{});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, 3, max_terms, 1, 3);
  return m;
}

/// Sum over permutations of sign * product; independent of the library's determinants.
template <class T>
T leibniz(const RingMatrix<T>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = zero_like(m.zero());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    T term = one_like(m.zero());
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, p[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Cyclotomic random_cyclotomic(Rng& rng, unsigned p) {
  Cyclotomic x(p);
  for (unsigned j = 0; j + 1 < p; ++j) x += Cyclotomic::zeta_power(p, j, random_poly(rng, 3, 2, 1, 3));
  return x;
}

inline ReducedGA random_group_element(Rng& rng, const GroupPtr& G) {
  std::vector<IntPoly> c;
  for (std::size_t g = 0; g < G->order(); ++g) c.push_back(random_poly(rng, 3, 2, 1, 3));
  return ReducedGA::from_coefficients(G, std::move(c));
}

/// All simple directed cycles, as edge id sequences starting at their smallest vertex.
inline void simple_cycles(const VoltageGraph& g, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
    for (std::size_t id : g.out_edges(v)) {
      const std::size_t w = g.edge(id).target;
      if (w == start) {
        path.push_back(id);
        out.push_back(path);
        path.pop_back();
      } else if (w > start && !on[w]) {
        on[w] = true;
        path.push_back(id);
        dfs(start, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
}

inline FiniteGroup::Element ordered_voltage(const VoltageGraph& g, const std::vector<std::size_t>& cycle) {
  const FiniteGroup& G = *g.group();
  FiniteGroup::Element x = 0;
  for (auto id : cycle) x = G.mul(std::get<FiniteGroup::Element>(g.edge(id).voltage), x);
  return x;
}

/// Adds the reverse of every edge, carrying the same voltage, so the graph and
/// all of its covers are balanced.
inline VoltageGraph with_reverse_edges(VoltageGraph g) {
  const std::size_t m = g.edge_count();
  for (std::size_t e = 0; e < m; ++e) {
    const Edge x = g.edge(e);
    g.add_edge(x.target, x.source, edge_name(m + e), x.voltage);
  }
  return g;
}

}  // namespace arbor::testing
