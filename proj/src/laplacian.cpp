#include "arbor/laplacian.hpp"

#include <algorithm>

namespace arbor {

PolyMatrix laplacian(const VoltageGraph& g) {
  PolyMatrix m(g.vertex_count(), IntPoly{});
  for (const Edge& e : g.edges()) {
    const IntPoly w = IntPoly::variable(e.weight);
    m(e.source, e.source) += w;
    m(e.source, e.target) -= w;
  }
  return m;
}

RingMatrix<ReducedGA> voltage_laplacian(const VoltageGraph& g) {
  const GroupPtr& G = g.group();
  RingMatrix<ReducedGA> m(g.vertex_count(), ReducedGA(G));
  for (const Edge& e : g.edges()) {
    const IntPoly w = IntPoly::variable(e.weight);
    m(e.source, e.source) += ReducedGA::scalar(G, w);
    m(e.source, e.target) -= ReducedGA::element(G, std::get<FiniteGroup::Element>(e.voltage), w);
  }
  return m;
}

PolyMatrix restricted_voltage_laplacian(const VoltageGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.sheet_count();
  const std::size_t dim = n * (k - 1);
  PolyMatrix m(dim, IntPoly{});
  if (dim == 0) return m;
  const CoverGraph cover = build_cover(g);
  auto index = [n](std::size_t v, std::size_t sheet) { return (sheet - 1) * n + v; };
  for (const LiftedEdge& e : cover.edges()) {
    const std::size_t t = cover.sheet_of(e.source);
    if (t == 0) continue;
    const std::size_t i = cover.base_vertex(e.source);
    const std::size_t j = cover.base_vertex(e.target);
    const std::size_t r = cover.sheet_of(e.target);
    const IntPoly w = IntPoly::variable(cover.weight(e));
    const std::size_t row = index(i, t);
    m(row, row) += w;
    if (r != 0) {
      m(row, index(j, r)) -= w;
    } else {
      for (std::size_t c = 1; c < k; ++c) m(row, index(j, c)) += w;
    }
  }
  return m;
}

PolyMatrix restricted_via_representation(const VoltageGraph& g) {
  const auto L = voltage_laplacian(g);
  const std::size_t n = g.vertex_count();
  const std::size_t k = g.sheet_count();
  PolyMatrix m(n * (k - 1), IntPoly{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (L(i, j).is_zero()) continue;
      const PolyMatrix block = reduced_regular_representation(L(i, j), MultiplicationSide::left);
      for (std::size_t h = 0; h + 1 < k; ++h)
        for (std::size_t r = 0; r + 1 < k; ++r) m(h * n + i, r * n + j) = block(h, r);
    }
  }
  return m;
}

Triangularization triangularize(const CoverGraph& cover) {
  const VoltageGraph& base = cover.base();
  const std::size_t n = base.vertex_count();
  const std::size_t k = cover.sheets();
  const std::size_t N = n * k;
  const PolyMatrix L = laplacian(as_plain_graph(cover));

  // (S M)[r] = sum of the rows of M in the same column class for r < n,
  // otherwise row r of M; (M S^-1)[., c] subtracts column c mod n from c >= n.
  PolyMatrix SL = L;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 1; s < k; ++s)
      for (std::size_t c = 0; c < N; ++c)
        if (!L(s * n + r, c).is_zero()) SL(r, c) += L(s * n + r, c);
  PolyMatrix U = SL;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = n; c < N; ++c)
      if (!SL(r, c % n).is_zero()) U(r, c) -= SL(r, c % n);

  Triangularization out{U, U.block(0, 0, n), U.block(n, n, N - n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = n; c < N; ++c)
      if (!U(r, c).is_zero()) throw BlockMismatch("upper-right block of the triangularization is nonzero");
  if (!(out.upper_left == laplacian(base))) throw BlockMismatch("upper-left block differs from the base Laplacian");
  if (!(out.lower_right == restricted_voltage_laplacian(base))) {
    throw BlockMismatch("lower-right block differs from the restricted voltage Laplacian");
  }
  return out;
}

std::string to_string(const PolyMatrix& m, const VarNames& names) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      cells.push_back(to_string(m(r, c), names));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const std::string& cell = cells[r * m.size() + c];
      if (c) out += "  ";
      out += std::string(width - cell.size(), ' ') + cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace arbor
