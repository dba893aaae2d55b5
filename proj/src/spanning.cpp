#include "arbor/spanning.hpp"

#include <set>

namespace arbor {

std::vector<std::size_t> Arborescence::edges() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < parent_edge.size(); ++v)
    if (v != root) out.push_back(parent_edge[v]);
  return out;
}

namespace {

class ArborescenceSearch {
 public:
  ArborescenceSearch(const VoltageGraph& g, std::size_t root, const std::function<void(const Arborescence&)>& visit,
                     EnumerationLimits limits)
      : g_(g), visit_(visit), limits_(limits), parent_(g.vertex_count(), none) {
    current_.root = root;
    current_.parent_edge.assign(g.vertex_count(), none);
  }

  void run() { choose(0); }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  void choose(std::size_t v) {
    const std::size_t n = g_.vertex_count();
    while (v < n && v == current_.root) ++v;
    if (v == n) {
      if (++found_ > limits_.max_results) throw SearchSpaceTooLarge("too many arborescences to enumerate");
      visit_(current_);
      return;
    }
    for (std::size_t id : g_.out_edges(v)) {
      const std::size_t w = g_.edge(id).target;
      if (w == v || creates_cycle(v, w)) continue;
      parent_[v] = w;
      current_.parent_edge[v] = id;
      choose(v + 1);
      parent_[v] = none;
      current_.parent_edge[v] = none;
    }
  }

  // Following the chosen parents from w returns to v.
  bool creates_cycle(std::size_t v, std::size_t w) const {
    std::size_t steps = 0;
    while (w != none && steps++ <= g_.vertex_count()) {
      if (w == v) return true;
      w = parent_[w];
    }
    return false;
  }

  const VoltageGraph& g_;
  const std::function<void(const Arborescence&)>& visit_;
  EnumerationLimits limits_;
  std::vector<std::size_t> parent_;
  Arborescence current_;
  std::size_t found_ = 0;
};

}  // namespace

void for_each_arborescence(const VoltageGraph& g, std::size_t root,
                           const std::function<void(const Arborescence&)>& visit, EnumerationLimits limits) {
  if (root >= g.vertex_count()) throw IndexOutOfRange("root out of range");
  if (g.vertex_count() > limits.max_vertices) {
    throw SearchSpaceTooLarge("arborescence enumeration limited to " + std::to_string(limits.max_vertices) +
                              " vertices");
  }
  ArborescenceSearch(g, root, visit, limits).run();
}

std::vector<Arborescence> enumerate_arborescences(const VoltageGraph& g, std::size_t root,
                                                  EnumerationLimits limits) {
  std::vector<Arborescence> out;
  for_each_arborescence(g, root, [&](const Arborescence& t) { out.push_back(t); }, limits);
  return out;
}

IntPoly arborescence_weight(const VoltageGraph& g, const Arborescence& t) {
  std::vector<Monomial::Factor> factors;
  for (std::size_t id : t.edges()) factors.emplace_back(g.edge(id).weight, 1);
  return IntPoly::monomial(Monomial::from_factors(std::move(factors)));
}

IntPoly arborescence_polynomial(const VoltageGraph& g, std::size_t root, ArborMethod method,
                                EnumerationLimits limits) {
  if (root >= g.vertex_count()) throw IndexOutOfRange("root out of range");
  if (method == ArborMethod::matrix_tree) return det_fraction_free(laplacian(g).minor(root, root));
  std::vector<Term> terms;
  for_each_arborescence(
      g, root, [&](const Arborescence& t) { terms.push_back(arborescence_weight(g, t).terms().front()); }, limits);
  return IntPoly::from_terms(std::move(terms));
}

RatioReport ratio_report(const VoltageGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw IndexOutOfRange("vertex out of range");
  RatioReport r;
  r.k = g.sheet_count();
  r.A_base = arborescence_polynomial(g, v);
  const CoverGraph cover = build_cover(g);
  r.A_cover = arborescence_polynomial(as_plain_graph(cover), cover.vertex_index(v, 0));
  r.det = det_fraction_free(restricted_voltage_laplacian(g));
  r.rhs = exact_div(r.det, Integer(static_cast<unsigned long>(r.k)));
  r.theorem_holds = r.A_cover * Integer(static_cast<unsigned long>(r.k)) == r.A_base * r.det;
  if (!r.A_base.is_zero()) r.ratio = exact_div(r.A_cover, r.A_base);
  return r;
}

bool is_strongly_connected(const VoltageGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  auto sweep = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t id : forward ? g.out_edges(u) : g.in_edges(u)) {
        const std::size_t w = forward ? g.edge(id).target : g.edge(id).source;
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return sweep(true) && sweep(false);
}

bool is_simple(const VoltageGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) return false;
    if (!seen.emplace(e.source, e.target).second) return false;
  }
  return true;
}

InvarianceReport invariance_report(const VoltageGraph& g) {
  InvarianceReport out;
  out.strongly_connected = is_strongly_connected(g);
  out.simple = is_simple(g);
  if (!out.strongly_connected) out.warning = "base graph is not strongly connected; equality not expected";
  else if (!out.simple) out.warning = "base graph is not simple; equality not expected";

  const std::size_t n = g.vertex_count();
  const CoverGraph cover = build_cover(g);
  const PolyMatrix cover_laplacian = laplacian(as_plain_graph(cover));
  const PolyMatrix base_laplacian = laplacian(g);
  for (std::size_t v = 0; v < n; ++v) out.A_base.push_back(det_fraction_free(base_laplacian.minor(v, v)));
  out.all_equal = true;
  std::optional<IntPoly> first;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < cover.sheets(); ++s) {
      const std::size_t idx = cover.vertex_index(v, s);
      LiftRatio lift{v, s, det_fraction_free(cover_laplacian.minor(idx, idx)), std::nullopt};
      if (!out.A_base[v].is_zero()) {
        try {
          lift.ratio = exact_div(lift.A_cover, out.A_base[v]);
        } catch (const NotDivisible&) {
        }
      }
      if (!lift.ratio) {
        out.all_equal = false;
      } else if (!first) {
        first = lift.ratio;
      } else if (!(*first == *lift.ratio)) {
        out.all_equal = false;
      }
      out.lifts.push_back(std::move(lift));
    }
  }
  return out;
}

}  // namespace arbor
