#include "arbor/cover.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

std::string CoverGraph::vertex_label(std::size_t cover_vertex) const {
  return base_.label(base_vertex(cover_vertex)) + "^" + std::to_string(sheet_of(cover_vertex) + 1);
}

CoverGraph build_cover(const VoltageGraph& g) {
  CoverGraph c;
  c.base_ = g;
  c.k_ = g.sheet_count();
  std::vector<Permutation> sigma;
  sigma.reserve(g.edge_count());
  for (const Edge& e : g.edges()) sigma.push_back(g.sheet_permutation(e.id));
  c.edges_.reserve(g.edge_count() * c.k_);
  for (std::uint32_t x = 0; x < c.k_; ++x) {
    for (const Edge& e : g.edges()) {
      c.edges_.push_back(LiftedEdge{e.id, x, c.vertex_index(e.source, x), c.vertex_index(e.target, sigma[e.id][x])});
    }
  }
  return c;
}

VoltageGraph as_plain_graph(const CoverGraph& c) {
  if (c.sheets() == 1) return c.base();
  VoltageGraph out;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) out.add_vertex(c.vertex_label(v));
  out.set_names(c.base().names());
  for (const LiftedEdge& e : c.edges()) out.add_edge_with_weight(e.source, e.target, c.weight(e), Permutation{0});
  return out;
}

namespace {

// Per-fiber sheet maps pi_v subject to pi_w o sigma_e = sigma_e o pi_v. Within
// an undirected component, pi at one vertex determines pi everywhere, so the
// search is over the root map of each component.
class DeckSearch {
 public:
  DeckSearch(const CoverGraph& c, std::size_t budget) : c_(c), budget_(budget) {
    const VoltageGraph& g = c.base();
    n_ = g.vertex_count();
    k_ = c.sheets();
    for (const Edge& e : g.edges()) {
      sigma_.push_back(g.sheet_permutation(e.id));
      Permutation inv(k_);
      for (std::uint32_t x = 0; x < k_; ++x) inv[sigma_.back()[x]] = x;
      sigma_inv_.push_back(std::move(inv));
    }
    component_.assign(n_, n_);
    for (std::size_t v = 0; v < n_; ++v) {
      if (component_[v] != n_) continue;
      roots_.push_back(v);
      std::vector<std::size_t> order{v};
      component_[v] = roots_.size() - 1;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t u = order[i];
        auto visit = [&](std::size_t w) {
          if (component_[w] == n_) {
            component_[w] = roots_.size() - 1;
            order.push_back(w);
          }
        };
        for (auto id : g.out_edges(u)) visit(g.edge(id).target);
        for (auto id : g.in_edges(u)) visit(g.edge(id).source);
      }
      orders_.push_back(std::move(order));
    }
  }

  // Every consistent sheet map of each component, as full per-vertex maps.
  std::vector<std::vector<Permutation>> component_solutions(std::size_t comp) {
    std::vector<std::vector<Permutation>> out;
    Permutation root_map(k_);
    std::iota(root_map.begin(), root_map.end(), 0u);
    do {
      if (++nodes_ > budget_) throw SearchSpaceTooLarge("deck group search exceeded its node budget");
      std::vector<Permutation> pi(n_);
      if (propagate(comp, root_map, pi)) out.push_back(std::move(pi));
    } while (std::next_permutation(root_map.begin(), root_map.end()));
    return out;
  }

  std::size_t components() const { return roots_.size(); }
  const std::vector<std::size_t>& members(std::size_t comp) const { return orders_[comp]; }

 private:
  bool propagate(std::size_t comp, const Permutation& root_map, std::vector<Permutation>& pi) {
    const VoltageGraph& g = c_.base();
    pi[roots_[comp]] = root_map;
    for (std::size_t u : orders_[comp]) {
      // pi[u] is set by the time u is dequeued (BFS order from the root).
      for (auto id : g.out_edges(u)) {
        const std::size_t w = g.edge(id).target;
        Permutation want(k_);
        // pi_w = sigma_e o pi_u o sigma_e^-1
        for (std::uint32_t y = 0; y < k_; ++y) want[y] = sigma_[id][pi[u][sigma_inv_[id][y]]];
        if (pi[w].empty()) {
          pi[w] = std::move(want);
        } else if (pi[w] != want) {
          return false;
        }
      }
      for (auto id : g.in_edges(u)) {
        const std::size_t s = g.edge(id).source;
        Permutation want(k_);
        // pi_s = sigma_e^-1 o pi_u o sigma_e
        for (std::uint32_t x = 0; x < k_; ++x) want[x] = sigma_inv_[id][pi[u][sigma_[id][x]]];
        if (pi[s].empty()) {
          pi[s] = std::move(want);
        } else if (pi[s] != want) {
          return false;
        }
      }
    }
    return true;
  }

  const CoverGraph& c_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t n_ = 0, k_ = 1;
  std::vector<Permutation> sigma_, sigma_inv_;
  std::vector<std::size_t> component_, roots_;
  std::vector<std::vector<std::size_t>> orders_;
};

}  // namespace

std::vector<DeckTransformation> deck_group(const CoverGraph& c, std::size_t budget) {
  DeckSearch search(c, budget);
  const std::size_t n = c.base().vertex_count();
  std::vector<std::vector<std::vector<Permutation>>> per_comp;
  std::size_t total = 1;
  for (std::size_t comp = 0; comp < search.components(); ++comp) {
    per_comp.push_back(search.component_solutions(comp));
    total *= per_comp.back().size();
    if (total > budget) throw SearchSpaceTooLarge("deck group is larger than the search budget");
  }
  std::vector<DeckTransformation> out;
  std::vector<std::size_t> choice(per_comp.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    DeckTransformation t(c.vertex_count());
    for (std::size_t comp = 0; comp < per_comp.size(); ++comp) {
      const auto& pi = per_comp[comp][choice[comp]];
      for (std::size_t v : search.members(comp))
        for (std::size_t x = 0; x < c.sheets(); ++x) t[x * n + v] = pi[v][x] * n + v;
    }
    out.push_back(std::move(t));
    for (std::size_t comp = 0; comp < choice.size(); ++comp) {
      if (++choice[comp] < per_comp[comp].size()) break;
      choice[comp] = 0;
    }
  }
  return out;
}

bool is_regular_cover(const CoverGraph& c, std::size_t budget) {
  DeckSearch search(c, budget);
  for (std::size_t comp = 0; comp < search.components(); ++comp) {
    const auto solutions = search.component_solutions(comp);
    // Transitivity on the root fiber implies it on every fiber of the component.
    std::vector<bool> reached(c.sheets(), false);
    const std::size_t root = search.members(comp).front();
    for (const auto& pi : solutions) reached[pi[root][0]] = true;
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;
  }
  return true;
}

VoltageGraph gauge_transform(const VoltageGraph& g, std::size_t v, FiniteGroup::Element h) {
  const FiniteGroup& G = *g.group();
  if (!G.contains(h)) throw IndexOutOfRange("gauge element out of range");
  if (v >= g.vertex_count()) throw IndexOutOfRange("gauge vertex out of range");
  VoltageGraph out = g;
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) continue;
    const auto nu = std::get<FiniteGroup::Element>(e.voltage);
    if (e.source == v) out.set_voltage(e.id, G.mul(h, nu));
    if (e.target == v) out.set_voltage(e.id, G.mul(nu, G.inverse(h)));
  }
  return out;
}

nlohmann::json serialize_cover(const CoverGraph& c) {
  nlohmann::json doc = serialize_graph(as_plain_graph(c));
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < c.vertex_count(); ++v) vertices.push_back({c.base_vertex(v), c.sheet_of(v) + 1});
  nlohmann::json edges = nlohmann::json::array();
  for (const LiftedEdge& e : c.edges()) edges.push_back({e.base_edge, e.source_sheet + 1});
  doc["projection"] = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  return doc;
}

}  // namespace arbor
