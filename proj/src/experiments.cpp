#include "arbor/experiments.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "arbor/errors.hpp"

namespace arbor {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ index);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"z2", "z3", "z4", "z5", "z2xz2", "s3", "perm2", "perm3", "perm4"};
  return names;
}

VoltageContext family_context(std::string_view name) {
  if (name == "z2") return FiniteGroup::cyclic(2);
  if (name == "z3") return FiniteGroup::cyclic(3);
  if (name == "z4") return FiniteGroup::cyclic(4);
  if (name == "z5") return FiniteGroup::cyclic(5);
  if (name == "z2xz2") {
    const auto z2 = FiniteGroup::cyclic(2);
    return FiniteGroup::direct_product(*z2, *z2);
  }
  if (name == "s3") {
    // S3 as an explicit multiplication table.
    return FiniteGroup::from_table(FiniteGroup::symmetric(3)->table());
  }
  if (name == "perm2") return SheetCount{2};
  if (name == "perm3") return SheetCount{3};
  if (name == "perm4") return SheetCount{4};
  throw std::invalid_argument("unknown voltage family \"" + std::string(name) + "\"");
}

std::string edge_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "w" + std::to_string(i);
}

namespace {

std::size_t context_sheets(const VoltageContext& ctx) {
  if (auto* g = std::get_if<GroupPtr>(&ctx)) return (*g)->order();
  return std::get<SheetCount>(ctx).k;
}

Voltage random_voltage(Rng& rng, const VoltageContext& ctx) {
  if (auto* g = std::get_if<GroupPtr>(&ctx)) {
    std::uniform_int_distribution<std::size_t> pick(0, (*g)->order() - 1);
    return static_cast<FiniteGroup::Element>(pick(rng));
  }
  Permutation p(std::get<SheetCount>(ctx).k);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

VoltageGraph random_voltage_graph(Rng& rng, std::size_t n, std::size_t m, const VoltageContext& ctx,
                                  bool allow_loops) {
  VoltageGraph g(ctx);
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(std::to_string(v + 1));
  if (n == 0) return g;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t s = uniform(rng, 0, n - 1);
    std::size_t t = uniform(rng, 0, n - 1);
    if (!allow_loops && n > 1)
      while (t == s) t = uniform(rng, 0, n - 1);
    g.add_edge(s, t, edge_name(i), random_voltage(rng, ctx));
  }
  return g;
}

VoltageGraph random_strongly_connected_simple(Rng& rng, std::size_t n, std::size_t extra,
                                              const VoltageContext& ctx) {
  VoltageGraph g(ctx);
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(std::to_string(v + 1));
  if (n < 2) return g;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  std::vector<std::pair<std::size_t, std::size_t>> spare;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (s != t && std::find(arcs.begin(), arcs.end(), std::make_pair(s, t)) == arcs.end()) spare.emplace_back(s, t);
  std::shuffle(spare.begin(), spare.end(), rng);
  for (std::size_t i = 0; i < extra && i < spare.size(); ++i) arcs.push_back(spare[i]);
  std::shuffle(arcs.begin(), arcs.end(), rng);
  for (std::size_t i = 0; i < arcs.size(); ++i) g.add_edge(arcs[i].first, arcs[i].second, edge_name(i), random_voltage(rng, ctx));
  return g;
}

// ---------------------------------------------------------------- positivity

nlohmann::json PositivityReport::to_json() const {
  return {{"trials", trials},
          {"evaluated", evaluated},
          {"skipped", {{"zero_base_arborescence", skipped_zero_base}, {"ratio is 0", skipped_zero_ratio}}},
          {"identity_failures", identity_failures},
          {"negative_coefficient_instances", counterexamples.size()},
          {"counterexamples", counterexamples}};
}

PositivityReport positivity_scan(const PositivityConfig& config) {
  std::vector<std::string> families;
  for (const auto& f : config.families)
    if (context_sheets(family_context(f)) <= config.max_k) families.push_back(f);
  if (families.empty()) throw std::invalid_argument("no voltage family within the sheet bound");

  std::vector<VoltageContext> contexts;
  for (const auto& f : families) contexts.push_back(family_context(f));

  PositivityReport report;
  for (std::size_t i = 0; i < config.trials; ++i) {
    Rng rng(trial_seed(config.seed, i));
    const std::size_t fam = i % families.size();
    const std::size_t n = uniform(rng, config.min_n, config.max_n);
    const std::size_t m = uniform(rng, config.min_edges, config.max_edges);
    const VoltageGraph g = random_voltage_graph(rng, n, m, contexts[fam]);
    ++report.trials;

    if (arborescence_polynomial(g, 0).is_zero()) {
      ++report.skipped_zero_base;
      continue;
    }
    const std::size_t k = g.sheet_count();
    IntPoly ratio;
    try {
      ratio = exact_div(det_fraction_free(restricted_voltage_laplacian(g)), Integer(static_cast<unsigned long>(k)));
    } catch (const NotDivisible&) {
      ++report.identity_failures;
      report.counterexamples.push_back(
          {{"seed", config.seed}, {"index", i}, {"family", families[fam]}, {"reason", "det not divisible by k"},
           {"graph", serialize_graph(g)}});
      continue;
    }
    if (ratio.is_zero()) {
      ++report.skipped_zero_ratio;
      continue;
    }
    ++report.evaluated;
    const bool negative =
        std::any_of(ratio.terms().begin(), ratio.terms().end(), [](const Term& t) { return sgn(t.coeff) < 0; });
    if (negative) {
      report.counterexamples.push_back({{"seed", config.seed},
                                        {"index", i},
                                        {"family", families[fam]},
                                        {"reason", "negative coefficient"},
                                        {"ratio", to_string(ratio, g.names())},
                                        {"graph", serialize_graph(g)}});
    }
  }
  return report;
}

// ---------------------------------------------------------------- expectation

std::string ExpectationRecord::mean(const VarNames& names) const {
  return "(" + to_string(ratio_sum, names) + ")/" + assignments.get_str();
}

std::string ExpectationRecord::formula(const VarNames& names) const {
  return "(" + to_string(formula_scaled, names) + ")/" + Integer(assignments * static_cast<unsigned long>(k)).get_str();
}

ExpectationRecord expectation_check_exhaustive(const VoltageGraph& g, std::size_t k, std::size_t root,
                                               std::size_t max_covers) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (root >= g.vertex_count()) throw IndexOutOfRange("root out of range");
  const VoltageGraph base = underlying_graph(g);
  const IntPoly A_base = arborescence_polynomial(base, root);
  if (A_base.is_zero()) throw ZeroBaseArborescence("no arborescence at the chosen root");

  std::vector<Permutation> perms;
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  ExpectationRecord rec;
  rec.k = k;
  mpz_ui_pow_ui(rec.assignments.get_mpz_t(), perms.size(), base.edge_count());
  if (rec.assignments > static_cast<unsigned long>(max_covers)) {
    throw SearchSpaceTooLarge("too many permutation assignments to enumerate");
  }
  const std::size_t total = rec.assignments.get_ui();
  std::vector<std::size_t> digit(base.edge_count(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    VoltageGraph h(SheetCount{k});
    for (std::size_t v = 0; v < base.vertex_count(); ++v) h.add_vertex(base.label(v));
    h.set_names(base.names());
    for (const Edge& e : base.edges()) h.add_edge_with_weight(e.source, e.target, e.weight, perms[digit[e.id]]);
    const CoverGraph cover = build_cover(h);
    const IntPoly A_cover = arborescence_polynomial(as_plain_graph(cover), cover.vertex_index(root, 0));
    rec.ratio_sum += exact_div(A_cover, A_base);
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < perms.size()) break;
      digit[i] = 0;
    }
  }

  IntPoly product = IntPoly::constant(rec.assignments);
  for (std::size_t w = 0; w < base.vertex_count(); ++w) {
    IntPoly out_sum;
    for (std::size_t id : base.out_edges(w)) out_sum += IntPoly::variable(base.edge(id).weight);
    for (std::size_t j = 1; j < k; ++j) product *= out_sum;
  }
  rec.formula_scaled = std::move(product);
  rec.equal = rec.ratio_sum * Integer(static_cast<unsigned long>(k)) == rec.formula_scaled;
  return rec;
}

// ---------------------------------------------------------------- Euler circuits

bool is_eulerian(const VoltageGraph& g) {
  if (g.edge_count() == 0 || !is_strongly_connected(g)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).size() != g.in_edges(v).size()) return false;
  return true;
}

namespace {

Integer factorial(std::size_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer degree_factor(const VoltageGraph& g) {
  Integer out = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out *= factorial(g.out_edges(v).size() - 1);
  return out;
}

}  // namespace

Integer best_count(const VoltageGraph& g) {
  if (!is_eulerian(g)) throw NotEulerian("graph is not a connected balanced digraph");
  return eval_ones(arborescence_polynomial(g, 0)) * degree_factor(g);
}

Integer brute_force_euler_circuits(const VoltageGraph& g, std::size_t budget) {
  if (!is_eulerian(g)) throw NotEulerian("graph is not a connected balanced digraph");
  const std::size_t m = g.edge_count();
  const std::size_t start = g.edge(0).source;
  std::vector<bool> used(m, false);
  Integer count = 0;
  std::size_t steps = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t depth) {
    if (++steps > budget) throw SearchSpaceTooLarge("Euler circuit enumeration exceeded its budget");
    if (depth == m) {
      if (v == start) ++count;
      return;
    }
    for (std::size_t id : g.out_edges(v)) {
      if (used[id]) continue;
      used[id] = true;
      walk(g.edge(id).target, depth + 1);
      used[id] = false;
    }
  };
  used[0] = true;
  walk(g.edge(0).target, 1);
  return count;
}

EulerRecord euler_ratio(const VoltageGraph& g, const CoverGraph& cover, std::size_t brute_force_edges) {
  const VoltageGraph base = underlying_graph(g);
  const VoltageGraph lifted = as_plain_graph(cover);
  if (!is_eulerian(base)) throw NotEulerian("base graph is not Eulerian");
  if (!is_eulerian(lifted)) throw NotEulerian("cover is not Eulerian");
  const std::size_t k = cover.sheets();

  EulerRecord r;
  r.E_base = best_count(base);
  r.E_cover = best_count(lifted);
  r.ratio_integral = r.E_base != 0 && r.E_cover % r.E_base == 0;
  if (r.ratio_integral) r.ratio = r.E_cover / r.E_base;

  Integer scaled = eval_ones(det_fraction_free(restricted_voltage_laplacian(cover.base())));
  const Integer deg = degree_factor(base);
  for (std::size_t j = 1; j < k; ++j) scaled *= deg;
  r.formula_integral = scaled % static_cast<unsigned long>(k) == 0;
  if (r.formula_integral) r.formula_value = scaled / static_cast<unsigned long>(k);

  if (base.edge_count() <= brute_force_edges) r.brute_base = brute_force_euler_circuits(base);
  if (lifted.edge_count() <= brute_force_edges) r.brute_cover = brute_force_euler_circuits(lifted);

  r.consistent = r.ratio_integral && r.formula_integral && r.ratio == r.formula_value && sgn(r.ratio) > 0 &&
                 (!r.brute_base || *r.brute_base == r.E_base) && (!r.brute_cover || *r.brute_cover == r.E_cover);
  return r;
}

// ---------------------------------------------------------------- vector field tuples

VfTupleReport vf_tuple_report(const VoltageGraph& g, std::size_t bound) {
  VfTupleReport rep;
  rep.k = g.sheet_count();
  rep.ratio = exact_div(det_fraction_free(restricted_voltage_laplacian(g)), Integer(static_cast<unsigned long>(rep.k)));
  const std::size_t t = rep.k - 1;

  std::vector<Monomial> weights;
  for_each_vector_field(g, [&](const VectorField& f) { weights.push_back(vector_field_monomial(g, f)); }, bound);
  rep.vector_fields = weights.size();

  // Multisets of size t over the vector fields, as nondecreasing index tuples.
  Integer multisets = t == 0 ? 1 : 0;
  if (t > 0 && !weights.empty()) mpz_bin_uiui(multisets.get_mpz_t(), weights.size() + t - 1, t);
  if (multisets > static_cast<unsigned long>(bound)) throw SearchSpaceTooLarge("too many vector field tuples");

  std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> first_tuple;
  std::vector<std::size_t> tuple(t, 0);
  if (t == 0) {
    first_tuple.emplace(Monomial{}, tuple);
  } else if (!weights.empty()) {
    while (true) {
      Monomial product;
      for (std::size_t i : tuple) product = product * weights[i];
      first_tuple.emplace(std::move(product), tuple);
      std::size_t pos = t;
      while (pos > 0 && tuple[pos - 1] == weights.size() - 1) --pos;
      if (pos == 0) break;
      ++tuple[pos - 1];
      for (std::size_t j = pos; j < t; ++j) tuple[j] = tuple[pos - 1];
    }
  }

  for (const Term& term : rep.ratio.terms()) {
    if (sgn(term.coeff) < 0) {
      rep.reason = "ratio has a negative coefficient";
      rep.entries.clear();
      return rep;
    }
    auto it = first_tuple.find(term.monomial);
    if (it == first_tuple.end()) {
      rep.reason = "a ratio monomial is not a product of vector field weights";
      rep.entries.clear();
      return rep;
    }
    rep.entries.push_back(VfTupleEntry{it->second, term.coeff});
  }
  rep.success = true;
  return rep;
}

}  // namespace arbor
