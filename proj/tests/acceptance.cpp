// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// polynomial or integer equalities; only the wall-clock limits below are tolerances.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arbor/reproduce.hpp"
#include "support.hpp"

using namespace arbor;
using arbor::testing::ordered_voltage;
using arbor::testing::simple_cycles;

namespace {

constexpr double reproduce_limit_seconds = 1.0;
constexpr double identity_suite_limit_seconds = 300.0;
constexpr std::size_t identity_instances_per_family = 70;
constexpr std::size_t oracle_graphs = 300;
constexpr std::size_t oracle_covers = 50;
constexpr std::size_t expansion_instances = 200;
constexpr std::size_t gauge_instances = 100;
constexpr std::size_t norm_instances_per_prime = 40;
constexpr std::size_t expectation_graphs = 20;
constexpr std::size_t euler_graphs = 10;
constexpr std::size_t positivity_trials = 10'000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::printf("[%s] %d %s: %s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str());
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

template <class F>
void run(int id, const std::string& title, F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  report(id, title, o);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Instances generated for the cover identity suite and reused by later criteria.
struct IdentityInstance {
  std::string family;
  VoltageGraph graph;
  RatioReport report;
};
std::vector<IdentityInstance> identity_suite;

void example_reproduction(Outcome& o) {
  const auto t0 = Clock::now();
  const auto checks = reproduce_examples();
  const double elapsed = seconds_since(t0);
  std::size_t ok = 0;
  for (const auto& c : checks) {
    o.require(c.passed, c.name + " (" + c.detail + ")");
    ok += c.passed;
  }
  o.require(elapsed < reproduce_limit_seconds, "took longer than the time limit");
  o.detail << ok << "/" << checks.size() << " examples exact in " << elapsed << " s";
}

void cover_identity(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<std::string> families = {"z2", "z3", "z4", "z2xz2", "s3", "perm2", "perm3", "perm4"};
  std::size_t degenerate = 0, non_regular = 0;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const VoltageContext ctx = family_context(families[f]);
    // S3 has six sheets; base graphs stay at three vertices to keep the cover near the other families' size.
    const std::size_t max_n = families[f] == "s3" ? 3 : 4;
    std::size_t kept = 0;
    for (std::size_t i = 0; kept < identity_instances_per_family; ++i) {
      Rng rng(trial_seed(0xAC1 + f, i));
      const std::size_t n = uniform(rng, 1, max_n);
      VoltageGraph g = random_voltage_graph(rng, n, uniform(rng, 1, 7), ctx);
      const std::size_t v = uniform(rng, 0, n - 1);
      RatioReport rep = ratio_report(g, v);
      o.require(rep.theorem_holds, families[f] + " instance " + std::to_string(i));
      if (rep.A_base.is_zero()) {
        ++degenerate;
        continue;
      }
      if (!g.has_group() && !is_regular_cover(build_cover(g))) ++non_regular;
      identity_suite.push_back({families[f], std::move(g), std::move(rep)});
      ++kept;
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(identity_suite.size() >= 500, "fewer than 500 instances");
  o.require(non_regular > 0, "no non-regular cover exercised");
  o.require(elapsed <= identity_suite_limit_seconds, "took longer than the time limit");
  o.detail << identity_suite.size() << " instances with a nonzero base polynomial over " << families.size()
           << " families (" << non_regular << " non-regular covers), plus " << degenerate
           << " instances with no base arborescence, in " << elapsed << " s";
}

void oracle_equivalence(Outcome& o) {
  for (std::size_t i = 0; i < oracle_graphs; ++i) {
    Rng rng(trial_seed(0xB0, i));
    const std::size_t n = uniform(rng, 1, 5);
    const VoltageGraph g = random_voltage_graph(rng, n, uniform(rng, 0, 10), VoltageContext{SheetCount{1}});
    const std::size_t root = uniform(rng, 0, n - 1);
    o.require(arborescence_polynomial(g, root) == arborescence_polynomial(g, root, ArborMethod::brute_force),
              "base graph " + std::to_string(i));
  }

  const VoltageGraph reference = as_plain_graph(build_cover(z3_triangle()));
  o.require(arborescence_polynomial(reference, 0) == arborescence_polynomial(reference, 0, ArborMethod::brute_force),
            "reference cover");

  std::size_t covers = 0;
  const std::vector<std::string> families = {"z2", "z3", "perm2", "perm3", "z2xz2"};
  for (std::size_t i = 0; covers < oracle_covers; ++i) {
    Rng rng(trial_seed(0xB1, i));
    const VoltageContext ctx = family_context(families[i % families.size()]);
    const std::size_t k = std::holds_alternative<SheetCount>(ctx) ? std::get<SheetCount>(ctx).k
                                                                    : std::get<GroupPtr>(ctx)->order();
    const std::size_t n = uniform(rng, 1, 10 / k);
    const VoltageGraph g = random_voltage_graph(rng, n, uniform(rng, 1, 7), ctx);
    const VoltageGraph flat = as_plain_graph(build_cover(g));
    o.require(arborescence_polynomial(flat, 0) == arborescence_polynomial(flat, 0, ArborMethod::brute_force),
              "cover " + std::to_string(i));
    ++covers;
  }
  o.detail << oracle_graphs << " base graphs, the reference cover and " << covers << " random covers with nk <= 10";
}

void vector_field_expansion(Outcome& o) {
  const std::vector<std::string> families = {"z2", "z3", "z4", "z2xz2"};
  std::size_t z2_cases = 0;
  for (std::size_t i = 0; i < expansion_instances; ++i) {
    Rng rng(trial_seed(0xC0, i));
    const std::string& fam = families[i % families.size()];
    const VoltageGraph g = random_voltage_graph(rng, uniform(rng, 1, 4), uniform(rng, 0, 7), family_context(fam));
    const ReducedGA det = det_group_algebra(voltage_laplacian(g));
    o.require(omega(g) == det, fam + " instance " + std::to_string(i));
    if (fam == "z2") {
      ++z2_cases;
      o.require(negative_vector_field_sum(g) == sign_specialize(det), "negative fields, instance " + std::to_string(i));
    }
  }
  for (const auto& inst : identity_suite) {
    if (inst.family != "z2") continue;
    ++z2_cases;
    o.require(negative_vector_field_sum(inst.graph) == sign_specialize(det_group_algebra(voltage_laplacian(inst.graph))),
              "negative fields on the cover identity suite");
  }

  std::size_t cycles_checked = 0;
  for (std::size_t i = 0; i < gauge_instances; ++i) {
    Rng rng(trial_seed(0xC1, i));
    const VoltageGraph g =
        random_voltage_graph(rng, uniform(rng, 2, 4), uniform(rng, 2, 7), family_context(families[i % families.size()]));
    const auto v = uniform(rng, 0, g.vertex_count() - 1);
    const auto h = static_cast<FiniteGroup::Element>(uniform(rng, 0, g.group()->order() - 1));
    const VoltageGraph t = gauge_transform(g, v, h);
    std::vector<std::vector<std::size_t>> cycles;
    simple_cycles(g, cycles);
    for (const auto& c : cycles) o.require(ordered_voltage(g, c) == ordered_voltage(t, c), "cycle voltage");
    cycles_checked += cycles.size();
    o.require(det_group_algebra(voltage_laplacian(t)) == det_group_algebra(voltage_laplacian(g)), "gauge determinant");
  }
  o.detail << expansion_instances << " expansion instances, " << z2_cases << " signed Z/2 instances, " << gauge_instances
           << " gauge instances (" << cycles_checked << " cycles)";
}

void prime_norm(Outcome& o) {
  std::size_t norms = 0;
  for (unsigned p : {2u, 3u, 5u}) {
    const VoltageContext ctx = family_context("z" + std::to_string(p));
    for (std::size_t i = 0; i < norm_instances_per_prime; ++i) {
      Rng rng(trial_seed(0xD0 + p, i));
      const VoltageGraph g = random_voltage_graph(rng, uniform(rng, 1, p == 5 ? 3 : 4), uniform(rng, 1, 7), ctx);
      const IntPoly norm = field_norm(embed(det_group_algebra(voltage_laplacian(g))));
      o.require(norm == det_fraction_free(restricted_voltage_laplacian(g)), "p = " + std::to_string(p));
      ++norms;
    }
  }
  std::size_t regular = 0;
  for (const auto& inst : identity_suite) {
    if (!inst.graph.has_group()) continue;
    o.require(restricted_via_representation(inst.graph) == restricted_voltage_laplacian(inst.graph),
              inst.family + " representation");
    ++regular;
  }
  o.detail << norms << " norm instances for p in {2,3,5}; representation matches on " << regular
           << " regular instances";
}

void corollaries(Outcome& o) {
  std::size_t homogeneous = 0, two_sheet = 0;
  for (const auto& inst : identity_suite) {
    o.require(inst.report.ratio.has_value(), "ratio not integral");
    if (!inst.report.ratio || inst.report.ratio->is_zero()) continue;
    const std::size_t n = inst.graph.vertex_count();
    o.require(homogeneous_degree(*inst.report.ratio) == n * (inst.report.k - 1), "ratio degree");
    ++homogeneous;
    if (inst.report.k == 2) {
      for (const Term& t : inst.report.ratio->terms()) o.require(sgn(t.coeff) > 0, "two-sheet coefficient");
      ++two_sheet;
    }
  }

  std::size_t invariance = 0;
  const std::vector<std::string> families = {"z2", "z3", "z4", "z2xz2", "s3", "perm2", "perm3"};
  for (std::size_t i = 0; i < 35; ++i) {
    Rng rng(trial_seed(0xE0, i));
    const std::string& fam = families[i % families.size()];
    const std::size_t n = fam == "s3" ? 2 : uniform(rng, 2, 3);
    const InvarianceReport rep =
        invariance_report(random_strongly_connected_simple(rng, n, uniform(rng, 0, 2), family_context(fam)));
    o.require(rep.strongly_connected && rep.simple && rep.all_equal, fam + " invariance " + std::to_string(i));
    ++invariance;
  }
  o.detail << homogeneous << " homogeneous integral ratios, " << two_sheet << " positive two-sheet ratios, "
           << invariance << " invariance instances";
}

void expectation(Outcome& o) {
  std::size_t graphs = 0;
  for (std::size_t i = 0; graphs < expectation_graphs; ++i) {
    Rng rng(trial_seed(0xF0, i));
    const VoltageGraph g =
        random_voltage_graph(rng, uniform(rng, 1, 4), uniform(rng, 1, 8), VoltageContext{SheetCount{1}});
    if (arborescence_polynomial(g, 0).is_zero()) continue;
    o.require(expectation_check_exhaustive(g, 2).equal, "graph " + std::to_string(i));
    ++graphs;
  }
  o.require(expectation_check_exhaustive(underlying_graph(z3_triangle()), 2).equal, "reference graph");
  o.detail << graphs + 1 << " graphs, every sign assignment enumerated";
}

void euler(Outcome& o) {
  std::size_t graphs = 0, cover_brute = 0;
  for (std::size_t i = 0; graphs < euler_graphs && i < 10'000; ++i) {
    Rng rng(trial_seed(0x100, i));
    const VoltageGraph g = arbor::testing::with_reverse_edges(random_strongly_connected_simple(
        rng, uniform(rng, 2, 3), uniform(rng, 0, 1), family_context(i % 2 ? "perm2" : "z2")));
    const CoverGraph c = build_cover(g);
    const VoltageGraph flat = as_plain_graph(c);
    if (!is_strongly_connected(flat)) continue;
    const EulerRecord r = euler_ratio(g, c);
    o.require(r.brute_base.has_value() && *r.brute_base == r.E_base, "BEST count on base " + std::to_string(i));
    if (r.brute_cover) {
      o.require(*r.brute_cover == r.E_cover, "BEST count on cover");
      ++cover_brute;
    }
    o.require(r.ratio_integral && r.formula_integral && r.formula_value > 0 && r.ratio == r.formula_value,
              "cover formula " + std::to_string(i));
    ++graphs;
  }
  const EulerRecord two = euler_ratio(signed_two_cycle(), build_cover(signed_two_cycle()));
  o.require(two.consistent && two.E_cover == 1, "two-cycle");
  o.require(graphs >= euler_graphs, "not enough Eulerian instances");
  o.detail << graphs << " Eulerian graphs (" << cover_brute << " covers also brute forced)";
}

void positivity(Outcome& o) {
  PositivityConfig cfg;
  cfg.trials = positivity_trials;
  const auto t0 = Clock::now();
  const PositivityReport rep = positivity_scan(cfg);
  const double elapsed = seconds_since(t0);
  if (!rep.counterexamples.empty()) {
    std::ofstream("positivity_counterexamples.json") << rep.to_json().dump(2) << "\n";
    o.detail << "counterexamples written to positivity_counterexamples.json; ";
  }
  o.require(rep.identity_failures == 0, "determinant not divisible by k");
  o.require(rep.counterexamples.empty(), "negative coefficient found");
  o.detail << rep.trials << " instances, " << rep.evaluated << " with a nonzero ratio, " << rep.counterexamples.size()
           << " with a negative coefficient, " << elapsed << " s (finding, the conjecture is open)";
}

}  // namespace

int main() {
  run(1, "example reproduction", example_reproduction);
  run(2, "cover identity on random voltage graphs", cover_identity);
  run(3, "matrix-tree against enumeration", oracle_equivalence);
  run(4, "vector field expansion", vector_field_expansion);
  run(5, "prime cyclic norm", prime_norm);
  run(6, "homogeneity, two-sheet positivity, root invariance", corollaries);
  run(7, "two-sheet expectation", expectation);
  run(8, "Euler circuits", euler);
  run(9, "positivity scan", positivity);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
