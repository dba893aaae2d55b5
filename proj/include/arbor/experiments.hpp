#pragma once

// Randomized and exhaustive checks of the ratio identities.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arbor/spanning.hpp"
#include "arbor/vecfield.hpp"

namespace arbor {

class ZeroBaseArborescence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotEulerian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rng = std::mt19937_64;

/// Seed of trial `index` under master seed `seed` (splitmix64 of both).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Named voltage families: z2, z3, z4, z5, z2xz2, s3 (group voltages) and
/// perm2, perm3, perm4 (raw permutation voltages).
VoltageContext family_context(std::string_view name);
const std::vector<std::string>& family_names();

/// Weight name of the i-th edge: a..z, then w26, w27, ...
std::string edge_name(std::size_t i);

/// n vertices labelled 1..n and m edges with uniform endpoints and voltages.
VoltageGraph random_voltage_graph(Rng& rng, std::size_t n, std::size_t m, const VoltageContext& ctx,
                                  bool allow_loops = true);

/// Random strongly connected simple digraph on n vertices (a Hamiltonian
/// cycle plus extra arcs).
VoltageGraph random_strongly_connected_simple(Rng& rng, std::size_t n, std::size_t extra, const VoltageContext& ctx);

struct PositivityConfig {
  std::vector<std::string> families = {"z2", "z3", "z4", "z2xz2", "perm2", "perm3", "perm4"};
  std::size_t min_n = 1, max_n = 4;
  std::size_t min_edges = 1, max_edges = 7;
  std::size_t max_k = 4;
  std::size_t trials = 10'000;
  std::uint64_t seed = 1;
};

struct PositivityReport {
  std::size_t trials = 0;
  std::size_t evaluated = 0;
  std::size_t skipped_zero_base = 0;
  std::size_t skipped_zero_ratio = 0;
  std::size_t identity_failures = 0;
  std::vector<nlohmann::json> counterexamples;  ///< replayable instances
  nlohmann::json to_json() const;
};

/// Samples voltage graphs, computes the ratio as det / k of the restricted
/// voltage Laplacian, and records any negative coefficient.
PositivityReport positivity_scan(const PositivityConfig& config);

struct ExpectationRecord {
  std::size_t k = 1;
  Integer assignments;      ///< (k!)^|E|
  IntPoly ratio_sum;        ///< sum of A_cover / A_base over all assignments
  IntPoly formula_scaled;   ///< assignments * prod_w (sum of out-weights)^(k-1)
  bool equal = false;       ///< k * ratio_sum == formula_scaled
  std::string mean(const VarNames& names) const;
  std::string formula(const VarNames& names) const;
};

/// Mean ratio over every assignment of permutation voltages on k sheets,
/// against (1/k) prod_w (sum of out-weights)^(k-1).
ExpectationRecord expectation_check_exhaustive(const VoltageGraph& g, std::size_t k, std::size_t root = 0,
                                               std::size_t max_covers = 100'000);

struct EulerRecord {
  Integer E_base;
  Integer E_cover;
  bool ratio_integral = false;
  Integer ratio;          ///< E_cover / E_base when integral
  bool formula_integral = false;
  Integer formula_value;  ///< det|wt=1 / k * prod ((deg - 1)!)^(k-1)
  std::optional<Integer> brute_base;
  std::optional<Integer> brute_cover;
  bool consistent = false;
};

bool is_eulerian(const VoltageGraph& g);

/// Euler circuits via arborescences at vertex 0 times prod (outdeg - 1)!.
Integer best_count(const VoltageGraph& g);

/// Euler circuits counted as closed trails starting with edge 0.
Integer brute_force_euler_circuits(const VoltageGraph& g, std::size_t budget = 10'000'000);

/// Requires both the base and the cover to be Eulerian and strongly connected.
/// Brute-force counts are included when the graphs have at most
/// `brute_force_edges` edges.
EulerRecord euler_ratio(const VoltageGraph& g, const CoverGraph& cover, std::size_t brute_force_edges = 14);

struct VfTupleEntry {
  std::vector<std::size_t> fields;  ///< indices into the vector field list
  Integer f;
};

struct VfTupleReport {
  std::size_t k = 1;
  IntPoly ratio;
  std::size_t vector_fields = 0;
  bool success = false;
  std::string reason;
  std::vector<VfTupleEntry> entries;
};

/// Tries to write det / k of the restricted voltage Laplacian as a
/// nonnegative integer combination of products of k-1 vector field weights.
VfTupleReport vf_tuple_report(const VoltageGraph& g, std::size_t bound = 1'000'000);

}  // namespace arbor
