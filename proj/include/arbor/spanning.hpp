#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "arbor/laplacian.hpp"

namespace arbor {

class NotStronglyConnected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One outgoing edge per non-root vertex, indexed by vertex; the root's slot
/// is unused.
struct Arborescence {
  std::size_t root;
  std::vector<std::size_t> parent_edge;
  std::vector<std::size_t> edges() const;
};

struct EnumerationLimits {
  std::size_t max_vertices = 12;
  std::size_t max_results = 5'000'000;
};

/// Calls `visit` for every arborescence rooted at `root` (edges point toward it).
void for_each_arborescence(const VoltageGraph& g, std::size_t root,
                           const std::function<void(const Arborescence&)>& visit, EnumerationLimits limits = {});
std::vector<Arborescence> enumerate_arborescences(const VoltageGraph& g, std::size_t root,
                                                  EnumerationLimits limits = {});

IntPoly arborescence_weight(const VoltageGraph& g, const Arborescence& t);

enum class ArborMethod { matrix_tree, brute_force };

IntPoly arborescence_polynomial(const VoltageGraph& g, std::size_t root,
                                ArborMethod method = ArborMethod::matrix_tree, EnumerationLimits limits = {});

struct RatioReport {
  std::size_t k = 1;
  IntPoly A_base;
  IntPoly A_cover;
  IntPoly det;                   ///< determinant of the restricted voltage Laplacian
  IntPoly rhs;                   ///< det / k
  std::optional<IntPoly> ratio;  ///< A_cover / A_base when A_base != 0
  bool theorem_holds = false;
};

/// Compares k * A_{(v,1)}(cover) with A_v(base) * det of the restricted
/// voltage Laplacian.
RatioReport ratio_report(const VoltageGraph& g, std::size_t v);

struct LiftRatio {
  std::size_t vertex;
  std::size_t sheet;
  IntPoly A_cover;
  std::optional<IntPoly> ratio;
};

struct InvarianceReport {
  bool strongly_connected = false;
  bool simple = false;
  bool all_equal = false;
  std::string warning;
  std::vector<IntPoly> A_base;  ///< per base vertex
  std::vector<LiftRatio> lifts;
};

/// Ratio at every vertex and every lift. Equality is only meaningful when the
/// base is strongly connected and simple; otherwise `warning` is set.
InvarianceReport invariance_report(const VoltageGraph& g);

bool is_strongly_connected(const VoltageGraph& g);
/// No loops and no parallel edges.
bool is_simple(const VoltageGraph& g);

}  // namespace arbor
