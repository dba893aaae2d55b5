#pragma once

// Small reference graphs with known answers.

#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

/// Vertices 1, 2, 3 over Z/3: a = (1,1) voltage g, b = (1,2) voltage 1,
/// c = (2,3) voltage g^2, d = (3,1) voltage g^2, e = (3,2) voltage 1.
VoltageGraph z3_triangle();

/// The same edges with permutation voltages on 3 sheets:
/// a = 321, b = 231, c = 123, d = 123, e = 132.
VoltageGraph permuted_triangle();

/// Z/2 voltages on the 2-cycles 1 <-> 2 and 1 <-> 3 plus 2 -> 3:
/// a = (1,2) +, b = (2,1) -, c = (1,3) +, d = (3,1) -, e = (2,3) +.
VoltageGraph signed_triangle();

/// One vertex with a loop `a` whose voltage generates Z/order.
VoltageGraph cyclic_loop(std::size_t order);

/// Directed 2-cycle a = (1,2), b = (2,1) with Z/2 voltages -1 and +1.
VoltageGraph signed_two_cycle();

}  // namespace arbor
