#pragma once

#include "arbor/cover.hpp"
#include "arbor/group_algebra.hpp"
#include "arbor/matrix.hpp"

namespace arbor {

class BlockMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using PolyMatrix = RingMatrix<IntPoly>;

/// Weighted out-degree matrix minus weighted adjacency matrix; voltages ignored.
PolyMatrix laplacian(const VoltageGraph& g);

/// Same shape over the reduced group algebra: adjacency entries carry
/// nu(e) * wt(e). Throws VoltageKindMismatch for permutation voltages.
RingMatrix<ReducedGA> voltage_laplacian(const VoltageGraph& g);

/// The n(k-1) square integer matrix read off the cover. Rows and columns are
/// (v, sheet) for sheets 2..k, sheet-major. A lifted edge (i,t) -> (j,r) adds
/// its weight to the diagonal at (i,t); it enters the adjacency part at
/// (i,t),(j,r) when r is not the first sheet, and otherwise is subtracted from
/// (i,t),(j,c) for every c.
PolyMatrix restricted_voltage_laplacian(const VoltageGraph& g);

/// Blockwise image of voltage_laplacian under the regular representation of
/// Z-bar[G] (left multiplication, matching the cover's sheet action).
PolyMatrix restricted_via_representation(const VoltageGraph& g);

struct Triangularization {
  PolyMatrix U;            ///< S * L(cover) * S^-1
  PolyMatrix upper_left;   ///< equals laplacian(base)
  PolyMatrix lower_right;  ///< equals restricted_voltage_laplacian(base)
};

/// S has first block row [I I ... I] and identity blocks on the rest of the
/// diagonal. Throws BlockMismatch if the blocks are not as expected.
Triangularization triangularize(const CoverGraph& cover);

/// Pretty-prints a matrix as a grid of canonical strings.
std::string to_string(const PolyMatrix& m, const VarNames& names);

}  // namespace arbor
