#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nimrep/dihedral.hpp"
#include "nimrep/group_algebra.hpp"
#include "nimrep/int_matrix.hpp"

namespace nimrep {

struct Cell {
  std::string name;                    // "L_s", "R_t", "J2", ...
  std::vector<GroupElement> members;   // sorted by (length, leading)
};

/// Relation on a list of cells: leq[i][j] iff cell i <= cell j.
using CellOrder = std::vector<std::vector<bool>>;

/// Left, right and two-sided cells of D_n together with the induced preorders.
/// u <=_L w iff w̲ occurs in h̲·u̲ for some h (and transitively).
struct CellPartition {
  int n = 0;
  std::vector<Cell> left_cells;
  std::vector<Cell> right_cells;
  std::vector<Cell> two_sided_cells;  // listed bottom (J1 = {e}) to top
  CellOrder left_leq;
  CellOrder right_leq;
  CellOrder two_sided_leq;

  std::size_t left_cell_of(const GroupElement& w) const;
  std::size_t right_cell_of(const GroupElement& w) const;
  std::size_t two_sided_cell_of(const GroupElement& w) const;

  const Cell& left_cell(const std::string& name) const;
  std::size_t left_cell_index(const std::string& name) const;
  std::size_t two_sided_index(const std::string& name) const;
};

CellPartition compute_cells(const StructureConstantTable& table);

/// Cells by the last letter of the reduced word: {e}, {w0}, ends-in-s, ends-in-t
/// (right cells use the first letter). Used as an independent check.
CellPartition closed_form_cells(const DihedralGroup& group);

/// True when both partitions have the same cells (names ignored) and the same orders.
bool same_cells(const CellPartition& a, const CellPartition& b);

struct StrongRegularity {
  bool regular = true;
  /// Set when `regular` is false.
  std::string witness;
  std::optional<std::size_t> intersection_size;
};

StrongRegularity is_strongly_regular(const CellPartition& partition, std::size_t two_sided_index);

/// Decategorified cell module: KL multiplication projected onto the span of a
/// cell. `matrices[w.index()]` is the action of w̲; column j is the image of basis j.
struct CellModule {
  int n = 0;
  std::string cell;
  std::vector<GroupElement> basis;
  std::vector<IntMatrix> matrices;

  const IntMatrix& matrix(const GroupElement& w) const { return matrices.at(w.index()); }
  const IntMatrix& theta_s() const { return matrices.at(1); }
  const IntMatrix& theta_t() const { return matrices.at(2); }
};

/// Left cell module. Terms falling outside the cell must lie strictly above it
/// in <=_L; anything else throws InternalError.
CellModule cell_module(const StructureConstantTable& table, const CellPartition& partition,
                       std::size_t left_cell_index);

/// Right cell module (w̲ acting on the right), obtained from the left cell of
/// inverses by transport along w ↦ w⁻¹.
CellModule right_cell_module(const StructureConstantTable& table, const CellPartition& partition,
                             std::size_t right_cell_index);

std::string cell_diagram_dot(const CellPartition& partition);

}  // namespace nimrep
