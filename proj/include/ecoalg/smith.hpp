#pragma once

#include "ecoalg/matrix.hpp"

#include <optional>
#include <vector>

namespace ecoalg {

/// U * M * V = S with U, V unimodular and S diagonal, each diagonal entry
/// dividing the next. The inverses of U and V are carried along because the
/// homology splitting needs both directions of every change of basis.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  IntMatrix V_inv;
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Columns spanning the integer kernel of m (a basis of a saturated lattice).
IntMatrix kernel_basis(const IntMatrix& m);

/// Basis of the saturation (Q-span intersected with Z^n) of the column span.
IntMatrix saturation_basis(const IntMatrix& columns);

/// An integer solution x of m * x = b, or nothing if b is outside the image.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b);

/// Whether v lies in the Z-span of the columns.
bool in_column_span(const IntMatrix& columns, const std::vector<Integer>& v);

/// Rank over Q.
std::size_t matrix_rank(const IntMatrix& m);

/// Structure of coker(m) = Z^rows / im(m): free rank and torsion coefficients (> 1).
struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};
CokernelStructure cokernel_structure(const IntMatrix& m);

}  // namespace ecoalg
