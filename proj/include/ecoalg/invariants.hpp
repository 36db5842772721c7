#pragma once

#include "ecoalg/transfer.hpp"

#include <string>
#include <vector>

namespace ecoalg {

using IntVector = std::vector<Integer>;

/// Z^rank modulo the column span of `relations`.
struct FpAbelianGroup {
  std::size_t rank = 0;
  IntMatrix relations;

  CokernelStructure structure() const;
  bool is_trivial() const;
  /// Whether v lies in the relation span.
  bool is_zero(const IntVector& v) const;
  /// Same ambient rank and the same relation span.
  bool same_presentation(const FpAbelianGroup& other) const;
  /// e.g. "0", "Z^2", "Z/2 + Z/2", "Z + Z/3".
  std::string describe() const;
};

struct InvariantClass {
  FpAbelianGroup group;
  IntVector representative;
  std::vector<std::string> coordinates;  // one label per ambient coordinate

  bool is_zero() const { return group.is_zero(representative); }
};

/// Throws ShapeMismatch when the presentations differ.
bool class_equals(const InvariantClass& x, const InvariantClass& y);

/// Brackets inside the ungraded tensor powers of Z^m; a word (i, j, k) has
/// index (i*m + j)*m + k.
struct LieLattice {
  int m = 0;
  IntMatrix degree2;  // m^2 x C(m,2), columns [e_i, e_j] for i < j
  IntMatrix degree3;  // m^3 x m(m^2-1)/3, a basis of the saturated span of [e_i, [e_j, e_k]]
};

LieLattice lie_lattice(int m);

IntVector bracket(int m, const IntVector& x, int deg_x, const IntVector& y, int deg_y);

/// The ungraded H1/H2 window of a reduced homology-level structure.
struct Window {
  std::vector<std::string> h1;
  std::vector<std::string> h2;
  std::vector<IntVector> m0;  // per H2 generator, in Z^{m^2}
  std::vector<IntVector> m1;  // per H1 generator, in Z^{m^2}
  std::vector<IntVector> m3;  // per H2 generator, in Z^{m^3}
};

/// Reads the window, reducing first when the structure still has its vertex.
Window window(const CoalgebraStructure& s);

/// δν(s) = Σ ν(x)⊗y + x⊗ν(y) over m0(s) = Σ x⊗y; ν given per H1 generator in Z^{m^2}.
std::vector<IntVector> delta_map(const Window& w, const std::vector<IntVector>& nu);

/// Class of the H1 -> H1⊗H1 part of m2_1 in Hom(H1, ker(1+σ)) / {F - σF}.
/// Throws VerificationFailed when that part is not symmetric.
InvariantClass sq_dual_invariant(const Window& w);
InvariantClass sq_dual_invariant(const CoalgebraStructure& s);
InvariantClass sq_dual_invariant(const TransferPackage& p);

/// Class of the H2 -> H1^{⊗3} part μ of m3_1 in
/// Hom(H2, L3 / [H1, m0(H2)]) / δ Hom(H1, L2). Throws NotNormalizable naming the
/// first H2 generator whose image is outside L3 + [H1, m0(H2)].
InvariantClass massey_invariant(const Window& w);
InvariantClass massey_invariant(const CoalgebraStructure& s);
InvariantClass massey_invariant(const TransferPackage& p);

}  // namespace ecoalg
