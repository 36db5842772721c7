#pragma once

#include "ecoalg/coalgebra.hpp"

#include <string>
#include <vector>

namespace ecoalg {

/// Sign convention for extending D over words. `Shifted` uses the degrees of
/// the desuspended letters; `Unshifted` is the wrong choice and exists to
/// exercise the D² check.
enum class CobarSigns { Shifted, Unshifted };

/// Cobar complex of a reduced structure, cut at word length N, in total
/// degrees 0, 1 and 2. Letters are basis elements x of the reduced complex
/// with degree |x| - 1. On one letter
///   D[x] = -[∂x] + Σ (-1)^{|x'|} [x'|x''],  Δ̃_0(x) = Σ x' ⊗ x'',
/// and D acts on words as a derivation. Terms longer than N are dropped.
struct TruncatedCobar {
  CoalgebraStructure reduced;
  int max_length = 0;
  CobarSigns signs = CobarSigns::Shifted;
  /// words[d]: basis of total degree d, ordered by length then lexicographically.
  std::vector<std::vector<Word>> words;
  /// differential[d]: matrix of D from degree d to d - 1 (index 0 unused).
  std::vector<IntMatrix> differential;

  int letter_degree(int letter) const { return reduced.complex->degree(letter) - 1; }
};

/// Accepts a reduced structure, or a one-vertex structure that is reduced first.
/// Throws MultipleVertices, or InvalidArgument for N < 1 or a nonzero m3_1.
TruncatedCobar build_cobar(const CoalgebraStructure& c, int max_length, CobarSigns signs = CobarSigns::Shifted);

/// Word-length graded piece of H_0.
struct GradedPiece {
  int length = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

/// Pieces for lengths 0 .. N-1.
std::vector<GradedPiece> gr_h0(const TruncatedCobar& t);
std::vector<std::size_t> gr_h0_ranks(const TruncatedCobar& t);

/// D∘D = 0 on degree 2 words, in target lengths up to N - 1. One line per violation.
std::vector<std::string> check_d_squared_cobar(const TruncatedCobar& t);

}  // namespace ecoalg
