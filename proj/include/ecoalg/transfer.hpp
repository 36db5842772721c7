#pragma once

#include "ecoalg/coalgebra.hpp"
#include "ecoalg/homology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ecoalg {

/// A chain-level structure moved onto homology along an SDR, together with the
/// morphism components F_w : K -> H^{⊗n} (keys f0_0, f1_0, f2_1, f2_2, f3_2).
struct TransferPackage {
  CoalgebraStructure source;
  SDR sdr;
  CoalgebraStructure target;
  std::map<std::string, GradedOperator> morphism;
};

/// SDR of a zero-differential complex onto itself with h = 0.
SDR identity_sdr(const ComplexPtr& c);

/// Transfers m2_0, m2_1, m2_2 and m3_1 (as far as the source provides m2_k):
///   m2_k = (f⊗f) Δ_k g,   F2_{k+1} = (-1)^k (f⊗f) Δ_k h,
///   m3_1 = f^{⊗3} X g,    F3_2 = -f^{⊗3} X h,   X = (Δ_0 h ⊗ 1) Δ_0 - (1 ⊗ Δ_0 h) Δ_0.
/// Throws VerificationFailed naming the first violated relation.
TransferPackage transfer(const CoalgebraStructure& c, const SDR& r);

/// Every package invariant as an exact identity; empty when all hold.
std::vector<std::string> verify_relations(const TransferPackage& p);

struct StructureComparison {
  /// q minus p for m2_1, m2_2 and m3_1 (those present in both).
  std::map<std::string, GradedOperator> differences;
  /// Some F̂ : H -> H⊗H of degree 1 with D(m2_1) = F̂ - σF̂.
  std::optional<GradedOperator> witness;
  bool k1_solvable = false;
  /// Whether one F̂ also satisfies
  /// D(m3_1) = m2_0 o1 F̂ - m2_0 o2 F̂ + F̂ o1 m2_0 - F̂ o2 m2_0.
  bool arity3_solvable = false;
  std::string message;
};

/// Compares two packages over the same homology basis with equal m2_0.
/// Throws ShapeMismatch on a basis mismatch and VerificationFailed when m2_0 differs.
StructureComparison compare_structures(const TransferPackage& p, const TransferPackage& q);

/// Same comparison for bare homology-level structures.
StructureComparison compare_structures(const CoalgebraStructure& p, const CoalgebraStructure& q);

}  // namespace ecoalg
