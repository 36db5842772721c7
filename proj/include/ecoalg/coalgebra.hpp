#pragma once

#include "ecoalg/graded_operator.hpp"
#include "ecoalg/operad.hpp"
#include "ecoalg/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace ecoalg {

/// Operators realizing fragment generators on one complex. Keys are canonical
/// generator names ("p", "unit", "m2_0", "m2_1", ..., "m3_1"). Reduced
/// structures have no "p".
struct CoalgebraStructure {
  ComplexPtr complex;
  std::map<std::string, GradedOperator> ops;
  bool homology_level = false;

  bool has(const std::string& gen) const { return ops.count(gen) > 0; }
  /// Throws InvalidArgument when the generator is not realized.
  const GradedOperator& op(const std::string& gen) const;
  /// Largest k with m2_k present.
  int max_cup() const;
};

/// Sends each vertex to 1 and everything else to 0 (arity 0).
GradedOperator counit(const ComplexPtr& chains);

/// Alexander-Whitney diagonal on normalized chains.
GradedOperator aw_diagonal(const SimplicialSet& x, const ComplexPtr& chains);

/// Cup-k coproduct Δ_k (k = 0 gives the Alexander-Whitney diagonal). On a
/// d-simplex it sums over subsets U of {0..d} of size d-k, split by the parity of
/// u minus its position in U.
GradedOperator cup_k_coproduct(const SimplicialSet& x, const ComplexPtr& chains, int k);

/// counit, unit, Δ_0..Δ_max_k and m3_1 = 0, verified before returning.
CoalgebraStructure chain_structure(const SimplicialSet& x, int max_k = 3);

/// Structure on the kernel of the counit for a complex with exactly one
/// vertex: the vertex is deleted and every word containing it is dropped.
/// Throws MultipleVertices.
CoalgebraStructure reduce(const CoalgebraStructure& c);

/// Where generators act. Operad vertices above a bimodule vertex act through
/// `source`, the bimodule vertex through `morphism`, and everything below it
/// through `target`. Without bimodule vertices only `source` is used.
struct Interpretation {
  const CoalgebraStructure* source = nullptr;
  const CoalgebraStructure* target = nullptr;
  const std::map<std::string, GradedOperator>* morphism = nullptr;
};

GradedOperator evaluate(const OperadElement& x, const Interpretation& in);
GradedOperator evaluate(const OperadElement& x, const CoalgebraStructure& c);

/// Checks the unit, the counit relations and [∂, g] = ∂g for every tabulated
/// generator present. Empty when everything holds.
std::vector<std::string> verify_structure(const CoalgebraStructure& c);

}  // namespace ecoalg
