#pragma once

#include "ecoalg/graded_operator.hpp"
#include "ecoalg/smith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ecoalg {

struct HomologyDegree {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;       // each >= 2, each dividing the next
  std::vector<Chain> representatives;  // cycles representing a basis of the free part
};

struct HomologyReport {
  std::vector<HomologyDegree> degrees;

  bool torsion_free() const;
  std::vector<std::size_t> ranks() const;
};

HomologyReport homology(const ChainComplex& c);

/// Strong deformation retraction of K onto its homology H (zero differential):
/// fg = id, gf = id + ∂h + h∂, h² = 0, fh = 0, hg = 0.
struct SDR {
  ComplexPtr K;
  ComplexPtr H;
  GradedOperator f;  // K -> H
  GradedOperator g;  // H -> K
  GradedOperator h;  // K -> K, degree +1
};

/// Splits each degree as B ⊕ H ⊕ A by Smith normal form. A nonzero seed picks
/// different (but equally valid) representatives and complements, keeping the
/// homology basis and its labels fixed. Throws TorsionPresent.
SDR build_sdr(const ComplexPtr& c, std::uint64_t seed = 0);

/// Empty when all five identities hold exactly.
std::vector<std::string> verify_sdr(const SDR& r);

}  // namespace ecoalg
