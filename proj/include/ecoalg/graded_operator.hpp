#pragma once

#include "ecoalg/chain_complex.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ecoalg {

/// Homogeneous operator K -> L^{⊗n} of fixed degree, stored as the image of
/// every source basis element (sparse). Arity 0 means a map to the ground ring;
/// its images use the empty word.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(ComplexPtr source, ComplexPtr target, int arity, int degree);

  static GradedOperator identity(const ComplexPtr& c);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }

  const TensorChain& image(int id) const { return images_.at(id); }
  /// Sets the image of a source basis element; checks arity and degree.
  void set_image(int id, TensorChain value);
  void add_to_image(int id, const Word& w, const Integer& coef);

  TensorChain apply(const Chain& c) const;

  bool is_zero() const;
  bool operator==(const GradedOperator& other) const;

  GradedOperator operator+(const GradedOperator& rhs) const;
  GradedOperator operator-(const GradedOperator& rhs) const;
  GradedOperator operator-() const;
  GradedOperator scaled(const Integer& k) const;

  /// Dense block from source degree d into target words of degree d + degree,
  /// in the order given by tensor_words(target, arity).
  IntMatrix block(int d) const;

  /// First source basis element on which the two operators differ, rendered.
  std::optional<std::string> first_difference(const GradedOperator& other) const;

  std::string render_image(int id) const;

 private:
  void check_compatible(const GradedOperator& rhs, const char* op) const;

  ComplexPtr source_;
  ComplexPtr target_;
  int arity_ = 1;
  int degree_ = 0;
  std::vector<TensorChain> images_;
};

/// (a_1 ⊗ ... ⊗ a_n) ∘ b. A null entry stands for the identity on b's target.
/// Sign: (a_1⊗...⊗a_n)(y_1⊗...⊗y_n) = (-1)^{Σ_{i<j} |a_j||y_i|} a_1(y_1)⊗...⊗a_n(y_n).
GradedOperator compose(const std::vector<const GradedOperator*>& outer, const GradedOperator& inner);

/// Substitution of a into tensor slot i (1-based) of b's output: (1^{i-1} ⊗ a ⊗ 1^{n-i}) ∘ b.
GradedOperator compose(const GradedOperator& a, const GradedOperator& b, int slot);

/// P_σ ∘ op, where P_σ moves tensor factor k to position σ(k) with the Koszul sign.
/// σ is given 0-based: sigma[k] is the new position of factor k.
GradedOperator permute(const std::vector<int>& sigma, const GradedOperator& op);

/// Koszul-signed permutation of a single word; returns the sign.
int permute_word(const ChainComplex& c, const std::vector<int>& sigma, const Word& w, Word& out);

/// The factor swap T on arity-2 operators: T∘op.
GradedOperator twist(const GradedOperator& op);

/// [∂, φ] = ∂∘φ - (-1)^{|φ|} φ∘∂.
GradedOperator commutator_with_boundary(const GradedOperator& op);

}  // namespace ecoalg
