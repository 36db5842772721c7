#pragma once

#include "ecoalg/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ecoalg {

/// Generators of the fragment. Operad side: p (arity 0), m2_k (k >= 0),
/// m3_k (k >= 1), d_n (n >= 4; d_2 is m2_0 and d_3 is m3_1). Bimodule side:
/// f0_0, f1_0, f2_k (k >= 1), f3_k (k >= 2). The unit is the bare leaf.
struct GeneratorInfo {
  std::string name;  // canonical spelling
  int arity = 0;
  int degree = 0;
  bool bimodule = false;
};

/// Canonical info for a generator name, accepting the aliases d2, d3, d_2, d_3, d4, ...
/// Returns nothing for names outside the table.
std::optional<GeneratorInfo> generator_info(const std::string& name);

/// Planar tree. A node with an empty generator name is a leaf (an input slot).
/// The value of a node is (c_1 ⊗ ... ⊗ c_n) ∘ root, so the root acts first.
struct Tree {
  std::string gen;
  std::vector<Tree> children;

  static Tree leaf() { return Tree{}; }
  static Tree node(const std::string& gen);  // generator with leaf children
  bool is_leaf() const { return gen.empty(); }
  int leaves() const;
  int degree() const;
  bool has_bimodule_vertex() const;
};

int compare(const Tree& a, const Tree& b);
inline bool operator<(const Tree& a, const Tree& b) { return compare(a, b) < 0; }
inline bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }

/// Tree with leaf permutation: the value is P_σ ∘ value(tree), where sigma[k]
/// (0-based) is the output position of planar leaf k.
struct Monomial {
  Tree tree;
  std::vector<int> sigma;

  bool operator<(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return tree == o.tree && sigma == o.sigma; }
};

class OperadElement {
 public:
  OperadElement(int arity, int degree) : arity_(arity), degree_(degree) {}

  static OperadElement generator(const std::string& name);
  static OperadElement unit();
  static OperadElement from_monomial(Monomial m, const Integer& coef = 1);

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_bimodule() const;
  const std::map<Monomial, Integer>& terms() const { return terms_; }

  void add(const Monomial& m, const Integer& coef);
  OperadElement operator+(const OperadElement& o) const;
  OperadElement operator-(const OperadElement& o) const;
  OperadElement operator-() const;
  OperadElement scaled(const Integer& k) const;
  bool operator==(const OperadElement& o) const;

  /// e.g. "m2_0 o1 m2_0 - m2_0 o2 m2_0"
  std::string render() const;

 private:
  void check_shape(const OperadElement& o, const char* op) const;

  int arity_;
  int degree_;
  std::map<Monomial, Integer> terms_;
};

/// x ∘_i y: x is substituted into input slot i (1-based) of y, so y acts first.
/// A bimodule element substituted into an operad element puts f1_0 on every
/// other slot.
OperadElement compose_i(const OperadElement& x, const OperadElement& y, int i);

/// (x_1, ..., x_n) ∘ y.
OperadElement compose_all(const std::vector<OperadElement>& xs, const OperadElement& y);

/// Left action of σ (0-based images) on the output slots.
OperadElement act(const std::vector<int>& sigma, const OperadElement& x);

/// Tabulated generator differentials extended as a derivation.
OperadElement differential(const OperadElement& x);

/// The tabulated differential of one generator.
OperadElement generator_differential(const std::string& name);

/// Every generator of the table within the bounds (m2_k, m3_k, f2_k, f3_k with
/// degree <= max_degree and arity <= max_arity; d_n for n <= max_d).
std::vector<std::string> fragment_generators(int max_arity, int max_degree, int max_d);

/// Checks ∂∂g = 0 for every generator in range; returns one line per violation.
std::vector<std::string> check_d_squared(int max_arity, int max_degree, int max_d = 5);

/// Composition of permutations (a ∘ b)(k) = a[b[k]].
std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ecoalg
