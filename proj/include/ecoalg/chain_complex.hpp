#pragma once

#include "ecoalg/matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ecoalg {

/// Sparse chain: basis id -> coefficient, zero coefficients never stored.
using Chain = std::map<int, Integer>;
/// A basis word of a tensor power; the empty word is the unit of arity 0.
using Word = std::vector<int>;
using TensorChain = std::map<Word, Integer>;

void add_term(Chain& c, int id, const Integer& coef);
void add_term(TensorChain& c, const Word& w, const Integer& coef);
void add_into(TensorChain& acc, const TensorChain& c, const Integer& scale = 1);

/// Bounded, non-negatively graded complex of free modules with chosen bases.
/// Basis elements get global ids ordered by degree.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// labels[d] lists the basis of degree d; boundary[id] is the boundary of basis id.
  ChainComplex(std::vector<std::vector<std::string>> labels, std::vector<Chain> boundary);
  /// Complex with zero differential.
  static ChainComplex with_zero_differential(std::vector<std::vector<std::string>> labels);

  int top_degree() const { return static_cast<int>(labels_.size()) - 1; }
  std::size_t rank(int d) const { return d >= 0 && d <= top_degree() ? labels_[d].size() : 0; }
  std::size_t size() const { return degree_of_.size(); }
  int offset(int d) const;
  int degree(int id) const { return degree_of_.at(id); }
  const std::string& label(int id) const { return flat_labels_.at(id); }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  int find(const std::string& label) const;  // -1 if absent
  const Chain& boundary(int id) const { return boundary_.at(id); }
  bool has_zero_differential() const;

  /// Dense matrix of the boundary from degree d to d-1 (rank(d-1) x rank(d)).
  IntMatrix boundary_matrix(int d) const;

  Chain boundary_of(const Chain& c) const;
  std::vector<Integer> to_vector(const Chain& c, int d) const;
  Chain from_vector(const std::vector<Integer>& v, int d) const;

  /// Word degree: sum of letter degrees.
  int degree(const Word& w) const;
  /// Koszul-signed differential of a tensor word.
  TensorChain boundary_of(const Word& w) const;
  TensorChain boundary_of(const TensorChain& c) const;

  bool operator==(const ChainComplex& other) const;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::string> flat_labels_;
  std::vector<int> degree_of_;
  std::vector<int> offsets_;
  std::vector<Chain> boundary_;
  std::map<std::string, int> by_label_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// All words of length n, ordered by total degree then lexicographically.
std::vector<Word> tensor_words(const ChainComplex& c, int n);

/// C^{⊗n}, basis labels joined with "*"; the differential is the Koszul-signed sum.
ChainComplex tensor_complex(const ChainComplex& c, int n);

/// Koszul sign of (f⊗g)(x⊗y) = (-1)^{|g||x|} f(x)⊗g(y), as ±1.
inline int koszul(long a, long b) { return ((a * b) % 2 == 0) ? 1 : -1; }

std::string render_word(const ChainComplex& c, const Word& w);
std::string render(const ChainComplex& c, const TensorChain& t);
std::string render(const ChainComplex& c, const Chain& t);

}  // namespace ecoalg
