#pragma once

#include "ecoalg/chain_complex.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ecoalg {

/// Face of a nondegenerate simplex: s_{i1} ... s_{ik} applied to a
/// nondegenerate simplex, with i1 > i2 > ... > ik.
struct FaceRef {
  std::vector<int> degeneracies;
  int target = -1;  // index into the simplex list of the target dimension

  bool degenerate() const { return !degeneracies.empty(); }
  bool operator==(const FaceRef&) const = default;
  auto operator<=>(const FaceRef&) const = default;
};

/// Rewrites an arbitrary word s_{j1} s_{j2} ... into strictly decreasing form.
std::vector<int> normalize_degeneracies(std::vector<int> word);

struct Simplex {
  std::string name;
  std::vector<FaceRef> faces;  // empty in dimension 0
};

struct ValidationIssue {
  enum class Kind { Dangling, BadDimension, BadDegeneracy, IdentityViolation, DuplicateName, FaceCount };
  Kind kind;
  std::string simplex;
  int i = -1;
  int j = -1;
  std::string message;
};

class SimplicialSet {
 public:
  SimplicialSet() = default;
  explicit SimplicialSet(std::vector<std::vector<Simplex>> by_dim) : by_dim_(std::move(by_dim)) {}

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int d) const { return d >= 0 && d <= dimension() ? by_dim_[d].size() : 0; }
  std::vector<std::size_t> counts() const;
  const Simplex& simplex(int d, int idx) const { return by_dim_.at(d).at(idx); }
  const std::vector<std::vector<Simplex>>& simplices() const { return by_dim_; }
  int find(int d, const std::string& name) const;

  /// d_i applied to a face reference of dimension m (target dim + degeneracy count).
  FaceRef face(int m, const FaceRef& x, int i) const;
  /// d_i of the nondegenerate simplex (d, idx).
  FaceRef face(int d, int idx, int i) const;

  std::vector<ValidationIssue> validate() const;
  /// Throws ValidationError listing every problem found.
  void require_valid() const;

  bool operator==(const SimplicialSet& other) const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

/// A simplex reference of known dimension: degeneracies applied to (target_dim, target).
struct SimplexRef {
  int dim = 0;
  FaceRef ref;
  int target_dim() const { return dim - static_cast<int>(ref.degeneracies.size()); }
};

/// Front face [0..i] and back face [i..d] of a nondegenerate d-simplex.
struct FrontBack {
  SimplexRef front;
  SimplexRef back;
};
FrontBack front_back_faces(const SimplicialSet& x, int d, int idx, int i);

/// The face of (d, idx) spanned by the given sorted vertex positions.
SimplexRef face_on_vertices(const SimplicialSet& x, int d, int idx, const std::vector<int>& vertices);

SimplicialSet parse_sset(const std::string& text);
std::string serialize_sset(const SimplicialSet& x);

/// Normalized chains: one basis element per nondegenerate simplex, labelled by name.
ChainComplex normalized_chains(const SimplicialSet& x);

/// Global basis id of the nondegenerate simplex (d, idx) in normalized_chains(x).
int chain_id(const SimplicialSet& x, int d, int idx);

std::string describe(const ValidationIssue& issue);

}  // namespace ecoalg
