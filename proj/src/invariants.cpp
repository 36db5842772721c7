#include "ecoalg/invariants.hpp"

#include "ecoalg/errors.hpp"
#include "ecoalg/smith.hpp"

#include <optional>
#include <sstream>

namespace ecoalg {

namespace {

std::size_t ipow(int m, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(m);
  return r;
}

IntVector column(const IntMatrix& a, std::size_t c) {
  IntVector v(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, c);
  return v;
}

IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix out(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = cols[c][r];
  return out;
}

bool is_zero_vector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

CokernelStructure FpAbelianGroup::structure() const {
  if (relations.cols() == 0) return CokernelStructure{rank, {}};
  return cokernel_structure(relations);
}

bool FpAbelianGroup::is_trivial() const {
  const auto s = structure();
  return s.free_rank == 0 && s.torsion.empty();
}

bool FpAbelianGroup::is_zero(const IntVector& v) const {
  if (v.size() != rank) throw ShapeMismatch("class representative has the wrong length");
  if (is_zero_vector(v)) return true;
  return relations.cols() > 0 && in_column_span(relations, v);
}

bool FpAbelianGroup::same_presentation(const FpAbelianGroup& other) const {
  if (rank != other.rank) return false;
  if (relations == other.relations) return true;
  for (std::size_t c = 0; c < relations.cols(); ++c)
    if (!other.is_zero(column(relations, c))) return false;
  for (std::size_t c = 0; c < other.relations.cols(); ++c)
    if (!is_zero(column(other.relations, c))) return false;
  return true;
}

std::string FpAbelianGroup::describe() const {
  const auto s = structure();
  std::vector<std::string> parts;
  if (s.free_rank == 1) parts.push_back("Z");
  if (s.free_rank > 1) parts.push_back("Z^" + std::to_string(s.free_rank));
  for (const auto& t : s.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

bool class_equals(const InvariantClass& x, const InvariantClass& y) {
  if (!x.group.same_presentation(y.group)) throw ShapeMismatch("classes live in different groups");
  IntVector d(x.representative.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = x.representative[i] - y.representative[i];
  return x.group.is_zero(d);
}

IntVector bracket(int m, const IntVector& x, int deg_x, const IntVector& y, int deg_y) {
  const std::size_t nx = ipow(m, deg_x), ny = ipow(m, deg_y);
  if (x.size() != nx || y.size() != ny) throw ShapeMismatch("bracket: vector lengths do not match the degrees");
  IntVector out(nx * ny, 0);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      out[i * ny + j] += x[i] * y[j];
      out[j * nx + i] -= y[j] * x[i];
    }
  return out;
}

LieLattice lie_lattice(int m) {
  if (m < 0) throw InvalidArgument("lie_lattice: negative rank");
  LieLattice out;
  out.m = m;
  auto unit = [m](int i) {
    IntVector e(m, 0);
    e[i] = 1;
    return e;
  };
  std::vector<IntVector> d2;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) d2.push_back(bracket(m, unit(i), 1, unit(j), 1));
  out.degree2 = from_columns(d2, ipow(m, 2));
  std::vector<IntVector> d3;
  for (int i = 0; i < m; ++i)
    for (const auto& b : d2) d3.push_back(bracket(m, unit(i), 1, b, 2));
  const IntMatrix span = from_columns(d3, ipow(m, 3));
  out.degree3 = span.cols() == 0 ? span : saturation_basis(span);
  return out;
}

Window window(const CoalgebraStructure& input) {
  const CoalgebraStructure s = input.complex->rank(0) > 0 ? reduce(input) : input;
  if (!s.complex->has_zero_differential()) throw InvalidArgument("invariants need a homology-level structure");
  const ChainComplex& H = *s.complex;
  Window w;
  const int o1 = H.offset(1), o2 = H.offset(2);
  const int m = static_cast<int>(H.rank(1));
  for (std::size_t i = 0; i < H.rank(1); ++i) w.h1.push_back(H.label(o1 + static_cast<int>(i)));
  for (std::size_t i = 0; i < H.rank(2); ++i) w.h2.push_back(H.label(o2 + static_cast<int>(i)));
  auto read = [&](const std::string& gen, int id, int len) {
    IntVector v(ipow(m, len), 0);
    if (!s.has(gen)) return v;
    for (const auto& [word, k] : s.op(gen).image(id)) {
      if (static_cast<int>(word.size()) != len) continue;
      bool in_h1 = true;
      std::size_t index = 0;
      for (int l : word) {
        in_h1 = in_h1 && H.degree(l) == 1;
        index = index * m + static_cast<std::size_t>(l - o1);
      }
      if (in_h1) v[index] += k;
    }
    return v;
  };
  for (std::size_t i = 0; i < H.rank(2); ++i) {
    w.m0.push_back(read("m2_0", o2 + static_cast<int>(i), 2));
    w.m3.push_back(read("m3_1", o2 + static_cast<int>(i), 3));
  }
  for (std::size_t i = 0; i < H.rank(1); ++i) w.m1.push_back(read("m2_1", o1 + static_cast<int>(i), 2));
  return w;
}

std::vector<IntVector> delta_map(const Window& w, const std::vector<IntVector>& nu) {
  const int m = static_cast<int>(w.h1.size());
  if (nu.size() != w.h1.size()) throw ShapeMismatch("delta_map: one image per H1 generator expected");
  for (const auto& v : nu)
    if (v.size() != ipow(m, 2)) throw ShapeMismatch("delta_map: images must lie in H1⊗H1");
  std::vector<IntVector> out;
  const std::size_t m2 = ipow(m, 2);
  for (const auto& w0 : w.m0) {
    IntVector img(ipow(m, 3), 0);
    for (std::size_t idx = 0; idx < m2; ++idx) {
      if (w0[idx] == 0) continue;
      const std::size_t x = idx / m, y = idx % m;
      // ν(x)⊗y + x⊗ν(y)
      for (std::size_t t = 0; t < m2; ++t) {
        img[t * m + y] += w0[idx] * nu[x][t];
        img[x * m2 + t] += w0[idx] * nu[y][t];
      }
    }
    out.push_back(std::move(img));
  }
  return out;
}

InvariantClass sq_dual_invariant(const Window& w) {
  const int m = static_cast<int>(w.h1.size());
  // Symmetric basis: E_jj, and E_jk + E_kj for j < k.
  std::vector<std::pair<int, int>> sym;
  for (int j = 0; j < m; ++j)
    for (int k = j; k < m; ++k) sym.emplace_back(j, k);
  const std::size_t per = sym.size();
  InvariantClass out;
  out.group.rank = static_cast<std::size_t>(m) * per;
  out.representative.assign(out.group.rank, 0);
  std::vector<IntVector> rel;
  for (int i = 0; i < m; ++i) {
    const IntVector& a = w.m1[i];
    for (std::size_t q = 0; q < per; ++q) {
      const auto [j, k] = sym[q];
      if (a[j * m + k] != a[k * m + j])
        throw VerificationFailed("m2_1 on " + w.h1[i] + " is not symmetric in H1⊗H1");
      out.representative[i * per + q] = a[j * m + k];
      out.coordinates.push_back(w.h1[i] + " -> " + w.h1[j] + "*" + w.h1[k] + (j == k ? "" : " + " + w.h1[k] + "*" + w.h1[j]));
      // F - σF for F = E_jk at source i (σ carries the Koszul sign on H1⊗H1).
      IntVector r(out.group.rank, 0);
      r[i * per + q] = j == k ? 2 : 1;
      rel.push_back(std::move(r));
    }
  }
  out.group.relations = from_columns(rel, out.group.rank);
  return out;
}

InvariantClass sq_dual_invariant(const CoalgebraStructure& s) { return sq_dual_invariant(window(s)); }
InvariantClass sq_dual_invariant(const TransferPackage& p) { return sq_dual_invariant(p.target); }

InvariantClass massey_invariant(const Window& w) {
  const int m = static_cast<int>(w.h1.size());
  const std::size_t r = w.h2.size();
  const LieLattice lie = lie_lattice(m);
  const std::size_t l3 = lie.degree3.cols();
  auto coords = [&](const IntVector& v) -> std::optional<IntVector> {
    if (l3 == 0) return is_zero_vector(v) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
    return solve_integer(lie.degree3, v);
  };

  InvariantClass out;
  out.group.rank = r * l3;
  out.representative.assign(out.group.rank, 0);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t b = 0; b < l3; ++b) {
      std::ostringstream label;
      label << w.h2[s] << " -> L3[" << b << "]";
      out.coordinates.push_back(label.str());
    }
  for (std::size_t s = 0; s < r; ++s) {
    auto c = coords(w.m3[s]);
    if (!c) throw NotNormalizable(w.h2[s]);
    for (std::size_t b = 0; b < l3; ++b) out.representative[s * l3 + b] = (*c)[b];
  }

  std::vector<IntVector> rel;
  // [H1, m0(H2)] in every H2 block.
  for (const auto& w0 : w.m0) {
    if (is_zero_vector(w0)) continue;
    for (int i = 0; i < m; ++i) {
      IntVector e(m, 0);
      e[i] = 1;
      auto c = coords(bracket(m, e, 1, w0, 2));
      if (!c) throw VerificationFailed("m2_0 on H2 does not land in [H1, H1]");
      for (std::size_t s = 0; s < r; ++s) {
        IntVector col(out.group.rank, 0);
        for (std::size_t b = 0; b < l3; ++b) col[s * l3 + b] = (*c)[b];
        rel.push_back(std::move(col));
      }
    }
  }
  // δ of a basis of Hom(H1, L2).
  for (int i = 0; i < m; ++i)
    for (std::size_t b = 0; b < lie.degree2.cols(); ++b) {
      std::vector<IntVector> nu(m, IntVector(ipow(m, 2), 0));
      nu[i] = column(lie.degree2, b);
      const auto d = delta_map(w, nu);
      IntVector col(out.group.rank, 0);
      bool any = false;
      for (std::size_t s = 0; s < r; ++s) {
        auto c = coords(d[s]);
        if (!c) throw VerificationFailed("delta image leaves the Lie lattice");
        for (std::size_t q = 0; q < l3; ++q) {
          col[s * l3 + q] = (*c)[q];
          any = any || (*c)[q] != 0;
        }
      }
      if (any) rel.push_back(std::move(col));
    }
  out.group.relations = from_columns(rel, out.group.rank);
  return out;
}

InvariantClass massey_invariant(const CoalgebraStructure& s) { return massey_invariant(window(s)); }
InvariantClass massey_invariant(const TransferPackage& p) { return massey_invariant(p.target); }

}  // namespace ecoalg
