#include "ecoalg/smith.hpp"

#include "ecoalg/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ecoalg {

namespace {

// Keeps M together with the four transformation matrices in step.
struct Reducer {
  IntMatrix M, U, U_inv, V, V_inv;

  explicit Reducer(const IntMatrix& m)
      : M(m),
        U(IntMatrix::identity(m.rows())),
        U_inv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        V_inv(IntMatrix::identity(m.cols())) {}

  // row[i] += q * row[t]
  void add_row(std::size_t i, std::size_t t, const Integer& q) {
    if (q == 0) return;
    M.add_row(i, t, q);
    U.add_row(i, t, q);
    U_inv.add_col(t, i, -q);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    M.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void negate_row(std::size_t r) {
    M.negate_row(r);
    U.negate_row(r);
    U_inv.negate_col(r);
  }
  // col[j] += q * col[t]
  void add_col(std::size_t j, std::size_t t, const Integer& q) {
    if (q == 0) return;
    M.add_col(j, t, q);
    V.add_col(j, t, q);
    V_inv.add_row(t, j, -q);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    M.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
};

bool find_pivot(const IntMatrix& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = k; r < m.rows(); ++r)
    for (std::size_t c = k; c < m.cols(); ++c) {
      const Integer& v = m(r, c);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!found || a < best) {
        best = a;
        pr = r;
        pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer red(m);
  IntMatrix& M = red.M;
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t k = 0;
  for (; k < limit; ++k) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(M, k, pr, pc)) break;
    red.swap_rows(k, pr);
    red.swap_cols(k, pc);
    for (;;) {
      bool dirty = false;
      for (std::size_t r = k + 1; r < M.rows(); ++r) {
        if (M(r, k) == 0) continue;
        red.add_row(r, k, -(M(r, k) / M(k, k)));
        if (M(r, k) != 0) dirty = true;
      }
      for (std::size_t c = k + 1; c < M.cols(); ++c) {
        if (M(k, c) == 0) continue;
        red.add_col(c, k, -(M(k, c) / M(k, k)));
        if (M(k, c) != 0) dirty = true;
      }
      if (dirty) {
        // Remainders in row k / column k are smaller than the pivot.
        pr = k;
        pc = k;
        Integer best = abs(M(k, k));
        for (std::size_t r = k + 1; r < M.rows(); ++r)
          if (M(r, k) != 0 && abs(M(r, k)) < best) best = abs(M(r, k)), pr = r, pc = k;
        for (std::size_t c = k + 1; c < M.cols(); ++c)
          if (M(k, c) != 0 && abs(M(k, c)) < best) best = abs(M(k, c)), pr = k, pc = c;
        red.swap_rows(k, pr);
        red.swap_cols(k, pc);
        continue;
      }
      // Row and column clear; enforce divisibility on the remaining block.
      bool fixed = false;
      for (std::size_t r = k + 1; r < M.rows() && !fixed; ++r)
        for (std::size_t c = k + 1; c < M.cols(); ++c)
          if (M(r, c) % M(k, k) != 0) {
            red.add_row(k, r, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (M(k, k) < 0) red.negate_row(k);
  }
  SmithForm out{std::move(red.M), std::move(red.U), std::move(red.U_inv), std::move(red.V), std::move(red.V_inv), k};
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  return snf.V.column_block(snf.rank, m.cols() - snf.rank);
}

IntMatrix saturation_basis(const IntMatrix& columns) {
  SmithForm snf = smith_normal_form(columns);
  return snf.U_inv.column_block(0, snf.rank);
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw ShapeMismatch("solve_integer: right-hand side length mismatch");
  SmithForm snf = smith_normal_form(m);
  // S * (V^-1 x) = U b
  std::vector<Integer> ub = snf.U.apply(b);
  std::vector<Integer> y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.S(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / snf.S(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V.apply(y);
}

bool in_column_span(const IntMatrix& columns, const std::vector<Integer>& v) {
  if (columns.cols() == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  return solve_integer(columns, v).has_value();
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

CokernelStructure cokernel_structure(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  CokernelStructure out;
  out.free_rank = m.rows() - snf.rank;
  for (const auto& d : snf.invariant_factors())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace ecoalg
