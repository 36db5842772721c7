#pragma once
// Independent reference computations used only by the tests. None of these
// call into the Smith normal form code.

#include "ecoalg/chain_complex.hpp"
#include "ecoalg/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using ecoalg::Integer;
using ecoalg::IntMatrix;

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Cofactor-free determinant by permutation expansion (tiny matrices only).
inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    Integer term = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline void subsets(int n, int k, std::function<void(const std::vector<int>&)> fn) {
  std::vector<int> s;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(s.size()) == k) {
      fn(s);
      return;
    }
    for (int i = start; i < n; ++i) {
      s.push_back(i);
      rec(i + 1);
      s.pop_back();
    }
  };
  rec(0);
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  std::vector<Integer> divisors{1};
  for (int k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    subsets(r, k, [&](const std::vector<int>& rows) {
      subsets(c, k, [&](const std::vector<int>& cols) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        g = gcd(g, leibniz_det(sub));
      });
    });
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

// Rank over Q by fraction Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& m) {
  using Q = boost::rational<Integer>;
  std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Q(m(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == Q(0)) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == Q(0)) continue;
      Q f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Rank over the prime field F_p.
inline std::size_t mod_rank(const IntMatrix& m, long p) {
  std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer v = m(i, j) % p;
      if (v < 0) v += p;
      a[i][j] = v.convert_to<long>();
    }
  auto inv = [&](long x) {
    long r = 1, e = p - 2, b = x % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const long iv = inv(a[rank][col]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const long f = a[i][col] * iv % p;
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Betti number over a field: dim ker ∂_d - rank ∂_{d+1}.
inline std::size_t field_betti(const ecoalg::ChainComplex& c, int d, long p) {
  auto rk = [&](int e) { return p == 0 ? rational_rank(c.boundary_matrix(e)) : mod_rank(c.boundary_matrix(e), p); };
  return c.rank(d) - rk(d) - rk(d + 1);
}

// Random unimodular n x n matrix and its inverse, built from elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix m = IntMatrix::identity(n), inv = IntMatrix::identity(n);
  if (n < 2) return {m, inv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int c = coef(rng);
    m.add_row(i, j, c);
    inv.add_col(j, i, -c);
  }
  return {m, inv};
}

// A complex with prescribed homology, disguised by random changes of basis.
// free[d] copies of Z in degree d; each pair (d, k) adds Z --k--> Z from
// degree d+1 to degree d (k = 1 acyclic, k > 1 torsion in degree d).
struct PlantedComplex {
  ecoalg::ChainComplex complex;
  std::vector<std::size_t> betti;
  std::vector<std::vector<Integer>> torsion;
};

inline PlantedComplex planted_complex(std::mt19937_64& rng, const std::vector<std::size_t>& free,
                                      const std::vector<std::pair<int, long>>& pairs) {
  const int top = static_cast<int>(free.size()) - 1;
  std::vector<std::size_t> rank(free.begin(), free.end());
  struct Cell { int d; int index; };
  std::vector<std::pair<Cell, Cell>> links;  // (upper, lower)
  std::vector<long> coefs;
  for (auto [d, k] : pairs) {
    Cell lo{d, static_cast<int>(rank[d]++)};
    Cell up{d + 1, static_cast<int>(rank[d + 1]++)};
    links.push_back({up, lo});
    coefs.push_back(k);
  }
  std::vector<IntMatrix> bd(top + 2);
  for (int d = 0; d <= top + 1; ++d) bd[d] = IntMatrix(d >= 1 ? rank[d - 1] : 0, d <= top ? rank[d] : 0);
  for (std::size_t i = 0; i < links.size(); ++i) bd[links[i].first.d](links[i].second.index, links[i].first.index) = coefs[i];
  std::vector<std::pair<IntMatrix, IntMatrix>> q;
  for (int d = 0; d <= top; ++d) q.push_back(random_unimodular(rng, rank[d]));
  std::vector<std::vector<std::string>> labels(top + 1);
  for (int d = 0; d <= top; ++d)
    for (std::size_t i = 0; i < rank[d]; ++i) labels[d].push_back("e" + std::to_string(d) + "_" + std::to_string(i));
  std::vector<ecoalg::Chain> boundary;
  int offset_below = 0;
  for (int d = 0; d <= top; ++d) {
    IntMatrix m = d == 0 ? IntMatrix(0, rank[0]) : q[d - 1].first * bd[d] * q[d].second;
    for (std::size_t j = 0; j < rank[d]; ++j) {
      ecoalg::Chain b;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, j) != 0) b[offset_below + static_cast<int>(i)] = m(i, j);
      boundary.push_back(b);
    }
    if (d >= 1) offset_below += static_cast<int>(rank[d - 1]);
  }
  PlantedComplex out{ecoalg::ChainComplex(labels, boundary), std::vector<std::size_t>(free.begin(), free.end()),
                     std::vector<std::vector<Integer>>(top + 1)};
  for (std::size_t i = 0; i < links.size(); ++i)
    if (coefs[i] > 1) out.torsion[links[i].second.d].push_back(coefs[i]);
  for (auto& t : out.torsion) std::sort(t.begin(), t.end());
  return out;
}

}  // namespace oracle
