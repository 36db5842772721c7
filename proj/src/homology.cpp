#include "ecoalg/homology.hpp"

#include "ecoalg/errors.hpp"

#include <random>

namespace ecoalg {

bool HomologyReport::torsion_free() const {
  for (const auto& d : degrees)
    if (!d.torsion.empty()) return false;
  return true;
}

std::vector<std::size_t> HomologyReport::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.free_rank);
  return out;
}

namespace {

struct DegreeData {
  SmithForm snf;  // of ∂_d : C_d -> C_{d-1}
  IntMatrix Z;    // cycles, columns
  IntMatrix A;    // complement mapped isomorphically onto boundaries below
};

std::vector<DegreeData> analyse(const ChainComplex& c) {
  std::vector<DegreeData> out;
  for (int d = 0; d <= c.top_degree() + 1; ++d) {
    DegreeData dd;
    dd.snf = smith_normal_form(c.boundary_matrix(d));
    const std::size_t n = c.rank(d), r = dd.snf.rank;
    dd.Z = dd.snf.V.column_block(r, n - r);
    dd.A = dd.snf.V.column_block(0, r);
    out.push_back(std::move(dd));
  }
  return out;
}

// Boundaries from degree d+1 written in the cycle coordinates of degree d.
IntMatrix boundaries_in_cycle_coords(const ChainComplex& c, const std::vector<DegreeData>& data, int d) {
  const DegreeData& dd = data[d];
  const std::size_t r = dd.snf.rank, n = c.rank(d);
  return dd.snf.V_inv.row_block(r, n - r) * c.boundary_matrix(d + 1);
}

Chain column_chain(const ChainComplex& c, const IntMatrix& m, std::size_t col, int d) {
  return c.from_vector(m.column(col), d);
}

std::string homology_label(const ChainComplex& c, const Chain& rep, int d, std::size_t i) {
  if (rep.size() == 1 && rep.begin()->second == 1) return c.label(rep.begin()->first);
  return "h" + std::to_string(d) + "_" + std::to_string(i);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> dist(-2, 2);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

}  // namespace

HomologyReport homology(const ChainComplex& c) {
  HomologyReport report;
  auto data = analyse(c);
  for (int d = 0; d <= c.top_degree(); ++d) {
    HomologyDegree hd;
    hd.degree = d;
    IntMatrix cm = boundaries_in_cycle_coords(c, data, d);
    SmithForm s = smith_normal_form(cm);
    hd.free_rank = cm.rows() - s.rank;
    for (const auto& f : s.invariant_factors())
      if (f > 1) hd.torsion.push_back(f);
    IntMatrix reps = data[d].Z * s.U_inv.column_block(s.rank, hd.free_rank);
    for (std::size_t i = 0; i < hd.free_rank; ++i) hd.representatives.push_back(column_chain(c, reps, i, d));
    report.degrees.push_back(std::move(hd));
  }
  return report;
}

SDR build_sdr(const ComplexPtr& cp, std::uint64_t seed) {
  const ChainComplex& c = *cp;
  auto data = analyse(c);
  const int top = c.top_degree();
  std::mt19937_64 rng(seed);

  std::vector<IntMatrix> Bgens(top + 1), Hreps(top + 1), A(top + 2);
  std::vector<std::vector<std::string>> hlabels(top + 1);
  for (int d = 0; d <= top; ++d) {
    const SmithForm& above = data[d + 1].snf;
    for (const auto& f : above.invariant_factors())
      if (f != 1) throw TorsionPresent(d, f.str());
    Bgens[d] = above.U_inv.column_block(0, above.rank);
    IntMatrix cm = boundaries_in_cycle_coords(c, data, d);
    SmithForm s = smith_normal_form(cm);
    for (const auto& f : s.invariant_factors())
      if (f != 1) throw TorsionPresent(d, f.str());
    const std::size_t hrank = cm.rows() - s.rank;
    Hreps[d] = data[d].Z * s.U_inv.column_block(s.rank, hrank);
    for (std::size_t i = 0; i < hrank; ++i)
      hlabels[d].push_back(homology_label(c, column_chain(c, Hreps[d], i, d), d, i));
  }
  for (int d = 0; d <= top + 1; ++d) A[d] = data[d].A;
  if (seed != 0) {
    for (int d = 0; d <= top; ++d) {
      if (Bgens[d].cols() > 0 && Hreps[d].cols() > 0)
        Hreps[d] = Hreps[d] + Bgens[d] * random_matrix(rng, Bgens[d].cols(), Hreps[d].cols());
      if (data[d].Z.cols() > 0 && A[d].cols() > 0)
        A[d] = A[d] + data[d].Z * random_matrix(rng, data[d].Z.cols(), A[d].cols());
    }
  }

  auto H = std::make_shared<const ChainComplex>(ChainComplex::with_zero_differential(hlabels));
  SDR r{cp, H, GradedOperator(cp, H, 1, 0), GradedOperator(H, cp, 1, 0), GradedOperator(cp, cp, 1, 1)};
  for (int d = 0; d <= top; ++d) {
    const std::size_t n = c.rank(d), nb = Bgens[d].cols(), nh = Hreps[d].cols();
    IntMatrix P = IntMatrix::hstack({Bgens[d], Hreps[d], A[d]}, n);
    if (P.cols() != n) throw VerificationFailed("homology splitting has the wrong size in degree " + std::to_string(d));
    SmithForm ps = smith_normal_form(P);
    for (const auto& f : ps.invariant_factors())
      if (f != 1 || ps.rank != n)
        throw VerificationFailed("homology splitting is not unimodular in degree " + std::to_string(d));
    IntMatrix Pinv = ps.V * ps.U;
    const IntMatrix& Aup = A[d + 1];
    for (std::size_t j = 0; j < n; ++j) {
      const int id = c.offset(d) + static_cast<int>(j);
      TensorChain fimg, himg;
      for (std::size_t i = 0; i < nh; ++i)
        add_term(fimg, Word{H->offset(d) + static_cast<int>(i)}, Pinv(nb + i, j));
      for (std::size_t i = 0; i < nb; ++i) {
        const Integer& coord = Pinv(i, j);
        if (coord == 0) continue;
        for (std::size_t k = 0; k < c.rank(d + 1); ++k)
          add_term(himg, Word{c.offset(d + 1) + static_cast<int>(k)}, -coord * Aup(k, i));
      }
      r.f.set_image(id, std::move(fimg));
      r.h.set_image(id, std::move(himg));
    }
    for (std::size_t i = 0; i < nh; ++i) {
      TensorChain gimg;
      for (std::size_t k = 0; k < n; ++k) add_term(gimg, Word{c.offset(d) + static_cast<int>(k)}, Hreps[d](k, i));
      r.g.set_image(H->offset(d) + static_cast<int>(i), std::move(gimg));
    }
  }
  return r;
}

std::vector<std::string> verify_sdr(const SDR& r) {
  std::vector<std::string> issues;
  auto check = [&](const char* name, const GradedOperator& lhs, const GradedOperator& rhs) {
    if (auto diff = lhs.first_difference(rhs)) issues.push_back(std::string(name) + " fails at " + *diff);
  };
  const GradedOperator idK = GradedOperator::identity(r.K);
  const GradedOperator idH = GradedOperator::identity(r.H);
  const GradedOperator fg = compose({&r.f}, r.g);
  const GradedOperator gf = compose({&r.g}, r.f);
  const GradedOperator hh = compose({&r.h}, r.h);
  const GradedOperator fh = compose({&r.f}, r.h);
  const GradedOperator hg = compose({&r.h}, r.g);
  check("fg = id", fg, idH);
  check("gf = id + [h, d]", gf, idK + commutator_with_boundary(r.h));
  check("h^2 = 0", hh, GradedOperator(r.K, r.K, 1, 2));
  check("fh = 0", fh, GradedOperator(r.K, r.H, 1, 1));
  check("hg = 0", hg, GradedOperator(r.H, r.K, 1, 1));
  if (!r.H->has_zero_differential()) issues.push_back("target complex has a nonzero differential");
  check("f is a chain map", commutator_with_boundary(r.f), GradedOperator(r.K, r.H, 1, -1));
  check("g is a chain map", commutator_with_boundary(r.g), GradedOperator(r.H, r.K, 1, -1));
  return issues;
}

}  // namespace ecoalg
