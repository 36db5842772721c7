#include <doctest.h>

#include "ecoalg/errors.hpp"
#include "ecoalg/fixtures.hpp"
#include "ecoalg/homology.hpp"
#include "ecoalg/simplicial.hpp"
#include "ecoalg/smith.hpp"
#include "oracles.hpp"

#include <random>

using namespace ecoalg;

namespace {

ComplexPtr chains_of(const std::string& fixture) {
  return std::make_shared<const ChainComplex>(normalized_chains(parse_sset(fixture_text(fixture))));
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

void check_smith(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.S);
  CHECK(s.U * s.U_inv == IntMatrix::identity(m.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(m.cols()));
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.S.rows(); ++i)
    for (std::size_t j = 0; j < s.S.cols(); ++j)
      if (i != j) CHECK(s.S(i, j) == 0);
  auto f = s.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
  for (std::size_t i = s.rank; i < std::min(m.rows(), m.cols()); ++i) CHECK(s.S(i, i) == 0);
  CHECK(f == oracle::invariant_factors(m));
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SUBCASE("2x2 example") {
    IntMatrix m{{2, 4}, {6, 8}};
    SmithForm s = smith_normal_form(m);
    // Determinantal divisors: gcd(2,4,6,8) = 2, |det| = 8, so diag(2, 4).
    CHECK(s.invariant_factors() == std::vector<Integer>{2, 4});
    check_smith(m);
  }
  SUBCASE("identity") {
    IntMatrix id = IntMatrix::identity(3);
    SmithForm s = smith_normal_form(id);
    CHECK(s.S == id);
    CHECK(s.U == id);
    CHECK(s.V == id);
  }
  SUBCASE("zero") {
    IntMatrix z(2, 3);
    SmithForm s = smith_normal_form(z);
    CHECK(s.S == z);
    CHECK(s.U == IntMatrix::identity(2));
    CHECK(s.V == IntMatrix::identity(3));
    CHECK(s.rank == 0);
  }
  SUBCASE("empty shapes") {
    check_smith(IntMatrix(0, 3));
    check_smith(IntMatrix(3, 0));
  }
}

TEST_CASE("smith normal form agrees with determinantal divisors on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    check_smith(random_matrix(rng, dim(rng), dim(rng), -6, 6));
  }
  // Rank-deficient products.
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 2, -3, 3), b = random_matrix(rng, 2, 4, -3, 3);
    check_smith(a * b);
  }
}

TEST_CASE("kernel, saturation and integer solving") {
  IntMatrix m{{2, 4, 6}, {1, 2, 3}};
  IntMatrix k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  // Saturation of span{(2,0),(0,2)} is all of Z^2.
  IntMatrix cols{{2, 0}, {0, 2}};
  CHECK(saturation_basis(cols).cols() == 2);
  CHECK(in_column_span(saturation_basis(cols), {1, 1}));
  CHECK_FALSE(in_column_span(cols, {1, 1}));
  CHECK(in_column_span(cols, {2, -4}));
  auto x = solve_integer(IntMatrix{{3, 5}}, {1});
  REQUIRE(x);
  CHECK(3 * (*x)[0] + 5 * (*x)[1] == 1);
  CHECK_FALSE(solve_integer(IntMatrix{{2, 4}}, {1}));
  CHECK(cokernel_structure(IntMatrix{{2, 0}, {0, 3}, {0, 0}}).free_rank == 1);
  CHECK(cokernel_structure(IntMatrix{{2, 0}, {0, 3}, {0, 0}}).torsion == std::vector<Integer>{6});
}

TEST_CASE("bareiss determinant matches permutation expansion") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      IntMatrix m = random_matrix(rng, n, n, -5, 5);
      std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
      CHECK(determinant(m) == oracle::leibniz_det(rows));
    }
}

TEST_CASE("tensor complexes") {
  auto circle = chains_of("circle");
  SUBCASE("arity one is the complex itself") {
    ChainComplex t = tensor_complex(*circle, 1);
    CHECK(t.labels() == circle->labels());
  }
  SUBCASE("point cubed") {
    auto point = chains_of("point");
    ChainComplex t = tensor_complex(*point, 3);
    CHECK(t.top_degree() == 0);
    CHECK(t.rank(0) == 1);
  }
  SUBCASE("circle squared") {
    ChainComplex t = tensor_complex(*circle, 2);
    CHECK(t.rank(0) == 1);
    CHECK(t.rank(1) == 2);
    CHECK(t.rank(2) == 1);
    CHECK(t.has_zero_differential());
  }
  SUBCASE("torus squared satisfies d^2 = 0") {
    auto torus = chains_of("torus");
    ChainComplex t = tensor_complex(*torus, 2);
    for (int d = 1; d <= t.top_degree(); ++d) CHECK((t.boundary_matrix(d) * t.boundary_matrix(d + 1)).is_zero());
    CHECK(t.rank(2) == 3 * 3 + 2 * 2);
  }
}

TEST_CASE("homology of fixtures") {
  CHECK(homology(*chains_of("circle")).ranks() == std::vector<std::size_t>{1, 1});
  auto torus = homology(*chains_of("torus"));
  CHECK(torus.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(torus.torsion_free());
  auto rp2 = homology(*chains_of("rp2"));
  CHECK(rp2.ranks() == std::vector<std::size_t>{1, 0, 0});
  CHECK(rp2.degrees[1].torsion == std::vector<Integer>{2});
  auto sphere = homology(*chains_of("sphere"));
  CHECK(sphere.ranks() == std::vector<std::size_t>{1, 0, 1});
  // Representatives are cycles.
  auto tc = chains_of("torus");
  for (const auto& d : torus.degrees)
    for (const auto& rep : d.representatives) CHECK(tc->boundary_of(rep).empty());
}

TEST_CASE("homology agrees with field-rank enumeration on planted complexes") {
  std::mt19937_64 rng(11);
  const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::pair<int, long>>>> shapes = {
      {{1, 0, 1}, {{0, 1}, {1, 1}}},
      {{2, 1, 0}, {{0, 2}, {1, 3}, {0, 1}}},
      {{0, 2, 1, 1}, {{1, 2}, {1, 4}, {2, 1}}},
      {{1, 1, 1}, {{0, 6}, {1, 1}, {1, 1}}},
  };
  for (int rep = 0; rep < 5; ++rep)
    for (const auto& [free, pairs] : shapes) {
      auto planted = oracle::planted_complex(rng, free, pairs);
      REQUIRE(planted.complex.size() <= 12);
      HomologyReport h = homology(planted.complex);
      for (int d = 0; d <= planted.complex.top_degree(); ++d) {
        CHECK(h.degrees[d].free_rank == planted.betti[d]);
        std::vector<Integer> expect = planted.torsion[d];
        CHECK(h.degrees[d].torsion.size() == expect.size());
        CHECK(h.degrees[d].free_rank == oracle::field_betti(planted.complex, d, 0));
        // Universal coefficients: dim H_d(F_p) = b_d + t_d(p) + t_{d-1}(p).
        for (long p : {2L, 3L, 5L}) {
          std::size_t expected = h.degrees[d].free_rank;
          for (const auto& t : h.degrees[d].torsion)
            if (t % p == 0) ++expected;
          if (d > 0)
            for (const auto& t : h.degrees[d - 1].torsion)
              if (t % p == 0) ++expected;
          CHECK(oracle::field_betti(planted.complex, d, p) == expected);
        }
      }
    }
}

TEST_CASE("build_sdr satisfies the five identities") {
  for (const char* name : {"point", "circle", "wedge2", "wedge3", "sphere", "torus"}) {
    CAPTURE(name);
    auto c = chains_of(name);
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 17ULL}) {
      SDR r = build_sdr(c, seed);
      CHECK(verify_sdr(r).empty());
      // fgf = f and gfg = g follow from the identities.
      CHECK(compose({&r.f}, compose({&r.g}, r.f)) == r.f);
      CHECK(compose({&r.g}, compose({&r.f}, r.g)) == r.g);
    }
  }
}

TEST_CASE("build_sdr special cases") {
  SUBCASE("acyclic complex Z -> Z") {
    auto c = std::make_shared<const ChainComplex>(
        ChainComplex({{"x"}, {"y"}}, std::vector<Chain>{Chain{}, Chain{{0, 1}}}));
    SDR r = build_sdr(c);
    CHECK(r.f.is_zero());
    CHECK(r.g.is_zero());
    CHECK(r.h.image(0) == TensorChain{{Word{1}, -1}});
    CHECK(verify_sdr(r).empty());
  }
  SUBCASE("circle is its own homology") {
    auto c = chains_of("circle");
    SDR r = build_sdr(c);
    CHECK(r.h.is_zero());
    CHECK(r.f.image(0) == TensorChain{{Word{0}, 1}});
    CHECK(r.f.image(1) == TensorChain{{Word{1}, 1}});
  }
  SUBCASE("torsion is refused") {
    auto c = chains_of("rp2");
    try {
      build_sdr(c);
      FAIL("expected TorsionPresent");
    } catch (const TorsionPresent& e) {
      CHECK(e.degree() == 1);
      CHECK(e.coefficient() == "2");
    }
  }
  SUBCASE("seeded retractions keep the homology basis") {
    auto c = chains_of("torus");
    SDR a = build_sdr(c), b = build_sdr(c, 5);
    CHECK(*a.H == *b.H);
    CHECK_FALSE(a.h == b.h);
  }
}

TEST_CASE("operator composition and Koszul signs") {
  auto c = std::make_shared<const ChainComplex>(
      ChainComplex::with_zero_differential({{"v"}, {"x", "y"}}));
  const int x = 1, y = 2;
  // a: degree-1 operator x -> y placed in slot 2 past a degree-1 factor.
  GradedOperator a(c, c, 1, 1);
  GradedOperator b(c, c, 2, 1);
  b.add_to_image(x, Word{x, x}, 1);
  GradedOperator lhs = compose(GradedOperator(c, c, 1, 0), b, 1);
  CHECK(lhs.is_zero());
  CHECK(compose(GradedOperator::identity(c), b, 2) == b);

  GradedOperator shift(c, c, 1, 0);
  shift.add_to_image(x, Word{y}, 1);
  shift.add_to_image(y, Word{x}, 1);
  CHECK(compose(shift, b, 2).image(x) == TensorChain{{Word{x, y}, 1}});

  // Odd operator: (1 ⊗ o)(x ⊗ x) = -x ⊗ o(x) since |x| = 1.
  auto c2 = std::make_shared<const ChainComplex>(ChainComplex::with_zero_differential({{"v"}, {"x"}, {"z"}}));
  GradedOperator o(c2, c2, 1, 1);
  o.add_to_image(1, Word{2}, 1);
  GradedOperator bb(c2, c2, 2, 0);
  bb.add_to_image(2, Word{1, 1}, 1);
  CHECK(compose(o, bb, 2).image(2) == TensorChain{{Word{1, 2}, -1}});
  CHECK(compose(o, bb, 1).image(2) == TensorChain{{Word{2, 1}, 1}});
}

TEST_CASE("composition is associative and equivariant on random operators") {
  auto c = chains_of("torus");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto random_op = [&](int arity, int degree) {
    GradedOperator op(c, c, arity, degree);
    auto words = tensor_words(*c, arity);
    for (std::size_t x = 0; x < c->size(); ++x)
      for (const auto& w : words)
        if (c->degree(w) == c->degree(static_cast<int>(x)) + degree && coef(rng) > 0)
          op.add_to_image(static_cast<int>(x), w, coef(rng) + 3);
    return op;
  };
  for (int t = 0; t < 10; ++t) {
    GradedOperator a = random_op(2, 0), b = random_op(2, 1), e = random_op(1, 1);
    // (a ∘_1 b) ∘_2 ... nested application against the all-at-once form.
    GradedOperator nested = compose(e, compose(a, b, 1), 3);
    GradedOperator direct = compose({nullptr, nullptr, nullptr}, compose(a, b, 1));
    CHECK(direct == compose(a, b, 1));
    GradedOperator both = compose({&a, &e}, b);
    CHECK(both == nested);
    // Relabelling slots: T∘((x ⊗ y)∘b) = (y ⊗ x)∘(T∘b) with Koszul sign from |x||y|.
    GradedOperator e2 = random_op(1, 1);
    GradedOperator lhs = twist(compose({&e, &e2}, b));
    GradedOperator rhs = compose({&e2, &e}, twist(b)).scaled(-1);
    CHECK(lhs == rhs);
  }
  // (AW-like) consistency of permute with composition of permutations.
  GradedOperator m = random_op(3, 0);
  CHECK(permute({1, 2, 0}, permute({1, 0, 2}, m)) == permute({2, 1, 0}, m));
}
