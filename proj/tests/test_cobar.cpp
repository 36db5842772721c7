#include <doctest.h>

#include "ecoalg/cobar.hpp"
#include "ecoalg/errors.hpp"
#include "ecoalg/fixtures.hpp"

using namespace ecoalg;

namespace {

CoalgebraStructure structure(const std::string& name, int max_k = 3) {
  return chain_structure(parse_sset(fixture_text(name)), max_k);
}

// gr of the group ring of a free group on m generators: the free associative algebra.
std::vector<std::size_t> free_oracle(int m, int n) {
  std::vector<std::size_t> out;
  std::size_t p = 1;
  for (int l = 0; l < n; ++l, p *= m) out.push_back(p);
  return out;
}

// gr of Z[Z^m]: polynomials in m commuting variables, C(l + m - 1, m - 1) in degree l.
std::vector<std::size_t> abelian_oracle(int m, int n) {
  std::vector<std::size_t> out;
  for (int l = 0; l < n; ++l) {
    std::size_t c = 1;
    for (int i = 1; i <= m - 1; ++i) c = c * (l + i) / i;
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("graded ranks of H0 against group ring oracles") {
  CHECK(gr_h0_ranks(build_cobar(structure("wedge2"), 4)) == free_oracle(2, 4));
  CHECK(gr_h0_ranks(build_cobar(structure("wedge3"), 4)) == free_oracle(3, 4));
  CHECK(gr_h0_ranks(build_cobar(structure("circle"), 5)) == abelian_oracle(1, 5));
  CHECK(gr_h0_ranks(build_cobar(structure("torus"), 4)) == abelian_oracle(2, 4));
  CHECK(gr_h0_ranks(build_cobar(structure("torus"), 5)) == abelian_oracle(2, 5));
  CHECK(gr_h0_ranks(build_cobar(structure("sphere"), 3)) == std::vector<std::size_t>{1, 0, 0});
  CHECK(gr_h0_ranks(build_cobar(structure("point"), 3)) == std::vector<std::size_t>{1, 0, 0});
  for (const char* name : {"wedge2", "wedge3", "circle", "torus", "sphere", "point"})
    for (const auto& piece : gr_h0(build_cobar(structure(name), 4))) CHECK(piece.torsion.empty());
}

TEST_CASE("torsion in the graded pieces is reported") {
  // Z[Z/2] filtered by powers of I = (t - 1): I^l / I^{l+1} = Z/2 for l >= 1.
  const auto pieces = gr_h0(build_cobar(structure("rp2"), 4));
  REQUIRE(pieces.size() == 4);
  CHECK(pieces[0].rank == 1);
  CHECK(pieces[0].torsion.empty());
  for (int l = 1; l < 4; ++l) {
    CHECK(pieces[l].rank == 0);
    CHECK(pieces[l].torsion == std::vector<Integer>{2});
  }
}

TEST_CASE("cobar differential") {
  SUBCASE("squares to zero") {
    for (const char* name : {"wedge2", "torus", "sphere", "rp2", "circle"})
      for (int n : {1, 2, 3, 4}) CHECK(check_d_squared_cobar(build_cobar(structure(name), n)).empty());
  }
  SUBCASE("wedge differential vanishes") {
    TruncatedCobar t = build_cobar(structure("wedge2"), 3);
    CHECK(t.words[1].empty());
    CHECK(t.differential[1].is_zero());
  }
  SUBCASE("torus letters") {
    TruncatedCobar t = build_cobar(structure("torus"), 2);
    const ChainComplex& K = *t.reduced.complex;
    CHECK(t.words[0].size() == 1 + 3 + 9);
    const int L = K.find("L"), a = K.find("a"), b = K.find("b"), c = K.find("c");
    const auto& w1 = t.words[1];
    const std::size_t col = std::find(w1.begin(), w1.end(), Word{L}) - w1.begin();
    auto row = [&](const Word& w) { return std::find(t.words[0].begin(), t.words[0].end(), w) - t.words[0].begin(); };
    // D[L] = -([b] - [c] + [a]) - [a|b].
    CHECK(t.differential[1](row({b}), col) == -1);
    CHECK(t.differential[1](row({c}), col) == 1);
    CHECK(t.differential[1](row({a}), col) == -1);
    CHECK(t.differential[1](row({a, b}), col) == -1);
    // Length never decreases.
    for (std::size_t j = 0; j < w1.size(); ++j)
      for (std::size_t i = 0; i < t.words[0].size(); ++i)
        if (t.differential[1](i, j) != 0) CHECK(t.words[0][i].size() >= w1[j].size());
  }
  SUBCASE("wrong sign convention is caught") {
    TruncatedCobar t = build_cobar(structure("torus"), 4, CobarSigns::Unshifted);
    CHECK_FALSE(check_d_squared_cobar(t).empty());
  }
}

TEST_CASE("graded ranks ignore the higher coproducts") {
  for (const char* name : {"torus", "rp2", "wedge2"}) {
    CoalgebraStructure c = structure(name);
    CoalgebraStructure bare = c;
    for (int k = 1; k <= 3; ++k) {
      auto& op = bare.ops.at("m2_" + std::to_string(k));
      op = op.scaled(0);
    }
    const auto a = gr_h0(build_cobar(c, 4)), b = gr_h0(build_cobar(bare, 4));
    for (std::size_t l = 0; l < a.size(); ++l) {
      CHECK(a[l].rank == b[l].rank);
      CHECK(a[l].torsion == b[l].torsion);
    }
  }
}

TEST_CASE("cobar errors") {
  CHECK_THROWS_AS(build_cobar(chain_structure(parse_sset("dim 0:\n  v\n  w\n"), 1), 2), MultipleVertices);
  CHECK_THROWS_AS(build_cobar(structure("torus"), 0), InvalidArgument);
}
