#include <doctest.h>

#include "ecoalg/errors.hpp"
#include "ecoalg/operad.hpp"

#include <random>

using namespace ecoalg;

namespace {

OperadElement G(const std::string& name) { return OperadElement::generator(name); }

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

// Random composite of operad generators of bounded size.
OperadElement random_operad(std::mt19937_64& rng, int vertices) {
  static const std::vector<std::string> gens{"m2_0", "m2_1", "m2_2", "m3_1", "d_4", "m2_3"};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  OperadElement x = G(gens[pick(rng)]);
  for (int v = 1; v < vertices; ++v) {
    OperadElement y = G(gens[pick(rng)]);
    std::uniform_int_distribution<int> slot(1, y.arity());
    x = compose_i(x, y, slot(rng));
  }
  std::vector<int> sigma(x.arity());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return act(sigma, x);
}

OperadElement random_bimodule(std::mt19937_64& rng) {
  static const std::vector<std::string> gens{"f2_1", "f2_2", "f3_2", "f1_0"};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  OperadElement x = G(gens[pick(rng)]);
  std::uniform_int_distribution<int> slot(1, x.arity());
  return compose_i(random_operad(rng, 1), x, slot(rng));
}

}  // namespace

TEST_CASE("generator table") {
  CHECK(generator_info("d2")->name == "m2_0");
  CHECK(generator_info("d_3")->name == "m3_1");
  CHECK(generator_info("d5")->degree == 3);
  CHECK(generator_info("f3_2")->bimodule);
  CHECK_FALSE(generator_info("m3_0"));
  CHECK_FALSE(generator_info("f2_0"));
  CHECK_FALSE(generator_info("q"));
  CHECK_THROWS_AS(G("x9"), InvalidArgument);
}

TEST_CASE("tabulated differentials") {
  const OperadElement m = G("m2_0");
  CHECK(generator_differential("m3_1") == compose_i(m, m, 1) - compose_i(m, m, 2));
  CHECK(generator_differential("d3") == generator_differential("m3_1"));
  CHECK(generator_differential("m3_1").render() == "-m2_0 o2 m2_0 + m2_0 o1 m2_0");
  CHECK(generator_differential("m2_1") == m - act({1, 0}, m));
  CHECK(generator_differential("m2_2") == G("m2_1") + act({1, 0}, G("m2_1")));
  CHECK(generator_differential("m2_1").render() == "m2_0 - [2,1]m2_0");
  CHECK(generator_differential("f2_1").render() == "m2_0 o f1_0 - (f1_0, f1_0) o m2_0");
  CHECK(generator_differential("m2_0").is_zero());
  CHECK(generator_differential("p").is_zero());
  CHECK_THROWS_AS(generator_differential("m3_2"), UntabulatedDifferential);
  CHECK_THROWS_AS(differential(compose_i(m, G("m3_3"), 1)), UntabulatedDifferential);
}

TEST_CASE("differential squares to zero on the fragment") {
  const auto report = check_d_squared(3, 4, 6);
  for (const auto& line : report) MESSAGE(line);
  CHECK(report.empty());
  const auto gens = fragment_generators(3, 4, 5);
  CHECK(std::find(gens.begin(), gens.end(), "d_5") != gens.end());
  CHECK(std::find(gens.begin(), gens.end(), "f3_2") != gens.end());
}

TEST_CASE("units and counit relations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    OperadElement x = random_operad(rng, 2);
    CHECK(compose_i(OperadElement::unit(), x, 1) == x);
    CHECK(compose_i(x, OperadElement::unit(), 1) == x);
  }
  CHECK(compose_i(G("p"), G("m2_0"), 1) == OperadElement::unit());
  CHECK(compose_i(G("p"), G("m2_0"), 2) == OperadElement::unit());
  CHECK(compose_i(G("p"), G("f1_0"), 1) == G("f0_0"));
  CHECK(compose_i(G("p"), G("m2_1"), 1).is_zero());
  CHECK(compose_i(G("p"), G("f2_1"), 2).is_zero());
  CHECK(compose_i(G("f0_0"), G("m2_0"), 1) == G("f1_0"));
}

TEST_CASE("symmetric group action") {
  std::mt19937_64 rng(11);
  std::vector<std::vector<int>> s3{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const OperadElement x = compose_i(G("m2_1"), G("m2_0"), 2);
  for (const auto& a : s3)
    for (const auto& b : s3) {
      CHECK(act(a, act(b, x)) == act(compose_perm(a, b), x));
      CHECK(differential(act(a, x)) == act(a, differential(x)));
    }
  CHECK(act({1, 0}, act({1, 0}, G("m2_0"))) == G("m2_0"));
  CHECK_THROWS_AS(act({0, 0}, G("m2_0")), InvalidArgument);
}

TEST_CASE("sequential and parallel associativity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    OperadElement x = random_operad(rng, 1), y = random_operad(rng, 2), z = random_operad(rng, 1);
    const int m = y.arity();
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= z.arity(); ++b)
        CHECK(compose_i(compose_i(x, y, a), z, b) == compose_i(x, compose_i(y, z, b), b + a - 1));
    for (int i = 1; i <= z.arity(); ++i)
      for (int k = i + 1; k <= z.arity(); ++k)
        CHECK(compose_i(x, compose_i(y, z, i), k + m - 1) ==
              compose_i(y, compose_i(x, z, k), i).scaled(sign(x.degree() * y.degree())));
  }
}

TEST_CASE("composition is compatible with the differential") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    OperadElement x = random_operad(rng, 2), y = random_operad(rng, 2);
    for (int i = 1; i <= y.arity(); ++i) {
      OperadElement lhs = differential(compose_i(x, y, i));
      OperadElement rhs = compose_i(differential(x), y, i) + compose_i(x, differential(y), i).scaled(sign(x.degree()));
      CHECK(lhs == rhs);
    }
    OperadElement f = random_bimodule(rng);
    for (int i = 1; i <= y.arity(); ++i) {
      // Bimodule into operad and operad into bimodule.
      CHECK(differential(compose_i(f, y, i)) ==
            compose_i(differential(f), y, i) + compose_i(f, differential(y), i).scaled(sign(f.degree())));
    }
    for (int i = 1; i <= f.arity(); ++i)
      CHECK(differential(compose_i(x, f, i)) ==
            compose_i(differential(x), f, i) + compose_i(x, differential(f), i).scaled(sign(x.degree())));
  }
}

TEST_CASE("bimodule composition rules") {
  const OperadElement f1 = G("f1_0"), m = G("m2_0");
  CHECK(compose_i(G("f2_1"), m, 1) == compose_all({G("f2_1"), f1}, m));
  CHECK(compose_all({OperadElement::unit(), m}, m) == compose_i(m, m, 2));
  CHECK_THROWS_AS(compose_i(G("f2_1"), G("f2_1"), 1), InvalidArgument);
  CHECK_THROWS_AS(compose_i(m, m, 3), InvalidArgument);
  CHECK_THROWS_AS(compose_all({m}, m), ShapeMismatch);
  CHECK(G("f3_2").degree() == 2);
  CHECK(generator_differential("f3_2").degree() == 1);
  CHECK(generator_differential("f3_2").arity() == 3);
}
