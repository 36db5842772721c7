#include <doctest.h>

#include "ecoalg/errors.hpp"
#include "ecoalg/fixtures.hpp"
#include "ecoalg/formats.hpp"

using namespace ecoalg;

namespace {

RunConfig config(const std::string& command, std::vector<std::string> inputs = {}) {
  RunConfig c;
  c.command = command;
  c.inputs = std::move(inputs);
  return c;
}

std::string stage_of(const RunConfig& c) {
  try {
    run(c);
  } catch (const PipelineError& e) {
    return e.stage() + ":" + e.kind();
  }
  return "none";
}

// Word vector of a commutator expression in Z^{3^3}, letters a=0, b=1, c=2.
IntVector words(const std::vector<std::pair<int, std::string>>& terms) {
  IntVector v(27, 0);
  for (const auto& [k, w] : terms) v[((w[0] - 'a') * 3 + (w[1] - 'a')) * 3 + (w[2] - 'a')] += k;
  return v;
}

const char* kHeader = R"({"basepoint": "v", "homology": {"0": ["v"], "1": ["a", "b"], "2": ["s"]}, "operators": )";

}  // namespace

TEST_CASE("zero fixture loads with every invariant zero") {
  const TransferPackage p = load_structure_fixture(fixture_text("zero"));
  CHECK(verify_relations(p).empty());
  CHECK(massey_invariant(p).is_zero());
  CHECK(sq_dual_invariant(p).is_zero());
}

TEST_CASE("Borromean fixture carries the iterated commutators") {
  const TransferPackage p = load_structure_fixture(fixture_text("borromean"));
  CHECK(verify_relations(p).empty());
  const InvariantClass m = massey_invariant(p);
  CHECK_FALSE(m.is_zero());
  CHECK(m.group.describe() == "Z^16");
  // m2_0 vanishes on H2, so the class is μ itself, read back through the lattice basis.
  const LieLattice lie = lie_lattice(3);
  const std::size_t l3 = lie.degree3.cols();
  for (std::size_t s = 0; s < 2; ++s) {
    IntVector mu(27, 0);
    for (std::size_t b = 0; b < l3; ++b)
      for (std::size_t r = 0; r < 27; ++r) mu[r] += lie.degree3(r, b) * m.representative[s * l3 + b];
    // [[a,b],c] on s and [[b,c],a] on t
    const IntVector want = s == 0 ? words({{1, "abc"}, {-1, "bac"}, {-1, "cab"}, {1, "cba"}})
                                  : words({{1, "bca"}, {-1, "cba"}, {-1, "abc"}, {1, "acb"}});
    CHECK(mu == want);
  }
}

TEST_CASE("basepoint adds the counit terms") {
  const CoalgebraStructure s = parse_coalg(std::string(kHeader) + "{}}");
  const ChainComplex& H = *s.complex;
  const int v = H.find("v"), a = H.find("a");
  CHECK(s.op("m2_0").image(a) == TensorChain{{Word{v, a}, 1}, {Word{a, v}, 1}});
  CHECK(s.op("m2_0").image(v) == TensorChain{{Word{v, v}, 1}});
  CHECK(s.op("p").image(v) == TensorChain{{Word{}, 1}});
  CHECK(s.op("p").image(a).empty());
}

TEST_CASE("defective fixtures are rejected") {
  const std::string h = kHeader;
  // a⊗b alone is not σ-invariant: σ(a⊗b) = -b⊗a
  CHECK_THROWS_AS(parse_coalg(h + R"({"m2_0": {"s": [[1, "a", "b"]]}}})"), VerificationFailed);
  CHECK_NOTHROW(parse_coalg(h + R"({"m2_0": {"s": [[1, "a", "b"], [-1, "b", "a"]]}}})"));
  // m2_1 + σ m2_1 must vanish once m2_2 is present
  CHECK_THROWS_AS(parse_coalg(h + R"({"m2_1": {"a": [[1, "a", "b"]]}, "m2_2": {}}})"), VerificationFailed);
  CHECK_NOTHROW(parse_coalg(h + R"({"m2_1": {"a": [[1, "a", "b"], [1, "b", "a"]]}, "m2_2": {}}})"));
  CHECK_THROWS_AS(parse_coalg(h + R"({"m2_0": {"s": [[1, "a", "s"]]}}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(h + R"({"m2_0": {"q": []}}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(h + R"({"m4_1": {}}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(h + R"({"m2_2": {}}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(h + R"({"m2_0": {"s": [[1.5, "a", "b"]]}}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(R"({"homology": {"0": ["v"]}, "extra": 1})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(R"({"basepoint": "a", "homology": {"0": ["v"], "1": ["a"]}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(R"({"basepoint": "v", "homology": {"0": ["v", "w"]}})"), ValidationError);
  CHECK_THROWS_AS(parse_coalg(R"({"homology": {"0": ["v"], "1": ["v"]}})"), ValidationError);
}

TEST_CASE("json syntax errors carry a position") {
  try {
    parse_coalg("{\n  \"homology\": {\"0\": [}\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 22);
  }
}

TEST_CASE("large coefficients survive as decimal strings") {
  const std::string big = "123456789012345678901234567890";
  const CoalgebraStructure s =
      parse_coalg(std::string(kHeader) + R"({"m2_1": {"a": [[")" + big + R"(", "a", "a"]]}}})");
  const Report j = operator_json(s.op("m2_1"));
  CHECK(j["a"][0][0] == big);
  CHECK(j["a"][0][1] == "a");
}

TEST_CASE("transferred structures round-trip through the .coalg format") {
  for (const char* name : {"torus", "wedge3", "sphere"})
    for (std::uint64_t seed : {0, 1}) {
      CAPTURE(name);
      CAPTURE(seed);
      const CoalgebraStructure c = chain_structure(parse_sset(fixture_text(name)), 2);
      const TransferPackage p = transfer(c, build_sdr(c.complex, seed));
      const Report doc = coalg_document(p.target);
      const CoalgebraStructure back = parse_coalg(dump(doc));
      CHECK(back.complex->labels() == p.target.complex->labels());
      for (const auto& [gen, op] : p.target.ops) {
        CAPTURE(gen);
        REQUIRE(back.has(gen));
        CHECK(operator_json(back.op(gen)) == operator_json(op));
      }
      CHECK(coalg_document(back) == doc);
    }
}

TEST_CASE("run: documented examples") {
  CHECK(run(config("homology", {"torus.sset"}))["result"]["ranks"] == Report::array({1, 2, 1}));
  RunConfig cobar = config("cobar", {"wedge2.sset"});
  cobar.max_len = 4;
  CHECK(run(cobar)["result"]["ranks"] == Report::array({1, 2, 4, 8}));
  const Report inv = run(config("invariant", {"borromean.coalg"}));
  CHECK(inv["ok"] == true);
  CHECK(inv["result"]["invariants"]["massey"]["zero"] == false);
  CHECK(run(config("invariant", {"zero"}))["result"]["invariants"]["massey"]["zero"] == true);
}

TEST_CASE("run: reports are deterministic") {
  for (const char* cmd : {"homology", "coalgebra", "transfer", "cobar", "invariant"}) {
    RunConfig c = config(cmd, {"torus"});
    c.seed = 3;
    CHECK(dump(run(c)) == dump(run(c)));
  }
  CHECK(dump(run(config("selfcheck"))) == dump(run(config("selfcheck"))));
}

TEST_CASE("run: partial results and errors") {
  const Report torus = run(config("invariant", {"torus"}));
  CHECK(torus["ok"] == false);
  CHECK(torus["result"]["invariants"]["massey"]["error"]["kind"] == "NotNormalizable");
  CHECK(torus["result"]["invariants"].contains("sq_dual"));

  CHECK(stage_of(config("transfer", {"rp2"})) == "sdr:TorsionPresent");
  CHECK(stage_of(config("cobar", {"no_such_fixture"})) == "input:InvalidArgument");
  CHECK(stage_of(config("frobnicate", {"torus"})) == "config:InvalidArgument");
  CHECK(stage_of(config("homology", {"torus", "circle"})) == "config:InvalidArgument");
  RunConfig bad = config("cobar", {"torus"});
  bad.max_len = 0;
  CHECK(stage_of(bad) == "config:InvalidArgument");
  bad = config("coalgebra", {"torus"});
  bad.max_cup = -1;
  CHECK(stage_of(bad) == "config:InvalidArgument");
  CHECK(stage_of(config("cobar", {"borromean"})) == "analysis:InvalidArgument");

  const Report err = error_report(config("transfer", {"rp2"}), "sdr", "TorsionPresent", "msg");
  CHECK(err["ok"] == false);
  CHECK(err["error"]["stage"] == "sdr");
}

TEST_CASE("run: compare and selfcheck") {
  const Report one = run(config("compare", {"torus"}));
  CHECK(one["result"]["seeds"] == Report::array({0, 1}));
  CHECK(one["result"]["comparison"]["sq_dual"]["equal"] == true);
  CHECK(one["result"]["comparison"]["structures"]["arity3_solvable"] == true);
  const Report two = run(config("compare", {"borromean", "zero"}));
  CHECK(two["result"]["comparison"]["massey"]["equal"] == false);
  CHECK(two["result"]["comparison"]["structures"]["arity3_solvable"] == false);
  CHECK(run(config("compare", {"wedge2", "wedge3"}))["result"]["comparison"]["structures"].contains("error"));

  const Report self = run(config("selfcheck"));
  CHECK(self["ok"] == true);
  CHECK(self["result"]["checks"].size() > 20);
}

TEST_CASE("inputs resolve from disk before bundled names") {
  const std::string path = std::string(ECOALG_FIXTURE_DIR) + "/torus.sset";
  const InputSource a = resolve_input(path);
  CHECK(a.name == path);
  CHECK(a.text == fixture_text("torus"));
  CHECK_FALSE(a.coalg);
  CHECK(resolve_input("zero").coalg);
  CHECK(resolve_input("zero").name == "zero.coalg");
}
