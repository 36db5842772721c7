#include "ecoalg/coalgebra.hpp"

#include "ecoalg/errors.hpp"

#include <optional>

namespace ecoalg {

const GradedOperator& CoalgebraStructure::op(const std::string& gen) const {
  auto it = ops.find(gen);
  if (it == ops.end()) throw InvalidArgument("structure has no operator for '" + gen + "'");
  return it->second;
}

int CoalgebraStructure::max_cup() const {
  int k = -1;
  while (has("m2_" + std::to_string(k + 1))) ++k;
  return k;
}

GradedOperator counit(const ComplexPtr& chains) {
  GradedOperator out(chains, chains, 0, 0);
  for (std::size_t v = 0; v < chains->rank(0); ++v) out.add_to_image(chains->offset(0) + static_cast<int>(v), Word{}, 1);
  return out;
}

GradedOperator aw_diagonal(const SimplicialSet& x, const ComplexPtr& chains) { return cup_k_coproduct(x, chains, 0); }

GradedOperator cup_k_coproduct(const SimplicialSet& x, const ComplexPtr& chains, int k) {
  if (k < 0) throw InvalidArgument("cup_k_coproduct: k must be non-negative");
  GradedOperator out(chains, chains, 2, k);
  for (int n = k; n <= x.dimension(); ++n) {
    for (std::size_t s = 0; s < x.count(n); ++s) {
      const int idx = static_cast<int>(s);
      const int source = chain_id(x, n, idx);
      for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
        if (__builtin_popcount(mask) != n - k) continue;
        std::vector<bool> in0(n + 1, false), in1(n + 1, false);
        int pos = 0;
        for (int u = 0; u <= n; ++u)
          if (mask >> u & 1) {
            ++pos;
            ((u - pos) % 2 == 0 ? in0 : in1)[u] = true;
          }
        long exponent = static_cast<long>(n) * k;
        for (int a = 0; a <= n; ++a) {
          if (!in0[a]) continue;
          for (int b = a + 1; b <= n; ++b) exponent += in1[b];
          for (int v = a + 1; v <= n; ++v) exponent += !(mask >> v & 1);
        }
        std::vector<int> front, back;
        for (int v = 0; v <= n; ++v) {
          if (!in0[v]) front.push_back(v);
          if (!in1[v]) back.push_back(v);
        }
        const SimplexRef fr = face_on_vertices(x, n, idx, front);
        const SimplexRef bk = face_on_vertices(x, n, idx, back);
        if (fr.ref.degenerate() || bk.ref.degenerate()) continue;
        out.add_to_image(source, Word{chain_id(x, fr.dim, fr.ref.target), chain_id(x, bk.dim, bk.ref.target)},
                         exponent % 2 == 0 ? 1 : -1);
      }
    }
  }
  return out;
}

CoalgebraStructure chain_structure(const SimplicialSet& x, int max_k) {
  if (max_k < 0) throw InvalidArgument("max_k must be non-negative");
  x.require_valid();
  CoalgebraStructure c;
  c.complex = std::make_shared<const ChainComplex>(normalized_chains(x));
  c.ops.emplace("p", counit(c.complex));
  c.ops.emplace("unit", GradedOperator::identity(c.complex));
  for (int k = 0; k <= max_k; ++k) c.ops.emplace("m2_" + std::to_string(k), cup_k_coproduct(x, c.complex, k));
  c.ops.emplace("m3_1", GradedOperator(c.complex, c.complex, 3, 1));
  const auto issues = verify_structure(c);
  if (!issues.empty()) throw VerificationFailed(issues.front());
  return c;
}

CoalgebraStructure reduce(const CoalgebraStructure& c) {
  const ChainComplex& K = *c.complex;
  if (K.rank(0) != 1) throw MultipleVertices(static_cast<int>(K.rank(0)));
  const int vertex = K.offset(0);
  auto shift = [vertex](int id) { return id > vertex ? id - 1 : id; };
  std::vector<std::vector<std::string>> labels = K.labels();
  labels[0].clear();
  std::vector<Chain> boundary;
  for (std::size_t id = 0; id < K.size(); ++id) {
    if (static_cast<int>(id) == vertex) continue;
    Chain b;
    for (const auto& [t, k] : K.boundary(static_cast<int>(id)))
      if (t != vertex) add_term(b, shift(t), k);
    boundary.push_back(std::move(b));
  }
  CoalgebraStructure out;
  out.complex = std::make_shared<const ChainComplex>(std::move(labels), std::move(boundary));
  out.homology_level = c.homology_level;
  for (const auto& [name, op] : c.ops) {
    if (name == "p") continue;
    if (name == "unit") {
      out.ops.emplace(name, GradedOperator::identity(out.complex));
      continue;
    }
    GradedOperator r(out.complex, out.complex, op.arity(), op.degree());
    for (std::size_t id = 0; id < K.size(); ++id) {
      if (static_cast<int>(id) == vertex) continue;
      for (const auto& [w, k] : op.image(static_cast<int>(id))) {
        bool hits = false;
        Word nw;
        for (int l : w) {
          hits = hits || l == vertex;
          nw.push_back(shift(l));
        }
        if (!hits) r.add_to_image(shift(static_cast<int>(id)), nw, k);
      }
    }
    out.ops.emplace(name, std::move(r));
  }
  return out;
}

namespace {

struct Evaluator {
  const Interpretation& in;

  const GradedOperator& lookup(const std::string& gen, bool upper) const {
    const GeneratorInfo gi = *generator_info(gen);
    if (gi.bimodule) {
      if (!upper) throw InvalidArgument("evaluate: nested bimodule vertex " + gen);
      if (!in.morphism) throw InvalidArgument("evaluate: no morphism given for " + gen);
      auto it = in.morphism->find(gi.name);
      if (it == in.morphism->end()) throw InvalidArgument("evaluate: morphism has no component " + gi.name);
      return it->second;
    }
    const CoalgebraStructure* s = upper ? in.source : in.target;
    if (!s) throw InvalidArgument("evaluate: missing structure for " + gen);
    return s->op(gi.name);
  }

  // nullopt stands for the identity.
  std::optional<GradedOperator> eval(const Tree& t, bool upper) const {
    if (t.is_leaf()) return std::nullopt;
    const GradedOperator& root = lookup(t.gen, upper);
    const bool below = upper && !generator_info(t.gen)->bimodule;
    std::vector<std::optional<GradedOperator>> kids;
    bool all_identity = true;
    for (const auto& c : t.children) {
      kids.push_back(eval(c, below));
      all_identity = all_identity && !kids.back();
    }
    if (all_identity) return root;
    std::vector<const GradedOperator*> outer;
    for (const auto& k : kids) outer.push_back(k ? &*k : nullptr);
    return compose(outer, root);
  }
};

}  // namespace

GradedOperator evaluate(const OperadElement& x, const Interpretation& in) {
  if (!in.source) throw InvalidArgument("evaluate: no source structure");
  const bool bimodule = x.is_bimodule();
  const CoalgebraStructure* tgt = bimodule ? in.target : in.source;
  if (!tgt) throw InvalidArgument("evaluate: no target structure");
  Interpretation eff = in;
  if (!bimodule) eff.target = in.source;
  Evaluator ev{eff};
  GradedOperator out(in.source->complex, tgt->complex, x.arity(), x.degree());
  for (const auto& [m, coef] : x.terms()) {
    std::optional<GradedOperator> v = ev.eval(m.tree, true);
    GradedOperator val = v ? std::move(*v) : GradedOperator::identity(in.source->complex);
    out = out + permute(m.sigma, val).scaled(coef);
  }
  return out;
}

GradedOperator evaluate(const OperadElement& x, const CoalgebraStructure& c) {
  Interpretation in;
  in.source = &c;
  in.target = &c;
  return evaluate(x, in);
}

std::vector<std::string> verify_structure(const CoalgebraStructure& c) {
  std::vector<std::string> issues;
  if (c.has("unit") && !(c.op("unit") == GradedOperator::identity(c.complex)))
    issues.push_back("unit is not the identity");
  if (c.has("p") && c.has("m2_0")) {
    const GradedOperator& p = c.op("p");
    const GradedOperator id = GradedOperator::identity(c.complex);
    if (!(compose({&p, nullptr}, c.op("m2_0")) == id)) issues.push_back("counit relation (p, 1) o m2_0 = 1 fails");
    if (!(compose({nullptr, &p}, c.op("m2_0")) == id)) issues.push_back("counit relation (1, p) o m2_0 = 1 fails");
  }
  for (const auto& [name, op] : c.ops) {
    if (name == "unit") continue;
    OperadElement dg(0, 0);
    try {
      dg = generator_differential(name);
    } catch (const UntabulatedDifferential&) {
      continue;
    }
    GradedOperator lhs = commutator_with_boundary(op);
    GradedOperator rhs(c.complex, c.complex, op.arity(), op.degree() - 1);
    try {
      rhs = evaluate(dg, c);
    } catch (const InvalidArgument& e) {
      issues.push_back("relation for " + name + " cannot be evaluated: " + e.what());
      continue;
    }
    if (auto diff = lhs.first_difference(rhs))
      issues.push_back("relation [d, " + name + "] = " + dg.render() + " fails at " + *diff);
  }
  return issues;
}

}  // namespace ecoalg
