#include "ecoalg/transfer.hpp"

#include "ecoalg/errors.hpp"
#include "ecoalg/smith.hpp"

namespace ecoalg {

namespace {

GradedOperator after(const GradedOperator& outer, const GradedOperator& inner) { return compose({&outer}, inner); }

GradedOperator tensor_f(const GradedOperator& f, const GradedOperator& op) {
  std::vector<const GradedOperator*> outer(op.arity(), &f);
  return compose(outer, op);
}

// Arity-0 operator on H: x -> p(g(x)).
GradedOperator transferred_counit(const GradedOperator& p, const SDR& r) {
  GradedOperator out(r.H, r.H, 0, 0);
  for (std::size_t x = 0; x < r.H->size(); ++x) {
    Integer total = 0;
    for (const auto& [y, k] : r.g.image(static_cast<int>(x))) {
      auto img = p.image(y[0]);
      auto it = img.find(Word{});
      if (it != img.end()) total += k * it->second;
    }
    if (total != 0) out.add_to_image(static_cast<int>(x), Word{}, total);
  }
  return out;
}

bool same_images(const GradedOperator& a, const GradedOperator& b) {
  if (a.source()->size() != b.source()->size()) return false;
  for (std::size_t x = 0; x < a.source()->size(); ++x)
    if (a.image(static_cast<int>(x)) != b.image(static_cast<int>(x))) return false;
  return true;
}

// Row layout for operators H -> H^{⊗n} of a fixed degree.
struct Layout {
  std::map<std::pair<int, Word>, std::size_t> index;
  std::vector<std::pair<int, Word>> entries;

  Layout(const ChainComplex& h, int arity, int degree) {
    const auto words = tensor_words(h, arity);
    for (std::size_t x = 0; x < h.size(); ++x)
      for (const auto& w : words)
        if (h.degree(w) == h.degree(static_cast<int>(x)) + degree) {
          index.emplace(std::make_pair(static_cast<int>(x), w), entries.size());
          entries.emplace_back(static_cast<int>(x), w);
        }
  }

  void write(const GradedOperator& op, std::vector<Integer>& out, std::size_t base) const {
    for (std::size_t x = 0; x < op.source()->size(); ++x)
      for (const auto& [w, k] : op.image(static_cast<int>(x))) out[base + index.at({static_cast<int>(x), w})] = k;
  }
};

}  // namespace

SDR identity_sdr(const ComplexPtr& c) {
  if (!c->has_zero_differential()) throw InvalidArgument("identity_sdr needs a complex with zero differential");
  return SDR{c, c, GradedOperator::identity(c), GradedOperator::identity(c), GradedOperator(c, c, 1, 1)};
}

TransferPackage transfer(const CoalgebraStructure& c, const SDR& r) {
  if (!(*r.K == *c.complex)) throw ShapeMismatch("transfer: the SDR does not start at the structure's complex");
  if (!r.H->has_zero_differential()) throw ShapeMismatch("transfer: the SDR target must have zero differential");
  TransferPackage out{c, r, {}, {}};
  out.target.complex = r.H;
  out.target.homology_level = true;
  out.target.ops.emplace("unit", GradedOperator::identity(r.H));
  if (c.has("p")) out.target.ops.emplace("p", transferred_counit(c.op("p"), r));

  const int top = std::min(2, c.max_cup());
  for (int k = 0; k <= top; ++k) {
    const GradedOperator ffd = tensor_f(r.f, c.op("m2_" + std::to_string(k)));
    out.target.ops.emplace("m2_" + std::to_string(k), after(ffd, r.g));
    if (k + 1 <= 2) out.morphism.emplace("f2_" + std::to_string(k + 1), after(ffd, r.h).scaled(k % 2 == 0 ? 1 : -1));
  }
  out.morphism.emplace("f1_0", r.f);
  if (out.target.has("p")) out.morphism.emplace("f0_0", after(out.target.op("p"), r.f));

  if (top >= 0) {
    const GradedOperator& d0 = c.op("m2_0");
    const GradedOperator d0h = after(d0, r.h);
    const GradedOperator x = compose(d0h, d0, 1) - compose(d0h, d0, 2);
    const GradedOperator fx = tensor_f(r.f, x);
    GradedOperator m3 = after(fx, r.g);
    if (c.has("m3_1")) m3 = m3 + after(tensor_f(r.f, c.op("m3_1")), r.g);
    out.target.ops.emplace("m3_1", std::move(m3));
    out.morphism.emplace("f3_2", -after(fx, r.h));
  }

  const auto issues = verify_relations(out);
  if (!issues.empty()) throw VerificationFailed(issues.front());
  return out;
}

std::vector<std::string> verify_relations(const TransferPackage& p) {
  std::vector<std::string> issues;
  for (const auto& s : verify_sdr(p.sdr)) issues.push_back("sdr: " + s);
  auto f1 = p.morphism.find("f1_0");
  if (f1 == p.morphism.end() || !(f1->second == p.sdr.f)) issues.push_back("f1_0 is not the SDR projection f");
  for (const auto& s : verify_structure(p.target)) issues.push_back("homology structure: " + s);
  for (int k = 0; p.target.has("m2_" + std::to_string(k)); ++k) {
    const GradedOperator& m = p.target.op("m2_" + std::to_string(k));
    if (!(m == twist(m).scaled(k % 2 == 0 ? 1 : -1)))
      issues.push_back("m2_" + std::to_string(k) + " is not (-1)^k sigma-invariant");
  }
  auto f0 = p.morphism.find("f0_0");
  if (f0 != p.morphism.end() && p.source.has("p") && !same_images(f0->second, p.source.op("p")))
    issues.push_back("f0_0 differs from the counit of the source");
  Interpretation in{&p.source, &p.target, &p.morphism};
  for (const auto& [name, op] : p.morphism) {
    if (name == "f0_0" || name == "f1_0") continue;
    const OperadElement dw = generator_differential(name);
    try {
      const GradedOperator rhs = evaluate(dw, in);
      if (auto diff = commutator_with_boundary(op).first_difference(rhs))
        issues.push_back("relation for " + name + " fails at " + *diff);
    } catch (const InvalidArgument& e) {
      issues.push_back("relation for " + name + " cannot be evaluated: " + e.what());
    }
  }
  return issues;
}

StructureComparison compare_structures(const CoalgebraStructure& p, const CoalgebraStructure& q) {
  if (p.complex->labels() != q.complex->labels()) throw ShapeMismatch("compare: homology bases differ");
  if (!p.complex->has_zero_differential() || !q.complex->has_zero_differential())
    throw ShapeMismatch("compare: structures must live on homology");
  const ComplexPtr& H = p.complex;
  if (!(p.op("m2_0") == q.op("m2_0"))) throw VerificationFailed("compare: m2_0 differs between the structures");
  StructureComparison out;
  for (const char* g : {"m2_1", "m2_2", "m3_1"})
    if (p.has(g) && q.has(g)) out.differences.emplace(g, q.op(g) - p.op(g));
  if (!out.differences.count("m2_1")) {
    out.message = "m2_1 is missing from one of the structures";
    return out;
  }
  const GradedOperator& m0 = p.op("m2_0");
  const Layout unknowns(*H, 2, 1), rows1(*H, 2, 1), rows3(*H, 3, 1);
  const bool with3 = out.differences.count("m3_1") > 0;
  const std::size_t n1 = rows1.entries.size(), n3 = with3 ? rows3.entries.size() : 0;
  IntMatrix A(n1 + n3, unknowns.entries.size());
  for (std::size_t v = 0; v < unknowns.entries.size(); ++v) {
    GradedOperator e(H, H, 2, 1);
    e.add_to_image(unknowns.entries[v].first, unknowns.entries[v].second, 1);
    std::vector<Integer> col(n1 + n3, 0);
    rows1.write(e - twist(e), col, 0);
    if (with3)
      rows3.write(compose(m0, e, 1) - compose(m0, e, 2) + compose(e, m0, 1) - compose(e, m0, 2), col, n1);
    for (std::size_t r = 0; r < col.size(); ++r) A(r, v) = col[r];
  }
  std::vector<Integer> b(n1 + n3, 0);
  rows1.write(out.differences.at("m2_1"), b, 0);
  if (with3) rows3.write(out.differences.at("m3_1"), b, n1);

  auto to_operator = [&](const std::vector<Integer>& sol) {
    GradedOperator w(H, H, 2, 1);
    for (std::size_t v = 0; v < sol.size(); ++v)
      if (sol[v] != 0) w.add_to_image(unknowns.entries[v].first, unknowns.entries[v].second, sol[v]);
    return w;
  };
  const IntMatrix A1 = A.row_block(0, n1);
  const std::vector<Integer> b1(b.begin(), b.begin() + static_cast<long>(n1));
  auto s1 = solve_integer(A1, b1);
  out.k1_solvable = s1.has_value();
  if (!s1) {
    out.message = "the m2_1 difference is not of the form F - sigma F";
    return out;
  }
  if (with3) {
    if (auto s = solve_integer(A, b)) {
      out.arity3_solvable = true;
      out.witness = to_operator(*s);
      out.message = "witness satisfies the k = 1 and arity-3 relations";
      return out;
    }
    out.message = "m2_1 relation solvable, but no witness satisfies the arity-3 relation";
  } else {
    out.message = "m2_1 relation solvable";
  }
  out.witness = to_operator(*s1);
  return out;
}

StructureComparison compare_structures(const TransferPackage& p, const TransferPackage& q) {
  return compare_structures(p.target, q.target);
}

}  // namespace ecoalg
