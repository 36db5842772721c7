#include "ecoalg/operad.hpp"

#include "ecoalg/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

namespace ecoalg {

std::optional<GeneratorInfo> generator_info(const std::string& name) {
  static const std::regex indexed("(m2|m3|f0|f1|f2|f3)_([0-9]+)");
  static const std::regex dn("d_?([0-9]+)");
  std::smatch m;
  if (name == "p") return GeneratorInfo{"p", 0, 0, false};
  if (std::regex_match(name, m, indexed)) {
    const std::string fam = m[1];
    const int k = std::stoi(m[2]);
    if (fam == "m2") return GeneratorInfo{name, 2, k, false};
    if (fam == "m3" && k >= 1) return GeneratorInfo{name, 3, k, false};
    if (fam == "f0" && k == 0) return GeneratorInfo{name, 0, 0, true};
    if (fam == "f1" && k == 0) return GeneratorInfo{name, 1, 0, true};
    if (fam == "f2" && k >= 1) return GeneratorInfo{name, 2, k, true};
    if (fam == "f3" && k >= 2) return GeneratorInfo{name, 3, k, true};
    return std::nullopt;
  }
  if (std::regex_match(name, m, dn)) {
    const int n = std::stoi(m[1]);
    if (n == 2) return GeneratorInfo{"m2_0", 2, 0, false};
    if (n == 3) return GeneratorInfo{"m3_1", 3, 1, false};
    if (n >= 4) return GeneratorInfo{"d_" + std::to_string(n), n, n - 2, false};
  }
  return std::nullopt;
}

namespace {

const GeneratorInfo& info(const std::string& gen) {
  static std::map<std::string, GeneratorInfo> cache;
  auto it = cache.find(gen);
  if (it != cache.end()) return it->second;
  auto gi = generator_info(gen);
  if (!gi) throw InvalidArgument("unknown generator '" + gen + "'");
  return cache.emplace(gen, *gi).first->second;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<int>(k);
  return inv;
}

// Replaces planar leaf k of t by x; `left` collects the degrees of vertices
// lying entirely to the left of the path to that leaf.
bool graft_rec(Tree& t, int& k, const Tree& x, long& left) {
  if (t.is_leaf()) {
    if (k == 0) {
      t = x;
      return true;
    }
    --k;
    return false;
  }
  for (auto& c : t.children) {
    const int lc = c.leaves();
    if (k < lc) return graft_rec(c, k, x, left);
    k -= lc;
    left += c.degree();
  }
  return false;
}

// Sign exponent of grafting x at leaf k of t.
long graft(Tree& t, int k, const Tree& x) {
  long left = 0;
  if (!graft_rec(t, k, x, left)) throw InvalidArgument("graft: leaf index out of range");
  return left * x.degree();
}

bool is_arity_zero_vertex(const Tree& t) { return !t.is_leaf() && info(t.gen).arity == 0; }

// Applies the counit relations: p or f0 under m2_0 removes that m2_0,
// p under f1_0 gives f0_0, and any other vertex with an arity-0 input vanishes
// (higher generators are annihilated by the counit). False means zero.
bool simplify(Tree& t) {
  if (t.is_leaf()) return true;
  for (auto& c : t.children)
    if (!simplify(c)) return false;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (!is_arity_zero_vertex(t.children[i])) continue;
    if (t.gen == "m2_0") {
      Tree other = t.children[1 - i];
      t = std::move(other);
      return true;
    }
    if (t.gen == "f1_0" && t.children[i].gen == "p") {
      t = Tree{"f0_0", {}};
      return true;
    }
    return false;
  }
  return true;
}

bool is_unit(const OperadElement& x) {
  return x.arity() == 1 && x.terms().size() == 1 && x.terms().begin()->first.tree.is_leaf() &&
         x.terms().begin()->second == 1;
}

void add_simplified(OperadElement& out, Monomial m, const Integer& coef) {
  if (coef == 0) return;
  if (!simplify(m.tree)) return;
  out.add(m, coef);
}

// x ∘_i y on monomials without the f1_0 filling; returns the sign.
int graft_monomial(const Monomial& mx, const Monomial& my, int i, Monomial& out) {
  const int n = static_cast<int>(my.sigma.size());
  const int m = static_cast<int>(mx.sigma.size());
  const int j = inverse_perm(my.sigma)[i - 1];
  out.tree = my.tree;
  const long exponent = graft(out.tree, j, mx.tree);
  const int total = n + m - 1;
  const int slot = my.sigma[j];
  out.sigma.assign(total, 0);
  for (int p = 0; p < total; ++p) {
    const int xp = (p >= j && p < j + m) ? j + mx.sigma[p - j] : p;
    int orig, within = 0;
    if (xp < j) {
      orig = xp;
    } else if (xp < j + m) {
      orig = j;
      within = xp - j;
    } else {
      orig = xp - m + 1;
    }
    const int s = my.sigma[orig];
    out.sigma[p] = s < slot ? s : (s == slot ? s + within : s + m - 1);
  }
  return exponent % 2 == 0 ? 1 : -1;
}

OperadElement compose_plain(const OperadElement& x, const OperadElement& y, int i) {
  if (i < 1 || i > y.arity())
    throw InvalidArgument("compose: slot " + std::to_string(i) + " out of range for arity " + std::to_string(y.arity()));
  OperadElement out(x.arity() + y.arity() - 1, x.degree() + y.degree());
  for (const auto& [my, cy] : y.terms())
    for (const auto& [mx, cx] : x.terms()) {
      Monomial g;
      const int sign = graft_monomial(mx, my, i, g);
      add_simplified(out, std::move(g), cx * cy * sign);
    }
  return out;
}

struct VertexSite {
  std::vector<int> path;  // child indices from the root
  int first_leaf = 0;
  long before = 0;  // degrees of vertices earlier in post-order
};

void collect_vertices(const Tree& t, std::vector<int>& path, int first_leaf, long& running,
                      std::vector<VertexSite>& out) {
  if (t.is_leaf()) return;
  int leaf = first_leaf;
  for (std::size_t c = 0; c < t.children.size(); ++c) {
    path.push_back(static_cast<int>(c));
    collect_vertices(t.children[c], path, leaf, running, out);
    path.pop_back();
    leaf += t.children[c].leaves();
  }
  out.push_back({path, first_leaf, running});
  running += info(t.gen).degree;
}

Tree& at_path(Tree& t, const std::vector<int>& path) {
  Tree* cur = &t;
  for (int c : path) cur = &cur->children[c];
  return *cur;
}

std::string render_tree(const Tree& t);

bool is_composite(const Tree& t) {
  if (t.is_leaf()) return false;
  for (const auto& c : t.children)
    if (!c.is_leaf()) return true;
  return false;
}

std::string render_child(const Tree& t) {
  std::string s = render_tree(t);
  return is_composite(t) ? "(" + s + ")" : s;
}

std::string render_tree(const Tree& t) {
  if (t.is_leaf()) return "1";
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < t.children.size(); ++i)
    if (!t.children[i].is_leaf()) inner.push_back(i);
  if (inner.empty()) return t.gen;
  if (inner.size() == 1) {
    const std::string slot = t.children.size() > 1 ? std::to_string(inner[0] + 1) : "";
    return render_child(t.children[inner[0]]) + " o" + slot + " " + t.gen;
  }
  std::string s = "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ", ";
    s += render_child(t.children[i]);
  }
  return s + ") o " + t.gen;
}

std::string render_monomial(const Monomial& m) {
  std::string body = render_tree(m.tree);
  if (m.sigma == identity_perm(static_cast<int>(m.sigma.size()))) return body;
  std::string p = "[";
  for (std::size_t k = 0; k < m.sigma.size(); ++k) p += (k ? "," : "") + std::to_string(m.sigma[k] + 1);
  p += "]";
  return p + (is_composite(m.tree) ? "(" + body + ")" : body);
}

}  // namespace

Tree Tree::node(const std::string& gen) {
  const GeneratorInfo& gi = info(gen);
  return Tree{gi.name, std::vector<Tree>(gi.arity)};
}

int Tree::leaves() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

int Tree::degree() const {
  if (is_leaf()) return 0;
  int d = info(gen).degree;
  for (const auto& c : children) d += c.degree();
  return d;
}

bool Tree::has_bimodule_vertex() const {
  if (is_leaf()) return false;
  if (info(gen).bimodule) return true;
  for (const auto& c : children)
    if (c.has_bimodule_vertex()) return true;
  return false;
}

int compare(const Tree& a, const Tree& b) {
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  if (a.children.size() != b.children.size()) return a.children.size() < b.children.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (int c = compare(a.children[i], b.children[i])) return c;
  return 0;
}

bool Monomial::operator<(const Monomial& o) const {
  if (int c = compare(tree, o.tree)) return c < 0;
  return sigma < o.sigma;
}

OperadElement OperadElement::generator(const std::string& name) {
  if (name == "1" || name == "unit") return unit();
  const GeneratorInfo& gi = info(name);
  return from_monomial(Monomial{Tree::node(gi.name), identity_perm(gi.arity)});
}

OperadElement OperadElement::unit() { return from_monomial(Monomial{Tree::leaf(), {0}}); }

OperadElement OperadElement::from_monomial(Monomial m, const Integer& coef) {
  OperadElement out(m.tree.leaves(), m.tree.degree());
  if (static_cast<int>(m.sigma.size()) != out.arity_) throw ShapeMismatch("permutation size differs from tree arity");
  out.add(m, coef);
  return out;
}

bool OperadElement::is_bimodule() const {
  for (const auto& [m, c] : terms_)
    if (m.tree.has_bimodule_vertex()) return true;
  return false;
}

void OperadElement::add(const Monomial& m, const Integer& coef) {
  if (coef == 0) return;
  if (m.tree.leaves() != arity_ || m.tree.degree() != degree_)
    throw ShapeMismatch("monomial " + render_monomial(m) + " does not match arity " + std::to_string(arity_) +
                        " and degree " + std::to_string(degree_));
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void OperadElement::check_shape(const OperadElement& o, const char* op) const {
  if (arity_ != o.arity_ || degree_ != o.degree_)
    throw ShapeMismatch(std::string("operad element ") + op + ": arity or degree differ");
}

OperadElement OperadElement::operator+(const OperadElement& o) const {
  check_shape(o, "sum");
  OperadElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

OperadElement OperadElement::operator-(const OperadElement& o) const {
  check_shape(o, "difference");
  OperadElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, -c);
  return out;
}

OperadElement OperadElement::operator-() const { return scaled(-1); }

OperadElement OperadElement::scaled(const Integer& k) const {
  OperadElement out(arity_, degree_);
  for (const auto& [m, c] : terms_) out.add(m, c * k);
  return out;
}

bool OperadElement::operator==(const OperadElement& o) const {
  return arity_ == o.arity_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string OperadElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Integer a = abs(c);
    if (a != 1) os << a << " ";
    os << render_monomial(m);
    first = false;
  }
  return os.str();
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw ShapeMismatch("compose_perm: sizes differ");
  std::vector<int> out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[b[k]];
  return out;
}

OperadElement compose_i(const OperadElement& x, const OperadElement& y, int i) {
  if (i < 1 || i > y.arity())
    throw InvalidArgument("compose: slot " + std::to_string(i) + " out of range for arity " + std::to_string(y.arity()));
  const bool xb = x.is_bimodule(), yb = y.is_bimodule();
  if (xb && yb) throw InvalidArgument("compose: cannot substitute a bimodule element into a bimodule element");
  if (xb && !yb) {
    std::vector<OperadElement> xs(y.arity(), OperadElement::generator("f1_0"));
    xs[i - 1] = x;
    return compose_all(xs, y);
  }
  return compose_plain(x, y, i);
}

OperadElement compose_all(const std::vector<OperadElement>& xs, const OperadElement& y) {
  if (static_cast<int>(xs.size()) != y.arity())
    throw ShapeMismatch("compose_all: " + std::to_string(xs.size()) + " inputs for arity " + std::to_string(y.arity()));
  OperadElement out = y;
  for (int k = static_cast<int>(xs.size()); k >= 1; --k) {
    if (is_unit(xs[k - 1])) continue;
    out = compose_plain(xs[k - 1], out, k);
  }
  return out;
}

OperadElement act(const std::vector<int>& sigma, const OperadElement& x) {
  if (static_cast<int>(sigma.size()) != x.arity()) throw ShapeMismatch("act: permutation size differs from arity");
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_perm(x.arity())) throw InvalidArgument("act: not a permutation");
  OperadElement out(x.arity(), x.degree());
  for (const auto& [m, c] : x.terms()) out.add(Monomial{m.tree, compose_perm(sigma, m.sigma)}, c);
  return out;
}

OperadElement generator_differential(const std::string& raw) {
  const GeneratorInfo gi = info(raw);
  const std::string& name = gi.name;
  auto G = [](const std::string& n) { return OperadElement::generator(n); };
  const std::vector<int> swap{1, 0};
  auto sgn = [](int k) { return k % 2 == 0 ? 1 : -1; };
  OperadElement zero(gi.arity, gi.degree - 1);
  if (name == "p" || name == "m2_0" || name == "f0_0" || name == "f1_0") return zero;
  if (name.rfind("m2_", 0) == 0) {
    const int k = gi.degree - 1;
    const OperadElement prev = G("m2_" + std::to_string(k));
    return prev - act(swap, prev).scaled(sgn(k));
  }
  if (name == "m3_1") return compose_i(G("m2_0"), G("m2_0"), 1) - compose_i(G("m2_0"), G("m2_0"), 2);
  if (name.rfind("d_", 0) == 0) {
    const int n = gi.arity;
    OperadElement out = zero;
    for (int k = 2; k <= n - 1; ++k)
      for (int l = 1; l <= n - k + 1; ++l) {
        const int e = (k + 1) * (n - k + l);
        out = out + compose_i(G("d" + std::to_string(k)), G("d" + std::to_string(n - k + 1)), l).scaled(sgn(e));
      }
    return out;
  }
  const OperadElement f1 = G("f1_0");
  if (name == "f2_1") return compose_i(G("m2_0"), f1, 1) - compose_all({f1, f1}, G("m2_0"));
  if (name.rfind("f2_", 0) == 0) {
    const int k = gi.degree - 1;
    const std::string mk = "m2_" + std::to_string(k), fk = "f2_" + std::to_string(k);
    return compose_i(G(mk), f1, 1) - compose_all({f1, f1}, G(mk)) - (G(fk) + act(swap, G(fk)).scaled(sgn(k)));
  }
  if (name == "f3_2") {
    const OperadElement m0 = G("m2_0"), f21 = G("f2_1"), m31 = G("m3_1");
    return compose_i(m31, f1, 1) - compose_all({f1, f1, f1}, m31) - compose_i(m0, f21, 1) + compose_i(m0, f21, 2) -
           compose_i(f21, m0, 1) + compose_i(f21, m0, 2);
  }
  throw UntabulatedDifferential(name);
}

OperadElement differential(const OperadElement& x) {
  OperadElement out(x.arity(), x.degree() - 1);
  for (const auto& [mono, coef] : x.terms()) {
    std::vector<VertexSite> sites;
    std::vector<int> path;
    long running = 0;
    collect_vertices(mono.tree, path, 0, running, sites);
    for (const VertexSite& site : sites) {
      Tree base = mono.tree;
      Tree& v = at_path(base, site.path);
      const OperadElement dv = generator_differential(v.gen);
      const std::vector<Tree> children = v.children;
      const int n = static_cast<int>(children.size());
      std::vector<int> sizes(n), offsets(n + 1, 0);
      for (int c = 0; c < n; ++c) {
        sizes[c] = children[c].leaves();
        offsets[c + 1] = offsets[c] + sizes[c];
      }
      for (const auto& [term, e] : dv.terms()) {
        const std::vector<int>& tau = term.sigma;
        std::vector<const Tree*> reordered(n);
        for (int k = 0; k < n; ++k) reordered[k] = &children[tau[k]];
        long exponent = site.before;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (tau[a] > tau[b]) exponent += static_cast<long>(reordered[a]->degree()) * reordered[b]->degree();
        Tree sub = term.tree;
        for (int l = n - 1; l >= 0; --l) exponent += graft(sub, l, *reordered[l]);
        // Block permutation taking the regrafted leaves back to their slots.
        std::vector<int> beta;
        for (int k = 0; k < n; ++k)
          for (int q = 0; q < sizes[tau[k]]; ++q) beta.push_back(offsets[tau[k]] + q);
        std::vector<int> local = identity_perm(static_cast<int>(mono.sigma.size()));
        for (std::size_t q = 0; q < beta.size(); ++q) local[site.first_leaf + q] = site.first_leaf + beta[q];
        Monomial result{base, compose_perm(mono.sigma, local)};
        at_path(result.tree, site.path) = std::move(sub);
        add_simplified(out, std::move(result), coef * e * (exponent % 2 == 0 ? 1 : -1));
      }
    }
  }
  return out;
}

std::vector<std::string> fragment_generators(int max_arity, int max_degree, int max_d) {
  std::vector<std::string> out;
  if (max_arity >= 0) out.push_back("p");
  if (max_arity >= 0) out.push_back("f0_0");
  if (max_arity >= 1) out.push_back("f1_0");
  if (max_arity >= 2)
    for (int k = 0; k <= max_degree; ++k) out.push_back("m2_" + std::to_string(k));
  if (max_arity >= 2)
    for (int k = 1; k <= max_degree; ++k) out.push_back("f2_" + std::to_string(k));
  if (max_arity >= 3 && max_degree >= 1) out.push_back("m3_1");
  if (max_arity >= 3 && max_degree >= 2) out.push_back("f3_2");
  for (int n = 4; n <= max_d; ++n) out.push_back("d_" + std::to_string(n));
  return out;
}

std::vector<std::string> check_d_squared(int max_arity, int max_degree, int max_d) {
  std::vector<std::string> report;
  for (const auto& g : fragment_generators(max_arity, max_degree, max_d)) {
    const OperadElement dd = differential(generator_differential(g));
    if (!dd.is_zero()) report.push_back("dd(" + g + ") = " + dd.render());
  }
  return report;
}

}  // namespace ecoalg
