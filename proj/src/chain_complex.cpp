#include "ecoalg/chain_complex.hpp"

#include "ecoalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ecoalg {

void add_term(Chain& c, int id, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = c.try_emplace(id, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) c.erase(it);
  }
}

void add_term(TensorChain& c, const Word& w, const Integer& coef) {
  if (coef == 0) return;
  auto [it, inserted] = c.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) c.erase(it);
  }
}

void add_into(TensorChain& acc, const TensorChain& c, const Integer& scale) {
  if (scale == 0) return;
  for (const auto& [w, k] : c) add_term(acc, w, k * scale);
}

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> labels, std::vector<Chain> boundary)
    : labels_(std::move(labels)), boundary_(std::move(boundary)) {
  int id = 0;
  for (int d = 0; d <= top_degree(); ++d) {
    offsets_.push_back(id);
    for (const auto& l : labels_[d]) {
      flat_labels_.push_back(l);
      degree_of_.push_back(d);
      if (!by_label_.emplace(l, id).second) throw ValidationError("duplicate basis label '" + l + "'");
      ++id;
    }
  }
  if (boundary_.empty()) boundary_.resize(size());
  if (boundary_.size() != size()) throw ShapeMismatch("boundary list does not match basis size");
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& [t, k] : boundary_[i]) {
      if (t < 0 || static_cast<std::size_t>(t) >= size() || degree_of_[t] != degree_of_[i] - 1)
        throw ValidationError("boundary of '" + flat_labels_[i] + "' is not of degree -1");
      (void)k;
    }
  for (std::size_t i = 0; i < size(); ++i)
    if (!boundary_of(boundary_[i]).empty())
      throw ValidationError("boundary squared is nonzero on '" + flat_labels_[i] + "'");
}

ChainComplex ChainComplex::with_zero_differential(std::vector<std::vector<std::string>> labels) {
  return ChainComplex(std::move(labels), {});
}

int ChainComplex::offset(int d) const {
  if (d < 0) return 0;
  if (d > top_degree()) return static_cast<int>(size());
  return offsets_[d];
}

int ChainComplex::find(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? -1 : it->second;
}

bool ChainComplex::has_zero_differential() const {
  return std::all_of(boundary_.begin(), boundary_.end(), [](const Chain& c) { return c.empty(); });
}

IntMatrix ChainComplex::boundary_matrix(int d) const {
  IntMatrix m(rank(d - 1), rank(d));
  const int src = offset(d), dst = offset(d - 1);
  for (std::size_t j = 0; j < rank(d); ++j)
    for (const auto& [t, k] : boundary_[src + j]) m(t - dst, j) = k;
  return m;
}

Chain ChainComplex::boundary_of(const Chain& c) const {
  Chain out;
  for (const auto& [id, k] : c)
    for (const auto& [t, b] : boundary_.at(id)) add_term(out, t, k * b);
  return out;
}

std::vector<Integer> ChainComplex::to_vector(const Chain& c, int d) const {
  std::vector<Integer> v(rank(d));
  for (const auto& [id, k] : c) {
    if (degree(id) != d) throw ShapeMismatch("chain is not homogeneous of degree " + std::to_string(d));
    v[id - offset(d)] = k;
  }
  return v;
}

Chain ChainComplex::from_vector(const std::vector<Integer>& v, int d) const {
  if (v.size() != rank(d)) throw ShapeMismatch("vector length does not match rank in degree " + std::to_string(d));
  Chain c;
  for (std::size_t i = 0; i < v.size(); ++i) add_term(c, offset(d) + static_cast<int>(i), v[i]);
  return c;
}

int ChainComplex::degree(const Word& w) const {
  int s = 0;
  for (int id : w) s += degree(id);
  return s;
}

TensorChain ChainComplex::boundary_of(const Word& w) const {
  TensorChain out;
  int before = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int sign = before % 2 == 0 ? 1 : -1;
    for (const auto& [t, k] : boundary_.at(w[i])) {
      Word nw = w;
      nw[i] = t;
      add_term(out, nw, k * sign);
    }
    before += degree(w[i]);
  }
  return out;
}

TensorChain ChainComplex::boundary_of(const TensorChain& c) const {
  TensorChain out;
  for (const auto& [w, k] : c) add_into(out, boundary_of(w), k);
  return out;
}

bool ChainComplex::operator==(const ChainComplex& other) const {
  return labels_ == other.labels_ && boundary_ == other.boundary_;
}

std::vector<Word> tensor_words(const ChainComplex& c, int n) {
  std::vector<Word> words{Word{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * c.size());
    for (const auto& w : words)
      for (std::size_t id = 0; id < c.size(); ++id) {
        Word nw = w;
        nw.push_back(static_cast<int>(id));
        next.push_back(std::move(nw));
      }
    words = std::move(next);
  }
  std::stable_sort(words.begin(), words.end(),
                   [&](const Word& a, const Word& b) { return c.degree(a) < c.degree(b); });
  return words;
}

ChainComplex tensor_complex(const ChainComplex& c, int n) {
  if (n < 1) throw InvalidArgument("tensor_complex: arity must be at least 1");
  std::vector<Word> words = tensor_words(c, n);
  std::map<Word, int> index;
  int top = -1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    index[words[i]] = static_cast<int>(i);
    top = std::max(top, c.degree(words[i]));
  }
  std::vector<std::vector<std::string>> labels(top + 1);
  std::vector<Chain> boundary;
  for (const auto& w : words) {
    labels[c.degree(w)].push_back(render_word(c, w));
    Chain b;
    for (const auto& [t, k] : c.boundary_of(w)) add_term(b, index.at(t), k);
    boundary.push_back(std::move(b));
  }
  return ChainComplex(std::move(labels), std::move(boundary));
}

std::string render_word(const ChainComplex& c, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += c.label(w[i]);
  }
  return s;
}

namespace {
template <class Key, class F>
std::string render_sum(const std::map<Key, Integer>& t, F name) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, k] : t) {
    Integer a = abs(k);
    if (first) {
      if (k < 0) os << "-";
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    if (a != 1) os << a << " ";
    os << name(key);
    first = false;
  }
  return os.str();
}
}  // namespace

std::string render(const ChainComplex& c, const TensorChain& t) {
  return render_sum(t, [&](const Word& w) { return render_word(c, w); });
}

std::string render(const ChainComplex& c, const Chain& t) {
  return render_sum(t, [&](int id) { return c.label(id); });
}

}  // namespace ecoalg
