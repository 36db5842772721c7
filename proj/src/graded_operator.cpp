#include "ecoalg/graded_operator.hpp"

#include "ecoalg/errors.hpp"

#include <map>

namespace ecoalg {

namespace {

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

GradedOperator::GradedOperator(ComplexPtr source, ComplexPtr target, int arity, int degree)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree) {
  if (!source_ || !target_) throw InvalidArgument("operator needs a source and a target complex");
  if (arity_ < 0) throw InvalidArgument("operator arity must be non-negative");
  images_.resize(source_->size());
}

GradedOperator GradedOperator::identity(const ComplexPtr& c) {
  GradedOperator op(c, c, 1, 0);
  for (std::size_t i = 0; i < c->size(); ++i) op.images_[i][Word{static_cast<int>(i)}] = 1;
  return op;
}

void GradedOperator::set_image(int id, TensorChain value) {
  const int want = source_->degree(id) + degree_;
  for (auto it = value.begin(); it != value.end();) {
    if (it->second == 0) {
      it = value.erase(it);
      continue;
    }
    if (static_cast<int>(it->first.size()) != arity_)
      throw ShapeMismatch("image word has length " + std::to_string(it->first.size()) + ", operator arity is " +
                          std::to_string(arity_));
    if (target_->degree(it->first) != want)
      throw ShapeMismatch("image of '" + source_->label(id) + "' has the wrong degree");
    ++it;
  }
  images_.at(id) = std::move(value);
}

void GradedOperator::add_to_image(int id, const Word& w, const Integer& coef) {
  if (static_cast<int>(w.size()) != arity_) throw ShapeMismatch("word length does not match operator arity");
  if (target_->degree(w) != source_->degree(id) + degree_)
    throw ShapeMismatch("term added to image of '" + source_->label(id) + "' has the wrong degree");
  add_term(images_.at(id), w, coef);
}

TensorChain GradedOperator::apply(const Chain& c) const {
  TensorChain out;
  for (const auto& [id, k] : c) add_into(out, images_.at(id), k);
  return out;
}

bool GradedOperator::is_zero() const {
  for (const auto& im : images_)
    if (!im.empty()) return false;
  return true;
}

bool GradedOperator::operator==(const GradedOperator& other) const {
  return arity_ == other.arity_ && degree_ == other.degree_ && same_complex(source_, other.source_) &&
         same_complex(target_, other.target_) && images_ == other.images_;
}

void GradedOperator::check_compatible(const GradedOperator& rhs, const char* op) const {
  if (arity_ != rhs.arity_ || degree_ != rhs.degree_ || !same_complex(source_, rhs.source_) ||
      !same_complex(target_, rhs.target_))
    throw ShapeMismatch(std::string("operator ") + op + ": arity, degree or complexes differ");
}

GradedOperator GradedOperator::operator+(const GradedOperator& rhs) const {
  check_compatible(rhs, "sum");
  GradedOperator out = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) add_into(out.images_[i], rhs.images_[i]);
  return out;
}

GradedOperator GradedOperator::operator-(const GradedOperator& rhs) const {
  check_compatible(rhs, "difference");
  GradedOperator out = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) add_into(out.images_[i], rhs.images_[i], -1);
  return out;
}

GradedOperator GradedOperator::operator-() const { return scaled(-1); }

GradedOperator GradedOperator::scaled(const Integer& k) const {
  GradedOperator out(source_, target_, arity_, degree_);
  if (k == 0) return out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (const auto& [w, c] : images_[i]) out.images_[i][w] = c * k;
  return out;
}

IntMatrix GradedOperator::block(int d) const {
  std::vector<Word> words;
  for (const auto& w : tensor_words(*target_, arity_))
    if (target_->degree(w) == d + degree_) words.push_back(w);
  std::map<Word, std::size_t> row;
  for (std::size_t i = 0; i < words.size(); ++i) row[words[i]] = i;
  IntMatrix m(words.size(), source_->rank(d));
  for (std::size_t j = 0; j < source_->rank(d); ++j)
    for (const auto& [w, k] : images_[source_->offset(d) + j]) m(row.at(w), j) = k;
  return m;
}

std::optional<std::string> GradedOperator::first_difference(const GradedOperator& other) const {
  if (arity_ != other.arity_ || degree_ != other.degree_) return std::string("arity or degree differ");
  if (images_.size() != other.images_.size()) return std::string("source complexes differ");
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != other.images_[i])
      return source_->label(static_cast<int>(i)) + ": " + render(*target_, images_[i]) + " vs " +
             render(*target_, other.images_[i]);
  return std::nullopt;
}

std::string GradedOperator::render_image(int id) const { return render(*target_, images_.at(id)); }

GradedOperator compose(const std::vector<const GradedOperator*>& outer, const GradedOperator& inner) {
  if (static_cast<int>(outer.size()) != inner.arity())
    throw ShapeMismatch("compose: " + std::to_string(outer.size()) + " outer operators for inner arity " +
                        std::to_string(inner.arity()));
  ComplexPtr target;
  int arity = 0, degree = inner.degree();
  bool has_identity = false;
  for (const auto* a : outer) {
    if (!a) {
      has_identity = true;
      arity += 1;
      continue;
    }
    if (!same_complex(a->source(), inner.target())) throw ShapeMismatch("compose: outer source is not inner target");
    if (target && !same_complex(target, a->target())) throw ShapeMismatch("compose: outer targets differ");
    if (!target) target = a->target();
    arity += a->arity();
    degree += a->degree();
  }
  if (!target) target = inner.target();
  if (has_identity && !same_complex(target, inner.target()))
    throw ShapeMismatch("compose: identity slot requires outer target equal to inner target");

  const ChainComplex& mid = *inner.target();
  GradedOperator out(inner.source(), target, arity, degree);
  for (std::size_t x = 0; x < inner.source()->size(); ++x) {
    TensorChain result;
    for (const auto& [y, coef] : inner.image(static_cast<int>(x))) {
      // Sign (-1)^{Σ_{i<j} |a_j| |y_i|}.
      long before = 0, exponent = 0;
      for (std::size_t j = 0; j < outer.size(); ++j) {
        if (outer[j]) exponent += static_cast<long>(outer[j]->degree()) * before;
        before += mid.degree(y[j]);
      }
      TensorChain acc{{Word{}, exponent % 2 == 0 ? coef : Integer(-coef)}};
      for (std::size_t j = 0; j < outer.size() && !acc.empty(); ++j) {
        if (!outer[j]) {
          TensorChain next;
          for (const auto& [w, k] : acc) {
            Word nw = w;
            nw.push_back(y[j]);
            next.emplace(std::move(nw), k);
          }
          acc = std::move(next);
          continue;
        }
        const TensorChain& img = outer[j]->image(y[j]);
        TensorChain next;
        for (const auto& [w, k] : acc)
          for (const auto& [v, c] : img) {
            Word nw = w;
            nw.insert(nw.end(), v.begin(), v.end());
            add_term(next, nw, k * c);
          }
        acc = std::move(next);
      }
      add_into(result, acc);
    }
    out.set_image(static_cast<int>(x), std::move(result));
  }
  return out;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b, int slot) {
  if (slot < 1 || slot > b.arity())
    throw InvalidArgument("compose: slot " + std::to_string(slot) + " out of range for arity " + std::to_string(b.arity()));
  std::vector<const GradedOperator*> outer(b.arity(), nullptr);
  outer[slot - 1] = &a;
  return compose(outer, b);
}

int permute_word(const ChainComplex& c, const std::vector<int>& sigma, const Word& w, Word& out) {
  const std::size_t n = w.size();
  out.assign(n, 0);
  long exponent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[sigma[i]] = w[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma[i] > sigma[j]) exponent += static_cast<long>(c.degree(w[i])) * c.degree(w[j]);
  }
  return exponent % 2 == 0 ? 1 : -1;
}

GradedOperator permute(const std::vector<int>& sigma, const GradedOperator& op) {
  if (static_cast<int>(sigma.size()) != op.arity()) throw ShapeMismatch("permute: permutation size differs from arity");
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[s]) throw InvalidArgument("permute: not a permutation");
    seen[s] = true;
  }
  GradedOperator out(op.source(), op.target(), op.arity(), op.degree());
  for (std::size_t x = 0; x < op.source()->size(); ++x) {
    TensorChain img;
    Word pw;
    for (const auto& [w, k] : op.image(static_cast<int>(x))) {
      const int sign = permute_word(*op.target(), sigma, w, pw);
      add_term(img, pw, k * sign);
    }
    out.set_image(static_cast<int>(x), std::move(img));
  }
  return out;
}

GradedOperator twist(const GradedOperator& op) { return permute({1, 0}, op); }

GradedOperator commutator_with_boundary(const GradedOperator& op) {
  GradedOperator out(op.source(), op.target(), op.arity(), op.degree() - 1);
  const ChainComplex& src = *op.source();
  const ChainComplex& tgt = *op.target();
  const Integer sign = op.degree() % 2 == 0 ? 1 : -1;
  for (std::size_t x = 0; x < src.size(); ++x) {
    TensorChain img = tgt.boundary_of(op.image(static_cast<int>(x)));
    add_into(img, op.apply(src.boundary(static_cast<int>(x))), -sign);
    out.set_image(static_cast<int>(x), std::move(img));
  }
  return out;
}

}  // namespace ecoalg
