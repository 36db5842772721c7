#include "ecoalg/cobar.hpp"

#include "ecoalg/errors.hpp"
#include "ecoalg/smith.hpp"

#include <algorithm>
#include <functional>

namespace ecoalg {

namespace {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// All words of total shifted degree d with length <= n.
std::vector<Word> words_of_degree(const std::vector<std::pair<int, int>>& letters, int d, int n) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) out.push_back(cur);
    if (static_cast<int>(cur.size()) == n) return;
    for (const auto& [id, deg] : letters) {
      if (deg > remaining) continue;
      cur.push_back(id);
      rec(remaining - deg);
      cur.pop_back();
    }
  };
  rec(d);
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

}  // namespace

TruncatedCobar build_cobar(const CoalgebraStructure& c, int max_length, CobarSigns signs) {
  if (max_length < 1) throw InvalidArgument("cobar: word length bound must be at least 1");
  TruncatedCobar t;
  t.reduced = c.complex->rank(0) > 0 ? reduce(c) : c;
  t.max_length = max_length;
  t.signs = signs;
  const ChainComplex& K = *t.reduced.complex;
  if (t.reduced.has("m3_1") && !t.reduced.op("m3_1").is_zero())
    throw InvalidArgument("cobar: the structure must be strictly coassociative (m3_1 = 0)");
  const GradedOperator& delta = t.reduced.op("m2_0");

  std::vector<std::pair<int, int>> letters;
  for (std::size_t id = 0; id < K.size(); ++id) letters.emplace_back(static_cast<int>(id), K.degree(static_cast<int>(id)) - 1);

  // D on single letters, as words.
  std::vector<TensorChain> on_letter(K.size());
  for (std::size_t x = 0; x < K.size(); ++x) {
    TensorChain& img = on_letter[x];
    for (const auto& [y, k] : K.boundary(static_cast<int>(x))) add_term(img, Word{y}, -k);
    for (const auto& [w, k] : delta.image(static_cast<int>(x)))
      add_term(img, w, K.degree(w[0]) % 2 == 0 ? k : Integer(-k));
  }
  auto sign_degree = [&](int letter) {
    return signs == CobarSigns::Shifted ? K.degree(letter) - 1 : K.degree(letter);
  };

  for (int d = 0; d <= 2; ++d) t.words.push_back(words_of_degree(letters, d, max_length));
  t.differential.emplace_back();
  for (int d = 1; d <= 2; ++d) {
    const auto& src = t.words[d];
    const auto& tgt = t.words[d - 1];
    std::map<Word, std::size_t> row;
    for (std::size_t r = 0; r < tgt.size(); ++r) row.emplace(tgt[r], r);
    IntMatrix m(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const Word& w = src[col];
      long before = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int s = before % 2 == 0 ? 1 : -1;
        for (const auto& [piece, k] : on_letter[w[i]]) {
          if (w.size() - 1 + piece.size() > static_cast<std::size_t>(max_length)) continue;
          Word out(w.begin(), w.begin() + static_cast<long>(i));
          out.insert(out.end(), piece.begin(), piece.end());
          out.insert(out.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          m(row.at(out), col) += k * s;
        }
        before += sign_degree(w[i]);
      }
    }
    t.differential.push_back(std::move(m));
  }
  return t;
}

std::vector<GradedPiece> gr_h0(const TruncatedCobar& t) {
  const auto& w0 = t.words[0];
  const IntMatrix& d1 = t.differential[1];
  std::vector<GradedPiece> out;
  std::size_t first = 0;
  for (int len = 0; len < t.max_length; ++len) {
    std::size_t count = 0;
    while (first + count < w0.size() && static_cast<int>(w0[first + count].size()) == len) ++count;
    // Degree-1 chains whose boundary has no component shorter than len.
    IntMatrix lower = d1.row_block(0, first);
    IntMatrix kernel = first == 0 ? IntMatrix::identity(d1.cols()) : kernel_basis(lower);
    IntMatrix proj = d1.row_block(first, count) * kernel;
    CokernelStructure cs = cokernel_structure(proj);
    out.push_back({len, cs.free_rank, cs.torsion});
    first += count;
  }
  return out;
}

std::vector<std::size_t> gr_h0_ranks(const TruncatedCobar& t) {
  std::vector<std::size_t> out;
  for (const auto& p : gr_h0(t)) out.push_back(p.rank);
  return out;
}

std::vector<std::string> check_d_squared_cobar(const TruncatedCobar& t) {
  std::vector<std::string> report;
  const IntMatrix dd = t.differential[1] * t.differential[2];
  const ChainComplex& K = *t.reduced.complex;
  auto show = [&](const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + K.label(w[i]);
    return s + "]";
  };
  for (std::size_t r = 0; r < dd.rows(); ++r) {
    if (static_cast<int>(t.words[0][r].size()) >= t.max_length) continue;
    for (std::size_t c = 0; c < dd.cols(); ++c)
      if (dd(r, c) != 0)
        report.push_back("DD" + show(t.words[2][c]) + " has coefficient " + dd(r, c).str() + " on " + show(t.words[0][r]));
  }
  return report;
}

}  // namespace ecoalg
