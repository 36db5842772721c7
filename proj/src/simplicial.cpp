#include "ecoalg/simplicial.hpp"

#include "ecoalg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

namespace ecoalg {

std::vector<int> normalize_degeneracies(std::vector<int> word) {
  // s_i s_j = s_{j+1} s_i for i <= j
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p)
      if (word[p] <= word[p + 1]) {
        const int i = word[p], j = word[p + 1];
        word[p] = j + 1;
        word[p + 1] = i;
        changed = true;
      }
  }
  return word;
}

std::vector<std::size_t> SimplicialSet::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_dim_) out.push_back(level.size());
  return out;
}

int SimplicialSet::find(int d, const std::string& name) const {
  if (d < 0 || d > dimension()) return -1;
  for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
    if (by_dim_[d][i].name == name) return static_cast<int>(i);
  return -1;
}

FaceRef SimplicialSet::face(int m, const FaceRef& x, int i) const {
  if (i < 0 || i > m) throw InvalidArgument("face index " + std::to_string(i) + " out of range for dimension " + std::to_string(m));
  std::vector<int> prefix;
  bool cancelled = false;
  for (int j : x.degeneracies) {
    if (cancelled) {
      prefix.push_back(j);
    } else if (i < j) {
      prefix.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      cancelled = true;
    } else {
      prefix.push_back(j);
      --i;
    }
  }
  if (cancelled) return FaceRef{normalize_degeneracies(prefix), x.target};
  const int t = m - static_cast<int>(x.degeneracies.size());
  const FaceRef& inner = simplex(t, x.target).faces.at(i);
  prefix.insert(prefix.end(), inner.degeneracies.begin(), inner.degeneracies.end());
  return FaceRef{normalize_degeneracies(prefix), inner.target};
}

FaceRef SimplicialSet::face(int d, int idx, int i) const { return face(d, FaceRef{{}, idx}, i); }

std::vector<ValidationIssue> SimplicialSet::validate() const {
  using K = ValidationIssue::Kind;
  std::vector<ValidationIssue> issues;
  std::set<std::string> names;
  std::vector<std::vector<bool>> faces_ok(by_dim_.size());
  for (int d = 0; d <= dimension(); ++d) {
    for (std::size_t s = 0; s < by_dim_[d].size(); ++s) {
      const Simplex& sx = by_dim_[d][s];
      bool ok = true;
      if (!names.insert(sx.name).second) {
        issues.push_back({K::DuplicateName, sx.name, -1, -1, "simplex name '" + sx.name + "' is used more than once"});
      }
      const std::size_t expected = d == 0 ? 0 : static_cast<std::size_t>(d + 1);
      if (sx.faces.size() != expected) {
        issues.push_back({K::FaceCount, sx.name, -1, -1,
                          "simplex '" + sx.name + "' of dimension " + std::to_string(d) + " has " +
                              std::to_string(sx.faces.size()) + " faces, expected " + std::to_string(expected)});
        faces_ok[d].push_back(false);
        continue;
      }
      for (std::size_t i = 0; i < sx.faces.size(); ++i) {
        const FaceRef& f = sx.faces[i];
        const int k = static_cast<int>(f.degeneracies.size());
        const int t = d - 1 - k;
        const std::string where = "face " + std::to_string(i) + " of '" + sx.name + "'";
        if (t < 0) {
          issues.push_back({K::BadDimension, sx.name, static_cast<int>(i), -1, where + " has too many degeneracies"});
          ok = false;
          continue;
        }
        bool word_ok = true;
        for (int j = 0; j < k; ++j) {
          if (j + 1 < k && f.degeneracies[j] <= f.degeneracies[j + 1]) word_ok = false;
          if (f.degeneracies[j] < 0 || f.degeneracies[j] > t + (k - 1 - j)) word_ok = false;
        }
        if (!word_ok) {
          issues.push_back({K::BadDegeneracy, sx.name, static_cast<int>(i), -1,
                            where + " has a degeneracy word that is not in normal form or out of range"});
          ok = false;
        }
        if (f.target < 0 || static_cast<std::size_t>(f.target) >= count(t)) {
          issues.push_back({K::Dangling, sx.name, static_cast<int>(i), -1,
                            where + " refers to a missing simplex of dimension " + std::to_string(t)});
          ok = false;
        } else if (t >= 1 && (faces_ok[t].size() <= static_cast<std::size_t>(f.target) || !faces_ok[t][f.target])) {
          ok = false;  // problem already reported lower down
        }
      }
      faces_ok[d].push_back(ok);
      if (!ok || d < 2) continue;
      for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          const FaceRef lhs = face(d - 1, sx.faces[j], i);
          const FaceRef rhs = face(d - 1, sx.faces[i], j - 1);
          if (!(lhs == rhs)) {
            issues.push_back({K::IdentityViolation, sx.name, i, j,
                              "simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                                  std::to_string(j - 1) + " d" + std::to_string(i) + " fails on '" + sx.name + "'"});
          }
        }
    }
  }
  return issues;
}

void SimplicialSet::require_valid() const {
  auto issues = validate();
  if (issues.empty()) return;
  std::string msg;
  for (const auto& i : issues) msg += (msg.empty() ? "" : "; ") + describe(i);
  throw ValidationError(msg);
}

bool SimplicialSet::operator==(const SimplicialSet& other) const {
  if (by_dim_.size() != other.by_dim_.size()) return false;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    if (by_dim_[d].size() != other.by_dim_[d].size()) return false;
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
      if (by_dim_[d][i].name != other.by_dim_[d][i].name || by_dim_[d][i].faces != other.by_dim_[d][i].faces)
        return false;
  }
  return true;
}

FrontBack front_back_faces(const SimplicialSet& x, int d, int idx, int i) {
  if (d < 0 || d > x.dimension() || idx < 0 || static_cast<std::size_t>(idx) >= x.count(d))
    throw InvalidArgument("no simplex (" + std::to_string(d) + ", " + std::to_string(idx) + ")");
  if (i < 0 || i > d) throw InvalidArgument("split index " + std::to_string(i) + " out of range for dimension " + std::to_string(d));
  FrontBack out;
  FaceRef front{{}, idx};
  for (int m = d; m > i; --m) front = x.face(m, front, m);
  FaceRef back{{}, idx};
  for (int m = d; m > d - i; --m) back = x.face(m, back, 0);
  out.front = SimplexRef{i, front};
  out.back = SimplexRef{d - i, back};
  return out;
}

SimplexRef face_on_vertices(const SimplicialSet& x, int d, int idx, const std::vector<int>& vertices) {
  std::vector<bool> keep(d + 1, false);
  for (int v : vertices) {
    if (v < 0 || v > d) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    keep[v] = true;
  }
  FaceRef cur{{}, idx};
  int m = d;
  for (int v = d; v >= 0; --v)
    if (!keep[v]) {
      cur = x.face(m, cur, v);
      --m;
    }
  return SimplexRef{m, cur};
}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  // Skips spaces and tabs; comments run to end of line.
  void skip_inline() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        get();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }
  void skip_all() {
    for (;;) {
      skip_inline();
      if (peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }
  void expect(char c) {
    skip_inline();
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    get();
  }
  std::string found() const {
    if (at_end()) return ", found end of input";
    if (peek() == '\n') return ", found end of line";
    return std::string(", found '") + peek() + "'";
  }
  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  }
  std::string name() {
    skip_inline();
    std::string s;
    while (!at_end() && name_char(peek())) s += get();
    if (s.empty()) fail("expected a simplex name" + found());
    return s;
  }
  int number() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    if (s.empty()) fail("expected a number" + found());
    return std::stoi(s);
  }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct PendingFace {
  std::vector<int> degeneracies;
  std::string target;
  int line, col;
};

// Reads either `name` or a degeneracy word such as `s1s0(name)`, `s_1 s_{0}(name)`.
PendingFace parse_face(Cursor& cur) {
  cur.skip_inline();
  PendingFace pf{{}, "", cur.line(), cur.col()};
  std::string tok = cur.name();
  static const std::regex letters("(s_?[0-9]+)+");
  for (;;) {
    cur.skip_inline();
    if (std::regex_match(tok, letters) && Cursor::name_char(cur.peek())) {
      tok += cur.name();
      continue;
    }
    break;
  }
  if (cur.peek() != '(') {
    pf.target = tok;
    return pf;
  }
  // Re-scan the token as a degeneracy word.
  std::size_t p = 0;
  auto bad = [&]() { throw ParseError("malformed degeneracy word '" + tok + "'", pf.line, pf.col); };
  while (p < tok.size()) {
    if (tok[p] != 's') bad();
    ++p;
    if (p < tok.size() && tok[p] == '_') ++p;
    std::size_t start = p;
    while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
    if (p == start) bad();
    pf.degeneracies.push_back(std::stoi(tok.substr(start, p - start)));
  }
  cur.get();  // '('
  pf.target = cur.name();
  cur.expect(')');
  return pf;
}

// s_{1} is accepted as a spelling of s_1.
std::string strip_braces(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '{' && i > 0 && text[i - 1] == '_') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '}' && j > i + 1) {
        out.append(text, i + 1, j - i - 1);
        i = j;
        continue;
      }
    }
    out += text[i];
  }
  return out;
}

}  // namespace

SimplicialSet parse_sset(const std::string& raw) {
  std::string text = strip_braces(raw);
  Cursor cur(text);
  std::vector<std::vector<Simplex>> by_dim;
  std::vector<std::vector<std::vector<PendingFace>>> pending;
  int current = -1;
  for (;;) {
    cur.skip_all();
    if (cur.at_end()) break;
    const int line = cur.line(), col = cur.col();
    std::string head = cur.name();
    if (head == "dim") {
      cur.skip_inline();
      int d = cur.number();
      cur.expect(':');
      if (d <= current) throw ParseError("dimension headers must increase", line, col);
      current = d;
      by_dim.resize(d + 1);
      pending.resize(d + 1);
    } else {
      if (current < 0) throw ParseError("simplex entry before any 'dim N:' header", line, col);
      Simplex sx;
      sx.name = head;
      std::vector<PendingFace> faces;
      cur.skip_inline();
      if (current > 0) {
        cur.expect(':');
        cur.expect('[');
        for (;;) {
          faces.push_back(parse_face(cur));
          cur.skip_inline();
          if (cur.peek() == ',') {
            cur.get();
            continue;
          }
          cur.expect(']');
          break;
        }
      } else if (cur.peek() == ':') {
        cur.get();
        cur.skip_inline();
        if (cur.peek() == '[') {
          cur.get();
          cur.expect(']');
        }
      }
      by_dim[current].push_back(std::move(sx));
      pending[current].push_back(std::move(faces));
    }
    cur.skip_inline();
    if (!cur.at_end() && cur.peek() != '\n') cur.fail("unexpected trailing text" + cur.found());
  }
  if (by_dim.empty()) throw ParseError("no simplices given", cur.line(), cur.col());
  for (std::size_t d = 1; d < by_dim.size(); ++d)
    for (std::size_t s = 0; s < by_dim[d].size(); ++s)
      for (const auto& pf : pending[d][s]) {
        FaceRef f;
        f.degeneracies = pf.degeneracies;
        const int t = static_cast<int>(d) - 1 - static_cast<int>(pf.degeneracies.size());
        int idx = -1;
        if (t >= 0 && static_cast<std::size_t>(t) < by_dim.size())
          for (std::size_t i = 0; i < by_dim[t].size(); ++i)
            if (by_dim[t][i].name == pf.target) idx = static_cast<int>(i);
        if (idx < 0)
          throw ValidationError("line " + std::to_string(pf.line) + ": face of '" + by_dim[d][s].name +
                                "' refers to '" + pf.target + "', which is not a simplex of dimension " +
                                std::to_string(t));
        f.target = idx;
        by_dim[d][s].faces.push_back(std::move(f));
      }
  SimplicialSet x(std::move(by_dim));
  x.require_valid();
  return x;
}

std::string serialize_sset(const SimplicialSet& x) {
  std::ostringstream os;
  for (int d = 0; d <= x.dimension(); ++d) {
    os << "dim " << d << ":\n";
    for (const auto& sx : x.simplices()[d]) {
      os << "  " << sx.name;
      if (d > 0) {
        os << ": [";
        for (std::size_t i = 0; i < sx.faces.size(); ++i) {
          const FaceRef& f = sx.faces[i];
          if (i) os << ", ";
          const int t = d - 1 - static_cast<int>(f.degeneracies.size());
          const std::string& target = x.simplex(t, f.target).name;
          if (f.degeneracies.empty()) {
            os << target;
          } else {
            for (int j : f.degeneracies) os << "s" << j;
            os << "(" << target << ")";
          }
        }
        os << "]";
      }
      os << "\n";
    }
  }
  return os.str();
}

ChainComplex normalized_chains(const SimplicialSet& x) {
  std::vector<std::vector<std::string>> labels;
  std::vector<Chain> boundary;
  for (int d = 0; d <= x.dimension(); ++d) {
    labels.emplace_back();
    for (std::size_t s = 0; s < x.count(d); ++s) {
      const Simplex& sx = x.simplex(d, static_cast<int>(s));
      labels.back().push_back(sx.name);
      Chain b;
      for (std::size_t i = 0; i < sx.faces.size(); ++i) {
        const FaceRef& f = sx.faces[i];
        if (f.degenerate()) continue;
        add_term(b, chain_id(x, d - 1, f.target), i % 2 == 0 ? 1 : -1);
      }
      boundary.push_back(std::move(b));
    }
  }
  return ChainComplex(std::move(labels), std::move(boundary));
}

int chain_id(const SimplicialSet& x, int d, int idx) {
  int off = 0;
  for (int e = 0; e < d; ++e) off += static_cast<int>(x.count(e));
  return off + idx;
}

std::string describe(const ValidationIssue& issue) { return issue.message; }

}  // namespace ecoalg
