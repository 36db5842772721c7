#include "ecoalg/formats.hpp"

#include <limits>
#include <set>

namespace ecoalg {

namespace {

using nlohmann::json;

[[noreturn]] void rethrow_json(const json::parse_error& e, const std::string& text) {
  // e.byte is 1-based and points just past the offending character.
  const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
  int line = 1, column = 1;
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::string what = e.what();
  const auto cut = what.find("syntax error");
  throw ParseError(cut == std::string::npos ? what : what.substr(cut), line, column);
}

Integer read_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  throw ValidationError(where + ": coefficient must be an integer or a decimal string");
}

// Arity and degree of a generator allowed in a `.coalg` file.
std::pair<int, int> operator_shape(const std::string& name) {
  if (name == "m3_1") return {3, 1};
  if (name.rfind("m2_", 0) == 0 && name.size() > 3 && name.find_first_not_of("0123456789", 3) == std::string::npos)
    return {2, std::stoi(name.substr(3))};
  throw ValidationError("unknown operator '" + name + "' (expected m2_k or m3_1)");
}

GradedOperator counit_terms(const ComplexPtr& c, int vertex) {
  GradedOperator out(c, c, 2, 0);
  for (std::size_t x = 0; x < c->size(); ++x) {
    const int id = static_cast<int>(x);
    out.add_to_image(id, Word{vertex, id}, 1);
    if (id != vertex) out.add_to_image(id, Word{id, vertex}, 1);
  }
  return out;
}

}  // namespace

CoalgebraStructure parse_coalg(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    rethrow_json(e, text);
  }
  if (!doc.is_object()) throw ValidationError("a .coalg document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "basepoint" && key != "homology" && key != "operators")
      throw ValidationError("unexpected top-level key '" + key + "'");
  if (!doc.contains("homology") || !doc["homology"].is_object())
    throw ValidationError("missing \"homology\" object");

  std::vector<std::vector<std::string>> labels;
  std::set<std::string> seen;
  for (const auto& [key, list] : doc["homology"].items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("homology degree '" + key + "' is not a non-negative integer");
    const std::size_t d = std::stoul(key);
    if (d > 64) throw ValidationError("homology degree " + key + " is too large");
    if (!list.is_array()) throw ValidationError("homology degree " + key + " must list labels");
    if (labels.size() <= d) labels.resize(d + 1);
    for (const auto& l : list) {
      if (!l.is_string() || l.get<std::string>().empty())
        throw ValidationError("homology degree " + key + ": labels must be non-empty strings");
      if (!seen.insert(l.get<std::string>()).second)
        throw ValidationError("duplicate homology label '" + l.get<std::string>() + "'");
      labels[d].push_back(l.get<std::string>());
    }
  }
  if (labels.empty()) labels.resize(1);

  CoalgebraStructure s;
  s.complex = std::make_shared<const ChainComplex>(ChainComplex::with_zero_differential(labels));
  s.homology_level = true;
  const ComplexPtr& H = s.complex;
  s.ops.emplace("unit", GradedOperator::identity(H));

  int vertex = -1;
  if (doc.contains("basepoint")) {
    if (!doc["basepoint"].is_string()) throw ValidationError("basepoint must be a label");
    const std::string v = doc["basepoint"].get<std::string>();
    vertex = H->find(v);
    if (vertex < 0 || H->degree(vertex) != 0) throw ValidationError("basepoint '" + v + "' is not a degree 0 label");
    if (H->rank(0) != 1) throw ValidationError("with a basepoint, degree 0 must consist of the basepoint alone");
    GradedOperator p(H, H, 0, 0);
    p.add_to_image(vertex, Word{}, 1);
    s.ops.emplace("p", std::move(p));
  }

  const json ops = doc.contains("operators") ? doc["operators"] : json::object();
  if (!ops.is_object()) throw ValidationError("\"operators\" must be an object");
  for (const auto& [name, table] : ops.items()) {
    const auto [arity, degree] = operator_shape(name);
    if (!table.is_object()) throw ValidationError(name + ": expected an object of images");
    GradedOperator op(H, H, arity, degree);
    for (const auto& [label, terms] : table.items()) {
      const int id = H->find(label);
      if (id < 0) throw ValidationError(name + ": unknown label '" + label + "'");
      if (!terms.is_array()) throw ValidationError(name + "(" + label + "): expected a list of terms");
      for (const auto& t : terms) {
        const std::string where = name + "(" + label + ")";
        if (!t.is_array() || static_cast<int>(t.size()) != arity + 1)
          throw ValidationError(where + ": each term is [coefficient, " + std::to_string(arity) + " labels]");
        Word w;
        for (int i = 1; i <= arity; ++i) {
          if (!t[i].is_string()) throw ValidationError(where + ": labels must be strings");
          const int l = H->find(t[i].get<std::string>());
          if (l < 0) throw ValidationError(where + ": unknown label '" + t[i].get<std::string>() + "'");
          w.push_back(l);
        }
        if (H->degree(w) != H->degree(id) + degree)
          throw ValidationError(where + ": term has degree " + std::to_string(H->degree(w)) + ", expected " +
                                std::to_string(H->degree(id) + degree));
        op.add_to_image(id, w, read_integer(t[0], where));
      }
    }
    s.ops.emplace(name, std::move(op));
  }
  if (!s.has("m2_0")) s.ops.emplace("m2_0", GradedOperator(H, H, 2, 0));
  for (const auto& [name, _] : s.ops)
    if (name.rfind("m2_", 0) == 0 && std::stoi(name.substr(3)) > s.max_cup())
      throw ValidationError("operators m2_0 .. " + name + " must be consecutive");
  if (vertex >= 0) s.ops.at("m2_0") = s.ops.at("m2_0") + counit_terms(H, vertex);

  if (auto diff = s.op("m2_0").first_difference(twist(s.op("m2_0"))))
    throw VerificationFailed("m2_0 is not cocommutative at " + *diff);
  const auto issues = verify_structure(s);
  if (!issues.empty()) throw VerificationFailed(issues.front());
  return s;
}

TransferPackage load_structure_fixture(const std::string& text) {
  const CoalgebraStructure s = parse_coalg(text);
  return transfer(s, identity_sdr(s.complex));
}

Report integer_json(const Integer& k) {
  if (k >= std::numeric_limits<long long>::min() && k <= std::numeric_limits<long long>::max())
    return Report(k.convert_to<long long>());
  return Report(k.str());
}

Report operator_json(const GradedOperator& op) {
  Report out = Report::object();
  const ChainComplex& src = *op.source();
  const ChainComplex& tgt = *op.target();
  for (std::size_t x = 0; x < src.size(); ++x) {
    const TensorChain& img = op.image(static_cast<int>(x));
    if (img.empty()) continue;
    Report terms = Report::array();
    for (const auto& [w, k] : img) {
      Report t = Report::array({integer_json(k)});
      for (int l : w) t.push_back(tgt.label(l));
      terms.push_back(std::move(t));
    }
    out[src.label(static_cast<int>(x))] = std::move(terms);
  }
  return out;
}

Report coalg_document(const CoalgebraStructure& s) {
  if (!s.complex->has_zero_differential()) throw InvalidArgument("coalg_document needs a homology-level structure");
  const ComplexPtr& H = s.complex;
  Report doc = Report::object();
  Report hom = Report::object();
  for (int d = 0; d <= H->top_degree(); ++d) hom[std::to_string(d)] = H->labels()[d];
  doc["homology"] = std::move(hom);
  int vertex = -1;
  if (s.has("p") && H->rank(0) == 1) {
    vertex = H->offset(0);
    doc["basepoint"] = H->label(vertex);
  }
  Report ops = Report::object();
  for (const auto& [name, op] : s.ops) {
    if (name == "p" || name == "unit") continue;
    if (name == "m2_0" && vertex >= 0) {
      ops[name] = operator_json(op - counit_terms(H, vertex));
      continue;
    }
    ops[name] = operator_json(op);
  }
  doc["operators"] = std::move(ops);
  return doc;
}

Report homology_json(const ChainComplex& c, const HomologyReport& h) {
  Report degrees = Report::array();
  Report ranks = Report::array();
  for (const auto& d : h.degrees) {
    Report entry = Report::object();
    entry["degree"] = d.degree;
    entry["rank"] = d.free_rank;
    Report tors = Report::array();
    for (const auto& t : d.torsion) tors.push_back(integer_json(t));
    entry["torsion"] = std::move(tors);
    Report reps = Report::array();
    for (const auto& r : d.representatives) reps.push_back(render(c, r));
    entry["representatives"] = std::move(reps);
    degrees.push_back(std::move(entry));
    ranks.push_back(d.free_rank);
  }
  return Report{{"degrees", std::move(degrees)}, {"ranks", std::move(ranks)}, {"torsion_free", h.torsion_free()}};
}

Report class_json(const InvariantClass& c) {
  const auto s = c.group.structure();
  Report tors = Report::array();
  for (const auto& t : s.torsion) tors.push_back(integer_json(t));
  Report rep = Report::array();
  for (const auto& k : c.representative) rep.push_back(integer_json(k));
  Report support = Report::array();
  for (std::size_t i = 0; i < c.representative.size(); ++i)
    if (c.representative[i] != 0) support.push_back(Report::array({c.coordinates[i], integer_json(c.representative[i])}));
  return Report{{"group", c.group.describe()},
                {"free_rank", s.free_rank},
                {"torsion", std::move(tors)},
                {"representative", std::move(rep)},
                {"support", std::move(support)},
                {"zero", c.is_zero()}};
}

std::string dump(const Report& r) { return r.dump(2) + "\n"; }

}  // namespace ecoalg
