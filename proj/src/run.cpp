#include "ecoalg/cobar.hpp"
#include "ecoalg/fixtures.hpp"
#include "ecoalg/formats.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace ecoalg {

namespace {

const std::vector<std::string> kCommands = {"validate", "homology", "coalgebra", "transfer",
                                            "cobar",    "invariant", "compare",  "selfcheck"};

template <class F>
auto staged(const std::string& stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const Error& e) {
    throw PipelineError(stage, e);
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Report issues_json(const std::vector<std::string>& issues) { return Report(issues); }

Report error_json(const Error& e) { return Report{{"kind", e.kind()}, {"message", e.what()}}; }

SimplicialSet load_sset(const InputSource& in) {
  SimplicialSet x = staged("parse", [&] { return parse_sset(in.text); });
  staged("validate", [&] { x.require_valid(); });
  return x;
}

CoalgebraStructure load_structure(const InputSource& in, int max_cup) {
  if (in.coalg) return staged("parse", [&] { return parse_coalg(in.text); });
  const SimplicialSet x = load_sset(in);
  return staged("structure", [&] { return chain_structure(x, max_cup); });
}

TransferPackage load_package(const InputSource& in, int max_cup, std::uint64_t seed) {
  if (in.coalg) return staged("parse", [&] { return load_structure_fixture(in.text); });
  const CoalgebraStructure c = load_structure(in, std::min(max_cup, 2));
  const SDR r = staged("sdr", [&] { return build_sdr(c.complex, seed); });
  return staged("transfer", [&] { return transfer(c, r); });
}

Report invariants_json(const TransferPackage& p, bool& ok) {
  Report out = Report::object();
  const std::pair<const char*, std::function<InvariantClass()>> runs[] = {
      {"sq_dual", [&] { return sq_dual_invariant(p); }},
      {"massey", [&] { return massey_invariant(p); }},
  };
  for (const auto& [name, compute] : runs) {
    try {
      out[name] = class_json(compute());
    } catch (const Error& e) {
      out[name] = Report{{"error", error_json(e)}};
      ok = false;
    }
  }
  return out;
}

Report compare_json(const TransferPackage& a, const TransferPackage& b, bool& ok) {
  Report out = Report::object();
  try {
    const StructureComparison cmp = compare_structures(a, b);
    Report diffs = Report::object();
    for (const auto& [name, d] : cmp.differences) diffs[name] = operator_json(d);
    out["structures"] = Report{{"differences", std::move(diffs)},
                               {"k1_solvable", cmp.k1_solvable},
                               {"arity3_solvable", cmp.arity3_solvable},
                               {"message", cmp.message},
                               {"witness", cmp.witness ? operator_json(*cmp.witness) : Report(nullptr)}};
  } catch (const Error& e) {
    out["structures"] = Report{{"error", error_json(e)}};
  }
  const std::pair<const char*, std::function<InvariantClass(const TransferPackage&)>> runs[] = {
      {"sq_dual", [](const TransferPackage& p) { return sq_dual_invariant(p); }},
      {"massey", [](const TransferPackage& p) { return massey_invariant(p); }},
  };
  for (const auto& [name, compute] : runs) {
    try {
      const InvariantClass x = compute(a), y = compute(b);
      out[name] = Report{{"equal", class_equals(x, y)}, {"first", class_json(x)}, {"second", class_json(y)}};
    } catch (const Error& e) {
      out[name] = Report{{"error", error_json(e)}};
      ok = false;
    }
  }
  return out;
}

std::vector<std::string> chains_d_squared(const ChainComplex& c) {
  std::vector<std::string> issues;
  for (std::size_t id = 0; id < c.size(); ++id) {
    const Chain dd = c.boundary_of(c.boundary(static_cast<int>(id)));
    if (!dd.empty()) issues.push_back("d^2 != 0 on " + c.label(static_cast<int>(id)));
  }
  return issues;
}

Report selfcheck(const RunConfig& cfg, bool& ok) {
  Report checks = Report::array();
  auto record = [&](const std::string& name, const std::function<std::vector<std::string>()>& body) {
    std::vector<std::string> issues;
    try {
      issues = body();
    } catch (const Error& e) {
      issues.push_back(e.kind() + ": " + e.what());
    }
    ok = ok && issues.empty();
    checks.push_back(Report{{"check", name}, {"ok", issues.empty()}, {"issues", issues_json(issues)}});
  };

  record("operad d^2 (arity <= 3, degree <= 4, d_n for n <= 5)", [] { return check_d_squared(3, 4, 5); });
  for (const auto& name : fixture_names()) {
    const InputSource in{name, fixture_text(name), ends_with(name, ".coalg")};
    if (in.coalg) {
      record(name + ": relations", [&] { return verify_relations(load_structure_fixture(in.text)); });
      continue;
    }
    const SimplicialSet x = load_sset(in);
    const CoalgebraStructure c = chain_structure(x, cfg.max_cup);
    record(name + ": chains d^2", [&] { return chains_d_squared(*c.complex); });
    record(name + ": counit, ladder up to cup-" + std::to_string(cfg.max_cup), [&] { return verify_structure(c); });
    record(name + ": coassociativity", [&] {
      const GradedOperator& m0 = c.op("m2_0");
      auto diff = compose(m0, m0, 1).first_difference(compose(m0, m0, 2));
      return diff ? std::vector<std::string>{"differs at " + *diff} : std::vector<std::string>{};
    });
    if (c.complex->rank(0) == 1)
      record(name + ": cobar D^2 (N = " + std::to_string(cfg.max_len) + ")",
             [&] { return check_d_squared_cobar(build_cobar(c, cfg.max_len)); });
    if (homology(*c.complex).torsion_free())
      record(name + ": transfer relations", [&] {
        const SDR r = build_sdr(c.complex, cfg.seed);
        auto issues = verify_sdr(r);
        for (const auto& s : verify_relations(transfer(c, r))) issues.push_back(s);
        return issues;
      });
  }
  return checks;
}

}  // namespace

InputSource resolve_input(const std::string& ref) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(ref, ec)) {
    std::ifstream file(ref, std::ios::binary);
    std::ostringstream text;
    text << file.rdbuf();
    if (!file) throw InvalidArgument("cannot read '" + ref + "'");
    return InputSource{ref, text.str(), ends_with(ref, ".coalg")};
  }
  for (const auto& name : fixture_names())
    if (name == ref || name == ref + ".sset" || name == ref + ".coalg")
      return InputSource{name, fixture_text(name), ends_with(name, ".coalg")};
  throw InvalidArgument("'" + ref + "' is neither a readable file nor a bundled fixture");
}

Report error_report(const RunConfig& config, const std::string& stage, const std::string& kind,
                    const std::string& message) {
  return Report{{"command", config.command},
                {"inputs", config.inputs},
                {"ok", false},
                {"error", Report{{"kind", kind}, {"message", message}, {"stage", stage}}}};
}

Report run(const RunConfig& cfg) {
  staged("config", [&] {
    if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end())
      throw InvalidArgument("unknown command '" + cfg.command + "'");
    if (cfg.max_cup < 0) throw InvalidArgument("--max-cup must be non-negative");
    if (cfg.max_len < 1) throw InvalidArgument("--max-len must be at least 1");
    const std::size_t n = cfg.inputs.size();
    if (cfg.command == "selfcheck" && n != 0) throw InvalidArgument("selfcheck takes no inputs");
    if (cfg.command == "compare" && (n < 1 || n > 2)) throw InvalidArgument("compare takes one or two inputs");
    if (cfg.command != "selfcheck" && cfg.command != "compare" && n != 1)
      throw InvalidArgument(cfg.command + " takes exactly one input");
  });
  std::vector<InputSource> inputs;
  for (const auto& ref : cfg.inputs) inputs.push_back(staged("input", [&] { return resolve_input(ref); }));

  Report report = Report::object();
  report["command"] = cfg.command;
  Report names = Report::array();
  for (const auto& in : inputs) names.push_back(in.name);
  report["inputs"] = std::move(names);
  report["config"] = Report{{"max_cup", cfg.max_cup}, {"max_len", cfg.max_len}, {"seed", cfg.seed}};
  bool ok = true;
  Report result = Report::object();
  const std::string& cmd = cfg.command;

  if (cmd == "validate") {
    const InputSource& in = inputs[0];
    std::vector<std::string> issues;
    if (in.coalg) {
      issues = verify_relations(staged("parse", [&] { return load_structure_fixture(in.text); }));
    } else {
      const SimplicialSet x = staged("parse", [&] { return parse_sset(in.text); });
      for (const auto& i : x.validate()) issues.push_back(describe(i));
      result["counts"] = x.counts();
    }
    ok = issues.empty();
    result["valid"] = ok;
    result["issues"] = issues_json(issues);
  } else if (cmd == "homology") {
    const InputSource& in = inputs[0];
    ComplexPtr c;
    if (in.coalg) {
      c = staged("parse", [&] { return parse_coalg(in.text); }).complex;
    } else {
      const SimplicialSet x = load_sset(in);
      c = staged("chains", [&] { return std::make_shared<const ChainComplex>(normalized_chains(x)); });
    }
    result = staged("analysis", [&] { return homology_json(*c, homology(*c)); });
  } else if (cmd == "coalgebra") {
    const CoalgebraStructure c = load_structure(inputs[0], cfg.max_cup);
    Report ops = Report::object();
    for (const auto& [name, op] : c.ops)
      if (name != "unit") ops[name] = operator_json(op);
    result["operators"] = std::move(ops);
    result["max_cup"] = c.max_cup();
    result["verification"] = issues_json(verify_structure(c));
  } else if (cmd == "transfer") {
    const TransferPackage p = load_package(inputs[0], cfg.max_cup, cfg.seed);
    Report morphism = Report::object();
    for (const auto& [name, op] : p.morphism) morphism[name] = operator_json(op);
    result["structure"] = coalg_document(p.target);
    result["morphism"] = std::move(morphism);
    const auto issues = verify_relations(p);
    ok = issues.empty();
    result["verification"] = issues_json(issues);
  } else if (cmd == "cobar") {
    const CoalgebraStructure c = load_structure(inputs[0], 0);
    const TruncatedCobar t = staged("analysis", [&] { return build_cobar(c, cfg.max_len); });
    const auto pieces = staged("analysis", [&] { return gr_h0(t); });
    Report ranks = Report::array(), rows = Report::array();
    for (const auto& g : pieces) {
      Report tors = Report::array();
      for (const auto& k : g.torsion) tors.push_back(integer_json(k));
      rows.push_back(Report{{"length", g.length}, {"rank", g.rank}, {"torsion", std::move(tors)}});
      ranks.push_back(g.rank);
    }
    const auto issues = check_d_squared_cobar(t);
    ok = issues.empty();
    result["ranks"] = std::move(ranks);
    result["pieces"] = std::move(rows);
    result["d_squared"] = issues_json(issues);
  } else if (cmd == "invariant") {
    const TransferPackage p = load_package(inputs[0], cfg.max_cup, cfg.seed);
    const Window w = staged("analysis", [&] { return window(p.target); });
    result["h1"] = w.h1;
    result["h2"] = w.h2;
    result["invariants"] = invariants_json(p, ok);
  } else if (cmd == "compare") {
    const TransferPackage a = load_package(inputs[0], cfg.max_cup, cfg.seed);
    const TransferPackage b = inputs.size() == 2 ? load_package(inputs[1], cfg.max_cup, cfg.seed)
                                                 : load_package(inputs[0], cfg.max_cup, cfg.seed + 1);
    if (inputs.size() == 1) result["seeds"] = Report::array({cfg.seed, cfg.seed + 1});
    result["comparison"] = compare_json(a, b, ok);
  } else {
    result["checks"] = selfcheck(cfg, ok);
  }
  report["ok"] = ok;
  report["result"] = std::move(result);
  return report;
}

}  // namespace ecoalg
