// Python module ecoalg._core. Structured results cross the boundary as JSON
// text; the package wrapper turns them into dicts.
#include "ecoalg/cobar.hpp"
#include "ecoalg/fixtures.hpp"
#include "ecoalg/formats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ecoalg;

namespace {

// Accepts sset text, `.coalg` text, a file path or a bundled fixture name.
InputSource source(const std::string& ref) {
  const auto brace = ref.find_first_not_of(" \t\r\n");
  if (brace != std::string::npos && ref[brace] == '{') return InputSource{"<text>", ref, true};
  if (ref.find('\n') != std::string::npos) return InputSource{"<text>", ref, false};
  return resolve_input(ref);
}

CoalgebraStructure structure(const InputSource& in, int max_cup) {
  return in.coalg ? parse_coalg(in.text) : chain_structure(parse_sset(in.text), max_cup);
}

TransferPackage package(const InputSource& in, std::uint64_t seed) {
  if (in.coalg) return load_structure_fixture(in.text);
  const CoalgebraStructure c = chain_structure(parse_sset(in.text), 2);
  return transfer(c, build_sdr(c.complex, seed));
}

std::string homology_report(const std::string& ref) {
  const InputSource in = source(ref);
  const ChainComplex c = in.coalg ? *parse_coalg(in.text).complex : normalized_chains(parse_sset(in.text));
  return homology_json(c, homology(c)).dump();
}

std::vector<std::string> validate(const std::string& ref) {
  const InputSource in = source(ref);
  if (in.coalg) return verify_relations(load_structure_fixture(in.text));
  std::vector<std::string> out;
  for (const auto& i : parse_sset(in.text).validate()) out.push_back(describe(i));
  return out;
}

std::string coalgebra(const std::string& ref, int max_cup) {
  const CoalgebraStructure c = structure(source(ref), max_cup);
  Report ops = Report::object();
  for (const auto& [name, op] : c.ops)
    if (name != "unit") ops[name] = operator_json(op);
  return ops.dump();
}

std::string transfer_structure(const std::string& ref, std::uint64_t seed) {
  const TransferPackage p = package(source(ref), seed);
  return Report{{"structure", coalg_document(p.target)}, {"verification", verify_relations(p)}}.dump();
}

std::pair<std::vector<std::size_t>, std::vector<std::vector<std::string>>> cobar(const std::string& ref, int n) {
  const TruncatedCobar t = build_cobar(structure(source(ref), 0), n);
  std::pair<std::vector<std::size_t>, std::vector<std::vector<std::string>>> out;
  for (const auto& g : gr_h0(t)) {
    out.first.push_back(g.rank);
    std::vector<std::string> tors;
    for (const auto& k : g.torsion) tors.push_back(k.str());
    out.second.push_back(std::move(tors));
  }
  return out;
}

std::string invariant(const std::string& ref, const std::string& which, std::uint64_t seed) {
  const TransferPackage p = package(source(ref), seed);
  if (which == "massey") return class_json(massey_invariant(p)).dump();
  if (which == "sq") return class_json(sq_dual_invariant(p)).dump();
  throw InvalidArgument("unknown invariant '" + which + "' (expected massey or sq)");
}

bool same_class(const std::string& a, const std::string& b, const std::string& which, std::uint64_t seed_a,
                std::uint64_t seed_b) {
  const TransferPackage p = package(source(a), seed_a), q = package(source(b), seed_b);
  if (which == "massey") return class_equals(massey_invariant(p), massey_invariant(q));
  if (which == "sq") return class_equals(sq_dual_invariant(p), sq_dual_invariant(q));
  throw InvalidArgument("unknown invariant '" + which + "' (expected massey or sq)");
}

std::string run_command(const std::string& command, const std::vector<std::string>& inputs, int max_cup, int max_len,
                        std::uint64_t seed) {
  RunConfig cfg;
  cfg.command = command;
  cfg.inputs = inputs;
  cfg.max_cup = max_cup;
  cfg.max_len = max_len;
  cfg.seed = seed;
  return run(cfg).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact E-infinity coalgebra toolkit (C++ core)";

  static py::exception<Error> error(m, "EcoalgError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
      inst.attr("kind") = e.kind();
      if (const auto* pe = dynamic_cast<const PipelineError*>(&e)) inst.attr("stage") = pe->stage();
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  m.def("fixture_names", &fixture_names);
  m.def("fixture_text", &fixture_text, py::arg("name"));
  m.def("validate", &validate, py::arg("source"), "Violations of a .sset or .coalg input; empty when valid.");
  m.def("homology", &homology_report, py::arg("source"));
  m.def("coalgebra", &coalgebra, py::arg("source"), py::arg("max_cup") = 3);
  m.def("transfer", &transfer_structure, py::arg("source"), py::arg("seed") = 0);
  m.def("cobar", &cobar, py::arg("source"), py::arg("max_len") = 4,
        "Ranks and torsion of the word-length graded pieces of H0.");
  m.def("invariant", &invariant, py::arg("source"), py::arg("which"), py::arg("seed") = 0);
  m.def("same_class", &same_class, py::arg("a"), py::arg("b"), py::arg("which"), py::arg("seed_a") = 0,
        py::arg("seed_b") = 0);
  m.def("check_d_squared", &check_d_squared, py::arg("max_arity") = 3, py::arg("max_degree") = 4,
        py::arg("max_d") = 5);
  m.def("run", &run_command, py::arg("command"), py::arg("inputs") = std::vector<std::string>{},
        py::arg("max_cup") = 3, py::arg("max_len") = 4, py::arg("seed") = 0);
}
