#pragma once

#include "ecoalg/errors.hpp"
#include "ecoalg/invariants.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ecoalg {

/// Reports are JSON objects; nlohmann::json keeps object keys sorted, so a dump
/// is byte-identical for identical input and configuration.
using Report = nlohmann::json;

/// Homology-level structure read from a `.coalg` document:
///
///   { "basepoint": "v",                        (optional)
///     "homology": { "0": ["v"], "1": ["a", "b"], ... },
///     "operators": { "m2_0": { "s": [[1, "a", "b"], [-1, "b", "a"]] }, ... } }
///
/// Operator names are m2_k (k >= 0) and m3_1. Coefficients are integers or
/// decimal strings. With a basepoint the counit terms v⊗x + x⊗v (v ↦ v⊗v) are
/// added to m2_0 and must not be written out. m2_0 must be cocommutative and
/// every tabulated relation must hold; otherwise VerificationFailed.
CoalgebraStructure parse_coalg(const std::string& text);

/// `.coalg` loader that also returns the identity transfer package, so that the
/// usual relation checks apply to fixtures.
TransferPackage load_structure_fixture(const std::string& text);

/// Inverse of parse_coalg for a homology-level structure.
Report coalg_document(const CoalgebraStructure& s);

Report integer_json(const Integer& k);
/// {label: [[coef, label_1, ..., label_n], ...]} over nonzero images.
Report operator_json(const GradedOperator& op);
Report homology_json(const ChainComplex& c, const HomologyReport& h);
Report class_json(const InvariantClass& c);

/// Stable text form: two-space indent, trailing newline.
std::string dump(const Report& r);

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  int max_cup = 3;
  int max_len = 4;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
  int verbosity = 0;
};

/// A resolved input: a file on disk, or else a bundled fixture name with or
/// without extension.
struct InputSource {
  std::string name;
  std::string text;
  bool coalg = false;
};

InputSource resolve_input(const std::string& ref);

/// An error raised inside run(), tagged with the pipeline stage
/// (input, parse, validate, chains, structure, sdr, transfer, analysis).
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, const Error& cause) : Error(cause.kind(), cause.what()), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Runs one command. Pipeline errors surface as PipelineError.
/// Partial results (an invariant that cannot be computed, a failed check) are
/// reported in the body and flagged by `"ok": false`.
Report run(const RunConfig& config);

/// Machine-readable form of an error, naming the stage that raised it.
Report error_report(const RunConfig& config, const std::string& stage, const std::string& kind,
                    const std::string& message);

}  // namespace ecoalg
