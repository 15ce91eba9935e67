#pragma once

// Batch front end: a JSON run description in, a rendered table out.
//
// Config schema (schema_version 1):
//   {
//     "schema_version": 1,
//     "field": "Q" | "F2" | "Fp:<p>",
//     "manifold": {"preset": "sphere", "params": [2]}
//               | {"dim": 2, "rel_betti": {"0": 1, "2": 1}},
//     "n": 1,
//     "label_space": {"preset": "sphere", "params": [2]}
//                  | {"preset": "wedge", "params": [2, 3]}
//                  | {"betti": {"2": 1}},
//     "mode": "theorem_a" | "theorem_b" | "dk_table" | "generators"
//           | "check:ab" | "check:hilton_milnor",
//     "max_degree": 10, "max_weight": 5,
//     "format": "table" | "csv" | "json",
//     "seed": 1, "check_count": 20, "orientable": false
//   }

#include "confhom/assembler.hpp"
#include "confhom/checks.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace confhom::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kConfigError = 3,
  kInputError = 4,
  kIntegrityError = 5,
};

enum class Mode { theorem_a, theorem_b, dk_table, generators, check_ab, check_hilton_milnor };
enum class Format { table, csv, json };

struct ManifoldChoice {
  std::string preset;  // empty for explicit data
  std::vector<int> params;
  std::optional<int> dim;
  GradedBetti rel_betti;
};

struct RunConfig {
  FieldChar field = FieldChar::two();
  std::optional<ManifoldChoice> manifold;
  int n = 1;
  std::optional<std::vector<GradedBetti>> label;  // wedge summands
  Mode mode = Mode::theorem_a;
  int max_degree = 10;
  std::optional<int> max_weight;
  Format format = Format::table;
  std::uint64_t seed = 1;
  int check_count = 20;
  bool orientable = false;
};

FieldChar parse_field(const std::string& text);
Mode parse_mode(const std::string& text);
Format parse_format(const std::string& text);
std::string mode_name(Mode mode);

/// Throws ParseError for malformed structure, InputError for bad values.
RunConfig parse_config(const nlohmann::json& doc);

struct RunResult {
  int exit_code = kOk;
  std::string output;
  std::string error;
};

/// Runs one configuration. Never throws: errors become exit codes.
RunResult run(const RunConfig& config);

/// Full command-line entry point (flags override config-file fields).
int main_entry(int argc, char** argv);

}  // namespace confhom::cli
