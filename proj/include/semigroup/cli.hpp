#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semigroup/closed_forms.hpp"
#include "semigroup/core.hpp"
#include "semigroup/families.hpp"

namespace semigroup::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kMismatch = 2,
  kOracleInfeasible = 3,
};

/// One computed semigroup, as printed by every per-semigroup subcommand.
struct OutputRecord {
  // Input echo: the generators always; the family parameters and name when
  // the semigroup came from them.
  std::vector<Integer> generators;
  std::optional<FamilyParams> params;
  std::optional<std::string> family;

  Engine engine = Engine::oracle;
  Integer frobenius;
  Integer genus;
  // Absent only when a frobenius or genus query could not afford the Apery
  // set; the type is pf->size().
  std::optional<std::vector<Integer>> pf;
  std::optional<std::vector<Integer>> apery;
  std::optional<std::vector<Integer>> gaps;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& value);

nlohmann::json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);

/// Entry point shared by the binary and the tests. `args` excludes the program
/// name. Machine output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semigroup::cli
