// SPDX-License-Identifier: Apache-2.0
//
// Group-spec files, JSON reports and the on-disk report cache behind the
// equisolid command-line tool.

#ifndef EQUISOLID_CLI_HPP_
#define EQUISOLID_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "equisolid/classifier.hpp"
#include "equisolid/error.hpp"

namespace equisolid::cli {

constexpr const char* kSchema = "equisolid-report/1";

using Json = nlohmann::ordered_json;

/// Spec syntax error; position() is the offset into the whole text.
class SpecError : public ParseError {
 public:
  SpecError(const std::string& msg, std::size_t pos, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct GeneratorSpec {
  std::vector<Mat> matrices;     // one for P2, two for P1xP1 and dP6
  bool swap = false;
  std::vector<int> permutation;  // dP5

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct GroupSpec {
  SurfaceKind surface = SurfaceKind::P2;
  std::vector<GeneratorSpec> generators;
  AssertedFacts facts;  // asserted surfaces only
  std::optional<std::string> name;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Lines of the form `key = value`; `#` starts a comment. Keys: surface,
/// name, gen (repeatable), rank_one, fixes_general_point.
///
///   surface = "P1xP1"
///   gen = [[0, 1], [1, 0]], [[1, 0], [0, 1]], swap = 1
///
/// dP5 generators are permutation lists `[1, 2, 3, 4, 0]`; asserted surfaces
/// are written `asserted<degree>` and take no generators.
GroupSpec parse_spec(std::string_view text);
std::string render(const GroupSpec& spec);

ClassifyInput to_input(const GroupSpec& spec);
GroupSpec spec_from_input(const ClassifyInput& input);
GroupSpec catalog_spec(const std::string& name);

std::string matrix_literal(const Mat& m);

std::uint64_t fnv1a(std::string_view data);

struct Options {
  std::size_t max_length = 8;
  bool timing = false;
  bool use_cache = true;
  /// Falls back to the EQUISOLID_CACHE_DIR environment variable; no caching if neither is set.
  std::optional<std::string> cache_dir;
};

struct Outcome {
  Json report;
  int exit_code = 0;
  bool from_cache = false;
};

const std::vector<std::string>& commands();

/// Runs one command. Every command except `catalog` needs a spec. Failures
/// are reported in the JSON with exit code 1 rather than thrown.
Outcome run_command(const std::string& command, const std::optional<GroupSpec>& spec,
                    const Options& options = {});

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& report);

}  // namespace equisolid::cli

#endif  // EQUISOLID_CLI_HPP_
