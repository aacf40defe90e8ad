#pragma once

#include <optional>
#include <string>
#include <vector>

namespace jjalg {

/// One line of a command report.
struct Finding {
  std::string name;
  std::string verdict;
  std::string witness;     // empty when there is none
  std::optional<bool> ok;  // set when the finding is checked against an expectation

  friend bool operator==(const Finding &, const Finding &) = default;
};

enum class ExitStatus : int { Success = 0, CheckFailed = 1, InputError = 2 };

struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string command;
  ExitStatus status = ExitStatus::Success;
  std::vector<Finding> findings;
  std::vector<std::string> notes;
  /// Document produced by the command (algebra file, Groebner basis listing).
  std::string payload;

  Report &add(std::string name, std::string verdict, std::string witness = {},
              std::optional<bool> ok = std::nullopt);

  /// Aligned columns: name, verdict, witness; then notes and payload.
  std::string to_text() const;
  /// One JSON document carrying `schema_version`.
  std::string to_json() const;
  /// Throws std::invalid_argument on malformed input or a schema mismatch.
  static Report from_json(const std::string &text);

  friend bool operator==(const Report &, const Report &) = default;
};

} // namespace jjalg
