#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "dflow/branching.hpp"
#include "dflow/document.hpp"

namespace dflow {

namespace exit_code {
constexpr int ok = 0;
constexpr int parse = 1;
constexpr int validation = 2;
constexpr int negative = 3;  // inexact sequence or non-member
constexpr int size_guard = 4;
}  // namespace exit_code

struct CommandOptions {
  CofibrancyMode mode = CofibrancyMode::strict;
  Side side = Side::minus;
  int max_dim = 3;
  std::optional<std::string> state;
  bool dump = false;
  int st_class = 0;
};

struct CommandResult {
  Json structured;
  std::string text;
  int exit_code = exit_code::ok;
};

/// verb is one of validate, branch, merge, homology, les, check, essential.
/// Errors are turned into reports with the matching exit code.
CommandResult run_command(const std::string& verb, const std::filesystem::path& file,
                          const CommandOptions& options);

}  // namespace dflow
