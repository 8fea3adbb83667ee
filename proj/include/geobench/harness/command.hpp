#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace geobench {

struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout and stderr, interleaved
};

/// Runs an external command line. The default goes through /bin/sh.
using CommandRunner = std::function<CommandResult(const std::string& command)>;
CommandResult run_shell(const std::string& command);

/// Byte total of a regular file or of every regular file below a
/// directory; nullopt when the path does not exist.
std::optional<std::uint64_t> path_bytes(const std::filesystem::path& path);

/// Single-quoted for /bin/sh.
std::string shell_quote(const std::string& s);

}  // namespace geobench
