#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace uztranslit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

inline constexpr const char* kLexiconEnv = "UZTRANSLIT_LEXICON";

/// Runs the command line (without the program name). Subcommands:
///   translit (default)  --from X --to Y [--in PATH] [--out PATH] [--no-normalize] [--lexicon PATH]
///   eval                --data PATH [--format table|kv] [--out PATH] [--lexicon PATH]
///   rules               --from X --to Y
/// Returns 0 on success, 1 on usage errors, 2 on I/O or data errors.
int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace uztranslit::cli
