#ifndef TFN_CLI_HPP
#define TFN_CLI_HPP

// Command-line front end.
//
//   tfn aggregate --method mean|wmean|min|max [--weights w1,w2,...] [--check] FILE
//   tfn sort FILE
//   tfn classify FILE
//   tfn cut --alpha X FILE
//   tfn arith --op add|sub|mul|div|neg (--rhs FILE | --scalar R) FILE
//
// Common flags: --format csv|json (default: the input's format), --exact
// (17 significant digits instead of 12). FILE may be '-' for standard input.
//
// Exit codes: 0 success, 1 internal error, 2 usage or validation error.

#include <iosfwd>
#include <span>
#include <string>

namespace fuzzy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name. Files named in args
/// are resolved against the current directory; '-' reads from in.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fuzzy::cli

#endif  // TFN_CLI_HPP
