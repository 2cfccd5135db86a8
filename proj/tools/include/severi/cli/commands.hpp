#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace severi::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsageError = 2,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and help text for usage errors to `err`.
///
///   lat enum --index N [--csv FILE]
///   lat count --d D --g G
///   part enum|graph|connected|path --d D --k K [--dot FILE] [--csv FILE] [--from PARTITION]
///   symp verify --d D --k K [--bound B]
///   game play --poly EXPR --mu M [--max-rounds R] [--precision P] [--trace] [--csv FILE]
///   game polygon --poly EXPR [--precision P]
///   game findmu --poly EXPR --mu-max M [--max-rounds R] [--precision P]
///
/// A global --json flag switches standard output to JSON.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace severi::cli
