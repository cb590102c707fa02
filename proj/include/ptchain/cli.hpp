#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptchain::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kInputError = 1,  // validation failure or malformed input
  kBudget = 2,
  kInternal = 3,  // a certificate failed re-verification
};

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace ptchain::cli
