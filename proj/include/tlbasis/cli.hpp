#pragma once

#include <iosfwd>
#include <string>

namespace tlbasis::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   // verify found a counterexample
  kBadInput = 2,      // malformed JSON or command line
  kPrecondition = 3,  // domain precondition violated
  kInvariant = 4,     // internal consistency failure
};

struct Config {
  int n = 0;  // 0: not set
  int max_n = 8;
  std::string out;
  std::string format;
  std::string order_tiebreak = "lexicographic";
};

// Reads {"n":..,"max_n":..,"out":..,"format":..,"order_tiebreak":..}.
Config load_config(const std::string& path);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Writes to a sibling temporary file and renames it into place.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace tlbasis::cli
