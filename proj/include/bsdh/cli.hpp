#pragma once

// Command line front end.  Commands: expand, basis, mori, fano, ample,
// enumerate, report.  Exit codes: 0 success, 1 usage (bad flags, missing
// input, malformed JSON), 2 validation, 3 integer overflow, 4 internal
// algorithm disagreement.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsdh::cli {

enum class Command { expand, basis, mori, fano, ample, enumerate_cmd, report };
enum class Format { text, json };
enum class Method { fast, oracle, coroot };
enum class Algorithm { comp, weyl };

struct RunConfig {
  Command command = Command::expand;
  std::optional<std::string> type_token;   // e.g. "A2"
  std::optional<std::string> cartan_file;  // JSON root-system fragment
  std::vector<int> word;
  std::optional<std::vector<int>> seq;
  std::optional<std::string> divisor_file;
  Method method = Method::fast;
  Algorithm algorithm = Algorithm::comp;
  Format format = Format::text;
  int max_enumerate = 20;
};

// Thrown for flag-level problems; mapped to exit code 1.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signals --help / --version handled by the parser (exit 0, output already
// written).
struct early_exit {};

// Parses argv-style arguments (without the program name).  Throws
// usage_error or early_exit; CLI11 does flag syntax, this layer checks the
// command-level requirements (exactly one root-system source, required
// flags per command).
RunConfig parse_input(const std::vector<std::string>& args, std::ostream& out);

// Executes a validated config.  Writes results to out; throws the library
// error types on failure.
void run(const RunConfig& config, std::ostream& out);

// Full pipeline with error-to-exit-code mapping; never throws.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsdh::cli
