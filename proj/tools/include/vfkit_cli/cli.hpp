#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vfkit/derivation.hpp"
#include "vfkit/errors.hpp"
#include "vfkit/ideal.hpp"
#include "vfkit/polynomial.hpp"

namespace vfkit::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

/// Structurally invalid problem input. The message names the JSON
/// location (e.g. `/D/1/2`) or byte offset of the problem.
class InputError : public Error {
public:
  using Error::Error;
};

/// Parsed problem file: `vars`, `params`, and optional `h`, `D`, `ideal`.
struct Problem {
  VarContext context;
  std::optional<Polynomial> h;
  std::optional<Derivation> d;
  std::optional<Ideal> ideal;
};

/// Parses problem JSON. Throws InputError, or ParseError/DomainError
/// prefixed with the offending field.
Problem parse_problem(std::string_view json_text);
Problem read_problem_file(const std::string& path);

/// Entry point shared by the executable and the tests. `args` excludes
/// the program name. Colors are used only when `terminal` is set and
/// NO_COLOR is absent from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal = false);

}  // namespace vfkit::cli
