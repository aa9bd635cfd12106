#ifndef PARGI_TOOLS_CLI_H_
#define PARGI_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pargi::cli {

// Exit codes.
inline constexpr int kOk = 0;             // success; for `iso`: isomorphic
inline constexpr int kNotIsomorphic = 1;
inline constexpr int kInputError = 2;     // bad arguments or unparsable input
inline constexpr int kBudgetError = 3;    // memory budget exceeded
inline constexpr int kInconclusive = 4;   // node budget exhausted
inline constexpr int kDeterminismError = 5;

// Runs the command line `args` (without the program name). Results go to
// `out` (or --out), diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pargi::cli

#endif  // PARGI_TOOLS_CLI_H_
