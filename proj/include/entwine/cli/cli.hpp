#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entwine::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;  // a mathematical check failed
inline constexpr int kInputError = 2;   // I/O, parse or usage error

inline constexpr const char* kReportSchema = "entwine-report/1";

// Runs one command line (args excludes the program name). Human-readable text goes
// to out, diagnostics to err; --json PATH also writes the structured report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entwine::cli
