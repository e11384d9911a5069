#pragma once

#include <stdexcept>
#include <string>

namespace ehspline::cli {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadFlags = 2,
  kDomainError = 3,
  kMalformedInput = 4,
  kUnwritableOutput = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input that is not a well-formed curve document (syntax, schema, lengths, I/O).
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ehspline::cli
