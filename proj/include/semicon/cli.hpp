#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semicon::cli {

  // Exit codes.
  inline constexpr int kOk           = 0;
  inline constexpr int kClaimFailed  = 1;
  inline constexpr int kInvalidInput = 2;
  inline constexpr int kIoError      = 3;

  // Runs the command line (args exclude the program name) against the given
  // streams and returns the exit code. Default bounds come from
  // SEMICON_MAX_N and SEMICON_MAX_UBTAS when set; flags override them.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace semicon::cli
