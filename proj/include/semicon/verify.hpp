#pragma once

#include <string>
#include <vector>

namespace semicon {

  struct ClaimResult {
    std::string id;
    std::string statement;
    bool        passed;
    std::string detail;
    double      seconds;
  };

  // Runs every checkable claim at sizes up to n_max (each claim caps its own
  // range) and reports one result per claim.
  std::vector<ClaimResult> verify_claims(std::size_t n_max, unsigned threads = 1);

}  // namespace semicon
