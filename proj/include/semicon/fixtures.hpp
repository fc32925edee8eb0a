#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semicon/semilattice.hpp"
#include "semicon/structure.hpp"

namespace semicon {

  // Quasi-trees with nuclei B4 (6 elements), N5 (12), F and N6 (13)
  // from a nucleus, a chain hung below it and a chain attached above one of
  // its elements.
  struct Fixture {
    std::string      name;
    SemilatticeTable table;
    SemilatticeClass klass;
    std::uint64_t    expected_count;
  };

  std::vector<Fixture> quasi_tree_fixtures();

}  // namespace semicon
