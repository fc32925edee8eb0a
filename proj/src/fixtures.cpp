#include "semicon/fixtures.hpp"

#include "semicon/constructions.hpp"

namespace semicon {

  namespace {
    // nucleus with `below` chain elements under it and a chain of `above`
    // elements attached over nucleus element `at`
    SemilatticeTable shaped(char const* nucleus, std::size_t below, Element at, std::size_t above) {
      auto base = extend_below(named(nucleus), below);
      if (above == 0) {
        return base;
      }
      return attach_above(base, static_cast<Element>(below) + at, chain(above));
    }
  }  // namespace

  std::vector<Fixture> quasi_tree_fixtures() {
    using C = SemilatticeClass;
    return {
        {"b4-below2", shaped("b4", 2, 0, 0), C::NucleusB4, 28},
        {"b4-over-top", shaped("b4", 0, 3, 2), C::NucleusB4, 28},
        {"b4-over-atom", shaped("b4", 1, 1, 1), C::NucleusB4, 28},
        {"n5-below7", shaped("n5", 7, 0, 0), C::NucleusN5, 1664},
        {"n5-over-top", shaped("n5", 3, 4, 4), C::NucleusN5, 1664},
        {"n5-over-a", shaped("n5", 3, 1, 4), C::NucleusN5, 1664},
        {"n5-over-b", shaped("n5", 3, 2, 4), C::NucleusN5, 1664},
        {"f-over-v1", shaped("f", 3, 4, 4), C::NucleusF, 3200},
        {"f-over-b", shaped("f", 3, 2, 4), C::NucleusF, 3200},
        {"n6-over-v", shaped("n6", 3, 5, 4), C::NucleusN6, 3200},
        {"n6-over-b", shaped("n6", 3, 4, 4), C::NucleusN6, 3200},
    };
  }

}  // namespace semicon
