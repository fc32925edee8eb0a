#pragma once

#include <optional>
#include <vector>

#include "semicon/semilattice.hpp"

namespace semicon {

  // Backtracking search for a meet-preserving bijection; `result[x]` is the
  // image in `b` of element x of `a`.
  std::optional<std::vector<Element>> find_isomorphism(SemilatticeTable const& a,
                                                       SemilatticeTable const& b);

  inline bool are_isomorphic(SemilatticeTable const& a, SemilatticeTable const& b) {
    return find_isomorphism(a, b).has_value();
  }

  struct CanonicalLabeling {
    // order[p] is the element of the input placed at position p.
    std::vector<Element> order;
    // Automorphism generators discovered while searching; each maps x to gen[x].
    std::vector<std::vector<Element>> automorphisms;
  };

  // Individualisation-refinement search. The resulting order is a linear
  // extension of the input order with 0 first, so the last position always
  // holds a maximal element.
  CanonicalLabeling canonical_labeling(SemilatticeTable const& s);

  // The relabelling of `s` by `order` (position p becomes element p).
  SemilatticeTable relabel(SemilatticeTable const& s, std::vector<Element> const& order);

  SemilatticeTable canonical_form(SemilatticeTable const& s);

}  // namespace semicon
