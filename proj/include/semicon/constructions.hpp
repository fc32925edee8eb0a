#pragma once

#include <string_view>
#include <vector>

#include "semicon/semilattice.hpp"

namespace semicon {

  // Named semilattices. Labelings (see docs/formats.md):
  //   chain_k  0 < 1 < ... < k-1
  //   b4       0, a=1, b=2, top=3
  //   n5       0, a=1, b=2, c=3, top=4 with a < c
  //   m3       0, a=1, b=2, c=3, top=4
  //   f        u=0, a=1, b=2, c=3, v1=4 (above a, b), v2=5 (above b, c)
  //   n6       u=0, a1=1, a2=2, a3=3, b=4, v=5 with a1 < a2 < a3
  //   grid2x3  3*i + j for (i, j) in 2-chain x 3-chain
  SemilatticeTable named(std::string_view name);

  SemilatticeTable chain(std::size_t k);

  // A copy of the tree `t` hung above x: t's least element becomes a new
  // element covering x. Throws NotATree unless t is a tree semilattice.
  SemilatticeTable attach_above(SemilatticeTable const& s, Element x, SemilatticeTable const& t);

  // A k-element chain hung below the least element; old element i becomes
  // k + i.
  SemilatticeTable extend_below(SemilatticeTable const& s, std::size_t k);

  // The sub-semilattice on a meet-closed subset, with its least element
  // relabelled 0 and the rest in ascending index order. `elements()` of the
  // result maps new labels back.
  struct Restriction {
    SemilatticeTable     table;
    std::vector<Element> elements;
  };
  Restriction restrict_to(SemilatticeTable const& s, ElementSet x);

  // Removes a maximal element; labels above it shift down by one.
  SemilatticeTable remove_maximal(SemilatticeTable const& s, Element x);

  // Adds a new maximal element (labelled n) whose strict down-set is `below`.
  // `below` must be a valid extension set, see extension_sets().
  SemilatticeTable add_maximal(SemilatticeTable const& s, Mask below);

  // All down-sets D of s such that adjoining a new element above exactly D
  // gives a meet semilattice: D is nonempty, down-closed, and D ∩ ↓y has a
  // greatest element for every y.
  std::vector<Mask> extension_sets(SemilatticeTable const& s);

}  // namespace semicon
