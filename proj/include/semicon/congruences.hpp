#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "semicon/partition.hpp"
#include "semicon/semilattice.hpp"

namespace semicon {

  inline constexpr std::size_t kDefaultCongruenceBound = 10;
  inline constexpr std::size_t kBellScanBound          = 8;
  inline constexpr std::size_t kIntervalCountBound     = 24;

  bool is_meet_congruence(SemilatticeTable const& s, Partition const& p);

  // The least meet congruence collapsing every pair.
  Partition congruence_generated(SemilatticeTable const&                      s,
                                 std::span<std::pair<Element, Element> const> pairs);

  // Join of two congruences, re-closed under meet compatibility.
  Partition congruence_join(SemilatticeTable const& s, Partition const& a, Partition const& b);

  // All meet congruences, generated as joins of principal congruences, in
  // listing_order.
  std::vector<Partition> all_meet_congruences(SemilatticeTable const& s,
                                              std::size_t             max_n = kDefaultCongruenceBound);

  // Same result via a scan over every set partition (restricted growth
  // strings); only for n <= kBellScanBound.
  std::vector<Partition> all_meet_congruences_bell(SemilatticeTable const& s);

  struct Quotient {
    SemilatticeTable        table;
    // blocks[i] is the set of elements mapped to element i of the quotient.
    std::vector<ElementSet> blocks;
  };

  Quotient quotient(SemilatticeTable const& s, Partition const& p);

  // A finite meet semilattice is a lattice iff it has a greatest element.
  bool is_lattice(SemilatticeTable const& s);

  // Join in a lattice (requires is_lattice).
  Element lattice_join(SemilatticeTable const& s, Element x, Element y);

  bool is_lattice_congruence(SemilatticeTable const& s, Partition const& p);

  std::vector<Partition> all_lattice_congruences(SemilatticeTable const& s,
                                                 std::size_t max_n = kDefaultCongruenceBound);

  // Number of equivalences on S all of whose blocks are intervals [a, b].
  std::uint64_t count_interval_block_equivalences(SemilatticeTable const& s,
                                                  std::size_t max_n = kIntervalCountBound);

}  // namespace semicon
