#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semicon/partition.hpp"
#include "semicon/semilattice.hpp"

namespace semicon {

  inline constexpr std::size_t kBruteForceBound = 25;
  inline constexpr std::size_t kDefaultUbtaBound = 20;
  inline constexpr std::size_t kDualityBound     = 8;

  // S+ = S \ {0} with the partial join x ∨ y, defined iff {x, y} has an upper
  // bound.
  class PartialJoinStructure {
   public:
    explicit PartialJoinStructure(SemilatticeTable host);

    SemilatticeTable const& host() const noexcept {
      return _host;
    }
    UbtaFamily const& ubtas() const noexcept {
      return _ubtas;
    }
    std::size_t size() const noexcept {
      return _host.size();
    }
    std::optional<Element> join(Element x, Element y) const;

   private:
    SemilatticeTable          _host;
    UbtaFamily                _ubtas;
    std::vector<std::uint8_t> _join;  // 0 marks "undefined"; 0 is never a join
  };

  // Closure only has to be checked on UBTAs; comparable pairs join to the
  // larger element.
  bool is_join_closed(PartialJoinStructure const& pj, ElementSet x);

  // Counts join-closed subsets of S+ including the empty set, by scanning all
  // 2^(n-1) subsets.
  std::uint64_t count_join_closed_bruteforce(PartialJoinStructure const& pj,
                                             std::size_t max_n = kBruteForceBound);

  // The same count as 2^(n-1) - |U_1 ∪ ... ∪ U_t| by inclusion-exclusion over
  // UBTA subsets T: |∩_T U_i| = 2^(n-1-|A_T ∪ V_T|) if A_T ∩ V_T = ∅, else 0,
  // where A_T are the antichain elements and V_T the joins.
  std::uint64_t count_join_closed_ie(PartialJoinStructure const& pj,
                                     std::size_t max_ubtas = kDefaultUbtaBound);

  // Inclusion-exclusion when t <= max_ubtas, brute force otherwise.
  std::uint64_t count_join_closed(PartialJoinStructure const& pj,
                                  std::size_t max_ubtas = kDefaultUbtaBound);

  std::vector<ElementSet> join_closed_subsets(PartialJoinStructure const& pj,
                                              std::size_t max_n = kBruteForceBound);

  // x ≡ y iff {u ∈ X : u <= x} = {u ∈ X : u <= y}.
  Partition dual_congruence(PartialJoinStructure const& pj, ElementSet x);

  struct DualityReport {
    std::size_t join_closed_subsets = 0;
    std::size_t congruences         = 0;
    std::size_t inclusions_checked  = 0;
  };

  // Checks that dual_congruence is an inclusion-reversing bijection from the
  // join-closed subsets onto all meet congruences. Throws DualityViolation.
  DualityReport verify_duality(SemilatticeTable const& s, std::size_t max_n = kDualityBound);

}  // namespace semicon
