#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "semicon/semilattice.hpp"
#include "semicon/structure.hpp"

namespace semicon {

  struct EnumerationOptions {
    std::size_t max_n   = 9;
    // 0 picks std::thread::hardware_concurrency(); output never depends on it.
    unsigned    threads = 1;
  };

  // One canonical representative per isomorphism class of n-element meet
  // semilattices, sorted by table. Grown by adding a maximal element to each
  // (n-1)-element representative and keeping a child only when deleting its
  // canonically last element gives back the same parent.
  std::vector<SemilatticeTable> enumerate_semilattices(std::size_t n, EnumerationOptions opts = {});

  // Congruence count used for spectra: join-closed subsets of S+.
  std::uint64_t congruence_count(SemilatticeTable const& s);

  struct WitnessList {
    std::size_t                   total = 0;
    std::vector<SemilatticeTable> tables;  // at most the configured cap
  };

  struct Spectrum {
    std::size_t                          n;
    std::vector<std::uint64_t>           values;  // ascending
    std::map<std::uint64_t, WitnessList> witnesses;
  };

  struct SpectrumOptions {
    EnumerationOptions enumeration{};
    bool               with_witnesses = false;
    std::size_t        witness_cap    = 64;
  };

  Spectrum spectrum(std::size_t n, SpectrumOptions opts = {});

  struct TopValue {
    std::uint64_t              value;
    std::size_t                semilattices;
    std::set<SemilatticeClass> classes;
  };

  // The m largest spectrum values with the classes of all their witnesses.
  std::vector<TopValue> top_values(std::size_t n, std::size_t m, EnumerationOptions opts = {});

}  // namespace semicon
