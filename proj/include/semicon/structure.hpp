#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "semicon/partition.hpp"
#include "semicon/semilattice.hpp"

namespace semicon {

  // Congruence generated by (a∧b, a∨b) over all UBTAs {a, b}.
  Partition tree_congruence(SemilatticeTable const& s);

  bool is_tree(SemilatticeTable const& s);

  // Tree congruence has exactly one nonsingleton block.
  bool             is_quasi_tree(SemilatticeTable const& s);
  ElementSet       nucleus(SemilatticeTable const& s);
  SemilatticeTable skeleton(SemilatticeTable const& s);

  struct ConvexBlockCheck {
    bool condition_b;
    bool is_congruence;
  };

  // For a convex subsemilattice X with |X| >= 2 and u = ⋀X: condition_b says
  // u∧c = v∧c for every c outside ↑u and every maximal v of X; is_congruence
  // tests the partition whose only nonsingleton block is X.
  ConvexBlockCheck convex_block_congruence_check(SemilatticeTable const& s, ElementSet x);

  enum class SemilatticeClass { Tree, NucleusB4, NucleusN5, NucleusF, NucleusN6, Other };

  std::string_view                class_name(SemilatticeClass c) noexcept;
  std::optional<SemilatticeClass> parse_class(std::string_view name) noexcept;

  // The count c·2^(n-6), compared in integers as 64k = c·2^n.
  struct Threshold {
    std::uint64_t coefficient;

    bool                         matches(std::uint64_t k, std::size_t n) const;
    std::optional<std::uint64_t> value(std::size_t n) const;
  };

  // Threshold predicted for each named class; Other has none.
  std::optional<Threshold> predicted_threshold(SemilatticeClass c);

  struct ClassificationReport {
    SemilatticeClass                klass;
    std::size_t                     n;
    std::uint64_t                   congruence_count;
    std::optional<std::uint64_t>    predicted_count;
    std::size_t                     ubta_count;
    std::optional<ElementSet>       nucleus;
    std::optional<SemilatticeTable> skeleton;

    // predicted_count, when present, equals congruence_count.
    bool agrees() const noexcept {
      return !predicted_count || *predicted_count == congruence_count;
    }
  };

  // Class from structural predicates only; the count is computed separately
  // by inclusion-exclusion and never used to pick the class.
  ClassificationReport classify(SemilatticeTable const& s);

  // Structural class without counting.
  SemilatticeClass structural_class(SemilatticeTable const& s);

}  // namespace semicon
