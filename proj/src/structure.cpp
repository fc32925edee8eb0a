#include "semicon/structure.hpp"

#include <array>

#include "semicon/congruences.hpp"
#include "semicon/constructions.hpp"
#include "semicon/error.hpp"
#include "semicon/isomorphism.hpp"
#include "semicon/join_subalgebras.hpp"

namespace semicon {

  Partition tree_congruence(SemilatticeTable const& s) {
    std::vector<std::pair<Element, Element>> generators;
    for (auto const& u : ubtas(s)) {
      generators.emplace_back(s.meet(u.a, u.b), u.join);
    }
    return congruence_generated(s, generators);
  }

  bool is_tree(SemilatticeTable const& s) {
    return ubtas(s).empty();
  }

  bool is_quasi_tree(SemilatticeTable const& s) {
    return tree_congruence(s).nonsingleton_blocks().size() == 1;
  }

  ElementSet nucleus(SemilatticeTable const& s) {
    auto blocks = tree_congruence(s).nonsingleton_blocks();
    if (blocks.size() != 1) {
      throw Error(Errc::NotQuasiTree, "tree congruence has " + std::to_string(blocks.size())
                                          + " nonsingleton blocks");
    }
    return blocks.front();
  }

  SemilatticeTable skeleton(SemilatticeTable const& s) {
    auto tcon = tree_congruence(s);
    if (tcon.nonsingleton_blocks().size() != 1) {
      throw Error(Errc::NotQuasiTree, "not a quasi-tree semilattice");
    }
    return quotient(s, tcon).table;
  }

  ConvexBlockCheck convex_block_congruence_check(SemilatticeTable const& s, ElementSet x) {
    if (x.size() < 2 || !is_convex_subsemilattice(s, x)) {
      throw Error(Errc::NotConvexSubsemilattice,
                  "need a convex subsemilattice with at least two elements");
    }
    Element const u    = s.meet_of(x.bits());
    ElementSet    tops = maximal_elements(s, x);
    bool          cond = true;
    for (auto c : ElementSet(s.all() & ~s.up_set(u))) {
      for (auto v : tops) {
        if (s.meet(u, c) != s.meet(v, c)) {
          cond = false;
        }
      }
    }
    std::vector<std::size_t> labels(s.size());
    for (Element e = 0; e < s.size(); ++e) {
      labels[e] = x.contains(e) ? s.size() : e;
    }
    return {cond, is_meet_congruence(s, Partition::from_labels(labels))};
  }

  std::string_view class_name(SemilatticeClass c) noexcept {
    switch (c) {
      case SemilatticeClass::Tree: return "Tree";
      case SemilatticeClass::NucleusB4: return "NucleusB4";
      case SemilatticeClass::NucleusN5: return "NucleusN5";
      case SemilatticeClass::NucleusF: return "NucleusF";
      case SemilatticeClass::NucleusN6: return "NucleusN6";
      case SemilatticeClass::Other: return "Other";
    }
    return "Other";
  }

  std::optional<SemilatticeClass> parse_class(std::string_view name) noexcept {
    for (auto c : {SemilatticeClass::Tree, SemilatticeClass::NucleusB4, SemilatticeClass::NucleusN5,
                   SemilatticeClass::NucleusF, SemilatticeClass::NucleusN6,
                   SemilatticeClass::Other}) {
      if (class_name(c) == name) {
        return c;
      }
    }
    return std::nullopt;
  }

  bool Threshold::matches(std::uint64_t k, std::size_t n) const {
    return 64 * k == (coefficient << n);
  }

  std::optional<std::uint64_t> Threshold::value(std::size_t n) const {
    std::uint64_t const scaled = coefficient << n;
    if (scaled % 64 != 0) {
      return std::nullopt;
    }
    return scaled / 64;
  }

  std::optional<Threshold> predicted_threshold(SemilatticeClass c) {
    switch (c) {
      case SemilatticeClass::Tree: return Threshold{32};
      case SemilatticeClass::NucleusB4: return Threshold{28};
      case SemilatticeClass::NucleusN5: return Threshold{26};
      case SemilatticeClass::NucleusF:
      case SemilatticeClass::NucleusN6: return Threshold{25};
      case SemilatticeClass::Other: return std::nullopt;
    }
    return std::nullopt;
  }

  namespace {
    struct NamedNucleus {
      SemilatticeClass klass;
      SemilatticeTable table;
    };

    std::array<NamedNucleus, 4> const& named_nuclei() {
      static std::array<NamedNucleus, 4> const nuclei{{
          {SemilatticeClass::NucleusB4, named("b4")},
          {SemilatticeClass::NucleusN5, named("n5")},
          {SemilatticeClass::NucleusF, named("f")},
          {SemilatticeClass::NucleusN6, named("n6")},
      }};
      return nuclei;
    }

    struct Structural {
      SemilatticeClass          klass;
      std::size_t               ubta_count;
      std::optional<ElementSet> nucleus;
      Partition                 tcon;
    };

    Structural analyse(SemilatticeTable const& s) {
      auto const t    = ubtas(s).size();
      auto       tcon = tree_congruence(s);
      if (t == 0) {
        return {SemilatticeClass::Tree, 0, std::nullopt, std::move(tcon)};
      }
      auto blocks = tcon.nonsingleton_blocks();
      if (blocks.size() != 1) {
        return {SemilatticeClass::Other, t, std::nullopt, std::move(tcon)};
      }
      auto const core = restrict_to(s, blocks.front()).table;
      for (auto const& candidate : named_nuclei()) {
        if (candidate.table.size() == core.size() && are_isomorphic(candidate.table, core)) {
          return {candidate.klass, t, blocks.front(), std::move(tcon)};
        }
      }
      return {SemilatticeClass::Other, t, blocks.front(), std::move(tcon)};
    }
  }  // namespace

  SemilatticeClass structural_class(SemilatticeTable const& s) {
    return analyse(s).klass;
  }

  ClassificationReport classify(SemilatticeTable const& s) {
    auto                 st = analyse(s);
    ClassificationReport report{st.klass, s.size(), 0, std::nullopt, st.ubta_count, st.nucleus,
                                std::nullopt};
    if (st.nucleus) {
      report.skeleton = quotient(s, st.tcon).table;
    }
    report.congruence_count = count_join_closed(PartialJoinStructure(s));
    if (auto th = predicted_threshold(st.klass)) {
      report.predicted_count = th->value(s.size());
    }
    return report;
  }

}  // namespace semicon
