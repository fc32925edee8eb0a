#include "semicon/join_subalgebras.hpp"

#include <map>
#include <string>

#include "semicon/congruences.hpp"
#include "semicon/error.hpp"

namespace semicon {

  namespace {
    struct UbtaMasks {
      Mask pair;
      Mask join;
    };

    std::vector<UbtaMasks> masks_of(UbtaFamily const& family) {
      std::vector<UbtaMasks> out;
      out.reserve(family.size());
      for (auto const& u : family) {
        out.push_back({bit(u.a) | bit(u.b), bit(u.join)});
      }
      return out;
    }

    bool closed(std::vector<UbtaMasks> const& family, Mask x) {
      for (auto const& u : family) {
        if ((x & u.pair) == u.pair && (x & u.join) == 0) {
          return false;
        }
      }
      return true;
    }

    void check_bound(PartialJoinStructure const& pj, std::size_t max_n) {
      if (pj.size() > max_n) {
        throw Error(Errc::TooLarge, "subset scan limited to " + std::to_string(max_n)
                                        + " elements, got " + std::to_string(pj.size()));
      }
    }

    std::string describe(ElementSet x) {
      std::string out = "{";
      for (auto e : x) {
        if (out.size() > 1) {
          out += ",";
        }
        out += std::to_string(e);
      }
      return out + "}";
    }
  }  // namespace

  PartialJoinStructure::PartialJoinStructure(SemilatticeTable host)
      : _host(std::move(host)), _ubtas(semicon::ubtas(_host)),
        _join(_host.size() * _host.size(), 0) {
    auto const n = static_cast<Element>(_host.size());
    for (Element x = 1; x < n; ++x) {
      for (Element y = 1; y < n; ++y) {
        if (auto j = partial_join(_host, x, y)) {
          _join[x * n + y] = static_cast<std::uint8_t>(*j);
        }
      }
    }
  }

  std::optional<Element> PartialJoinStructure::join(Element x, Element y) const {
    if (x == 0 || y == 0) {
      throw Error(Errc::ArgumentIsZero, "join is defined on S+ only");
    }
    auto const j = _join[x * _host.size() + y];
    if (j == 0) {
      return std::nullopt;
    }
    return j;
  }

  bool is_join_closed(PartialJoinStructure const& pj, ElementSet x) {
    if (x.contains(0)) {
      throw Error(Errc::ContainsZero, "subsets of S+ never contain 0");
    }
    if ((x.bits() & ~pj.host().all()) != 0) {
      throw Error(Errc::BadEntry, "subset has elements out of range");
    }
    return closed(masks_of(pj.ubtas()), x.bits());
  }

  std::uint64_t count_join_closed_bruteforce(PartialJoinStructure const& pj, std::size_t max_n) {
    check_bound(pj, max_n);
    auto const          family = masks_of(pj.ubtas());
    std::uint64_t const limit  = std::uint64_t{1} << (pj.size() - 1);
    std::uint64_t       count  = 0;
    for (std::uint64_t m = 0; m < limit; ++m) {
      if (closed(family, static_cast<Mask>(m << 1))) {
        ++count;
      }
    }
    return count;
  }

  std::uint64_t count_join_closed_ie(PartialJoinStructure const& pj, std::size_t max_ubtas) {
    auto const& family = pj.ubtas();
    if (family.size() > max_ubtas) {
      throw Error(Errc::TooManyUbtas, std::to_string(family.size()) + " UBTAs exceed the bound of "
                                          + std::to_string(max_ubtas));
    }
    auto const         masks = masks_of(family);
    auto const         free  = static_cast<int>(pj.size()) - 1;
    std::int64_t       total = 0;
    // Depth-first over subsets T; once A_T meets V_T every superset of T also
    // contributes zero, so that branch is cut.
    auto rec = [&](auto&& self, std::size_t i, Mask a, Mask v, bool odd) -> void {
      if (i == masks.size()) {
        std::int64_t const term = std::int64_t{1} << (free - std::popcount(a | v));
        total += odd ? -term : term;
        return;
      }
      self(self, i + 1, a, v, odd);
      Mask const a2 = a | masks[i].pair;
      Mask const v2 = v | masks[i].join;
      if ((a2 & v2) == 0) {
        self(self, i + 1, a2, v2, !odd);
      }
    };
    rec(rec, 0, 0, 0, false);
    return static_cast<std::uint64_t>(total);
  }

  std::uint64_t count_join_closed(PartialJoinStructure const& pj, std::size_t max_ubtas) {
    if (pj.ubtas().size() <= max_ubtas) {
      return count_join_closed_ie(pj, max_ubtas);
    }
    return count_join_closed_bruteforce(pj);
  }

  std::vector<ElementSet> join_closed_subsets(PartialJoinStructure const& pj, std::size_t max_n) {
    check_bound(pj, max_n);
    auto const              family = masks_of(pj.ubtas());
    std::uint64_t const     limit  = std::uint64_t{1} << (pj.size() - 1);
    std::vector<ElementSet> out;
    for (std::uint64_t m = 0; m < limit; ++m) {
      auto const x = static_cast<Mask>(m << 1);
      if (closed(family, x)) {
        out.emplace_back(x);
      }
    }
    return out;
  }

  Partition dual_congruence(PartialJoinStructure const& pj, ElementSet x) {
    if (!is_join_closed(pj, x)) {
      throw Error(Errc::NotJoinClosed, describe(x) + " is not join-closed");
    }
    auto const&              s = pj.host();
    std::vector<std::size_t> trace(s.size());
    for (Element e = 0; e < s.size(); ++e) {
      trace[e] = s.down_set(e) & x.bits();
    }
    return Partition::from_labels(trace);
  }

  DualityReport verify_duality(SemilatticeTable const& s, std::size_t max_n) {
    if (s.size() > max_n) {
      throw Error(Errc::TooLarge, "duality check limited to " + std::to_string(max_n) + " elements");
    }
    PartialJoinStructure pj(s);
    auto const           subsets     = join_closed_subsets(pj);
    auto const           congruences = all_meet_congruences(s, max_n);

    std::vector<Partition> image;
    image.reserve(subsets.size());
    std::map<std::vector<std::size_t>, ElementSet> preimage;
    for (auto x : subsets) {
      auto p = dual_congruence(pj, x);
      if (!is_meet_congruence(s, p)) {
        throw Error(Errc::DualityViolation, "image of " + describe(x) + " is not a congruence");
      }
      auto [it, fresh] = preimage.emplace(p.block_ids(), x);
      if (!fresh) {
        throw Error(Errc::DualityViolation,
                    describe(it->second) + " and " + describe(x) + " have the same image");
      }
      image.push_back(std::move(p));
    }
    if (image.size() != congruences.size()) {
      throw Error(Errc::DualityViolation,
                  std::to_string(subsets.size()) + " join-closed subsets but "
                      + std::to_string(congruences.size()) + " congruences");
    }
    for (auto const& c : congruences) {
      if (!preimage.contains(c.block_ids())) {
        throw Error(Errc::DualityViolation, "some congruence is not an image");
      }
    }
    DualityReport report{subsets.size(), congruences.size(), 0};
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        bool const included = subsets[i].subset_of(subsets[j]);
        bool const reversed = image[j].finer_than(image[i]);
        if (included != reversed) {
          throw Error(Errc::DualityViolation,
                      "order not reversed for " + describe(subsets[i]) + " and "
                          + describe(subsets[j]));
        }
        ++report.inclusions_checked;
      }
    }
    return report;
  }

}  // namespace semicon
