#include "semicon/constructions.hpp"

#include <string>

#include "semicon/error.hpp"

namespace semicon {

  namespace {
    using Pairs = std::vector<std::pair<Element, Element>>;

    // Greatest element of a down-closed set m, if it has one.
    std::optional<Element> greatest(SemilatticeTable const& s, Mask m) {
      for (auto z : ElementSet(m)) {
        if ((m & ~s.down_set(z)) == 0) {
          return z;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  SemilatticeTable chain(std::size_t k) {
    if (k == 0) {
      throw Error(Errc::UnknownName, "chain needs at least one element");
    }
    Pairs below;
    for (Element i = 1; i < k; ++i) {
      below.emplace_back(i - 1, i);
    }
    return from_order(k, below);
  }

  SemilatticeTable named(std::string_view name) {
    if (name.starts_with("chain_")) {
      auto        digits = name.substr(6);
      std::size_t k      = 0;
      for (char ch : digits) {
        if (ch < '0' || ch > '9') {
          throw Error(Errc::UnknownName, std::string(name));
        }
        k = k * 10 + static_cast<std::size_t>(ch - '0');
        if (k > kMaxElements) {
          throw Error(Errc::TooLarge, std::string(name));
        }
      }
      if (digits.empty() || k == 0) {
        throw Error(Errc::UnknownName, std::string(name));
      }
      return chain(k);
    }
    if (name == "b4") {
      return from_order(4, Pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    }
    if (name == "n5") {
      return from_order(5, Pairs{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
    }
    if (name == "m3") {
      return from_order(5, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    }
    if (name == "f") {
      return from_order(6, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
    }
    if (name == "n6") {
      return from_order(6, Pairs{{0, 1}, {1, 2}, {2, 3}, {3, 5}, {0, 4}, {4, 5}});
    }
    if (name == "grid2x3") {
      Pairs below;
      for (Element i = 0; i < 2; ++i) {
        for (Element j = 0; j < 3; ++j) {
          if (j + 1 < 3) {
            below.emplace_back(3 * i + j, 3 * i + j + 1);
          }
          if (i + 1 < 2) {
            below.emplace_back(3 * i + j, 3 * (i + 1) + j);
          }
        }
      }
      return from_order(6, below);
    }
    throw Error(Errc::UnknownName, std::string(name));
  }

  SemilatticeTable attach_above(SemilatticeTable const& s, Element x, SemilatticeTable const& t) {
    if (x >= s.size()) {
      throw Error(Errc::BadEntry, "attachment point " + std::to_string(x) + " out of range");
    }
    if (!ubtas(t).empty()) {
      throw Error(Errc::NotATree, "only tree semilattices can be attached");
    }
    auto const base = static_cast<Element>(s.size());
    Pairs      below = covers(s);
    below.emplace_back(x, base);
    for (auto [lo, hi] : covers(t)) {
      below.emplace_back(base + lo, base + hi);
    }
    return from_order(s.size() + t.size(), below);
  }

  SemilatticeTable extend_below(SemilatticeTable const& s, std::size_t k) {
    auto const shift = static_cast<Element>(k);
    Pairs      below;
    for (Element i = 0; i < shift; ++i) {
      below.emplace_back(i, i + 1);
    }
    for (auto [lo, hi] : covers(s)) {
      below.emplace_back(lo + shift, hi + shift);
    }
    return from_order(s.size() + k, below);
  }

  Restriction restrict_to(SemilatticeTable const& s, ElementSet x) {
    if (x.empty() || !is_meet_closed(s, x)) {
      throw Error(Errc::NotAMeetSemilattice, "restriction needs a nonempty meet-closed subset");
    }
    Element const        least = s.meet_of(x.bits());
    std::vector<Element> elements{least};
    for (auto e : x) {
      if (e != least) {
        elements.push_back(e);
      }
    }
    std::vector<Element> pos(s.size(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      pos[elements[i]] = static_cast<Element>(i);
    }
    auto const                m = elements.size();
    std::vector<std::uint8_t> meet(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        meet[i * m + j] = static_cast<std::uint8_t>(pos[s.meet(elements[i], elements[j])]);
      }
    }
    return {SemilatticeTable(m, std::move(meet), SemilatticeTable::Unchecked{}),
            std::move(elements)};
  }

  SemilatticeTable remove_maximal(SemilatticeTable const& s, Element x) {
    if (x == 0 || x >= s.size() || s.up_set(x) != bit(x)) {
      throw Error(Errc::BadEntry, "element " + std::to_string(x) + " is not a removable maximal element");
    }
    auto const                m = s.size() - 1;
    auto                      old = [x](std::size_t i) { return static_cast<Element>(i < x ? i : i + 1); };
    auto                      now = [x](Element e) { return e < x ? e : e - 1; };
    std::vector<std::uint8_t> meet(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        meet[i * m + j] = static_cast<std::uint8_t>(now(s.meet(old(i), old(j))));
      }
    }
    return SemilatticeTable(m, std::move(meet), SemilatticeTable::Unchecked{});
  }

  SemilatticeTable add_maximal(SemilatticeTable const& s, Mask below) {
    auto const n = s.size();
    if (n + 1 > kMaxElements) {
      throw Error(Errc::TooLarge, "cannot grow past " + std::to_string(kMaxElements) + " elements");
    }
    auto const                m = n + 1;
    std::vector<std::uint8_t> meet(m * m);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        meet[i * m + j] = static_cast<std::uint8_t>(s.meet(i, j));
      }
      auto g = greatest(s, below & s.down_set(i));
      if (!g || (below & ~s.all()) != 0) {
        throw Error(Errc::NotAMeetSemilattice, "invalid extension set");
      }
      meet[i * m + n] = meet[n * m + i] = static_cast<std::uint8_t>(*g);
    }
    meet[n * m + n] = static_cast<std::uint8_t>(n);
    return SemilatticeTable(m, std::move(meet), SemilatticeTable::Unchecked{});
  }

  std::vector<Mask> extension_sets(SemilatticeTable const& s) {
    auto const        n = s.size();
    std::vector<Mask> out;
    if (n + 1 > kMaxElements) {
      return out;
    }
    for (Mask d = 1; d <= s.all(); d += 2) {  // odd masks contain 0
      bool ok = true;
      for (auto x : ElementSet(d)) {
        if ((s.down_set(x) & ~d) != 0) {
          ok = false;
          break;
        }
      }
      for (Element y = 0; ok && y < n; ++y) {
        ok = greatest(s, d & s.down_set(y)).has_value();
      }
      if (ok) {
        out.push_back(d);
      }
      if (d == s.all()) {
        break;
      }
    }
    return out;
  }

}  // namespace semicon
