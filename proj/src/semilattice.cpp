#include "semicon/semilattice.hpp"

#include <algorithm>
#include <string>

#include "semicon/error.hpp"

namespace semicon {

  std::string_view errc_name(Errc code) noexcept {
    switch (code) {
      case Errc::BadEntry: return "BadEntry";
      case Errc::NotIdempotent: return "NotIdempotent";
      case Errc::NotCommutative: return "NotCommutative";
      case Errc::NotAssociative: return "NotAssociative";
      case Errc::NoLeastAtZero: return "NoLeastAtZero";
      case Errc::NotAMeetSemilattice: return "NotAMeetSemilattice";
      case Errc::ArgumentIsZero: return "ArgumentIsZero";
      case Errc::NotComparable: return "NotComparable";
      case Errc::UnknownName: return "UnknownName";
      case Errc::NotATree: return "NotATree";
      case Errc::SizeMismatch: return "SizeMismatch";
      case Errc::TooLarge: return "TooLarge";
      case Errc::NotACongruence: return "NotACongruence";
      case Errc::NotALattice: return "NotALattice";
      case Errc::ContainsZero: return "ContainsZero";
      case Errc::TooManyUbtas: return "TooManyUbtas";
      case Errc::NotJoinClosed: return "NotJoinClosed";
      case Errc::DualityViolation: return "DualityViolation";
      case Errc::NotQuasiTree: return "NotQuasiTree";
      case Errc::NotConvexSubsemilattice: return "NotConvexSubsemilattice";
      case Errc::NotEnoughValues: return "NotEnoughValues";
      case Errc::Parse: return "Parse";
    }
    return "Unknown";
  }

  SemilatticeTable::SemilatticeTable(std::size_t               n,
                                     std::vector<std::uint8_t> meet,
                                     Unchecked)
      : _n(n), _meet(std::move(meet)), _up(n, 0), _down(n, 0) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (_meet[x * n + y] == x) {
          _up[x] |= bit(y);
          _down[y] |= bit(x);
        }
      }
    }
  }

  Element SemilatticeTable::meet_of(Mask elems) const noexcept {
    Element acc = static_cast<Element>(std::countr_zero(elems));
    for (elems &= elems - 1; elems != 0; elems &= elems - 1) {
      acc = meet(acc, static_cast<Element>(std::countr_zero(elems)));
    }
    return acc;
  }

  std::vector<std::vector<Element>> SemilatticeTable::rows() const {
    std::vector<std::vector<Element>> out(_n, std::vector<Element>(_n));
    for (Element x = 0; x < _n; ++x) {
      for (Element y = 0; y < _n; ++y) {
        out[x][y] = meet(x, y);
      }
    }
    return out;
  }

  namespace {
    std::string triple(std::size_t x, std::size_t y, std::size_t z) {
      return "(" + std::to_string(x) + ", " + std::to_string(y) + ", "
             + std::to_string(z) + ")";
    }
    std::string pair(std::size_t x, std::size_t y) {
      return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
    }
  }  // namespace

  SemilatticeTable validate(std::vector<std::vector<long long>> const& raw) {
    std::size_t const n = raw.size();
    if (n == 0) {
      throw Error(Errc::BadEntry, "empty table");
    }
    if (n > kMaxElements) {
      throw Error(Errc::TooLarge,
                  "at most " + std::to_string(kMaxElements) + " elements supported, got "
                      + std::to_string(n));
    }
    std::vector<std::uint8_t> meet(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      if (raw[x].size() != n) {
        throw Error(Errc::BadEntry,
                    "row " + std::to_string(x) + " has " + std::to_string(raw[x].size())
                        + " entries, expected " + std::to_string(n));
      }
      for (std::size_t y = 0; y < n; ++y) {
        auto v = raw[x][y];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw Error(Errc::BadEntry,
                      "entry at " + pair(x, y) + " is " + std::to_string(v)
                          + ", outside 0.." + std::to_string(n - 1));
        }
        meet[x * n + y] = static_cast<std::uint8_t>(v);
      }
    }
    auto m = [&](std::size_t x, std::size_t y) -> std::size_t { return meet[x * n + y]; };

    for (std::size_t x = 0; x < n; ++x) {
      if (m(x, x) != x) {
        throw Error(Errc::NotIdempotent, "meet" + pair(x, x) + " = " + std::to_string(m(x, x)));
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (m(x, y) != m(y, x)) {
          throw Error(Errc::NotCommutative, "meet" + pair(x, y) + " != meet" + pair(y, x));
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (m(m(x, y), z) != m(x, m(y, z))) {
            throw Error(Errc::NotAssociative, "fails at " + triple(x, y, z));
          }
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (m(0, x) != 0) {
        throw Error(Errc::NoLeastAtZero, "meet" + pair(0, x) + " = " + std::to_string(m(0, x)));
      }
    }
    return SemilatticeTable(n, std::move(meet), SemilatticeTable::Unchecked{});
  }

  SemilatticeTable from_order(std::size_t                                  n,
                              std::span<std::pair<Element, Element> const> below) {
    if (n == 0 || n > kMaxElements) {
      throw Error(Errc::TooLarge, "element count " + std::to_string(n) + " out of range");
    }
    // down[x] = {z : z <= x}, closed transitively
    std::vector<Mask> down(n);
    for (Element x = 0; x < n; ++x) {
      down[x] = bit(x);
    }
    for (auto [lo, hi] : below) {
      if (lo >= n || hi >= n) {
        throw Error(Errc::BadEntry, "order pair " + pair(lo, hi) + " out of range");
      }
      down[hi] |= bit(lo);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (Element x = 0; x < n; ++x) {
        Mask acc = down[x];
        for (Mask rest = down[x]; rest != 0; rest &= rest - 1) {
          acc |= down[std::countr_zero(rest)];
        }
        if (acc != down[x]) {
          down[x] = acc;
          changed = true;
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if ((down[x] & bit(y)) && (down[y] & bit(x))) {
          throw Error(Errc::NotAMeetSemilattice, "cycle through " + pair(x, y));
        }
      }
    }
    std::vector<std::uint8_t> meet(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = x; y < n; ++y) {
        Mask common = down[x] & down[y];
        // the glb is the member of `common` whose down-set covers all of it
        std::optional<Element> glb;
        for (Mask rest = common; rest != 0; rest &= rest - 1) {
          auto z = static_cast<Element>(std::countr_zero(rest));
          if ((common & ~down[z]) == 0) {
            glb = z;
            break;
          }
        }
        if (!glb) {
          throw Error(Errc::NotAMeetSemilattice, "no meet for " + pair(x, y));
        }
        meet[x * n + y] = meet[y * n + x] = static_cast<std::uint8_t>(*glb);
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (meet[x] != 0) {
        throw Error(Errc::NoLeastAtZero, "0 is not below " + std::to_string(x));
      }
    }
    return SemilatticeTable(n, std::move(meet), SemilatticeTable::Unchecked{});
  }

  std::optional<Element> partial_join(SemilatticeTable const& s, Element x, Element y) {
    if (x == 0 || y == 0) {
      throw Error(Errc::ArgumentIsZero, "partial join is defined on S+ only, got " + pair(x, y));
    }
    Mask upper = s.up_set(x) & s.up_set(y);
    if (upper == 0) {
      return std::nullopt;
    }
    return s.meet_of(upper);
  }

  UbtaFamily ubtas(SemilatticeTable const& s) {
    UbtaFamily out;
    auto const n = static_cast<Element>(s.size());
    for (Element a = 1; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (s.comparable(a, b)) {
          continue;
        }
        Mask upper = s.up_set(a) & s.up_set(b);
        if (upper != 0) {
          out.items.push_back({a, b, s.meet_of(upper)});
        }
      }
    }
    return out;
  }

  ElementSet interval(SemilatticeTable const& s, Element a, Element b) {
    if (!s.leq(a, b)) {
      throw Error(Errc::NotComparable, "interval needs a <= b, got " + pair(a, b));
    }
    return ElementSet(s.up_set(a) & s.down_set(b));
  }

  bool is_meet_closed(SemilatticeTable const& s, ElementSet x) {
    for (auto p : x) {
      for (auto q : x) {
        if (q > p && !x.contains(s.meet(p, q))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_convex(SemilatticeTable const& s, ElementSet x) {
    for (auto lo : x) {
      for (auto hi : x) {
        if (s.leq(lo, hi) && !ElementSet(s.up_set(lo) & s.down_set(hi)).subset_of(x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_convex_subsemilattice(SemilatticeTable const& s, ElementSet x) {
    return !x.empty() && (x.bits() & ~s.all()) == 0 && is_meet_closed(s, x) && is_convex(s, x);
  }

  std::vector<std::size_t> heights(SemilatticeTable const& s) {
    auto const             n = s.size();
    std::vector<std::size_t> h(n, 0);
    // elements sorted by down-set size form a linear extension
    std::vector<Element> order(n);
    for (Element x = 0; x < n; ++x) {
      order[x] = x;
    }
    std::sort(order.begin(), order.end(), [&](Element x, Element y) {
      return std::popcount(s.down_set(x)) < std::popcount(s.down_set(y));
    });
    for (auto x : order) {
      for (Mask rest = s.down_set(x) & ~bit(x); rest != 0; rest &= rest - 1) {
        h[x] = std::max(h[x], h[std::countr_zero(rest)] + 1);
      }
    }
    return h;
  }

  ElementSet maximal_elements(SemilatticeTable const& s, ElementSet x) {
    ElementSet out;
    for (auto e : x) {
      if ((s.up_set(e) & x.bits()) == bit(e)) {
        out.insert(e);
      }
    }
    return out;
  }

  bool is_chain(SemilatticeTable const& s) {
    for (Element x = 0; x < s.size(); ++x) {
      if ((s.up_set(x) | s.down_set(x)) != s.all()) {
        return false;
      }
    }
    return true;
  }

  std::optional<Element> top(SemilatticeTable const& s) {
    for (Element x = 0; x < s.size(); ++x) {
      if (s.down_set(x) == s.all()) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::vector<std::pair<Element, Element>> covers(SemilatticeTable const& s) {
    std::vector<std::pair<Element, Element>> out;
    auto const                               n = static_cast<Element>(s.size());
    for (Element x = 0; x < n; ++x) {
      Mask strictly_above = s.up_set(x) & ~bit(x);
      for (auto y : ElementSet(strictly_above)) {
        // y covers x iff nothing lies strictly between
        if ((strictly_above & s.down_set(y)) == bit(y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

}  // namespace semicon
