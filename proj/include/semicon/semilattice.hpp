#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace semicon {

  using Element = std::uint32_t;
  using Mask    = std::uint32_t;

  // Masks are 32 bits wide, one bit per element.
  inline constexpr std::size_t kMaxElements = 32;

  inline constexpr Mask bit(Element x) noexcept {
    return Mask{1} << x;
  }

  inline constexpr Mask first_n(std::size_t n) noexcept {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  // A set of element indices backed by a bitmask; iterates in ascending order.
  class ElementSet {
   public:
    class iterator {
     public:
      using value_type        = Element;
      using difference_type   = std::ptrdiff_t;
      using iterator_category = std::forward_iterator_tag;

      iterator() = default;
      explicit iterator(Mask rest) : _rest(rest) {}

      Element operator*() const {
        return static_cast<Element>(std::countr_zero(_rest));
      }
      iterator& operator++() {
        _rest &= _rest - 1;
        return *this;
      }
      iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
      }
      bool operator==(iterator const&) const = default;

     private:
      Mask _rest = 0;
    };

    constexpr ElementSet() = default;
    explicit constexpr ElementSet(Mask bits) : _bits(bits) {}
    ElementSet(std::initializer_list<Element> elems) {
      for (auto x : elems) {
        insert(x);
      }
    }

    static ElementSet from_range(std::span<Element const> elems) {
      ElementSet out;
      for (auto x : elems) {
        out.insert(x);
      }
      return out;
    }

    constexpr Mask bits() const noexcept {
      return _bits;
    }
    constexpr bool contains(Element x) const noexcept {
      return (_bits >> x) & 1u;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    void insert(Element x) noexcept {
      _bits |= bit(x);
    }
    void erase(Element x) noexcept {
      _bits &= ~bit(x);
    }
    constexpr bool subset_of(ElementSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    // Least index in the set; the set must be nonempty.
    Element front() const noexcept {
      return static_cast<Element>(std::countr_zero(_bits));
    }

    iterator begin() const {
      return iterator(_bits);
    }
    iterator end() const {
      return iterator(0);
    }

    std::vector<Element> to_vector() const {
      return {begin(), end()};
    }

    constexpr bool operator==(ElementSet const&) const = default;

   private:
    Mask _bits = 0;
  };

  // A finite meet semilattice on {0, ..., n-1} given by its meet table, with 0
  // the least element. Instances are immutable; the only way to obtain one
  // from untrusted data is validate().
  class SemilatticeTable {
   public:
    struct Unchecked {};

    // Callers guarantee that `meet` is a valid semilattice table with 0 least.
    SemilatticeTable(std::size_t n, std::vector<std::uint8_t> meet, Unchecked);

    std::size_t size() const noexcept {
      return _n;
    }

    Element meet(Element x, Element y) const noexcept {
      return _meet[x * _n + y];
    }

    bool leq(Element x, Element y) const noexcept {
      return (_up[x] >> y) & 1u;
    }

    bool comparable(Element x, Element y) const noexcept {
      return leq(x, y) || leq(y, x);
    }

    // {z : x <= z}
    Mask up_set(Element x) const noexcept {
      return _up[x];
    }

    // {z : z <= x}
    Mask down_set(Element x) const noexcept {
      return _down[x];
    }

    Mask all() const noexcept {
      return first_n(_n);
    }

    // Meet of a nonempty set of elements.
    Element meet_of(Mask elems) const noexcept;

    std::span<std::uint8_t const> raw() const noexcept {
      return _meet;
    }

    std::vector<std::vector<Element>> rows() const;

    bool operator==(SemilatticeTable const& other) const {
      return _n == other._n && _meet == other._meet;
    }

    auto operator<=>(SemilatticeTable const& other) const {
      if (_n != other._n) {
        return _n <=> other._n;
      }
      return _meet <=> other._meet;
    }

   private:
    std::size_t               _n;
    std::vector<std::uint8_t> _meet;
    std::vector<Mask>         _up;
    std::vector<Mask>         _down;
  };

  SemilatticeTable validate(std::vector<std::vector<long long>> const& raw);

  // Builds the semilattice determined by an order relation given as cover (or
  // any generating) pairs (lower, upper). Throws NotAMeetSemilattice if some
  // pair of elements has no greatest lower bound, or 0 is not least.
  SemilatticeTable from_order(std::size_t                              n,
                              std::span<std::pair<Element, Element> const> below);

  inline bool leq(SemilatticeTable const& s, Element x, Element y) {
    return s.leq(x, y);
  }

  // The least upper bound of x and y in S, if {x, y} has an upper bound.
  std::optional<Element> partial_join(SemilatticeTable const& s, Element x, Element y);

  struct Ubta {
    Element a;
    Element b;
    Element join;

    bool operator==(Ubta const&) const = default;
  };

  struct UbtaFamily {
    std::vector<Ubta> items;

    std::size_t size() const noexcept {
      return items.size();
    }
    bool empty() const noexcept {
      return items.empty();
    }
    auto begin() const {
      return items.begin();
    }
    auto end() const {
      return items.end();
    }
    bool operator==(UbtaFamily const&) const = default;
  };

  // All upper bounded two-element antichains, lexicographic in (a, b).
  UbtaFamily ubtas(SemilatticeTable const& s);

  ElementSet interval(SemilatticeTable const& s, Element a, Element b);

  bool is_meet_closed(SemilatticeTable const& s, ElementSet x);
  bool is_convex(SemilatticeTable const& s, ElementSet x);
  bool is_convex_subsemilattice(SemilatticeTable const& s, ElementSet x);

  // Length of the longest chain from 0 to x.
  std::vector<std::size_t> heights(SemilatticeTable const& s);

  // Maximal elements of S (or of the subset x, under the induced order).
  ElementSet maximal_elements(SemilatticeTable const& s, ElementSet x);

  // Every two elements comparable.
  bool is_chain(SemilatticeTable const& s);

  // Greatest element, if any.
  std::optional<Element> top(SemilatticeTable const& s);

  // Pairs (x, y) with x covered by y.
  std::vector<std::pair<Element, Element>> covers(SemilatticeTable const& s);

}  // namespace semicon
