#include "semicon/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "semicon/error.hpp"

namespace semicon {

  namespace {

    using Invariant = std::tuple<std::size_t, int, int>;

    // (height, |down-set|, |up-set|) per element.
    std::vector<Invariant> invariants(SemilatticeTable const& s) {
      auto const             h = heights(s);
      std::vector<Invariant> out(s.size());
      for (Element x = 0; x < s.size(); ++x) {
        out[x] = {h[x], std::popcount(s.down_set(x)), std::popcount(s.up_set(x))};
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(SemilatticeTable const& a, SemilatticeTable const& b)
          : _a(a), _b(b), _inv_a(invariants(a)), _inv_b(invariants(b)),
            _image(a.size()), _used(0) {
        _order.resize(a.size());
        std::iota(_order.begin(), _order.end(), Element{0});
        std::stable_sort(_order.begin(), _order.end(), [&](Element x, Element y) {
          return _inv_a[x] < _inv_a[y];
        });
      }

      bool run() {
        auto sa = _inv_a;
        auto sb = _inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
          return false;
        }
        return extend(0);
      }

      std::vector<Element> const& image() const {
        return _image;
      }

     private:
      bool extend(std::size_t depth) {
        if (depth == _order.size()) {
          return true;
        }
        Element const x = _order[depth];
        for (Element y = 0; y < _b.size(); ++y) {
          if ((_used & bit(y)) || _inv_b[y] != _inv_a[x] || !consistent(depth, x, y)) {
            continue;
          }
          _image[x] = y;
          _used |= bit(y);
          if (extend(depth + 1)) {
            return true;
          }
          _used &= ~bit(y);
        }
        return false;
      }

      bool consistent(std::size_t depth, Element x, Element y) const {
        for (std::size_t i = 0; i < depth; ++i) {
          Element const p = _order[i];
          Element const q = _image[p];
          if (_a.leq(p, x) != _b.leq(q, y) || _a.leq(x, p) != _b.leq(y, q)) {
            return false;
          }
        }
        return true;
      }

      SemilatticeTable const& _a;
      SemilatticeTable const& _b;
      std::vector<Invariant>  _inv_a;
      std::vector<Invariant>  _inv_b;
      std::vector<Element>    _order;
      std::vector<Element>    _image;
      Mask                    _used;
    };

    // Ordered partitions are encoded as a colour per element; colours are
    // dense ranks, and a lower colour means an earlier cell.
    using Colouring = std::vector<std::uint32_t>;

    std::size_t count_colours(Colouring const& c) {
      return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    class CanonSearch {
     public:
      explicit CanonSearch(SemilatticeTable const& s) : _s(s), _n(s.size()) {}

      CanonicalLabeling run() {
        auto const inv = invariants(_s);
        auto       sorted = inv;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        Colouring start(_n);
        for (Element x = 0; x < _n; ++x) {
          start[x] = static_cast<std::uint32_t>(
              std::lower_bound(sorted.begin(), sorted.end(), inv[x]) - sorted.begin());
        }
        std::vector<Element> prefix;
        search(std::move(start), prefix);
        return {_best_order, _generators};
      }

     private:
      void refine(Colouring& c) const {
        std::size_t cells = count_colours(c);
        std::vector<std::vector<std::uint32_t>> sig(_n);
        std::vector<Element>                    idx(_n);
        while (cells < _n) {
          for (Element x = 0; x < _n; ++x) {
            auto& v = sig[x];
            v.clear();
            v.push_back(c[x]);
            for (Element y = 0; y < _n; ++y) {
              v.push_back(c[y] * static_cast<std::uint32_t>(_n) + c[_s.meet(x, y)]);
            }
            std::sort(v.begin() + 1, v.end());
          }
          std::iota(idx.begin(), idx.end(), Element{0});
          std::sort(idx.begin(), idx.end(), [&](Element x, Element y) { return sig[x] < sig[y]; });
          Colouring     next(_n);
          std::uint32_t colour = 0;
          for (std::size_t i = 0; i < _n; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) {
              ++colour;
            }
            next[idx[i]] = colour;
          }
          std::size_t const next_cells = colour + 1;
          c                            = std::move(next);
          if (next_cells == cells) {
            break;
          }
          cells = next_cells;
        }
      }

      void search(Colouring c, std::vector<Element>& prefix) {
        refine(c);
        std::size_t const cells = count_colours(c);
        if (cells == _n) {
          leaf(c);
          return;
        }
        // first nonsingleton cell
        std::vector<std::size_t> cell_size(cells, 0);
        for (auto col : c) {
          ++cell_size[col];
        }
        std::uint32_t target = 0;
        while (cell_size[target] == 1) {
          ++target;
        }
        std::vector<Element> tried;
        for (Element v = 0; v < _n; ++v) {
          if (c[v] != target || in_tried_orbit(v, tried, prefix)) {
            continue;
          }
          Colouring child = c;
          for (Element x = 0; x < _n; ++x) {
            if (child[x] > target || (child[x] == target && x != v)) {
              ++child[x];
            }
          }
          prefix.push_back(v);
          search(std::move(child), prefix);
          prefix.pop_back();
          tried.push_back(v);
        }
      }

      // True if v is in the orbit of a tried vertex under the automorphisms
      // found so far that fix the current prefix pointwise.
      bool in_tried_orbit(Element                     v,
                          std::vector<Element> const& tried,
                          std::vector<Element> const& prefix) const {
        if (tried.empty() || _generators.empty()) {
          return false;
        }
        std::vector<Element> parent(_n);
        std::iota(parent.begin(), parent.end(), Element{0});
        auto find = [&](Element x) {
          while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
          }
          return x;
        };
        bool any = false;
        for (auto const& g : _generators) {
          if (!std::all_of(prefix.begin(), prefix.end(), [&](Element p) { return g[p] == p; })) {
            continue;
          }
          any = true;
          for (Element x = 0; x < _n; ++x) {
            parent[find(x)] = find(g[x]);
          }
        }
        if (!any) {
          return false;
        }
        auto const root = find(v);
        return std::any_of(tried.begin(), tried.end(), [&](Element t) { return find(t) == root; });
      }

      void leaf(Colouring const& c) {
        std::vector<Element> order(_n);
        for (Element x = 0; x < _n; ++x) {
          order[c[x]] = x;
        }
        std::vector<std::uint8_t> code(_n * _n);
        for (std::size_t i = 0; i < _n; ++i) {
          for (std::size_t j = 0; j < _n; ++j) {
            code[i * _n + j] = static_cast<std::uint8_t>(c[_s.meet(order[i], order[j])]);
          }
        }
        if (_best_order.empty() || code < _best_code) {
          _best_code  = std::move(code);
          _best_order = std::move(order);
        } else if (code == _best_code) {
          std::vector<Element> g(_n);
          for (std::size_t p = 0; p < _n; ++p) {
            g[_best_order[p]] = order[p];
          }
          if (!std::equal(g.begin(), g.end(), _identity().begin())) {
            _generators.push_back(std::move(g));
          }
        }
      }

      std::vector<Element> _identity() const {
        std::vector<Element> id(_n);
        std::iota(id.begin(), id.end(), Element{0});
        return id;
      }

      SemilatticeTable const&           _s;
      std::size_t                       _n;
      std::vector<std::uint8_t>         _best_code;
      std::vector<Element>              _best_order;
      std::vector<std::vector<Element>> _generators;
    };

  }  // namespace

  std::optional<std::vector<Element>> find_isomorphism(SemilatticeTable const& a,
                                                       SemilatticeTable const& b) {
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    IsoSearch search(a, b);
    if (!search.run()) {
      return std::nullopt;
    }
    return search.image();
  }

  CanonicalLabeling canonical_labeling(SemilatticeTable const& s) {
    return CanonSearch(s).run();
  }

  SemilatticeTable relabel(SemilatticeTable const& s, std::vector<Element> const& order) {
    auto const n = s.size();
    if (order.size() != n) {
      throw Error(Errc::SizeMismatch, "relabelling has wrong length");
    }
    std::vector<Element> pos(n, static_cast<Element>(n));
    for (std::size_t p = 0; p < n; ++p) {
      if (order[p] >= n || pos[order[p]] != n) {
        throw Error(Errc::BadEntry, "relabelling is not a permutation");
      }
      pos[order[p]] = static_cast<Element>(p);
    }
    if (order[0] != 0) {
      throw Error(Errc::NoLeastAtZero, "relabelling must keep 0 in place");
    }
    std::vector<std::uint8_t> meet(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        meet[i * n + j] = static_cast<std::uint8_t>(pos[s.meet(order[i], order[j])]);
      }
    }
    return SemilatticeTable(n, std::move(meet), SemilatticeTable::Unchecked{});
  }

  SemilatticeTable canonical_form(SemilatticeTable const& s) {
    return relabel(s, canonical_labeling(s).order);
  }

}  // namespace semicon
