#include "semicon/congruences.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "semicon/error.hpp"

namespace semicon {

  namespace {
    using Pair = std::pair<Element, Element>;

    void check_size(SemilatticeTable const& s, Partition const& p) {
      if (p.size() != s.size()) {
        throw Error(Errc::SizeMismatch,
                    "partition on " + std::to_string(p.size()) + " elements, semilattice has "
                        + std::to_string(s.size()));
      }
    }

    void check_bound(SemilatticeTable const& s, std::size_t max_n, char const* what) {
      if (s.size() > max_n) {
        throw Error(Errc::TooLarge,
                    std::string(what) + " limited to " + std::to_string(max_n) + " elements, got "
                        + std::to_string(s.size()));
      }
    }

    // Union-find closure under x ~ y  =>  x∧z ~ y∧z.
    Partition close(SemilatticeTable const& s, DisjointSets& ds, std::vector<Pair> pending) {
      auto const n = static_cast<Element>(s.size());
      while (!pending.empty()) {
        auto [x, y] = pending.back();
        pending.pop_back();
        if (!ds.unite(x, y)) {
          continue;
        }
        for (Element z = 0; z < n; ++z) {
          Element const xz = s.meet(x, z);
          Element const yz = s.meet(y, z);
          if (xz != yz) {
            pending.emplace_back(xz, yz);
          }
        }
      }
      return ds.partition();
    }

    std::vector<Pair> spanning_pairs(Partition const& p) {
      std::vector<Pair> out;
      for (auto b : p.blocks()) {
        Element const first = b.front();
        for (auto x : b) {
          if (x != first) {
            out.emplace_back(first, x);
          }
        }
      }
      return out;
    }

    void sort_listing(std::vector<Partition>& v) {
      std::sort(v.begin(), v.end(), listing_order);
    }
  }  // namespace

  bool is_meet_congruence(SemilatticeTable const& s, Partition const& p) {
    check_size(s, p);
    auto const n = static_cast<Element>(s.size());
    for (auto [x, y] : spanning_pairs(p)) {
      for (Element z = 0; z < n; ++z) {
        if (!p.same_block(s.meet(x, z), s.meet(y, z))) {
          return false;
        }
      }
    }
    return true;
  }

  Partition congruence_generated(SemilatticeTable const& s, std::span<Pair const> pairs) {
    for (auto [x, y] : pairs) {
      if (x >= s.size() || y >= s.size()) {
        throw Error(Errc::BadEntry, "generator pair out of range");
      }
    }
    DisjointSets ds(s.size());
    return close(s, ds, {pairs.begin(), pairs.end()});
  }

  Partition congruence_join(SemilatticeTable const& s, Partition const& a, Partition const& b) {
    check_size(s, a);
    check_size(s, b);
    auto pending = spanning_pairs(a);
    auto more    = spanning_pairs(b);
    pending.insert(pending.end(), more.begin(), more.end());
    DisjointSets ds(s.size());
    return close(s, ds, std::move(pending));
  }

  std::vector<Partition> all_meet_congruences(SemilatticeTable const& s, std::size_t max_n) {
    check_bound(s, max_n, "congruence enumeration");
    auto const n = static_cast<Element>(s.size());

    std::set<std::vector<std::size_t>> seen;
    std::vector<Partition>             principal;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        Pair const gen[] = {{x, y}};
        auto       p     = congruence_generated(s, gen);
        if (seen.insert(p.block_ids()).second) {
          principal.push_back(std::move(p));
        }
      }
    }

    // every congruence is a join of principal ones
    seen.clear();
    std::vector<Partition> out{Partition::identity(n)};
    seen.insert(out.front().block_ids());
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& q : principal) {
        if (q.finer_than(out[i])) {
          continue;
        }
        auto joined = congruence_join(s, out[i], q);
        if (seen.insert(joined.block_ids()).second) {
          out.push_back(std::move(joined));
        }
      }
    }
    sort_listing(out);
    return out;
  }

  std::vector<Partition> all_meet_congruences_bell(SemilatticeTable const& s) {
    check_bound(s, kBellScanBound, "Bell scan");
    auto const               n = s.size();
    std::vector<Partition>   out;
    std::vector<std::size_t> labels(n, 0);
    // restricted growth strings: labels[i] <= 1 + max(labels[0..i-1])
    auto rec = [&](auto&& self, std::size_t i, std::size_t max_label) -> void {
      if (i == n) {
        auto p = Partition::from_labels(labels);
        if (is_meet_congruence(s, p)) {
          out.push_back(std::move(p));
        }
        return;
      }
      for (std::size_t l = 0; l <= max_label + 1; ++l) {
        labels[i] = l;
        self(self, i + 1, std::max(max_label, l));
      }
    };
    if (n == 1) {
      out.push_back(Partition::identity(1));
    } else {
      labels[0] = 0;
      rec(rec, 1, 0);
    }
    sort_listing(out);
    return out;
  }

  Quotient quotient(SemilatticeTable const& s, Partition const& p) {
    if (!is_meet_congruence(s, p)) {
      throw Error(Errc::NotACongruence, "quotient needs a meet congruence");
    }
    auto const                k = p.block_count();
    std::vector<std::uint8_t> meet(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Element const x = p.blocks()[i].front();
        Element const y = p.blocks()[j].front();
        meet[i * k + j] = static_cast<std::uint8_t>(p.block_of(s.meet(x, y)));
      }
    }
    return {SemilatticeTable(k, std::move(meet), SemilatticeTable::Unchecked{}), p.blocks()};
  }

  bool is_lattice(SemilatticeTable const& s) {
    return top(s).has_value();
  }

  Element lattice_join(SemilatticeTable const& s, Element x, Element y) {
    Mask upper = s.up_set(x) & s.up_set(y);
    if (upper == 0) {
      throw Error(Errc::NotALattice, "no upper bound for (" + std::to_string(x) + ", "
                                         + std::to_string(y) + ")");
    }
    return s.meet_of(upper);
  }

  bool is_lattice_congruence(SemilatticeTable const& s, Partition const& p) {
    if (!is_lattice(s)) {
      throw Error(Errc::NotALattice, "semilattice has no greatest element");
    }
    if (!is_meet_congruence(s, p)) {
      return false;
    }
    auto const n = static_cast<Element>(s.size());
    for (auto [x, y] : spanning_pairs(p)) {
      for (Element z = 0; z < n; ++z) {
        if (!p.same_block(lattice_join(s, x, z), lattice_join(s, y, z))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Partition> all_lattice_congruences(SemilatticeTable const& s, std::size_t max_n) {
    if (!is_lattice(s)) {
      throw Error(Errc::NotALattice, "semilattice has no greatest element");
    }
    auto all = all_meet_congruences(s, max_n);
    std::erase_if(all, [&](Partition const& p) { return !is_lattice_congruence(s, p); });
    return all;
  }

  std::uint64_t count_interval_block_equivalences(SemilatticeTable const& s, std::size_t max_n) {
    check_bound(s, max_n, "interval-block counting");
    // The first unassigned element of a linear extension must be the least
    // element of its block, so that block is [x, b] for some b >= x.
    auto const           h = heights(s);
    std::vector<Element> order(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      order[x] = x;
    }
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return h[x] < h[y]; });

    std::unordered_map<Mask, std::uint64_t> memo;
    auto rec = [&](auto&& self, Mask unassigned) -> std::uint64_t {
      if (unassigned == 0) {
        return 1;
      }
      if (auto it = memo.find(unassigned); it != memo.end()) {
        return it->second;
      }
      Element x = 0;
      for (auto e : order) {
        if (unassigned & bit(e)) {
          x = e;
          break;
        }
      }
      std::uint64_t total = 0;
      for (auto b : ElementSet(s.up_set(x) & unassigned)) {
        Mask const block = s.up_set(x) & s.down_set(b);
        if ((block & ~unassigned) == 0) {
          total += self(self, unassigned & ~block);
        }
      }
      memo.emplace(unassigned, total);
      return total;
    };
    return rec(rec, s.all());
  }

}  // namespace semicon
