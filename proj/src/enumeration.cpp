#include "semicon/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>

#include "semicon/constructions.hpp"
#include "semicon/error.hpp"
#include "semicon/isomorphism.hpp"
#include "semicon/join_subalgebras.hpp"

namespace semicon {

  namespace {
    // Children of one parent that pass the canonical-deletion test, deduped
    // among themselves.
    std::vector<SemilatticeTable> accepted_children(SemilatticeTable const& parent) {
      std::set<SemilatticeTable> kids;
      for (Mask d : extension_sets(parent)) {
        auto child   = add_maximal(parent, d);
        auto labels  = canonical_labeling(child);
        auto canon   = relabel(child, labels.order);
        if (kids.contains(canon)) {
          continue;
        }
        Element const last = labels.order.back();
        if (last != parent.size()
            && canonical_form(remove_maximal(child, last)) != parent) {
          continue;
        }
        kids.insert(std::move(canon));
      }
      return {kids.begin(), kids.end()};
    }

    template <typename Fn>
    void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
      if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
      }
      threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
      if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          fn(i);
        }
        return;
      }
      std::atomic<std::size_t>  next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < count; i = next++) {
            fn(i);
          }
        });
      }
    }
  }  // namespace

  std::vector<SemilatticeTable> enumerate_semilattices(std::size_t n, EnumerationOptions opts) {
    if (n == 0 || n > opts.max_n) {
      throw Error(Errc::TooLarge, "enumeration supports 1 <= n <= " + std::to_string(opts.max_n)
                                      + ", got " + std::to_string(n));
    }
    std::vector<SemilatticeTable> level{chain(1)};
    for (std::size_t size = 2; size <= n; ++size) {
      std::vector<std::vector<SemilatticeTable>> per_parent(level.size());
      parallel_for(level.size(), opts.threads,
                   [&](std::size_t i) { per_parent[i] = accepted_children(level[i]); });
      std::vector<SemilatticeTable> next;
      for (auto& kids : per_parent) {
        std::move(kids.begin(), kids.end(), std::back_inserter(next));
      }
      std::sort(next.begin(), next.end());
      level = std::move(next);
    }
    return level;
  }

  std::uint64_t congruence_count(SemilatticeTable const& s) {
    return count_join_closed(PartialJoinStructure(s));
  }

  Spectrum spectrum(std::size_t n, SpectrumOptions opts) {
    auto const                 all = enumerate_semilattices(n, opts.enumeration);
    std::vector<std::uint64_t> counts(all.size());
    parallel_for(all.size(), opts.enumeration.threads,
                 [&](std::size_t i) { counts[i] = congruence_count(all[i]); });
    Spectrum out{n, {}, {}};
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto& w = out.witnesses[counts[i]];
      ++w.total;
      if (opts.with_witnesses && w.tables.size() < opts.witness_cap) {
        w.tables.push_back(all[i]);
      }
    }
    for (auto const& [value, w] : out.witnesses) {
      out.values.push_back(value);
    }
    if (!opts.with_witnesses) {
      out.witnesses.clear();
    }
    return out;
  }

  std::vector<TopValue> top_values(std::size_t n, std::size_t m, EnumerationOptions opts) {
    auto const                 all = enumerate_semilattices(n, opts);
    std::vector<std::uint64_t> counts(all.size());
    parallel_for(all.size(), opts.threads,
                 [&](std::size_t i) { counts[i] = congruence_count(all[i]); });
    std::set<std::uint64_t, std::greater<>> values(counts.begin(), counts.end());
    if (values.size() < m) {
      throw Error(Errc::NotEnoughValues, "only " + std::to_string(values.size())
                                             + " distinct values for n = " + std::to_string(n));
    }
    std::vector<TopValue> out;
    for (auto v : values) {
      if (out.size() == m) {
        break;
      }
      out.push_back({v, 0, {}});
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (auto& tv : out) {
        if (tv.value == counts[i]) {
          ++tv.semilattices;
          tv.classes.insert(structural_class(all[i]));
        }
      }
    }
    return out;
  }

}  // namespace semicon
