#include "semicon/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semicon/error.hpp"

namespace semicon {

  Partition Partition::from_labels(std::span<std::size_t const> labels) {
    Partition p;
    auto const n = labels.size();
    p._block_id.assign(n, 0);
    std::vector<std::size_t> seen_label;
    for (std::size_t x = 0; x < n; ++x) {
      auto it = std::find(seen_label.begin(), seen_label.end(), labels[x]);
      std::size_t id;
      if (it == seen_label.end()) {
        id = seen_label.size();
        seen_label.push_back(labels[x]);
        p._blocks.emplace_back();
      } else {
        id = static_cast<std::size_t>(it - seen_label.begin());
      }
      p._block_id[x] = id;
      p._blocks[id].insert(static_cast<Element>(x));
    }
    return p;
  }

  Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks) {
    if (n > kMaxElements) {
      throw Error(Errc::TooLarge, "partition of " + std::to_string(n) + " elements");
    }
    std::vector<std::size_t> labels(n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw Error(Errc::BadEntry, "empty block");
      }
      for (auto x : blocks[b]) {
        if (x >= n || labels[x] != n) {
          throw Error(Errc::BadEntry, "element " + std::to_string(x) + " misplaced in blocks");
        }
        labels[x] = b;
      }
    }
    if (std::find(labels.begin(), labels.end(), n) != labels.end()) {
      throw Error(Errc::SizeMismatch, "blocks do not cover all elements");
    }
    return from_labels(labels);
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return from_labels(labels);
  }

  Partition Partition::full(std::size_t n) {
    std::vector<std::size_t> labels(n, 0);
    return from_labels(labels);
  }

  std::vector<ElementSet> Partition::nonsingleton_blocks() const {
    std::vector<ElementSet> out;
    std::copy_if(_blocks.begin(), _blocks.end(), std::back_inserter(out),
                 [](ElementSet b) { return b.size() > 1; });
    return out;
  }

  bool Partition::finer_than(Partition const& other) const {
    if (size() != other.size()) {
      throw Error(Errc::SizeMismatch, "comparing partitions of different sizes");
    }
    return std::all_of(_blocks.begin(), _blocks.end(), [&](ElementSet b) {
      return b.subset_of(other._blocks[other.block_of(b.front())]);
    });
  }

  bool listing_order(Partition const& a, Partition const& b) {
    if (a.block_count() != b.block_count()) {
      return a.block_count() > b.block_count();
    }
    return a.block_ids() < b.block_ids();
  }

  DisjointSets::DisjointSets(std::size_t n) : _parent(n) {
    std::iota(_parent.begin(), _parent.end(), Element{0});
  }

  Element DisjointSets::find(Element x) {
    while (_parent[x] != x) {
      x = _parent[x] = _parent[_parent[x]];
    }
    return x;
  }

  bool DisjointSets::unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    // smaller root wins so representatives are block minima
    if (y < x) {
      std::swap(x, y);
    }
    _parent[y] = x;
    return true;
  }

  Partition DisjointSets::partition() {
    std::vector<std::size_t> labels(_parent.size());
    for (Element x = 0; x < _parent.size(); ++x) {
      labels[x] = find(x);
    }
    return Partition::from_labels(labels);
  }

}  // namespace semicon
