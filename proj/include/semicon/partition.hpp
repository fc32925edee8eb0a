#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semicon/semilattice.hpp"

namespace semicon {

  // An equivalence relation on {0, ..., n-1}. Block ids are dense and ordered
  // by smallest member; members within a block are ascending.
  class Partition {
   public:
    // Renumbers arbitrary labels into the normal form.
    static Partition from_labels(std::span<std::size_t const> labels);
    static Partition from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks);
    static Partition identity(std::size_t n);
    static Partition full(std::size_t n);

    std::size_t size() const noexcept {
      return _block_id.size();
    }
    std::size_t block_count() const noexcept {
      return _blocks.size();
    }
    std::size_t block_of(Element x) const {
      return _block_id[x];
    }
    bool same_block(Element x, Element y) const {
      return _block_id[x] == _block_id[y];
    }
    std::vector<std::size_t> const& block_ids() const noexcept {
      return _block_id;
    }
    std::vector<ElementSet> const& blocks() const noexcept {
      return _blocks;
    }
    std::vector<ElementSet> nonsingleton_blocks() const;

    // Containment as relations: every pair related here is related in other.
    bool finer_than(Partition const& other) const;

    bool operator==(Partition const& other) const {
      return _block_id == other._block_id;
    }

   private:
    Partition() = default;

    std::vector<std::size_t> _block_id;
    std::vector<ElementSet>  _blocks;
  };

  // Congruence listing order: more blocks first, then block ids
  // lexicographically.
  bool listing_order(Partition const& a, Partition const& b);

  // Minimal union-find over element indices.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);

    Element find(Element x);
    // Returns false if already joined.
    bool unite(Element x, Element y);
    Partition partition();

   private:
    std::vector<Element> _parent;
  };

}  // namespace semicon
