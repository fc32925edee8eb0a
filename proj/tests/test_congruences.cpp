#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "semicon/congruences.hpp"
#include "semicon/constructions.hpp"
#include "semicon/enumeration.hpp"
#include "semicon/error.hpp"
#include "semicon/partition.hpp"

using namespace semicon;

namespace {
  Partition blocks(std::size_t n, std::vector<std::vector<Element>> const& b) {
    return Partition::from_blocks(n, b);
  }
}  // namespace

TEST_CASE("partition basics") {
  auto p = blocks(4, {{0, 2}, {1, 3}});
  CHECK(p.block_count() == 2);
  CHECK(p.same_block(1, 3));
  CHECK_FALSE(p.same_block(0, 1));
  CHECK(p.nonsingleton_blocks().size() == 2);
  CHECK(Partition::identity(4).finer_than(p));
  CHECK(p.finer_than(Partition::full(4)));
  CHECK_FALSE(Partition::full(4).finer_than(p));
  CHECK_THROWS_AS(blocks(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(blocks(3, {{0, 1}, {1, 2}}), Error);

  DisjointSets ds(5);
  CHECK(ds.unite(3, 4));
  CHECK_FALSE(ds.unite(4, 3));
  ds.unite(0, 4);
  CHECK(ds.partition() == blocks(5, {{0, 3, 4}, {1}, {2}}));
}

TEST_CASE("is_meet_congruence") {
  auto b4 = named("b4");
  CHECK(is_meet_congruence(b4, Partition::identity(4)));
  CHECK(is_meet_congruence(b4, Partition::full(4)));
  CHECK(is_meet_congruence(b4, blocks(4, {{1, 3}, {0, 2}})));
  CHECK_FALSE(is_meet_congruence(b4, blocks(4, {{1, 2}, {0}, {3}})));
  CHECK_THROWS_AS(is_meet_congruence(b4, Partition::identity(3)), Error);
}

TEST_CASE("all_meet_congruences on small cases") {
  CHECK(all_meet_congruences(chain(4)).size() == 8);
  CHECK(all_meet_congruences(named("b4")).size() == 7);
  CHECK(all_meet_congruences(named("m3")).size() == 12);
  CHECK(all_meet_congruences(named("n5")).size() == 13);
  CHECK(all_meet_congruences(chain(1)).size() == 1);
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(all_meet_congruences(chain(n)).size() == (std::uint64_t{1} << (n - 1)));
  }
  CHECK_THROWS_AS(all_meet_congruences(chain(11)), Error);
  CHECK(all_meet_congruences(chain(11), 11).size() == 1024);
}

TEST_CASE("congruence list is ordered and duplicate free") {
  auto all = all_meet_congruences(named("n5"));
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(listing_order(all[i], all[i + 1]));
  CHECK(all.front() == Partition::identity(5));
  CHECK(all.back() == Partition::full(5));
}

TEST_CASE("fast enumeration, Bell scan and the oracle agree") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& s : enumerate_semilattices(n)) {
      auto fast = all_meet_congruences(s);
      auto slow = all_meet_congruences_bell(s);
      CHECK(fast == slow);
      CHECK(fast.size() == oracle::congruence_count(s));
    }
  }
  std::mt19937 rng(5);
  for (int round = 0; round < 20; ++round) {
    auto s = oracle::random_semilattice(rng, 7 + round % 2);
    CHECK(all_meet_congruences(s).size() == oracle::congruence_count(s));
  }
}

TEST_CASE("every congruence block is convex and meet-closed") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto const& s : enumerate_semilattices(n)) {
      for (auto const& p : all_meet_congruences(s)) {
        for (auto b : p.blocks()) {
          CHECK(is_convex_subsemilattice(s, b));
        }
      }
    }
  }
}

TEST_CASE("congruence_generated") {
  auto c3 = chain(3);
  CHECK(congruence_generated(c3, {}) == Partition::identity(3));
  std::vector<std::pair<Element, Element>> p02{{0, 2}};
  CHECK(congruence_generated(c3, p02) == Partition::full(3));
  std::vector<std::pair<Element, Element>> a_top{{1, 3}};
  CHECK(congruence_generated(named("b4"), a_top) == blocks(4, {{1, 3}, {0, 2}}));
}

TEST_CASE("congruence_generated is the least congruence holding the pair") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (auto const& s : enumerate_semilattices(n)) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          std::vector<std::pair<Element, Element>> pair{{a, b}};
          auto got = congruence_generated(s, pair);
          auto want = oracle::minimal_congruence(s, a, b);
          CHECK(got == Partition::from_labels(want));
        }
      }
    }
  }
}

TEST_CASE("congruence_join") {
  auto b4 = named("b4");
  auto left  = blocks(4, {{1, 3}, {0, 2}});
  auto right = blocks(4, {{2, 3}, {0, 1}});
  CHECK(congruence_join(b4, left, right) == Partition::full(4));
  CHECK(congruence_join(b4, left, Partition::identity(4)) == left);
}

TEST_CASE("quotients") {
  auto n5 = named("n5");
  CHECK(quotient(n5, Partition::identity(5)).table == n5);
  CHECK(quotient(n5, Partition::full(5)).table.size() == 1);
  auto q = quotient(named("b4"), blocks(4, {{1, 3}, {0, 2}}));
  CHECK(q.table == chain(2));
  CHECK(q.blocks.front() == ElementSet{0, 2});
  CHECK_THROWS_AS(quotient(named("b4"), blocks(4, {{1, 2}, {0}, {3}})), Error);
}

TEST_CASE("lattice congruences") {
  CHECK(is_lattice(named("n5")));
  CHECK_FALSE(is_lattice(named("f")));
  CHECK(lattice_join(named("b4"), 1, 2) == 3);
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(all_lattice_congruences(chain(n)).size() == (std::uint64_t{1} << (n - 1)));
  }
  CHECK(all_lattice_congruences(named("b4")).size() == 4);
  CHECK(all_lattice_congruences(named("n5")).size() == 5);
  CHECK(all_lattice_congruences(named("m3")).size() == 2);
  CHECK_THROWS_AS(all_lattice_congruences(named("f")), Error);
}

TEST_CASE("on chains the congruences are the interval partitions") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto c = chain(n);
    oracle::for_each_partition(n, [&](auto const& lab) {
      bool intervals = true;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          for (std::size_t z = y + 1; z < n; ++z)
            if (lab[x] == lab[z] && lab[y] != lab[x]) intervals = false;
      CHECK(is_meet_congruence(c, Partition::from_labels(lab)) == intervals);
    });
  }
}

TEST_CASE("interval-block equivalences") {
  CHECK(count_interval_block_equivalences(named("grid2x3")) == 34);
  CHECK(count_interval_block_equivalences(chain(6)) == 32);
  CHECK(count_interval_block_equivalences(chain(1)) == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& s : enumerate_semilattices(n)) {
      CHECK(count_interval_block_equivalences(s) == oracle::interval_block_count(s));
    }
  }
  CHECK(count_interval_block_equivalences(named("grid2x3")) == oracle::interval_block_count(named("grid2x3")));
}
