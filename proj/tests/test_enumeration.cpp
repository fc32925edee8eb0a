#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "semicon/congruences.hpp"
#include "semicon/constructions.hpp"
#include "semicon/enumeration.hpp"
#include "semicon/error.hpp"
#include "semicon/isomorphism.hpp"
#include "semicon/structure.hpp"

using namespace semicon;
using C = SemilatticeClass;

TEST_CASE("class counts") {
  std::vector<std::size_t> const expected{1, 1, 2, 5, 15, 53, 222, 1078};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    CHECK(enumerate_semilattices(n).size() == expected[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_semilattices(10), Error);
  CHECK_THROWS_AS(enumerate_semilattices(0), Error);
}

TEST_CASE("enumeration matches the labelled oracle exactly") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<oracle::Table> ours;
    for (auto const& s : enumerate_semilattices(n)) {
      CHECK(canonical_form(s) == s);
      ours.insert(oracle::brute_canonical(s));
    }
    CHECK(ours == oracle::semilattice_classes(n));
  }
}

TEST_CASE("output is sorted and independent of the thread count") {
  auto one  = enumerate_semilattices(7, {9, 1});
  auto many = enumerate_semilattices(7, {9, 4});
  CHECK(std::is_sorted(one.begin(), one.end()));
  CHECK(one == many);
}

TEST_CASE("semilattices of size n match lattices of size n+1") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto lattices = std::ranges::count_if(enumerate_semilattices(n + 1), is_lattice);
    CHECK(static_cast<std::size_t>(lattices) == enumerate_semilattices(n).size());
  }
}

TEST_CASE("small spectra") {
  CHECK(spectrum(1).values == std::vector<std::uint64_t>{1});
  CHECK(spectrum(2).values == std::vector<std::uint64_t>{2});
  CHECK(spectrum(3).values == std::vector<std::uint64_t>{4});
  CHECK(spectrum(4).values == std::vector<std::uint64_t>{7, 8});
  CHECK(spectrum(5).values == std::vector<std::uint64_t>{12, 13, 14, 16});
}

TEST_CASE("witnesses") {
  SpectrumOptions opts;
  opts.with_witnesses = true;
  auto sp = spectrum(5, opts);
  auto const& twelve = sp.witnesses.at(12);
  CHECK(std::find(twelve.tables.begin(), twelve.tables.end(), canonical_form(named("m3"))) != twelve.tables.end());
  std::size_t total = 0;
  for (auto const& [k, list] : sp.witnesses) {
    total += list.total;
    for (auto const& t : list.tables) CHECK(congruence_count(t) == k);
  }
  CHECK(total == 15);

  opts.witness_cap = 2;
  auto capped = spectrum(6, opts);
  for (auto const& [k, list] : capped.witnesses) {
    CHECK(list.tables.size() <= 2);
    CHECK(list.total >= list.tables.size());
  }
}

TEST_CASE("top values") {
  auto five = top_values(5, 4);
  REQUIRE(five.size() == 4);
  CHECK(five[0].value == 16);
  CHECK(five[0].classes == std::set<C>{C::Tree});
  CHECK(five[1].value == 14);
  CHECK(five[1].classes == std::set<C>{C::NucleusB4});
  CHECK(five[2].value == 13);
  CHECK(five[2].classes == std::set<C>{C::NucleusN5});
  CHECK(five[3].value == 12);
  CHECK(five[3].classes == std::set<C>{C::Other});
  CHECK_THROWS_AS(top_values(4, 3), Error);

  auto six = top_values(6, 4);
  CHECK(six[0].value == 32);
  CHECK(six[1].value == 28);
  CHECK(six[2].value == 26);
  CHECK(six[3].value == 25);
  CHECK(six[3].classes == std::set<C>{C::NucleusF, C::NucleusN6});

  auto eight = top_values(8, 4);
  CHECK(eight[0].value == 128);
  CHECK(eight[0].classes == std::set<C>{C::Tree});
  CHECK(eight[1].value == 112);
  CHECK(eight[1].classes == std::set<C>{C::NucleusB4});
  CHECK(eight[2].value == 104);
  CHECK(eight[2].classes == std::set<C>{C::NucleusN5});
  CHECK(eight[3].value == 100);
  CHECK(eight[3].classes == std::set<C>{C::NucleusF, C::NucleusN6});
}

TEST_CASE("congruence_count agrees with the Bell oracle") {
  for (auto const& s : enumerate_semilattices(6)) {
    CHECK(congruence_count(s) == oracle::congruence_count(s));
  }
}
