#include "semicon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "semicon/congruences.hpp"
#include "semicon/constructions.hpp"
#include "semicon/enumeration.hpp"
#include "semicon/error.hpp"
#include "semicon/fixtures.hpp"
#include "semicon/isomorphism.hpp"
#include "semicon/join_subalgebras.hpp"
#include "semicon/structure.hpp"

namespace semicon {

  namespace {
    class Catalogue {
     public:
      explicit Catalogue(unsigned threads) : _threads(threads) {}

      std::vector<SemilatticeTable> const& of_size(std::size_t n) {
        auto it = _cache.find(n);
        if (it == _cache.end()) {
          it = _cache.emplace(n, enumerate_semilattices(n, {9, _threads})).first;
        }
        return it->second;
      }

     private:
      unsigned                                              _threads;
      std::map<std::size_t, std::vector<SemilatticeTable>> _cache;
    };

    // detail stream collects the first failure; returns pass/fail
    using Check = std::function<bool(std::ostringstream&)>;

    ClaimResult run(std::string id, std::string statement, Check const& check) {
      auto const         start = std::chrono::steady_clock::now();
      std::ostringstream detail;
      bool               ok = false;
      try {
        ok = check(detail);
      } catch (Error const& e) {
        detail << "error: " << e.what();
      }
      std::chrono::duration<double> const took = std::chrono::steady_clock::now() - start;
      return {std::move(id), std::move(statement), ok, detail.str(), took.count()};
    }

    std::string values_text(std::vector<std::uint64_t> const& v) {
      std::string out = "{";
      for (auto x : v) {
        out += (out.size() > 1 ? "," : "") + std::to_string(x);
      }
      return out + "}";
    }
  }  // namespace

  std::vector<ClaimResult> verify_claims(std::size_t n_max, unsigned threads) {
    Catalogue                cat(threads);
    std::vector<ClaimResult> out;
    auto const               upto = [&](std::size_t cap) { return std::min(n_max, cap); };

    out.push_back(run("spectra", "small spectra {2}, {4}, {7,8}, {12,13,14,16}; M3 witnesses 12",
                      [&](std::ostringstream& d) {
                        std::map<std::size_t, std::vector<std::uint64_t>> const expected{
                            {2, {2}}, {3, {4}}, {4, {7, 8}}, {5, {12, 13, 14, 16}}};
                        for (auto const& [n, values] : expected) {
                          if (n > n_max) {
                            continue;
                          }
                          SpectrumOptions opts;
                          opts.enumeration.threads = threads;
                          opts.with_witnesses      = (n == 5);
                          auto sp                  = spectrum(n, opts);
                          if (sp.values != values) {
                            d << "n=" << n << ": got " << values_text(sp.values);
                            return false;
                          }
                          if (n == 5) {
                            auto const m3 = canonical_form(named("m3"));
                            auto const& w = sp.witnesses.at(12).tables;
                            if (std::find(w.begin(), w.end(), m3) == w.end()) {
                              d << "M3 missing among witnesses of 12";
                              return false;
                            }
                          }
                        }
                        return true;
                      }));

    out.push_back(run("top-four", "four largest counts are {32,28,26,25}*2^(n-6) with matching classes",
                      [&](std::ostringstream& d) {
                        using C = SemilatticeClass;
                        std::vector<std::pair<std::uint64_t, std::set<C>>> const expect{
                            {32, {C::Tree}},
                            {28, {C::NucleusB4}},
                            {26, {C::NucleusN5}},
                            {25, {C::NucleusF, C::NucleusN6}}};
                        for (std::size_t n = 6; n <= upto(9); ++n) {
                          auto const& all = cat.of_size(n);
                          std::set<std::uint64_t, std::greater<>> values;
                          for (auto const& s : all) {
                            auto const k   = congruence_count(s);
                            auto const cls = structural_class(s);
                            values.insert(k);
                            auto th = predicted_threshold(cls);
                            if (th && !th->matches(k, n)) {
                              d << "n=" << n << ": class " << class_name(cls) << " has k=" << k;
                              return false;
                            }
                            for (auto const& [c, classes] : expect) {
                              if (Threshold{c}.matches(k, n) && !classes.contains(cls)) {
                                d << "n=" << n << ": k=" << k << " witnessed by class "
                                  << class_name(cls);
                                return false;
                              }
                            }
                          }
                          auto it = values.begin();
                          for (auto const& [c, classes] : expect) {
                            if (it == values.end() || !Threshold{c}.matches(*it, n)) {
                              d << "n=" << n << ": expected " << c << "*2^(n-6) in rank order";
                              return false;
                            }
                            ++it;
                          }
                        }
                        return true;
                      }));

    out.push_back(run("quasi-trees", "large quasi-trees: 28, 1664, 3200", [&](std::ostringstream& d) {
      for (auto const& fx : quasi_tree_fixtures()) {
        auto const r = classify(fx.table);
        if (r.klass != fx.klass || r.congruence_count != fx.expected_count) {
          d << fx.name << ": " << class_name(r.klass) << " k=" << r.congruence_count;
          return false;
        }
      }
      return true;
    }));

    out.push_back(run("duality", "|Con| = |Sub| by both counts; dual map is an order-reversing bijection",
                      [&](std::ostringstream& d) {
                        for (std::size_t n = 1; n <= upto(7); ++n) {
                          for (auto const& s : cat.of_size(n)) {
                            PartialJoinStructure pj(s);
                            auto const           con = all_meet_congruences(s).size();
                            auto const           bf  = count_join_closed_bruteforce(pj);
                            auto const           ie  = count_join_closed_ie(pj);
                            if (con != bf || bf != ie) {
                              d << "n=" << n << ": " << con << "/" << bf << "/" << ie;
                              return false;
                            }
                            verify_duality(s);
                          }
                        }
                        return true;
                      }));

    out.push_back(run("tree-quotient", "S / tcon is a tree", [&](std::ostringstream& d) {
      for (std::size_t n = 1; n <= upto(7); ++n) {
        for (auto const& s : cat.of_size(n)) {
          if (!is_tree(quotient(s, tree_congruence(s)).table)) {
            d << "n=" << n << ": quotient is not a tree";
            return false;
          }
        }
      }
      return true;
    }));

    out.push_back(run("convex-block", "condition (b) iff single-block congruence", [&](std::ostringstream& d) {
      for (std::size_t n = 2; n <= upto(6); ++n) {
        for (auto const& s : cat.of_size(n)) {
          for (Mask x = 1; x <= s.all(); ++x) {
            ElementSet const set(x);
            if (set.size() < 2 || !is_convex_subsemilattice(s, set)) {
              continue;
            }
            auto const r = convex_block_congruence_check(s, set);
            if (r.condition_b != r.is_congruence) {
              d << "n=" << n << ": mismatch on mask " << x;
              return false;
            }
          }
        }
      }
      return true;
    }));

    out.push_back(run("lattice-bound", "lattices: |Con| <= 2^(n-1), equality only for chains",
                      [&](std::ostringstream& d) {
                        for (std::size_t n = 1; n <= upto(8); ++n) {
                          for (auto const& s : cat.of_size(n)) {
                            if (!is_lattice(s)) {
                              continue;
                            }
                            auto const k      = all_lattice_congruences(s).size();
                            bool const is_chain = semicon::is_chain(s);
                            std::uint64_t const bound = std::uint64_t{1} << (n - 1);
                            if (k > bound || ((k == bound) != is_chain)) {
                              d << "n=" << n << ": k=" << k << " chain=" << is_chain;
                              return false;
                            }
                          }
                        }
                        return true;
                      }));

    out.push_back(run("interval-blocks", "2x3 grid has 34 interval-block equivalences, 6-chain 32",
                      [&](std::ostringstream& d) {
                        auto const grid  = count_interval_block_equivalences(named("grid2x3"));
                        auto const chain6 = count_interval_block_equivalences(named("chain_6"));
                        d << "grid=" << grid << " chain=" << chain6;
                        return grid == 34 && chain6 == 32;
                      }));

    out.push_back(run("enumeration", "n-element semilattices match (n+1)-element lattices",
                      [&](std::ostringstream& d) {
                        for (std::size_t n = 1; n + 1 <= upto(9); ++n) {
                          auto const semilattices = cat.of_size(n).size();
                          auto const& bigger      = cat.of_size(n + 1);
                          auto const lattices =
                              static_cast<std::size_t>(std::ranges::count_if(bigger, is_lattice));
                          if (semilattices != lattices) {
                            d << "n=" << n << ": " << semilattices << " vs " << lattices;
                            return false;
                          }
                        }
                        return true;
                      }));
    return out;
  }

}  // namespace semicon
