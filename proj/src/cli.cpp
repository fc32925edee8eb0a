#include "semicon/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "semicon/congruences.hpp"
#include "semicon/constructions.hpp"
#include "semicon/enumeration.hpp"
#include "semicon/error.hpp"
#include "semicon/io.hpp"
#include "semicon/join_subalgebras.hpp"
#include "semicon/structure.hpp"
#include "semicon/verify.hpp"

namespace semicon::cli {

  namespace {
    using nlohmann::json;

    struct IoFailure : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Config {
      std::string input;
      std::string format    = "human";
      std::size_t max_n     = 9;
      std::size_t max_ubtas = kDefaultUbtaBound;
      std::size_t max_congruence_n = kDefaultCongruenceBound;
      unsigned    threads   = 1;
      std::string method    = "all";
      std::size_t n         = 0;
      bool        witnesses = false;
      std::size_t top       = 0;
      std::string filter;
      std::string out_dir;
      bool        mark_nucleus = false;
    };

    std::string read_input(std::string const& input) {
      if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
      }
      std::ifstream file(input);
      if (!file) {
        throw IoFailure("cannot open " + input);
      }
      std::ostringstream ss;
      ss << file.rdbuf();
      return ss.str();
    }

    // A path, "-" for stdin, inline JSON, or named:<name>.
    SemilatticeTable load(std::string const& input) {
      if (input.starts_with("named:")) {
        return named(input.substr(6));
      }
      auto first = input.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && input[first] == '{') {
        return parse_semilattice(input);
      }
      return parse_semilattice(read_input(input));
    }

    bool machine(Config const& c) {
      return c.format == "json";
    }

    std::string threshold_note(std::uint64_t k, std::size_t n) {
      for (std::uint64_t c : {32, 28, 26, 25}) {
        if (Threshold{c}.matches(k, n)) {
          return " (" + std::to_string(c) + "*2^(" + std::to_string(n) + "-6))";
        }
      }
      return "";
    }

    int cmd_validate(Config const& c, std::ostream& out) {
      auto s = load(c.input);
      if (machine(c)) {
        out << json{{"valid", true}, {"n", s.size()}}.dump() << "\n";
      } else {
        out << "valid meet semilattice, n = " << s.size() << "\n";
      }
      return kOk;
    }

    int cmd_count(Config const& c, std::ostream& out) {
      auto                 s = load(c.input);
      PartialJoinStructure pj(s);
      auto const           n = s.size();
      json                 result = json::object();
      std::vector<std::uint64_t> seen;

      auto want = [&](char const* m) { return c.method == "all" || c.method == m; };
      if (want("congruences")) {
        if (c.method == "all" && n > c.max_congruence_n) {
          result["congruences"] = nullptr;
        } else {
          auto k = all_meet_congruences(s, c.max_congruence_n).size();
          result["congruences"] = k;
          seen.push_back(k);
        }
      }
      if (want("subsets")) {
        auto k = count_join_closed_bruteforce(pj);
        result["subsets"] = k;
        seen.push_back(k);
      }
      if (want("incl-excl")) {
        if (c.method == "all" && pj.ubtas().size() > c.max_ubtas) {
          result["incl-excl"] = nullptr;
        } else {
          auto k = count_join_closed_ie(pj, c.max_ubtas);
          result["incl-excl"] = k;
          seen.push_back(k);
        }
      }
      bool const agree = std::adjacent_find(seen.begin(), seen.end(), std::not_equal_to<>()) == seen.end();
      if (machine(c)) {
        result["n"]     = n;
        result["agree"] = agree;
        out << result.dump() << "\n";
      } else if (c.method != "all") {
        out << seen.front() << threshold_note(seen.front(), n) << "\n";
      } else {
        for (auto const& [name, value] : result.items()) {
          out << std::left << std::setw(12) << name << " ";
          if (value.is_null()) {
            out << "skipped (bound)\n";
          } else {
            auto k = value.get<std::uint64_t>();
            out << k << threshold_note(k, n) << "\n";
          }
        }
        if (!agree) {
          out << "DISAGREEMENT\n";
        }
      }
      return agree ? kOk : kClaimFailed;
    }

    int cmd_classify(Config const& c, std::ostream& out) {
      auto s = load(c.input);
      auto r = classify(s);
      if (machine(c)) {
        out << to_json(r).dump() << "\n";
      } else {
        out << "class            " << class_name(r.klass) << "\n"
            << "n                " << r.n << "\n"
            << "congruences      " << r.congruence_count << "\n"
            << "ubtas            " << r.ubta_count << "\n";
        if (auto th = predicted_threshold(r.klass)) {
          out << "predicted        " << threshold_text(*th, r.n) << "\n";
        }
        if (r.nucleus) {
          out << "nucleus          " << to_json(*r.nucleus).dump() << "\n"
              << "skeleton size    " << r.skeleton->size() << "\n";
        }
        if (!r.agrees()) {
          out << "MISMATCH between class prediction and count\n";
        }
      }
      return r.agrees() ? kOk : kClaimFailed;
    }

    int cmd_spectrum(Config const& c, std::ostream& out) {
      EnumerationOptions eopts{c.max_n, c.threads};
      if (c.top > 0) {
        auto tops = top_values(c.n, c.top, eopts);
        if (machine(c)) {
          json arr = json::array();
          for (auto const& tv : tops) {
            json classes = json::array();
            for (auto cls : tv.classes) {
              classes.push_back(class_name(cls));
            }
            arr.push_back({{"value", tv.value}, {"semilattices", tv.semilattices}, {"classes", classes}});
          }
          out << json{{"n", c.n}, {"top", arr}}.dump() << "\n";
        } else {
          for (auto const& tv : tops) {
            out << tv.value << threshold_note(tv.value, c.n) << "  [";
            bool first = true;
            for (auto cls : tv.classes) {
              out << (first ? "" : ", ") << class_name(cls);
              first = false;
            }
            out << "]  " << tv.semilattices << " semilattice(s)\n";
          }
        }
        return kOk;
      }
      SpectrumOptions opts{eopts, c.witnesses, 64};
      auto            sp = spectrum(c.n, opts);
      if (machine(c)) {
        out << to_json(sp).dump() << "\n";
      } else {
        out << "NCsl(" << c.n << ") = {";
        for (std::size_t i = 0; i < sp.values.size(); ++i) {
          out << (i ? ", " : "") << sp.values[sp.values.size() - 1 - i];
        }
        out << "}\n";
        for (auto const& [value, list] : sp.witnesses) {
          out << value << ": " << list.total << " semilattice(s)\n";
          for (auto const& t : list.tables) {
            out << "  " << to_line(t) << "\n";
          }
        }
      }
      return kOk;
    }

    bool keep(std::string const& filter, SemilatticeTable const& s) {
      if (filter.empty()) {
        return true;
      }
      if (filter == "tree") {
        return is_tree(s);
      }
      if (filter == "quasi-tree") {
        return is_quasi_tree(s);
      }
      if (filter == "lattice") {
        return is_lattice(s);
      }
      if (filter.starts_with("class:")) {
        auto cls = parse_class(filter.substr(6));
        if (!cls) {
          throw Error(Errc::UnknownName, "unknown class " + filter.substr(6));
        }
        return structural_class(s) == *cls;
      }
      throw Error(Errc::UnknownName, "unknown filter " + filter);
    }

    int cmd_enumerate(Config const& c, std::ostream& out) {
      auto all = enumerate_semilattices(c.n, {c.max_n, c.threads});
      std::erase_if(all, [&](SemilatticeTable const& s) { return !keep(c.filter, s); });
      if (c.out_dir.empty()) {
        for (auto const& s : all) {
          out << to_line(s) << "\n";
        }
        return kOk;
      }
      namespace fs = std::filesystem;
      std::error_code ec;
      fs::create_directories(c.out_dir, ec);
      if (ec) {
        throw IoFailure("cannot create " + c.out_dir + ": " + ec.message());
      }
      auto const width = std::to_string(all.size()).size();
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::ostringstream name;
        name << "s" << c.n << "_" << std::setw(static_cast<int>(width)) << std::setfill('0') << i
             << ".json";
        auto          path = fs::path(c.out_dir) / name.str();
        std::ofstream file(path);
        if (!file) {
          throw IoFailure("cannot write " + path.string());
        }
        file << to_line(all[i]) << "\n";
      }
      if (!machine(c)) {
        out << all.size() << " file(s) written to " << c.out_dir << "\n";
      } else {
        out << json{{"written", all.size()}, {"dir", c.out_dir}}.dump() << "\n";
      }
      return kOk;
    }

    int cmd_verify(Config const& c, std::ostream& out) {
      auto results = verify_claims(c.n, c.threads);
      bool ok      = true;
      json arr     = json::array();
      for (auto const& r : results) {
        ok = ok && r.passed;
        if (machine(c)) {
          arr.push_back({{"claim", r.id}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
          out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(16) << r.id << " "
              << r.statement;
          if (!r.passed) {
            out << "  -- " << r.detail;
          }
          out << "\n";
        }
      }
      if (machine(c)) {
        out << json{{"n_max", c.n}, {"passed", ok}, {"claims", arr}}.dump() << "\n";
      }
      return ok ? kOk : kClaimFailed;
    }

    int cmd_dot(Config const& c, std::ostream& out) {
      auto                      s = load(c.input);
      std::optional<ElementSet> core;
      if (c.mark_nucleus && is_quasi_tree(s)) {
        core = nucleus(s);
      }
      out << to_dot(s, core);
      return kOk;
    }

    bool invalid_semilattice(Errc e) {
      return e != Errc::Parse;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Config  c;
    CLI::App app{"Congruences of finite meet semilattices", "semicon"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--max-n", c.max_n, "Enumeration bound")
        ->envname("SEMICON_MAX_N")
        ->check(CLI::Range(1, 12));
    app.add_option("--max-ubtas", c.max_ubtas, "UBTA bound for inclusion-exclusion")
        ->envname("SEMICON_MAX_UBTAS")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-congruence-n", c.max_congruence_n, "Size bound for congruence enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");

    auto* validate_cmd = app.add_subcommand("validate", "Check a semilattice table");
    validate_cmd->add_option("input", c.input, "Path, '-', inline JSON or named:<name>")->required();

    auto* count_cmd = app.add_subcommand("count", "Count congruences");
    count_cmd->add_option("input", c.input)->required();
    count_cmd->add_option("--method", c.method)
        ->check(CLI::IsMember({"congruences", "subsets", "incl-excl", "all"}));

    auto* classify_cmd = app.add_subcommand("classify", "Classify by tree/nucleus structure");
    classify_cmd->add_option("input", c.input)->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Congruence counts over all n-element semilattices");
    spectrum_cmd->add_option("n", c.n)->required()->check(CLI::PositiveNumber);
    spectrum_cmd->add_flag("--witnesses", c.witnesses);
    spectrum_cmd->add_option("--top", c.top, "Report only the largest m values")->check(CLI::PositiveNumber);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List n-element semilattices up to isomorphism");
    enumerate_cmd->add_option("n", c.n)->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--filter", c.filter, "tree | quasi-tree | lattice | class:<name>");
    enumerate_cmd->add_option("--out", c.out_dir, "Write one JSON file per semilattice");

    auto* verify_cmd = app.add_subcommand("verify", "Check every claim up to n_max");
    verify_cmd->add_option("n_max", c.n)->required()->check(CLI::Range(1, 9));

    auto* dot_cmd = app.add_subcommand("dot", "Hasse diagram in DOT");
    dot_cmd->add_option("input", c.input)->required();
    dot_cmd->add_flag("--mark-nucleus", c.mark_nucleus);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "semicon: " << e.what() << "\n";
      return kIoError;
    }

    try {
      if (*validate_cmd) return cmd_validate(c, out);
      if (*count_cmd) return cmd_count(c, out);
      if (*classify_cmd) return cmd_classify(c, out);
      if (*spectrum_cmd) return cmd_spectrum(c, out);
      if (*enumerate_cmd) return cmd_enumerate(c, out);
      if (*verify_cmd) return cmd_verify(c, out);
      if (*dot_cmd) return cmd_dot(c, out);
    } catch (IoFailure const& e) {
      err << "semicon: " << e.what() << "\n";
      return kIoError;
    } catch (Error const& e) {
      err << "semicon: " << e.what() << "\n";
      return invalid_semilattice(e.code()) ? kInvalidInput : kIoError;
    }
    return kIoError;
  }

}  // namespace semicon::cli
