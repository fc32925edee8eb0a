#include "semicon/io.hpp"

#include <sstream>

#include "semicon/error.hpp"

namespace semicon {

  using nlohmann::json;

  json to_json(SemilatticeTable const& s) {
    return json{{"n", s.size()}, {"meet", s.rows()}};
  }

  SemilatticeTable semilattice_from_json(json const& j) {
    if (!j.is_object() || !j.contains("meet") || !j["meet"].is_array()) {
      throw Error(Errc::Parse, "expected an object with a \"meet\" array");
    }
    std::vector<std::vector<long long>> raw;
    for (auto const& row : j["meet"]) {
      if (!row.is_array()) {
        throw Error(Errc::Parse, "meet rows must be arrays");
      }
      auto& out = raw.emplace_back();
      for (auto const& v : row) {
        if (!v.is_number_integer()) {
          throw Error(Errc::Parse, "meet entries must be integers");
        }
        out.push_back(v.get<long long>());
      }
    }
    if (j.contains("n")) {
      if (!j["n"].is_number_integer()) {
        throw Error(Errc::Parse, "\"n\" must be an integer");
      }
      if (j["n"].get<long long>() != static_cast<long long>(raw.size())) {
        throw Error(Errc::SizeMismatch, "\"n\" disagrees with the number of rows");
      }
    }
    return validate(raw);
  }

  SemilatticeTable parse_semilattice(std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(Errc::Parse, e.what());
    }
    return semilattice_from_json(j);
  }

  json to_json(ElementSet x) {
    return json(x.to_vector());
  }

  json to_json(Partition const& p) {
    json blocks = json::array();
    for (auto b : p.blocks()) {
      blocks.push_back(to_json(b));
    }
    return json{{"blocks", blocks}};
  }

  Partition partition_from_json(json const& j, std::size_t n) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
      throw Error(Errc::Parse, "expected an object with a \"blocks\" array");
    }
    std::vector<std::vector<Element>> blocks;
    try {
      for (auto const& b : j["blocks"]) {
        blocks.push_back(b.get<std::vector<Element>>());
      }
    } catch (json::exception const& e) {
      throw Error(Errc::Parse, e.what());
    }
    return Partition::from_blocks(n, blocks);
  }

  std::string threshold_text(Threshold th, std::size_t n) {
    std::string out = std::to_string(th.coefficient) + "*2^(" + std::to_string(n) + "-6)";
    if (auto v = th.value(n)) {
      out += " = " + std::to_string(*v);
    }
    return out;
  }

  json to_json(ClassificationReport const& r) {
    json out{{"class", class_name(r.klass)},
             {"n", r.n},
             {"congruence_count", r.congruence_count},
             {"ubta_count", r.ubta_count},
             {"predicted_count", nullptr},
             {"threshold", nullptr},
             {"nucleus", nullptr},
             {"skeleton", nullptr},
             {"agrees", r.agrees()}};
    if (r.predicted_count) {
      out["predicted_count"] = *r.predicted_count;
    }
    if (auto th = predicted_threshold(r.klass)) {
      out["threshold"] = threshold_text(*th, r.n);
    }
    if (r.nucleus) {
      out["nucleus"] = to_json(*r.nucleus);
    }
    if (r.skeleton) {
      out["skeleton"] = to_json(*r.skeleton);
    }
    return out;
  }

  json to_json(Spectrum const& s) {
    json out{{"n", s.n}, {"values", s.values}};
    if (!s.witnesses.empty()) {
      json w = json::object();
      for (auto const& [value, list] : s.witnesses) {
        json tables = json::array();
        for (auto const& t : list.tables) {
          tables.push_back(to_json(t));
        }
        w[std::to_string(value)] = json{{"total", list.total}, {"tables", tables}};
      }
      out["witnesses"] = w;
    }
    return out;
  }

  std::string to_line(SemilatticeTable const& s) {
    return to_json(s).dump();
  }

  std::string to_dot(SemilatticeTable const& s, std::optional<ElementSet> nucleus) {
    std::ostringstream os;
    os << "digraph semilattice {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (Element x = 0; x < s.size(); ++x) {
      os << "  " << x;
      if (nucleus && nucleus->contains(x)) {
        os << " [style=filled, fillcolor=black, fontcolor=white]";
      }
      os << ";\n";
    }
    for (auto [lo, hi] : covers(s)) {
      os << "  " << lo << " -> " << hi << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace semicon
