#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "semicon/enumeration.hpp"
#include "semicon/partition.hpp"
#include "semicon/semilattice.hpp"
#include "semicon/structure.hpp"

namespace semicon {

  // {"n": <int>, "meet": [[row 0], ..., [row n-1]]}
  nlohmann::json   to_json(SemilatticeTable const& s);
  SemilatticeTable semilattice_from_json(nlohmann::json const& j);
  // Throws Error(Parse) on malformed text, validation errors otherwise.
  SemilatticeTable parse_semilattice(std::string_view text);

  // {"blocks": [[...], ...]}
  nlohmann::json to_json(Partition const& p);
  Partition      partition_from_json(nlohmann::json const& j, std::size_t n);

  nlohmann::json to_json(ElementSet x);
  nlohmann::json to_json(ClassificationReport const& r);
  nlohmann::json to_json(Spectrum const& s);

  // Compact single-line form used for newline-delimited dumps.
  std::string to_line(SemilatticeTable const& s);

  // Hasse diagram; with a nucleus, its vertices get a black fill.
  std::string to_dot(SemilatticeTable const& s, std::optional<ElementSet> nucleus = std::nullopt);

  // "c*2^(n-6)" with the value when integral.
  std::string threshold_text(Threshold th, std::size_t n);

}  // namespace semicon
