#pragma once

#include <string>

#include "json.hpp"

#include "flagclass/chevalley.hpp"
#include "flagclass/flag.hpp"
#include "flagclass/structures.hpp"
#include "flagclass/weyl.hpp"

namespace flagclass {

inline constexpr const char* kSchema = "flagclass/1";

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers, anything else as "p/q".
Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);

struct ClassifyOptions {
  int iacs_cap = kDefaultIacsCap;
  /// Also run the root-level tensor oracle on every structure.
  bool with_oracle = true;
};

/// Flag summary: root counts, t-roots with fibers, zero-sum triples, tzs
/// connectivity with its certificate.
Json info_report(const FlagSpec& f);

/// Full classification of every iacs of the flag.
Json classification_report(const FlagSpec& f, const ClassifyOptions& opt = {});

/// Orbits of the iacs under A_Theta, metric fixed to the normal one.
Json orbit_report(const FlagSpec& f, std::uint64_t weyl_cap = kDefaultWeylCap, int iacs_cap = kDefaultIacsCap);

/// Plain-text rendering of an info or classification report.
std::string render_text(const Json& report);

}  // namespace flagclass
