#pragma once

#include <json.hpp>

#include "dhz/atoms.hpp"
#include "dhz/counterexample.hpp"
#include "dhz/enclosure.hpp"
#include "dhz/report.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// Sequence literal: {"offset": int, "values": [num, ...]}; the zero
// sequence round-trips as an empty value list.
nlohmann::json to_json(const Sequence& b);
Sequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Enclosure& e);
nlohmann::json to_json(const AtomReport& r);
nlohmann::json to_json(const ExperimentReport& r);

// Enclosure endpoints as decimal strings carrying their printed precision.
nlohmann::json to_json(const CounterexampleCertificate& c);

}  // namespace dhz
