#pragma once

#include <string>

#include "json.hpp"
#include "posat/constructions.hpp"
#include "posat/family.hpp"
#include "posat/percolation.hpp"
#include "posat/poset.hpp"

namespace posat {

// All documents use plain JSON objects with sorted keys and sets written as
// sorted 1-based element lists, so serialization is deterministic and
// fixtures stay human-diffable. Parse failures throw std::invalid_argument.

nlohmann::json poset_to_json(const Poset& p, const std::string& name = "");
Poset poset_from_json(const nlohmann::json& doc);

nlohmann::json family_to_json(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& doc);

nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const ConstructionReport& r);

nlohmann::json schedule_to_json(const PercolationSchedule& s);
PercolationSchedule schedule_from_json(const nlohmann::json& doc);

}  // namespace posat
