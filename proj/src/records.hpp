#pragma once

#include "json.hpp"

#include "fairenum/campaigns.hpp"
#include "fairenum/enumeration.hpp"
#include "fairenum/experiment.hpp"

// JSON forms of configs and results. Objects serialize with sorted keys; every
// wall-clock field name ends in "_seconds" so tools can strip timings before
// comparing reruns.
namespace fairenum::records {

using nlohmann::json;

json to_json(const ising::AnnealSchedule& s);
ising::AnnealSchedule schedule_from_json(const json& j);

json to_json(const experiment::ExperimentConfig& c);
// Missing keys keep their defaults; unknown keys throw std::invalid_argument.
experiment::ExperimentConfig experiment_config_from_json(const json& j);

json to_json(const experiment::ExperimentRecord& r);

json to_json(const campaigns::CampaignConfig& c);
campaigns::CampaignConfig campaign_config_from_json(const json& j);
json to_json(const campaigns::BoundsReport& r);

json to_json(const EnumerationResult& r);

// Copy of j with every "*_seconds" member removed, recursively.
json strip_timings(const json& j);

}  // namespace fairenum::records
