#pragma once

#include <json.hpp>

#include "satake/embedding.hpp"
#include "satake/fan.hpp"
#include "satake/seminorm.hpp"
#include "satake/weights.hpp"

namespace satake {

using Json = nlohmann::json;

/// Rationals serialize as "p" / "p/q" strings, -infinity as "-inf".
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json exps_to_json(const std::vector<ExtRat>& e);
std::vector<ExtRat> exps_from_json(const Json& j);

Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

Json fan_report_json(const RootDatum& rd, const Fan& fan,
                     const FanCheckResult* check);

Json weight_system_json(const RootDatum& rd, const WeightSystem& ws);
Json admissibility_json(const RootDatum& rd, const WeightSystem& ws);

Json seminorm_to_json(const DiagSeminorm& x);
DiagSeminorm seminorm_from_json(const Json& j);

LogAffineSequence sequence_from_json(const Json& j);
Json sequence_report_json(const LogAffineSequence& s,
                          const SequenceLimitReport& rep);

Json embedding_report_json(const RootDatum& rd, const WeightList& wl,
                           const PullbackReport& rep);

}  // namespace satake
