#pragma once

#include <json.hpp>

#include "tsgeo/geometry.hpp"
#include "tsgeo/inference.hpp"
#include "tsgeo/params.hpp"

namespace tsgeo {

using Json = nlohmann::ordered_json;

/// Flat object with snake_case keys matching the field names plus the
/// uppercase "kind" tag and "horizon_t".
Json to_json(const ProcessSpec& spec);

/// Parses and validates; throws DomainError on bad kind, missing field, or
/// violated bound.
ProcessSpec spec_from_json(const Json& j);

Json to_json(const Metric2& g);
Json to_json(const Connection2& c);
Json to_json(const FitResult& r);
Json to_json(const BiasStudySummary& s);

}  // namespace tsgeo
