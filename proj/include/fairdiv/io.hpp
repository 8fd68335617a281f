#pragma once

#include <string>

#include <json.hpp>

#include "fairdiv/fairness.hpp"
#include "fairdiv/fisher.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv::io {

using Json = nlohmann::ordered_json;

/// Parses the instance document: {"kind", "agents"?, "items"?, "valuations"}.
/// The kind field is required and cross-checked against the sign pattern.
Instance parse_instance(const std::string& text);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);

/// Allocation document bundles, resolved against the instance's item names.
Allocation allocation_from_json(const Instance& inst, const Json& doc);
Json allocation_to_json(const Instance& inst, const Allocation& alloc, Json certificates);

Json report_to_json(const Instance& inst, const fairness::FairnessReport& report);
Json trace_event_to_json(const fisher::TraceEvent& event);
std::string trace_to_lines(const fisher::Trace& trace);

}  // namespace fairdiv::io
