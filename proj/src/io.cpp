#include "fairdiv/io.hpp"

#include <algorithm>
#include <map>

namespace fairdiv::io {

Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidDocument, std::string("not valid JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Instance instance_from_json(const Json& doc) {
  require(doc.is_object(), Errc::InvalidDocument, "instance document must be a JSON object");
  require(doc.contains("valuations") && doc["valuations"].is_array(), Errc::InvalidDocument,
          "missing \"valuations\" matrix");
  const Json& rows = doc["valuations"];
  require(!rows.empty(), Errc::EmptyAgents, "instance needs at least one agent");

  std::vector<std::vector<Int>> values;
  bool negative = false, positive = false;
  for (const Json& row : rows) {
    require(row.is_array(), Errc::InvalidDocument, "valuation rows must be arrays");
    std::vector<Int> out;
    for (const Json& cell : row) {
      require(cell.is_number_integer(), Errc::NonInteger, "valuations must be integers");
      out.push_back(cell.get<Int>());
      negative = negative || out.back() < 0;
      positive = positive || out.back() > 0;
    }
    values.push_back(std::move(out));
  }

  // kind is validated when present and inferred from the sign pattern when
  // absent (an all-zero matrix defaults to goods).
  Kind kind;
  if (doc.contains("kind")) {
    require(doc["kind"].is_string(), Errc::InvalidDocument, "kind must be a string");
    const std::string kind_str = doc["kind"].get<std::string>();
    require(kind_str == "goods" || kind_str == "chores", Errc::InvalidDocument,
            "kind must be \"goods\" or \"chores\"");
    kind = kind_str == "goods" ? Kind::Goods : Kind::Chores;
  } else {
    require(!(negative && positive), Errc::MixedSigns,
            "matrix mixes positive and negative valuations");
    kind = negative ? Kind::Chores : Kind::Goods;
  }

  std::vector<std::string> agents, items;
  if (doc.contains("agents")) {
    require(doc["agents"].is_array(), Errc::InvalidDocument, "agents must be an array of names");
    for (const Json& a : doc["agents"]) {
      require(a.is_string(), Errc::InvalidDocument, "agent names must be strings");
      agents.push_back(a.get<std::string>());
    }
  }
  if (doc.contains("items")) {
    require(doc["items"].is_array(), Errc::InvalidDocument, "items must be an array of names");
    for (const Json& c : doc["items"]) {
      require(c.is_string(), Errc::InvalidDocument, "item names must be strings");
      items.push_back(c.get<std::string>());
    }
  }
  return Instance(kind, std::move(values), std::move(agents), std::move(items));
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["kind"] = kind_name(inst.kind());
  doc["agents"] = inst.agent_names();
  doc["items"] = inst.item_names();
  doc["valuations"] = inst.matrix();
  return doc;
}

Allocation allocation_from_json(const Instance& inst, const Json& doc) {
  require(doc.is_object() && doc.contains("bundles") && doc["bundles"].is_object(),
          Errc::InvalidDocument, "allocation document needs a \"bundles\" object");
  std::map<std::string, int> agent_of, item_of;
  for (int i = 0; i < inst.n(); ++i) agent_of[inst.agent_name(i)] = i;
  for (int r = 0; r < inst.m(); ++r) item_of[inst.item_name(r)] = r;

  std::vector<std::vector<int>> bundles(inst.n());
  for (const auto& [agent, item_list] : doc["bundles"].items()) {
    require(agent_of.count(agent) > 0, Errc::InvalidDocument, "unknown agent " + agent);
    require(item_list.is_array(), Errc::InvalidDocument, "bundle must be an array of item names");
    for (const Json& item : item_list) {
      require(item.is_string() && item_of.count(item.get<std::string>()) > 0,
              Errc::InvalidDocument, "unknown item in bundle");
      bundles[agent_of[agent]].push_back(item_of[item.get<std::string>()]);
    }
  }
  Allocation alloc = Allocation::from_bundles(inst.n(), inst.m(), bundles);
  require(alloc.complete(), Errc::InvalidDocument, "allocation leaves items unassigned");
  return alloc;
}

Json allocation_to_json(const Instance& inst, const Allocation& alloc, Json certificates) {
  Json bundles = Json::object();
  for (int i = 0; i < inst.n(); ++i) {
    Json items = Json::array();
    for (int r : alloc.bundle(i)) items.push_back(inst.item_name(r));
    bundles[inst.agent_name(i)] = std::move(items);
  }
  Json doc;
  doc["bundles"] = std::move(bundles);
  doc["certificates"] = std::move(certificates);
  return doc;
}

Json report_to_json(const Instance& inst, const fairness::FairnessReport& report) {
  Json doc;
  doc["property"] = fairness::property_name(report.property);
  doc["holds"] = report.holds;
  if (report.witness) {
    doc["witness"] = {inst.agent_name(report.witness->first),
                      inst.agent_name(report.witness->second)};
  }
  if (report.dominator) {
    Json bundles = Json::object();
    for (int i = 0; i < inst.n(); ++i) {
      Json items = Json::array();
      for (int r : report.dominator->bundle(i)) items.push_back(inst.item_name(r));
      bundles[inst.agent_name(i)] = std::move(items);
    }
    doc["dominator"] = std::move(bundles);
  }
  if (!report.detail.empty()) doc["detail"] = report.detail;
  return doc;
}

Json trace_event_to_json(const fisher::TraceEvent& event) {
  Json doc;
  doc["event"] = event.event;
  doc["k"] = event.k;
  if (!event.phase.empty()) doc["phase"] = event.phase;
  if (event.chore >= 0) doc["chore"] = event.chore;
  if (event.from >= 0) doc["from"] = event.from;
  if (event.to >= 0) doc["to"] = event.to;
  if (event.price_old >= 0) doc["price_old"] = event.price_old;
  if (event.price_new >= 0) doc["price_new"] = event.price_new;
  if (!event.agents.empty()) doc["agents"] = event.agents;
  if (!event.name.empty()) {
    doc["name"] = event.name;
    doc["ok"] = event.ok;
  }
  if (!event.least_spend.empty()) doc["least_spend"] = event.least_spend;
  return doc;
}

std::string trace_to_lines(const fisher::Trace& trace) {
  std::string out;
  for (const auto& event : trace) {
    out += trace_event_to_json(event).dump();
    out += '\n';
  }
  return out;
}

}  // namespace fairdiv::io
