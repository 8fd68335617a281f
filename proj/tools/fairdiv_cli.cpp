// Command-line front door for the fair-division solvers.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 bad input,
// 3 method does not apply to the instance's utility class, 4 internal
// invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fairdiv/fairness.hpp"
#include "fairdiv/fisher.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/gen.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/mms.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/pareto.hpp"

namespace {

using fairdiv::Allocation;
using fairdiv::Errc;
using fairdiv::Error;
using fairdiv::Instance;
using fairdiv::Int;
using fairdiv::Kind;
using fairdiv::UtilityClass;
using Json = fairdiv::io::Json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitClassMismatch = 3;
constexpr int kExitInvariant = 4;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotBivalued:
    case Errc::NotFactored:
    case Errc::UnsupportedClass:
    case Errc::KindMismatch:
      return kExitClassMismatch;
    case Errc::InvariantFailure:
      return kExitInvariant;
    default:
      return kExitBadInput;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) fairdiv::fail(Errc::InvalidDocument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

bool within_budget(const Instance& inst, const fairdiv::oracle::EnumerationBudget& budget) {
  try {
    fairdiv::oracle::assignment_count(inst.n(), inst.m(), budget);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Certificates attached to every solve output: the CLI never prints an
// allocation it has not re-validated.
Json certificates_for(const Instance& inst, const Allocation& alloc, const std::string& method,
                      const fairdiv::oracle::EnumerationBudget& budget) {
  Json certs;
  certs["method"] = method;
  certs["ef1"] = fairdiv::io::report_to_json(inst, fairdiv::fairness::is_ef1(inst, alloc));

  const auto cls = fairdiv::classify(inst);
  if (method == "mms" || method == "mmspo") {
    const auto values = fairdiv::mms::mms_values(inst);
    certs["mms"] = fairdiv::io::report_to_json(
        inst, fairdiv::fairness::is_mms_alloc(inst, alloc, values));
    Json per_agent = Json::object();
    for (int i = 0; i < inst.n(); ++i) per_agent[inst.agent_name(i)] = values[i];
    certs["mms"]["values"] = std::move(per_agent);
  }

  if (within_budget(inst, budget)) {
    certs["po"] = fairdiv::io::report_to_json(
        inst, fairdiv::oracle::is_po_bruteforce(inst, alloc, budget));
    certs["po"]["checker"] = "bruteforce";
  } else if (cls.has(UtilityClass::Bivalued) || cls.has(UtilityClass::WeaklyLexicographic)) {
    auto improvement = fairdiv::pareto::find_pareto_improvement(inst, alloc);
    Json po;
    po["property"] = "po";
    po["holds"] = !improvement.has_value();
    po["checker"] = "cycle-search";
    certs["po"] = std::move(po);
  }
  return certs;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) fairdiv::fail(Errc::InvalidDocument, "cannot write " + path);
  file << text;
}

int run_solve(const std::string& input, const std::string& method, const std::string& trace_path,
              const std::string& output) {
  const Instance inst = fairdiv::io::parse_instance(read_input(input));
  const auto cls = fairdiv::classify(inst);
  fairdiv::oracle::EnumerationBudget budget;

  Allocation alloc(inst.n(), inst.m());
  if (method == "ef1po") {
    fairdiv::require(inst.kind() == Kind::Chores, Errc::KindMismatch,
                     "ef1po solves chore division instances");
    auto result = fairdiv::fisher::solve_ef1_po(inst);
    alloc = result.alloc;
    if (!trace_path.empty())
      write_output(trace_path, fairdiv::io::trace_to_lines(result.trace));
  } else if (method == "mms") {
    alloc = fairdiv::mms::solve_mms(inst);
  } else if (method == "mmspo") {
    alloc = fairdiv::pareto::solve_mms_po(inst);
  } else {
    fairdiv::fail(Errc::BadArgument, "unknown method " + method);
  }

  Json doc = fairdiv::io::allocation_to_json(inst, alloc,
                                             certificates_for(inst, alloc, method, budget));
  write_output(output, doc.dump(2) + "\n");
  return 0;
}

int run_check(const std::string& input, const std::string& allocation_path,
              const std::string& property, bool use_oracle, const std::string& output) {
  const Instance inst = fairdiv::io::parse_instance(read_input(input));
  Json alloc_doc;
  try {
    alloc_doc = Json::parse(read_input(allocation_path));
  } catch (const nlohmann::json::exception& e) {
    fairdiv::fail(Errc::InvalidDocument, std::string("allocation document: ") + e.what());
  }
  const Allocation alloc = fairdiv::io::allocation_from_json(inst, alloc_doc);
  fairdiv::oracle::EnumerationBudget budget;
  const auto cls = fairdiv::classify(inst);

  fairdiv::fairness::FairnessReport report;
  Json extra;
  if (property == "ef1") {
    report = fairdiv::fairness::is_ef1(inst, alloc);
  } else if (property == "ef") {
    report = fairdiv::fairness::is_ef(inst, alloc);
  } else if (property == "mms") {
    std::vector<Int> values;
    if (use_oracle) {
      values.resize(inst.n());
      for (int i = 0; i < inst.n(); ++i)
        values[i] = fairdiv::oracle::exact_mms(inst.row(i), inst.n(), budget).value;
    } else {
      values = fairdiv::mms::mms_values(inst);
    }
    report = fairdiv::fairness::is_mms_alloc(inst, alloc, values);
    extra["values"] = values;
  } else if (property == "po") {
    if (use_oracle || !(cls.has(UtilityClass::Bivalued) ||
                        cls.has(UtilityClass::WeaklyLexicographic))) {
      report = fairdiv::oracle::is_po_bruteforce(inst, alloc, budget);
      extra["checker"] = "bruteforce";
    } else {
      auto improvement = fairdiv::pareto::find_pareto_improvement(inst, alloc);
      report.property = fairdiv::fairness::Property::PO;
      report.holds = !improvement.has_value();
      extra["checker"] = "cycle-search";
    }
  } else {
    fairdiv::fail(Errc::BadArgument, "unknown property " + property);
  }

  Json doc = fairdiv::io::report_to_json(inst, report);
  for (auto& [key, value] : extra.items()) doc[key] = value;
  write_output(output, doc.dump(2) + "\n");
  return report.holds ? 0 : kExitCheckFailed;
}

int run_mms_value(const std::string& input, int agent, int n_bundles, bool use_oracle,
                  const std::string& output) {
  const Instance inst = fairdiv::io::parse_instance(read_input(input));
  fairdiv::require(agent >= 1 && agent <= inst.n(), Errc::BadArgument,
                   "--agent is 1-based and must name an existing agent");
  const int bundles = n_bundles > 0 ? n_bundles : inst.n();
  const auto& row = inst.row(agent - 1);

  Json doc;
  doc["agent"] = inst.agent_name(agent - 1);
  doc["bundles"] = bundles;
  if (use_oracle) {
    auto result = fairdiv::oracle::exact_mms(row, bundles);
    doc["value"] = result.value;
    Json parts = Json::array();
    for (const auto& bundle : result.bundles) {
      Json part = Json::array();
      for (int r : bundle) part.push_back(inst.item_name(r));
      parts.push_back(std::move(part));
    }
    doc["partition"] = std::move(parts);
    doc["checker"] = "oracle";
  } else {
    auto partition = fairdiv::mms::mms_partition_factored(row, bundles);
    doc["value"] = partition.min_value;
    Json parts = Json::array();
    for (const auto& bundle : partition.bundles) {
      Json part = Json::array();
      for (int r : bundle) part.push_back(inst.item_name(r));
      parts.push_back(std::move(part));
    }
    doc["partition"] = std::move(parts);
    doc["checker"] = "greedy";
  }
  write_output(output, doc.dump(2) + "\n");
  return 0;
}

int run_gen(const fairdiv::gen::GenSpec& spec, const std::string& output) {
  const Instance inst = fairdiv::gen::generate(spec);
  write_output(output, fairdiv::io::instance_to_json(inst).dump(2) + "\n");
  return 0;
}

int run_fixtures() {
  const auto results = fairdiv::fixtures::run_all();
  bool all = true;
  for (const auto& result : results) {
    std::cout << (result.pass ? "PASS" : "FAIL") << "  " << result.name;
    if (!result.pass && !result.detail.empty()) std::cout << "  (" << result.detail << ")";
    std::cout << "\n";
    all = all && result.pass;
  }
  std::cout << (all ? "all fixtures passed" : "fixture failures present") << "\n";
  return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair allocation of indivisible goods and chores"};
  app.require_subcommand(1);

  std::string input, output, trace_path, method, property;
  bool use_oracle = false;

  auto* solve = app.add_subcommand("solve", "Compute a fair allocation");
  solve->add_option("--input,-i", input, "instance document (default stdin)");
  solve->add_option("--output,-o", output, "allocation document (default stdout)");
  solve->add_option("--method", method, "ef1po | mms | mmspo")->required();
  solve->add_option("--trace", trace_path, "write the market trace (line-delimited JSON)");

  std::string allocation_path;
  auto* check = app.add_subcommand("check", "Check a fairness property of an allocation");
  check->add_option("--input,-i", input, "instance document (default stdin)");
  check->add_option("--allocation,-a", allocation_path, "allocation document")->required();
  check->add_option("--property", property, "ef | ef1 | mms | po")->required();
  check->add_flag("--oracle", use_oracle, "use the brute-force oracle");
  check->add_option("--output,-o", output, "report destination (default stdout)");

  int agent = 1, n_bundles = 0;
  auto* mms_value = app.add_subcommand("mms-value", "Maximin share of one agent");
  mms_value->add_option("--input,-i", input, "instance document (default stdin)");
  mms_value->add_option("--agent", agent, "1-based agent index (default 1)");
  mms_value->add_option("--n-bundles", n_bundles, "bundle count (default: agent count)");
  mms_value->add_flag("--oracle", use_oracle, "use the brute-force oracle");
  mms_value->add_option("--output,-o", output, "destination (default stdout)");

  fairdiv::gen::GenSpec spec;
  std::string cls_name = "general-additive", kind_name = "goods";
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--class", cls_name,
                  "binary | bivalued | factored-bivalued | personalized-bivalued | "
                  "factored-personalized-bivalued | factored | weakly-lexicographic | "
                  "general-additive");
  gen->add_option("--kind", kind_name, "goods | chores");
  gen->add_option("-n", spec.n, "agent count");
  gen->add_option("-m", spec.m, "item count");
  gen->add_option("--seed", spec.seed, "64-bit seed");
  gen->add_option("--a", spec.small, "small magnitude for bivalued classes");
  gen->add_option("--p", spec.big, "large magnitude for bivalued classes");
  gen->add_option("--p-min", spec.p_min, "personalized ratio lower bound");
  gen->add_option("--p-max", spec.p_max, "personalized ratio upper bound");
  gen->add_option("--tiers", spec.max_tiers, "tier / chain depth");
  gen->add_option("--max-value", spec.max_value, "general additive magnitude bound");
  gen->add_option("--zero-percent", spec.zero_percent, "zero-entry chance where allowed");
  gen->add_option("--big-percent", spec.big_percent, "large-magnitude chance in bivalued classes");
  gen->add_option("--output,-o", output, "destination (default stdout)");

  auto* fixtures = app.add_subcommand("fixtures", "Run the built-in benchmark corpus");
  (void)fixtures;

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(input, method, trace_path, output);
    if (check->parsed()) return run_check(input, allocation_path, property, use_oracle, output);
    if (mms_value->parsed()) return run_mms_value(input, agent, n_bundles, use_oracle, output);
    if (gen->parsed()) {
      static const std::pair<const char*, UtilityClass> names[] = {
          {"binary", UtilityClass::Binary},
          {"bivalued", UtilityClass::Bivalued},
          {"factored-bivalued", UtilityClass::FactoredBivalued},
          {"personalized-bivalued", UtilityClass::PersonalizedBivalued},
          {"factored-personalized-bivalued", UtilityClass::FactoredPersonalizedBivalued},
          {"factored", UtilityClass::Factored},
          {"weakly-lexicographic", UtilityClass::WeaklyLexicographic},
          {"general-additive", UtilityClass::GeneralAdditive},
      };
      bool found = false;
      for (const auto& [name, cls] : names)
        if (cls_name == name) {
          spec.cls = cls;
          found = true;
        }
      fairdiv::require(found, Errc::BadArgument, "unknown class " + cls_name);
      fairdiv::require(kind_name == "goods" || kind_name == "chores", Errc::BadArgument,
                       "kind must be goods or chores");
      spec.kind = kind_name == "goods" ? Kind::Goods : Kind::Chores;
      return run_gen(spec, output);
    }
    if (fixtures->parsed()) return run_fixtures();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
