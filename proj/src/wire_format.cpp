// Copyright 2026 The qtopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtopo/wire_format.hpp"

#include <nlohmann/json.hpp>

namespace qtopo {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, where + ": " + what);
}

Json subset_json(Subset s, const GroundSet& ground) {
  Json out = Json::array();
  for (const auto& label : ground.labels_of(s)) out.push_back(label);
  return out;
}

Json family_json(const SubsetFamily& family, const GroundSet& ground) {
  Json out = Json::array();
  for (Subset s : family) out.push_back(subset_json(s, ground));
  return out;
}

Json question_json(const GroundSet& ground, const SubsetFamily& family) {
  Json out = Json::object();
  out["elements"] = ground.labels();
  out["opens"] = family_json(family, ground);
  return out;
}

}  // namespace

QuestionDocument parse_question(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "elements" && key != "opens") malformed(key, "unexpected key");
  }
  if (!doc.contains("elements")) malformed("document", "missing \"elements\"");
  if (!doc.contains("opens")) malformed("document", "missing \"opens\"");

  const Json& elements = doc["elements"];
  if (!elements.is_array()) malformed("elements", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) {
      malformed("elements[" + std::to_string(i) + "]", "expected a string");
    }
    labels.push_back(elements[i].get<std::string>());
  }

  GroundSet ground;
  try {
    ground = make_ground_set(std::move(labels));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("elements: ") + e.what());
  }

  const Json& opens = doc["opens"];
  if (!opens.is_array()) malformed("opens", "expected an array of subsets");
  std::vector<Subset> members;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const std::string where = "opens[" + std::to_string(i) + "]";
    if (!opens[i].is_array()) malformed(where, "expected an array of labels");
    Subset s;
    for (std::size_t j = 0; j < opens[i].size(); ++j) {
      const Json& label = opens[i][j];
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!label.is_string()) malformed(at, "expected a string");
      const auto index = ground.index_of(label.get<std::string>());
      if (!index) {
        throw Error(ErrorCode::kUnknownLabel,
                    at + ": unknown label '" + label.get<std::string>() + "'");
      }
      s = s | Subset::singleton(*index);
    }
    members.push_back(s);
  }
  return QuestionDocument{std::move(ground), SubsetFamily(std::move(members))};
}

std::string serialize_question(const GroundSet& ground, const SubsetFamily& family) {
  return question_json(ground, family).dump();
}

std::string serialize_check(const TopologyCheck& check, const GroundSet& ground) {
  Json out = Json::object();
  out["valid"] = check.valid();
  if (!check.valid()) {
    out["axiom"] = to_string(*check.violated);
    Json witness = Json::array();
    for (Subset s : check.witness) witness.push_back(subset_json(s, ground));
    out["witness"] = witness;
    out["missing"] = subset_json(check.missing, ground);
    out["message"] = check.message;
  }
  return out.dump();
}

std::string serialize_outcome(const ResolutionOutcome& outcome, const GroundSet& ground) {
  Json out = Json::object();
  out["kind"] = to_string(outcome.kind);
  if (outcome.carrier) out["carrier"] = subset_json(*outcome.carrier, ground);
  out["opens"] = family_json(outcome.result, ground);
  return out.dump();
}

std::string serialize_sequence(const std::vector<ResolutionStep>& steps) {
  Json list = Json::array();
  for (const auto& step : steps) {
    Json item = Json::object();
    item["point"] = step.point;
    item["elements"] = step.ground.labels();
    item["kind"] = to_string(step.kind);
    if (step.carrier) item["carrier"] = subset_json(*step.carrier, step.ground);
    item["opens"] = family_json(step.result, step.ground);
    item["eliminated"] =
        step.kind == QuestionKind::kTypeI   ? step.ground.size() - step.carrier->size()
        : step.kind == QuestionKind::kTypeII ? step.ground.size()
                                             : 0;
    list.push_back(std::move(item));
  }
  Json out = Json::object();
  out["steps"] = std::move(list);
  return out.dump();
}

std::string serialize_agreement(const Topology& t) {
  const MachinePair pair = make_machine_pair(t);
  Json out = Json::object();
  out["agree"] = pair.self_dual;
  out["sigma_field"] = is_sigma_field(t.family(), t.ground());
  out["shared"] = family_json(pair.shared, t.ground());
  out["negation"] = family_json(pair.negation.family(), t.ground());
  return out.dump();
}

std::string serialize_sigma(const SubsetFamily& family, const GroundSet& ground) {
  Json out = Json::object();
  out["sigma_field"] = is_sigma_field(family, ground);
  return out.dump();
}

std::string serialize_efficiency(const Topology& t, std::string_view point) {
  Json out = Json::object();
  out["point"] = std::string(point);
  out["kind"] = to_string(classify_question(t, point).kind);
  out["eliminated"] = elimination_efficiency(t, point);
  return out.dump();
}

std::string serialize_count(std::size_t n, std::uint64_t count) {
  Json out = Json::object();
  out["n"] = n;
  out["count"] = count;
  return out.dump();
}

std::string serialize_report(const EnumerationReport& report) {
  Json census = Json::array();
  for (const auto& tally : report.census) {
    Json item = Json::object();
    item["point"] = tally.point;
    item["type-1"] = tally.type_one;
    item["type-2"] = tally.type_two;
    census.push_back(std::move(item));
  }
  Json out = Json::object();
  out["n"] = report.n;
  out["count"] = report.count;
  out["census"] = std::move(census);
  out["self_dual_count"] = report.self_dual_count;
  return out.dump();
}

}  // namespace qtopo
