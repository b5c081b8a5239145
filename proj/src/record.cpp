#include "splitbound/record.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "splitbound/error.hpp"

namespace splitbound::cli {

namespace {

using Json = nlohmann::ordered_json;

void render_section(std::ostringstream& out, const char* title, const Fields& fields) {
  if (fields.empty()) return;
  std::size_t width = 0;
  for (const auto& [key, value] : fields) width = std::max(width, key.size());
  out << title << '\n';
  for (const auto& [key, value] : fields) {
    out << "  " << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
}

Json fields_to_json(const Fields& fields) {
  Json object = Json::object();
  for (const auto& [key, value] : fields) object[key] = value;
  return object;
}

Fields fields_from_json(const Json& object, const char* section) {
  if (!object.is_object()) throw DomainError(std::string(section) + " must be an object");
  Fields fields;
  for (const auto& [key, value] : object.items()) {
    if (!value.is_string()) throw DomainError(std::string(section) + "." + key + " must be a string");
    fields.emplace_back(key, value.get<std::string>());
  }
  return fields;
}

}  // namespace

std::string render_text(const OutputRecord& record) {
  std::ostringstream out;
  out << "command: " << record.command << '\n';
  render_section(out, "inputs:", record.inputs);
  render_section(out, "outputs:", record.outputs);
  if (!record.provenance.empty()) {
    out << "provenance:\n";
    for (const std::string& line : record.provenance) out << "  - " << line << '\n';
  }
  return out.str();
}

std::string render_structured(const OutputRecord& record) {
  Json json = Json::object();
  json["command"] = record.command;
  json["inputs"] = fields_to_json(record.inputs);
  json["outputs"] = fields_to_json(record.outputs);
  json["provenance"] = record.provenance;
  return json.dump(2) + "\n";
}

OutputRecord parse_structured(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
  if (!json.is_object()) throw DomainError("record must be a JSON object");
  for (const char* key : {"command", "inputs", "outputs", "provenance"}) {
    if (!json.contains(key)) throw DomainError(std::string("record is missing '") + key + "'");
  }
  OutputRecord record;
  if (!json["command"].is_string()) throw DomainError("command must be a string");
  record.command = json["command"].get<std::string>();
  record.inputs = fields_from_json(json["inputs"], "inputs");
  record.outputs = fields_from_json(json["outputs"], "outputs");
  if (!json["provenance"].is_array()) throw DomainError("provenance must be an array");
  for (const Json& line : json["provenance"]) {
    if (!line.is_string()) throw DomainError("provenance entries must be strings");
    record.provenance.push_back(line.get<std::string>());
  }
  return record;
}

}  // namespace splitbound::cli
