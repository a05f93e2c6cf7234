#include <fstream>
#include <sstream>

#include "coreseq/json_io.hpp"

namespace coreseq {

Json to_json(const Derivation& d) {
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(to_json(p));
  return Json{{"rule", d.rule}, {"conclusion", print_sequent(d.conclusion)}, {"premises", std::move(premises)}};
}

Derivation derivation_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("derivation node must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "rule" && key != "conclusion" && key != "premises")
      throw FormatError("unknown key '" + key + "' in derivation node");
  for (const char* key : {"rule", "conclusion", "premises"})
    if (!j.contains(key)) throw FormatError(std::string("derivation node lacks '") + key + "'");
  if (!j["rule"].is_string()) throw FormatError("'rule' must be a string");
  if (!j["conclusion"].is_string()) throw FormatError("'conclusion' must be a string");
  if (!j["premises"].is_array()) throw FormatError("'premises' must be an array");

  const auto text = j["conclusion"].get<std::string>();
  std::optional<Sequent> conclusion;
  try {
    conclusion = parse_sequent(text);
  } catch (const std::exception& e) {
    throw FormatError("bad conclusion '" + text + "': " + e.what());
  }
  Derivation d{*conclusion, j["rule"].get<std::string>(), {}};
  for (const auto& p : j["premises"]) d.premises.push_back(derivation_from_json(p));
  return d;
}

Derivation read_derivation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return derivation_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << dump(j);
}

}  // namespace coreseq
