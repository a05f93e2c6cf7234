// JSON encodings of derivations, decisions and reports.

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "coreseq/admissibility.hpp"
#include "coreseq/decide.hpp"
#include "coreseq/intuitionistic.hpp"
#include "coreseq/kernel.hpp"

namespace coreseq {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// node = {"rule": <name>, "conclusion": <sequent>, "premises": [node...]}
Json to_json(const Derivation& d);
// Rejects unknown or missing keys and unparsable conclusions. Unknown rule
// names are accepted here and left for the checker.
Derivation derivation_from_json(const Json& j);

Derivation read_derivation_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);  // two-space indent, trailing newline

Json to_json(const SearchStats& s);
// {"status": "provable"|"unprovable", "min_height"?, "derivation"?, "stats"}
Json to_json(const DecisionResult& r);
Json to_json(const TreeViolation& v);
Json to_json(const KripkeModel& m);
Json to_json(const CrossCheckReport& r);
Json to_json(const AdmissibilityVerdict& v);
Json to_json(const Lemma1Report& r);

std::string version_string();

}  // namespace coreseq
