// One-shot reproduction of every derivation and decision the workbench
// knows about, classified mechanically.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "coreseq/json_io.hpp"

namespace coreseq {

struct ReproOptions {
  Formula top = Formula::imp(Formula::atom("p"), Formula::atom("p"));
  Mode mode = Mode::Tennant;
  unsigned threads = 1;
  int ltop_weight_cap = 5;
  int cross_check_weight_cap = 6;
};

struct ReproItem {
  std::string id;
  std::string status;
  Json evidence;
};

struct ReproReport {
  std::vector<ReproItem> items;
  Json cross_check;
  // Checker and engine disagreeing, or Core exceeding intuitionistic logic.
  std::vector<std::string> disagreements;
  // Evidence files keyed by path relative to the output directory.
  std::map<std::string, Json> files;

  Json to_json() const;
  std::string summary() const;
};

ReproReport run_repro(const ReproOptions& options = {});

}  // namespace coreseq
