#include "coreseq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "coreseq/admissibility.hpp"
#include "coreseq/intuitionistic.hpp"
#include "coreseq/json_io.hpp"
#include "coreseq/parallel.hpp"
#include "coreseq/repro.hpp"

namespace coreseq {

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0, kNo = 1, kError = 2, kDisagree = 3;

struct Common {
  std::string mode = "tennant";
  unsigned threads = 0;

  Mode parsed_mode() const { return *mode_from_string(mode); }
  unsigned parsed_threads() const { return threads ? threads : default_threads(); }
};

void add_mode(CLI::App* app, Common& c) {
  app->add_option("--mode", c.mode, "tennant or strict-table")->check(CLI::IsMember({"tennant", "strict-table"}));
}

void add_threads(CLI::App* app, Common& c) {
  app->add_option("--threads", c.threads, "worker threads (default: CORESEQ_THREADS or all cores)");
}

// Writes to a temporary sibling first so readers never see a partial file.
void write_text_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Formula parse_top(const std::string& text) { return parse_formula(text); }

struct DecideArgs {
  std::string sequent;
  std::string logic = "core";
  bool json = false;
  std::string emit;
  Common common;
};

int cmd_decide(const DecideArgs& a, std::ostream& out, std::ostream& err) {
  const Sequent s = parse_sequent(a.sequent);
  if (a.logic == "int") {
    const bool ok = decide_int(s) == Verdict::Provable;
    Json j{{"version", version_string()}, {"sequent", print_sequent(s)}, {"logic", "int"},
           {"status", ok ? "provable" : "unprovable"}};
    if (!ok) {
      if (auto m = countermodel(s, 4)) j["countermodel"] = to_json(*m);
    }
    if (a.json) out << dump(j);
    err << print_sequent(s) << ": intuitionistically " << (ok ? "provable" : "unprovable") << '\n';
    return ok ? kOk : kNo;
  }
  const Mode mode = a.common.parsed_mode();
  DecisionResult r;
  try {
    r = decide(s, mode);
  } catch (const ResourceLimitError& e) {
    if (a.json) {
      Json j{{"version", version_string()}, {"sequent", print_sequent(s)}, {"status", "resource-limit"},
             {"stats", to_json(e.stats())}};
      out << dump(j);
    }
    err << "resource limit: " << e.what() << '\n';
    return kError;
  }
  if (r.provable() && !a.emit.empty()) write_text_file(a.emit, dump(to_json(*r.derivation)));
  if (a.json) {
    Json j{{"version", version_string()}, {"sequent", print_sequent(s)}};
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    out << dump(j);
  }
  err << print_sequent(s) << ": " << (r.provable() ? "provable" : "unprovable");
  if (r.provable()) err << ", min height " << r.min_height;
  err << " (" << to_string(mode) << ", " << r.stats.distinct_goals << " goals)\n";
  return r.provable() ? kOk : kNo;
}

struct CheckArgs {
  std::string file;
  bool json = false;
  Common common;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const Derivation d = read_derivation_file(a.file);
  const Mode mode = a.common.parsed_mode();
  const auto v = check_derivation(d, mode);
  if (a.json) {
    Json j{{"version", version_string()}, {"file", a.file}, {"mode", to_string(mode)}, {"valid", !v.has_value()}};
    if (v) j["violation"] = to_json(*v);
    else j["height"] = height(d);
    out << dump(j);
  }
  if (v) {
    err << v->describe() << '\n';
    return kNo;
  }
  err << "valid, height " << height(d) << ", " << node_count(d) << " nodes\n";
  return kOk;
}

struct ReproArgs {
  std::string out_dir;
  std::string top = "p -> p";
  int ltop_cap = 5;
  int cross_cap = 6;
  Common common;
};

int cmd_repro(const ReproArgs& a, std::ostream& out, std::ostream& err) {
  ReproOptions o;
  o.top = parse_top(a.top);
  o.mode = a.common.parsed_mode();
  o.threads = a.common.parsed_threads();
  o.ltop_weight_cap = a.ltop_cap;
  o.cross_check_weight_cap = a.cross_cap;
  const ReproReport r = run_repro(o);
  const std::string report = dump(r.to_json());
  const std::string summary = r.summary();
  if (!a.out_dir.empty()) {
    const fs::path dir(a.out_dir);
    for (const auto& [rel, j] : r.files) write_text_file(dir / rel, dump(j));
    write_text_file(dir / "report.json", report);
    write_text_file(dir / "summary.txt", summary);
  } else {
    out << report;
  }
  err << summary;
  if (!r.disagreements.empty()) {
    for (const auto& d : r.disagreements) err << "disagreement: " << d << '\n';
    return kDisagree;
  }
  return kOk;
}

struct AtlasArgs {
  int atoms = 1;
  int weight_cap = 3;
  std::string out_path;
  Common common;
};

int cmd_atlas(const AtlasArgs& a, std::ostream& out, std::ostream& err) {
  const auto universe = FormulaUniverse::over_atoms(a.atoms, a.weight_cap);
  const auto family = sequent_family(universe, a.weight_cap);
  const Mode mode = a.common.parsed_mode();
  struct Row {
    int core_height = -1;
    bool intu = false;
  };
  std::vector<Row> rows(family.size());
  try {
    parallel_for(family.size(), a.common.parsed_threads(), [&](std::size_t i) {
      rows[i].core_height = decide(family[i], mode).min_height;
      rows[i].intu = decide_int(family[i]) == Verdict::Provable;
    });
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "; no output written\n";
    return kError;
  }
  std::ostringstream csv;
  csv << "sequent,weight,core,core_min_height,int,divergent\n";
  std::size_t core = 0, intu = 0, divergent = 0, violations = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const bool c = rows[i].core_height >= 0, n = rows[i].intu;
    core += c;
    intu += n;
    divergent += n && !c;
    violations += c && !n;
    csv << csv_quote(print_sequent(family[i])) << ',' << sequent_weight(family[i]) << ','
        << (c ? "provable" : "unprovable") << ',';
    if (c) csv << rows[i].core_height;
    csv << ',' << (n ? "provable" : "unprovable") << ',' << (n && !c ? 1 : 0) << '\n';
  }
  csv << "#summary," << family.size() << ",core=" << core << ",int=" << intu << ",divergent=" << divergent
      << ",violations=" << violations << '\n';
  if (a.out_path.empty()) out << csv.str();
  else write_text_file(a.out_path, csv.str());
  err << version_string() << ": " << universe.description() << ", " << family.size() << " sequents, " << core
      << " Core-provable, " << intu << " intuitionistic, " << divergent << " divergent\n";
  return kOk;
}

struct AdmitArgs {
  std::string rule;
  std::string formula = "q";
  std::string top = "p -> p";
  int atoms = 2;
  int weight_cap = 4;
  std::string out_path;
  Common common;
};

int cmd_admit(const AdmitArgs& a, std::ostream& out, std::ostream& err) {
  RuleTransform t = a.rule == "ltop" ? RuleTransform::left_top(parse_top(a.top))
                                     : RuleTransform::weakening(parse_formula(a.formula));
  AdmissibilityOptions o{a.common.parsed_mode(), a.common.parsed_threads(), 16};
  const auto v = test_admissibility(t, FormulaUniverse::over_atoms(a.atoms, a.weight_cap), a.weight_cap, o);
  Json j = to_json(v);
  j["version"] = version_string();
  if (a.out_path.empty()) out << dump(j);
  else write_text_file(a.out_path, dump(j));
  err << v.rule << ": " << to_string(v.status) << " on " << v.universe << " (" << v.premises_tested
      << " provable premises, " << v.counterexamples << " counterexamples)\n";
  return kOk;
}

struct Lemma1Args {
  std::string delta;
  std::string top = "p -> p";
  Common common;
};

int cmd_lemma1(const Lemma1Args& a, std::ostream& out, std::ostream& err) {
  try {
    const auto r = lemma1_study(parse_formula(a.delta), parse_top(a.top), a.common.parsed_mode());
    Json j = to_json(r);
    j["version"] = version_string();
    out << dump(j);
    return kOk;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kError;
  }
}

int cmd_fixtures(const std::string& dir, std::ostream& err) {
  for (const auto& [name, d] : paper_fixtures()) write_text_file(fs::path(dir) / (name + ".json"), dump(to_json(d)));
  err << "wrote " << paper_fixtures().size() << " fixtures to " << dir << '\n';
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core sequent calculus workbench", "coreseq"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  DecideArgs decide_args;
  auto* dec = app.add_subcommand("decide", "decide derivability of a sequent");
  dec->add_option("sequent", decide_args.sequent)->required();
  add_mode(dec, decide_args.common);
  dec->add_option("--logic", decide_args.logic)->check(CLI::IsMember({"core", "int"}));
  dec->add_flag("--json", decide_args.json);
  dec->add_option("--emit-derivation", decide_args.emit, "write the derivation JSON here if provable");

  CheckArgs check_args;
  auto* chk = app.add_subcommand("check", "check a derivation file");
  chk->add_option("file", check_args.file)->required();
  add_mode(chk, check_args.common);
  chk->add_flag("--json", check_args.json);

  ReproArgs repro_args;
  auto* rep = app.add_subcommand("repro", "re-run every fixture, decision and verdict");
  rep->add_option("--out", repro_args.out_dir);
  rep->add_option("--top", repro_args.top, "theorem used for the left-top rule");
  rep->add_option("--ltop-weight-cap", repro_args.ltop_cap);
  rep->add_option("--cross-check-weight-cap", repro_args.cross_cap);
  add_mode(rep, repro_args.common);
  add_threads(rep, repro_args.common);

  AtlasArgs atlas_args;
  auto* atl = app.add_subcommand("atlas", "tabulate Core and intuitionistic verdicts");
  atl->add_option("--atoms", atlas_args.atoms)->required()->check(CLI::Range(1, 6));
  atl->add_option("--weight-cap", atlas_args.weight_cap)->required()->check(CLI::Range(1, 12));
  atl->add_option("--out", atlas_args.out_path);
  add_mode(atl, atlas_args.common);
  add_threads(atl, atlas_args.common);

  AdmitArgs admit_args;
  auto* adm = app.add_subcommand("admit", "test a rule for admissibility over a bounded family");
  adm->add_option("--rule", admit_args.rule)->required()->check(CLI::IsMember({"ltop", "wk"}));
  adm->add_option("--formula", admit_args.formula, "weakening formula");
  adm->add_option("--top", admit_args.top, "theorem for ltop");
  adm->add_option("--atoms", admit_args.atoms)->check(CLI::Range(1, 6));
  adm->add_option("--weight-cap", admit_args.weight_cap)->check(CLI::Range(1, 12));
  adm->add_option("--out", admit_args.out_path);
  add_mode(adm, admit_args.common);
  add_threads(adm, admit_args.common);

  Lemma1Args lemma_args;
  auto* lem = app.add_subcommand("lemma1", "compare readings of adding a theorem to the left");
  lem->add_option("--delta", lemma_args.delta)->required();
  lem->add_option("--top", lemma_args.top);
  add_mode(lem, lemma_args.common);

  std::string fixtures_dir = "fixtures";
  auto* fix = app.add_subcommand("fixtures", "write the reference derivations as JSON");
  fix->add_option("--out", fixtures_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*dec) return cmd_decide(decide_args, out, err);
    if (*chk) return cmd_check(check_args, out, err);
    if (*rep) return cmd_repro(repro_args, out, err);
    if (*atl) return cmd_atlas(atlas_args, out, err);
    if (*adm) return cmd_admit(admit_args, out, err);
    if (*lem) return cmd_lemma1(lemma_args, out, err);
    if (*fix) return cmd_fixtures(fixtures_dir, err);
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const EmptyJudgmentError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "malformed derivation: " << e.what() << '\n';
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace coreseq
