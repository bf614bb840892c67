// Command-line front end. Exit status: 0 ok, 1 verification failure,
// 2 usage or parse error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcgpres/catalog.hpp"
#include "mcgpres/certificates.hpp"
#include "mcgpres/coset.hpp"
#include "mcgpres/probes.hpp"
#include "mcgpres/quotient.hpp"
#include "mcgpres/tietze.hpp"

using namespace mcgpres;
using json = nlohmann::ordered_json;

namespace {

enum class Status { Ok, Fail, Usage };

struct Finding {
  std::string kind;
  std::string subject;
  bool ok;
  std::string detail;
};

class Report {
 public:
  Report(std::string command, bool json_lines)
      : command_(std::move(command)), json_(json_lines),
        start_(std::chrono::steady_clock::now()) {}

  void info(const std::string& key, const std::string& value) { info_.emplace_back(key, value); }
  void finding(Finding f) {
    if (!f.ok && status_ == Status::Ok) status_ = Status::Fail;
    findings_.push_back(std::move(f));
  }
  void fail(const std::string& why) {
    if (status_ == Status::Ok) status_ = Status::Fail;
    errors_.push_back(why);
  }
  void usage(const std::string& why) {
    status_ = Status::Usage;
    errors_.push_back(why);
  }

  int emit() const {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    const char* status = status_ == Status::Ok ? "ok" : "fail";
    if (json_) {
      for (const auto& f : findings_)
        std::cout << json{{"type", "finding"},   {"kind", f.kind},  {"subject", f.subject},
                          {"ok", f.ok},          {"detail", f.detail}}
                         .dump()
                  << "\n";
      json summary{{"type", "report"}, {"command", command_}, {"status", status}};
      for (const auto& [k, v] : info_) summary[k] = v;
      summary["errors"] = errors_;
      summary["elapsed_ms"] = static_cast<long long>(ms);
      std::cout << summary.dump() << "\n";
    } else {
      std::cout << "command: " << command_ << "\n";
      for (const auto& [k, v] : info_) std::cout << k << ": " << v << "\n";
      for (const auto& f : findings_)
        std::cout << (f.ok ? "ok   " : "FAIL ") << f.kind << ' ' << f.subject
                  << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
      for (const auto& e : errors_) std::cout << "error: " << e << "\n";
      std::cout << "status: " << status << " (" << static_cast<long long>(ms) << " ms)\n";
    }
    return status_ == Status::Ok ? 0 : status_ == Status::Fail ? 1 : 2;
  }

 private:
  std::string command_;
  bool json_;
  std::chrono::steady_clock::time_point start_;
  Status status_ = Status::Ok;
  std::vector<std::pair<std::string, std::string>> info_;
  std::vector<Finding> findings_;
  std::vector<std::string> errors_;
};

struct Options {
  std::string format = "text";
  std::string family, family_b;
  int g = 0;
  std::optional<int> g_b;
  std::optional<int> s;
  std::string out;
  std::string file;
  std::string presentation;
  std::string fixtures;
  std::size_t max_cosets = kDefaultMaxCosets;
  bool max_cosets_set = false;
  std::size_t max_factors = SearchLimits{}.max_factors;
  std::size_t max_conj_len = SearchLimits{}.max_conj_len;
  std::size_t max_states = SearchLimits{}.max_states;
  std::string target;
  std::vector<std::string> subgroup;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PresentationFamily parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f || *f == PresentationFamily::Custom)
    throw UsageError("unknown family '" + name + "'");
  return *f;
}

Presentation build(const std::string& name, int g, std::optional<int> s) {
  PresentationFamily f = parse_family(name);
  const int expected = is_closed_family(f) ? 0 : 1;
  if (s && *s != expected)
    throw UsageError("family " + name + " has s = " + std::to_string(expected));
  try {
    return build_family(f, g);
  } catch (const CatalogError& e) {
    throw UsageError(e.what());
  }
}

Presentation load_presentation(const Options& o) {
  if (!o.presentation.empty()) return read_presentation_file(o.presentation);
  if (!o.family.empty()) return build(o.family, o.g, o.s);
  throw UsageError("need --presentation or --family");
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

void cmd_present(const Options& o, Report& r) {
  Presentation p = build(o.family, o.g, o.s);
  r.info("family", std::string(family_name(p.family)));
  r.info("g", std::to_string(p.g));
  r.info("s", std::to_string(p.s));
  r.info("generators", std::to_string(p.generators.size()));
  r.info("relations", std::to_string(p.relations.size()));
  for (const auto& v : validate(p)) r.finding({"invariant", v.label, false, v.message});
  if (o.out.empty()) {
    if (o.format == "text") std::cout << emit_presentation(p);
  } else {
    write_presentation_file(p, o.out);
    r.info("written", o.out);
  }
}

void cmd_abelianize(const Options& o, Report& r) {
  Presentation p = o.file.empty() ? load_presentation(o) : read_presentation_file(o.file);
  auto row = abelianization(p, Pivoting::RowFirst);
  auto col = abelianization(p, Pivoting::ColumnFirst);
  r.info("abelianization", format_abelianization(row));
  r.finding({"pivoting", "row-first vs column-first", row == col,
             row == col ? "" : "column-first gives " + format_abelianization(col)});
}

void check_witness(const std::string& path, Report& r) {
  WitnessFile f = read_witness_file(path);
  for (const auto& rec : check_witness_file(f))
    r.finding({"witness", rec.label, rec.check.ok, rec.check.message});
}

// Drops the "step N: " prefix of transcript and replay messages.
std::string without_step(const std::string& t) {
  if (t.rfind("step ", 0) != 0) return t;
  const auto colon = t.find(": ");
  return colon == std::string::npos ? t : t.substr(colon + 2);
}

void check_script_file(const std::string& path, Report& r) {
  ScriptReport rep = check_script(read_script_file(path));
  for (std::size_t k = 0; k < rep.transcript.size(); ++k)
    r.finding({"step", std::to_string(k + 1), true, without_step(rep.transcript[k])});
  if (rep.failed_step)
    r.finding({"step", std::to_string(*rep.failed_step), false,
               without_step(rep.findings.front())});
  else
    for (const auto& f : rep.findings) r.finding({"script", "final", false, f});
  if (rep.ok) {
    std::vector<std::string> gens;
    for (const auto& g : rep.final.generators) gens.push_back(g.name());
    r.info("final generators", join(gens));
    r.info("final relations", std::to_string(rep.final.relations.size()));
  }
}

void check_enum(const std::string& path, const Options& o, Report& r) {
  EnumSpec spec = read_enum_spec(path);
  EnumReport rep = check_enum_spec(
      spec, o.max_cosets_set ? std::optional<std::size_t>(o.max_cosets) : std::nullopt);
  r.info("status", rep.table.complete() ? "complete" : "overflow");
  r.info("cosets", std::to_string(rep.table.rows.size()));
  r.finding({"enumeration", "complete", rep.table.complete(),
             rep.table.complete() ? "" : "coset cap " + std::to_string(rep.table.max_cosets)});
  if (!rep.table.complete()) return;
  r.info("index", std::to_string(rep.table.index()));
  r.finding({"enumeration", "verify_table", rep.verified, ""});
  r.finding({"enumeration", "permutation representation", rep.homomorphism, ""});
  if (spec.expect_index)
    r.finding({"enumeration", "index", rep.index_ok,
               "expected " + std::to_string(*spec.expect_index) + ", got " +
                   std::to_string(rep.table.index())});
}

void check_assignment(const std::string& path, const Options& o, Report& r) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  FiniteAssignment base = parse_assignment(ss.str());
  Presentation p = load_presentation(o);
  FiniteAssignment a = realize(p, base);
  auto failing = check_homomorphism(p, a);
  for (const auto& rel : p.relations) {
    bool bad = std::find(failing.begin(), failing.end(), rel.label()) != failing.end();
    if (bad) r.finding({"relation", rel.label(), false, "image is not the identity"});
  }
  r.info("relations checked", std::to_string(p.relations.size()));
  r.info("failing", std::to_string(failing.size()));
}

void cmd_check(const Options& o, Report& r) {
  const std::string ext = std::filesystem::path(o.file).extension().string();
  if (!std::filesystem::exists(o.file)) throw UsageError("no such file " + o.file);
  if (ext == ".wit")
    check_witness(o.file, r);
  else if (ext == ".tz")
    check_script_file(o.file, r);
  else if (ext == ".enum")
    check_enum(o.file, o, r);
  else
    check_assignment(o.file, o, r);
}

void cmd_compare(const Options& o, Report& r) {
  const int g_b = o.g_b.value_or(o.g);
  Presentation a = build(o.family, o.g, std::nullopt);
  Presentation b = build(o.family_b, g_b, std::nullopt);
  if (a.g != b.g) r.fail("genus differs: " + std::to_string(a.g) + " vs " + std::to_string(b.g));
  if (a.s != b.s) r.fail("boundary differs: " + std::to_string(a.s) + " vs " + std::to_string(b.s));
  const std::string dir = o.fixtures.empty() ? default_fixtures_dir() : o.fixtures;
  Comparison c = compare_presentations(a, b, shipped_assignments(a.g, a.s == 0, dir));
  for (const auto& p : c.probes)
    r.finding({"probe", p.probe, p.equal,
               std::string(p.equal ? "equal" : "unequal") + ": " + p.left + " | " + p.right});
}

void cmd_search(const Options& o, Report& r) {
  Presentation p = load_presentation(o);
  Word target;
  std::string label = o.target;
  if (const LabeledRelation* rel = p.find(o.target)) {
    target = rel->relator();
    p.relations.erase(p.relations.begin() + (rel - p.relations.data()));
  } else {
    target = parse_word_in(p, o.target);
    label = format_word(target);
  }
  SearchResult res =
      bounded_consequence_search(target, p.relations, {o.max_factors, o.max_conj_len, o.max_states});
  r.info("states", std::to_string(res.states));
  switch (res.status) {
    case SearchResult::Status::Found:
      r.info("result", "found");
      for (const auto& f : res.witness.factors)
        r.finding({"factor", f.label, true,
                   std::string(f.sign > 0 ? "+1 " : "-1 ") + format_word(f.conjugator)});
      break;
    case SearchResult::Status::NotFound:
      r.fail("no witness for " + label + " within the bounds (not a proof of non-consequence)");
      break;
    case SearchResult::Status::ResourceCap:
      r.fail("state cap reached while searching for " + label);
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations of mapping class groups of nonorientable surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  auto genus = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--g", o.g, "Genus")->check(CLI::Range(1, 1000));
    if (required) opt->required();
  };
  auto limits = [&](CLI::App* c) {
    c->add_option("--max-cosets", o.max_cosets, "Coset cap")->check(CLI::PositiveNumber);
    c->add_option("--max-factors", o.max_factors, "Witness search: factors")
        ->check(CLI::PositiveNumber);
    c->add_option("--max-conj-len", o.max_conj_len, "Witness search: conjugator length");
    c->add_option("--max-states", o.max_states, "Witness search: state cap")
        ->check(CLI::PositiveNumber);
  };

  auto* present = app.add_subcommand("present", "Build a catalog presentation");
  present->add_option("--family", o.family, "Family")->required();
  genus(present, true);
  present->add_option("--s", o.s, "Boundary components (0 or 1)");
  present->add_option("--out", o.out, "Write the presentation file here");

  auto* abel = app.add_subcommand("abelianize", "Abelianization of a presentation");
  abel->add_option("file", o.file, "Presentation file");
  abel->add_option("--family", o.family, "Family instead of a file");
  genus(abel, false);
  abel->add_option("--s", o.s, "Boundary components");

  auto* check = app.add_subcommand(
      "check", "Check a witness (.wit), script (.tz), enumeration spec (.enum) or assignment");
  check->add_option("file", o.file, "Fixture file")->required();
  check->add_option("--family", o.family, "Presentation for assignment checks");
  genus(check, false);
  check->add_option("--s", o.s, "Boundary components");
  check->add_option("--presentation", o.presentation, "Presentation file for assignment checks");
  limits(check);

  auto* compare = app.add_subcommand("compare", "Compare two families by quotient probes");
  compare->add_option("family", o.family, "First family")->required();
  compare->add_option("family_b", o.family_b, "Second family")->required();
  genus(compare, true);
  compare->add_option("--g2", o.g_b, "Genus of the second family (default: --g)");
  compare->add_option("--s", o.s, "Boundary components");
  compare->add_option("--fixtures", o.fixtures, "Fixture tree with shipped assignments");

  auto* search = app.add_subcommand("search", "Bounded search for a consequence witness");
  search->add_option("target", o.target, "Relation label (searched from the others) or word")
      ->required();
  search->add_option("--family", o.family, "Family");
  genus(search, false);
  search->add_option("--s", o.s, "Boundary components");
  search->add_option("--presentation", o.presentation, "Presentation file");
  limits(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* c : {check, search})
    if (c->count("--max-cosets")) o.max_cosets_set = true;

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  Report report(echo, o.format == "json-lines");
  try {
    if (*present)
      cmd_present(o, report);
    else if (*abel)
      cmd_abelianize(o, report);
    else if (*check)
      cmd_check(o, report);
    else if (*compare)
      cmd_compare(o, report);
    else if (*search)
      cmd_search(o, report);
  } catch (const UsageError& e) {
    report.usage(e.what());
  } catch (const PresentationParseError& e) {
    report.usage(std::string("parse error: ") + e.what());
  } catch (const FileParseError& e) {
    report.usage(std::string("parse error: ") + e.what());
  } catch (const WordSyntaxError& e) {
    report.usage(std::string("parse error: ") + e.what());
  } catch (const std::exception& e) {
    report.usage(e.what());
  }
  return report.emit();
}
