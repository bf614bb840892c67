#include "mcgpres/certificates.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mcgpres/catalog.hpp"
#include "mcgpres/quotient.hpp"

namespace mcgpres {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parent_dir(const std::string& path) {
  auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

std::string resolve(const std::string& base_dir, const std::string& rel) {
  std::filesystem::path p(rel);
  return p.is_absolute() ? rel : (std::filesystem::path(base_dir) / p).string();
}

// One meaningful line split into keyword and remainder.
struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (t.empty()) continue;
    std::size_t sp = 0;
    while (sp < t.size() && !std::isspace(static_cast<unsigned char>(t[sp]))) ++sp;
    out.push_back({n, t.substr(0, sp), trim(std::string_view(t).substr(sp))});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return v;
}

// "<label>: <lhs> = <rhs>"
LabeledRelation parse_relation_text(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected '<label>: <lhs> = <rhs>'");
  std::string label = trim(std::string_view(s).substr(0, colon));
  if (label.empty() || label.find(' ') != std::string::npos)
    throw std::invalid_argument("bad relation label '" + label + "'");
  std::string body = s.substr(colon + 1);
  auto eq = body.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("relation " + label + " lacks '='");
  return LabeledRelation(label, parse_free_word(body.substr(0, eq)),
                         parse_free_word(body.substr(eq + 1)));
}

std::string format_relation(const LabeledRelation& r) {
  return r.label() + ": " + format_word(r.lhs()) + " = " + format_word(r.rhs());
}

// "family <name> g <int>" (rest after keyword "family")
Presentation catalog_source(const std::string& rest) {
  auto t = tokens(rest);
  if (t.size() != 3 || t[1] != "g") throw std::invalid_argument("expected '<family> g <int>'");
  auto fam = family_from_name(t[0]);
  if (!fam || *fam == PresentationFamily::Custom)
    throw std::invalid_argument("unknown family '" + t[0] + "'");
  return build_family(*fam, parse_int(t[2], "genus"));
}

std::vector<LabeledRelation> aux_source(const std::string& rest) {
  auto t = tokens(rest);
  if (t.size() != 3 || t[1] != "g") throw std::invalid_argument("expected 'aux <kind> g <int>'");
  AuxiliaryKind kind;
  if (t[0] == "X")
    kind = AuxiliaryKind::X;
  else if (t[0] == "C1aC5a")
    kind = AuxiliaryKind::C1aC5a;
  else if (t[0] == "hyperelliptic")
    kind = AuxiliaryKind::Hyperelliptic;
  else if (t[0] == "F")
    kind = AuxiliaryKind::F;
  else
    throw std::invalid_argument("unknown auxiliary kind '" + t[0] + "'");
  return auxiliary_relations(kind, parse_int(t[2], "genus"));
}

// A "family ..." or "presentation ..." clause.
Presentation presentation_source(const std::string& clause, const std::string& base_dir) {
  auto sp = clause.find(' ');
  std::string kw = clause.substr(0, sp);
  std::string rest = sp == std::string::npos ? "" : trim(std::string_view(clause).substr(sp));
  if (kw == "family") return catalog_source(rest);
  if (kw == "presentation") return read_presentation_file(resolve(base_dir, rest));
  throw std::invalid_argument("expected 'family ...' or 'presentation ...'");
}

WitnessFactor parse_factor(const std::string& rest) {
  auto t = tokens(rest);
  if (t.size() < 3) throw std::invalid_argument("expected 'factor <label> <+1|-1> <conjugator>'");
  int sign;
  if (t[1] == "+1" || t[1] == "+" || t[1] == "1")
    sign = 1;
  else if (t[1] == "-1" || t[1] == "-")
    sign = -1;
  else
    throw std::invalid_argument("bad factor sign '" + t[1] + "'");
  std::string conj;
  for (std::size_t k = 2; k < t.size(); ++k) conj += (k > 2 ? " " : "") + t[k];
  return {t[0], sign, parse_free_word(conj)};
}

void emit_factors(std::ostream& os, const ConsequenceWitness& w) {
  for (const auto& f : w.factors)
    os << "factor " << f.label << ' ' << (f.sign > 0 ? "+1" : "-1") << ' '
       << format_word(f.conjugator) << "\n";
}

template <typename F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FileParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw FileParseError(e.what(), line);
  }
}

}  // namespace

Word parse_free_word(std::string_view text) {
  std::vector<GeneratorSymbol> names;
  for (const auto& tok : tokens(std::string(text))) {
    std::string name = tok.substr(0, tok.find('^'));
    if (name == "1" || name.empty()) continue;
    names.push_back(declare_symbol(name));
  }
  return parse_word(text, names);
}

WitnessFile parse_witness_file(std::string_view text, const std::string& base_dir) {
  WitnessFile f;
  for (const Line& l : split_lines(text)) {
    at_line(l.number, [&] {
      if (l.keyword == "family") {
        auto p = catalog_source(l.rest);
        f.relations.insert(f.relations.end(), p.relations.begin(), p.relations.end());
      } else if (l.keyword == "presentation") {
        auto p = read_presentation_file(resolve(base_dir, l.rest));
        f.relations.insert(f.relations.end(), p.relations.begin(), p.relations.end());
      } else if (l.keyword == "aux") {
        auto r = aux_source(l.rest);
        f.relations.insert(f.relations.end(), r.begin(), r.end());
      } else if (l.keyword == "relation") {
        if (!f.records.empty()) throw std::invalid_argument("relation after the first target");
        f.relations.push_back(parse_relation_text(l.rest));
      } else if (l.keyword == "target") {
        f.records.push_back({parse_relation_text(l.rest), {}});
      } else if (l.keyword == "factor") {
        if (f.records.empty()) throw std::invalid_argument("factor before any target");
        f.records.back().witness.factors.push_back(parse_factor(l.rest));
      } else {
        throw std::invalid_argument("unknown keyword '" + l.keyword + "'");
      }
    });
  }
  if (f.records.empty()) throw FileParseError("no target", 0);
  return f;
}

WitnessFile read_witness_file(const std::string& path) {
  return parse_witness_file(read_text(path), parent_dir(path));
}

std::string emit_witness_file(const WitnessFile& f) {
  std::ostringstream os;
  for (const auto& r : f.relations) os << "relation " << format_relation(r) << "\n";
  for (const auto& rec : f.records) {
    os << "target " << format_relation(rec.target) << "\n";
    emit_factors(os, rec.witness);
  }
  return os.str();
}

std::vector<RecordReport> check_witness_file(const WitnessFile& f) {
  std::vector<RecordReport> out;
  for (const auto& rec : f.records)
    out.push_back({rec.target.label(),
                   explain_consequence(rec.target.relator(), f.relations, rec.witness)});
  return out;
}

ScriptFile parse_script_file(std::string_view text, const std::string& base_dir) {
  ScriptFile f;
  bool started = false;
  ConsequenceWitness* open_witness = nullptr;
  for (const Line& l : split_lines(text)) {
    at_line(l.number, [&] {
      if (l.keyword == "factor") {
        if (!open_witness) throw std::invalid_argument("factor outside a move or certificate");
        open_witness->factors.push_back(parse_factor(l.rest));
        return;
      }
      open_witness = nullptr;
      if (l.keyword == "start") {
        if (started) throw std::invalid_argument("duplicate start");
        f.start = presentation_source(l.rest, base_dir);
        started = true;
        return;
      }
      if (!started) throw std::invalid_argument("script must begin with 'start'");
      if (l.keyword == "add-generator") {
        LabeledRelation r = parse_relation_text(l.rest);
        if (r.lhs().size() != 1 || r.lhs()[0].sign() != 1)
          throw std::invalid_argument("add-generator needs a single generator on the left");
        f.moves.push_back(AddGenerator{r.lhs()[0].symbol(), r});
      } else if (l.keyword == "remove-generator") {
        auto t = tokens(l.rest);
        if (t.size() != 2) throw std::invalid_argument("expected 'remove-generator <symbol> <label>'");
        f.moves.push_back(RemoveGenerator{declare_symbol(t[0]), t[1]});
      } else if (l.keyword == "add-relation") {
        f.moves.push_back(AddRelation{parse_relation_text(l.rest), {}});
        open_witness = &std::get<AddRelation>(f.moves.back()).witness;
      } else if (l.keyword == "remove-relation") {
        auto t = tokens(l.rest);
        if (t.size() != 1) throw std::invalid_argument("expected 'remove-relation <label>'");
        f.moves.push_back(RemoveRelation{t[0], {}});
        open_witness = &std::get<RemoveRelation>(f.moves.back()).witness;
      } else if (l.keyword == "expect-generators") {
        for (const auto& t : tokens(l.rest)) f.expect_generators.push_back(declare_symbol(t));
      } else if (l.keyword == "equivalent") {
        f.equivalent = presentation_source(l.rest, base_dir);
      } else if (l.keyword == "certify") {
        auto t = tokens(l.rest);
        if (t.size() != 2 || (t[0] != "final" && t[0] != "target"))
          throw std::invalid_argument("expected 'certify final|target <label>'");
        f.certificates.push_back({t[0] == "final" ? CrossCertificate::Side::Final
                                                  : CrossCertificate::Side::Target,
                                  t[1], {}});
        open_witness = &f.certificates.back().witness;
      } else {
        throw std::invalid_argument("unknown keyword '" + l.keyword + "'");
      }
    });
  }
  if (!started) throw FileParseError("missing 'start'", 0);
  return f;
}

ScriptFile read_script_file(const std::string& path) {
  return parse_script_file(read_text(path), parent_dir(path));
}

std::string emit_script_file(const ScriptFile& f, const std::string& start_line,
                             const std::string& equivalent_line) {
  std::ostringstream os;
  os << "start " << start_line << "\n";
  for (const auto& m : f.moves) {
    std::visit(
        [&](const auto& mv) {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, AddGenerator>) {
            os << "add-generator " << format_relation(mv.defining) << "\n";
          } else if constexpr (std::is_same_v<T, RemoveGenerator>) {
            os << "remove-generator " << mv.symbol.name() << ' ' << mv.defining_label << "\n";
          } else if constexpr (std::is_same_v<T, AddRelation>) {
            os << "add-relation " << format_relation(mv.relation) << "\n";
            emit_factors(os, mv.witness);
          } else {
            os << "remove-relation " << mv.label << "\n";
            emit_factors(os, mv.witness);
          }
        },
        m);
  }
  if (!f.expect_generators.empty()) {
    os << "expect-generators";
    for (const auto& g : f.expect_generators) os << ' ' << g.name();
    os << "\n";
  }
  if (!equivalent_line.empty()) os << "equivalent " << equivalent_line << "\n";
  for (const auto& c : f.certificates) {
    os << "certify " << (c.side == CrossCertificate::Side::Final ? "final " : "target ")
       << c.label << "\n";
    emit_factors(os, c.witness);
  }
  return os.str();
}

ScriptReport check_script(const ScriptFile& f) {
  ScriptReport rep;
  try {
    ReplayResult r = replay_script(f.start, f.moves);
    rep.transcript = std::move(r.transcript);
    rep.final = std::move(r.final);
  } catch (const ReplayError& e) {
    rep.failed_step = e.step();
    rep.findings.push_back(e.what());
    return rep;
  }
  if (!f.expect_generators.empty()) {
    std::set<GeneratorSymbol> want(f.expect_generators.begin(), f.expect_generators.end());
    std::set<GeneratorSymbol> got(rep.final.generators.begin(), rep.final.generators.end());
    if (want != got) {
      std::string msg = "final generators:";
      for (const auto& g : rep.final.generators) msg += " " + g.name();
      rep.findings.push_back(msg);
    }
  }
  if (f.equivalent) {
    auto check_side = [&](CrossCertificate::Side side, const Presentation& of,
                          const Presentation& over, const char* name) {
      for (const auto& r : of.relations) {
        auto it = std::find_if(f.certificates.begin(), f.certificates.end(),
                               [&](const CrossCertificate& c) {
                                 return c.side == side && c.label == r.label();
                               });
        if (it == f.certificates.end()) {
          rep.findings.push_back(std::string("no certificate for ") + name + " relation " +
                                 r.label());
          continue;
        }
        try {
          CheckReport c = explain_consequence(r.relator(), over.relations, it->witness);
          if (!c.ok)
            rep.findings.push_back(std::string(name) + " relation " + r.label() + ": " +
                                   c.message);
        } catch (const std::exception& e) {
          rep.findings.push_back(std::string(name) + " relation " + r.label() + ": " + e.what());
        }
      }
    };
    check_side(CrossCertificate::Side::Final, rep.final, *f.equivalent, "final");
    check_side(CrossCertificate::Side::Target, *f.equivalent, rep.final, "target");
  }
  rep.ok = rep.findings.empty();
  return rep;
}

EnumSpec parse_enum_spec(std::string_view text, const std::string& base_dir) {
  EnumSpec s;
  bool have_source = false;
  for (const Line& l : split_lines(text)) {
    at_line(l.number, [&] {
      if (l.keyword == "family" || l.keyword == "presentation") {
        if (have_source) throw std::invalid_argument("duplicate source");
        s.presentation = presentation_source(l.keyword + " " + l.rest, base_dir);
        have_source = true;
      } else if (l.keyword == "relation") {
        if (!have_source) throw std::invalid_argument("relation before the source");
        LabeledRelation r = parse_relation_text(l.rest);
        for (const Word* w : {&r.lhs(), &r.rhs()})
          for (Letter x : *w)
            if (!s.presentation.has_generator(x.symbol()))
              throw std::invalid_argument("relation " + r.label() + " uses unknown generator " +
                                          x.symbol().name());
        s.presentation.relations.push_back(std::move(r));
      } else if (l.keyword == "subgroup") {
        s.subgroup.push_back(parse_free_word(l.rest));
      } else if (l.keyword == "expect-index") {
        s.expect_index = static_cast<std::size_t>(parse_int(l.rest, "index"));
      } else if (l.keyword == "max-cosets") {
        int v = parse_int(l.rest, "coset cap");
        if (v < 1) throw std::invalid_argument("max-cosets must be positive");
        s.max_cosets = static_cast<std::size_t>(v);
      } else {
        throw std::invalid_argument("unknown keyword '" + l.keyword + "'");
      }
    });
  }
  if (!have_source) throw FileParseError("missing presentation source", 0);
  return s;
}

EnumSpec read_enum_spec(const std::string& path) {
  return parse_enum_spec(read_text(path), parent_dir(path));
}

EnumReport check_enum_spec(const EnumSpec& spec, std::optional<std::size_t> max_cosets) {
  EnumReport rep;
  rep.table = todd_coxeter(spec.presentation, spec.subgroup, max_cosets.value_or(spec.max_cosets));
  if (!rep.table.complete()) {
    rep.index_ok = !spec.expect_index;
    return rep;
  }
  rep.verified = verify_table(rep.table, spec.presentation, spec.subgroup);
  rep.homomorphism = check_homomorphism(spec.presentation, permutation_rep(rep.table)).empty();
  if (spec.expect_index) rep.index_ok = rep.table.index() == *spec.expect_index;
  return rep;
}

}  // namespace mcgpres
