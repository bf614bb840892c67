#include "mcgpres/presentation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace mcgpres {

namespace {

constexpr std::array<std::pair<PresentationFamily, std::string_view>, 7>
    kFamilyNames{{
        {PresentationFamily::ParSzepBordered, "parszep-bordered"},
        {PresentationFamily::ParSzepClosed, "parszep-closed"},
        {PresentationFamily::SimplifiedBordered, "simplified-bordered"},
        {PresentationFamily::SimplifiedClosedProp, "simplified-closed-prop"},
        {PresentationFamily::SimplifiedClosedThm, "simplified-closed-thm"},
        {PresentationFamily::CorollaryMixed, "corollary-mixed"},
        {PresentationFamily::Custom, "custom"},
    }};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string_view family_name(PresentationFamily f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "custom";
}

std::optional<PresentationFamily> family_from_name(std::string_view name) {
  for (auto [fam, n] : kFamilyNames)
    if (n == name) return fam;
  return std::nullopt;
}

LabeledRelation::LabeledRelation(std::string label, Word lhs, Word rhs)
    : label_(std::move(label)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      relator_(concat(lhs_, invert(rhs_))) {}

const LabeledRelation* Presentation::find(std::string_view label) const {
  for (const auto& r : relations)
    if (r.label() == label) return &r;
  return nullptr;
}

bool Presentation::has_generator(GeneratorSymbol sym) const {
  return std::find(generators.begin(), generators.end(), sym) !=
         generators.end();
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(r.relator());
  return out;
}

std::vector<Violation> validate(const Presentation& p) {
  std::vector<Violation> out;
  const bool genus_bound = p.family != PresentationFamily::Custom || p.g > 0;
  if (p.family != PresentationFamily::Custom) {
    if (p.g < 3)
      out.push_back({"", "", "genus must be at least 3, got " + std::to_string(p.g)});
    if (p.s != 0 && p.s != 1)
      out.push_back({"", "", "boundary count must be 0 or 1"});
  }

  std::set<GeneratorSymbol> seen;
  for (const auto& s : p.generators) {
    if (!seen.insert(s).second)
      out.push_back({"", s.name(), "duplicate generator " + s.name()});
    if (!genus_bound) continue;
    const int idx = static_cast<int>(s.index());
    switch (s.family()) {
      case Family::A:
      case Family::U:
        if (idx < 1 || idx > p.g - 1)
          out.push_back({"", s.name(),
                         "generator " + s.name() + " index outside 1.." +
                             std::to_string(p.g - 1)});
        break;
      case Family::B:
        if (p.g < 4)
          out.push_back({"", s.name(), "generator b requires g >= 4"});
        break;
      case Family::BExt:
        if (p.g < 6 || p.g % 2 != 0)
          out.push_back({"", s.name(),
                         "generator " + s.name() + " requires even g >= 6"});
        else if (idx > (p.g - 2) / 2)
          out.push_back({"", s.name(),
                         "generator " + s.name() + " index outside 0.." +
                             std::to_string((p.g - 2) / 2)});
        break;
      default:
        break;
    }
  }

  std::set<std::string> labels;
  for (const auto& r : p.relations) {
    if (!labels.insert(r.label()).second)
      out.push_back({r.label(), "", "duplicate label " + r.label()});
    if (r.relator().empty())
      out.push_back({r.label(), "", "relation " + r.label() + " has trivial relator"});
    std::set<GeneratorSymbol> reported;
    for (const Word* w : {&r.lhs(), &r.rhs()}) {
      for (Letter l : *w) {
        auto s = l.symbol();
        if (!seen.contains(s) && reported.insert(s).second)
          out.push_back({r.label(), s.name(),
                         "relation " + r.label() + " uses undeclared generator " +
                             s.name()});
      }
    }
  }
  return out;
}

Word parse_word_in(const Presentation& p, std::string_view text) {
  return parse_word(text, p.generators);
}

std::string emit_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "family " << family_name(p.family) << " g " << p.g << " s " << p.s
     << "\n";
  os << "generators:";
  for (const auto& s : p.generators) os << ' ' << s.name();
  os << "\n";
  for (const auto& r : p.relations)
    os << r.label() << ": " << format_word(r.lhs()) << " = "
       << format_word(r.rhs()) << "\n";
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::size_t line_no = 0, content = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    ++content;
    try {
      if (content == 1) {
        auto t = split_ws(line);
        if (t.size() != 6 || t[0] != "family" || t[2] != "g" || t[4] != "s")
          throw PresentationParseError(
              "expected 'family <name> g <int> s <int>'", line_no);
        auto fam = family_from_name(t[1]);
        if (!fam)
          throw PresentationParseError("unknown family '" + std::string(t[1]) + "'",
                                       line_no);
        p.family = *fam;
        p.g = std::stoi(std::string(t[3]));
        p.s = std::stoi(std::string(t[5]));
      } else if (content == 2) {
        constexpr std::string_view kPrefix = "generators:";
        if (line.substr(0, kPrefix.size()) != kPrefix)
          throw PresentationParseError("expected 'generators:' line", line_no);
        for (auto tok : split_ws(line.substr(kPrefix.size())))
          p.generators.push_back(declare_symbol(tok));
      } else {
        auto colon = line.find(':');
        auto eq = line.find('=');
        if (colon == std::string_view::npos || eq == std::string_view::npos ||
            eq < colon)
          throw PresentationParseError("expected '<label>: <lhs> = <rhs>'",
                                       line_no);
        std::string label(trim(line.substr(0, colon)));
        if (label.empty() || label.find_first_of(" \t") != std::string::npos)
          throw PresentationParseError("bad relation label", line_no);
        Word lhs = parse_word_in(p, line.substr(colon + 1, eq - colon - 1));
        Word rhs = parse_word_in(p, line.substr(eq + 1));
        p.relations.emplace_back(std::move(label), std::move(lhs), std::move(rhs));
      }
    } catch (const PresentationParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw PresentationParseError(e.what(), line_no);
    }
    if (end == text.size()) break;
  }
  if (content < 2)
    throw PresentationParseError("missing header or generators line", line_no);
  return p;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

void write_presentation_file(const Presentation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << emit_presentation(p);
}

}  // namespace mcgpres
