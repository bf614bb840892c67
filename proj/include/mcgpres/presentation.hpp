#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcgpres/word.hpp"

namespace mcgpres {

enum class PresentationFamily {
  ParSzepBordered,
  ParSzepClosed,
  SimplifiedBordered,
  SimplifiedClosedProp,
  SimplifiedClosedThm,
  CorollaryMixed,
  Custom,
};

/// Command-line / file spelling, e.g. "simplified-closed-thm".
std::string_view family_name(PresentationFamily f);
std::optional<PresentationFamily> family_from_name(std::string_view name);

/// lhs = rhs, stored together with its relator lhs * rhs^-1.
class LabeledRelation {
 public:
  LabeledRelation(std::string label, Word lhs, Word rhs = {});

  const std::string& label() const { return label_; }
  const Word& lhs() const { return lhs_; }
  const Word& rhs() const { return rhs_; }
  const Word& relator() const { return relator_; }

  bool operator==(const LabeledRelation&) const = default;

 private:
  std::string label_;
  Word lhs_;
  Word rhs_;
  Word relator_;
};

struct Presentation {
  PresentationFamily family = PresentationFamily::Custom;
  int g = 0;
  int s = 0;
  std::vector<GeneratorSymbol> generators;
  std::vector<LabeledRelation> relations;

  const LabeledRelation* find(std::string_view label) const;
  bool has_generator(GeneratorSymbol s) const;
  std::vector<Word> relators() const;

  bool operator==(const Presentation&) const = default;
};

struct Violation {
  std::string label;      // offending relation, empty if none
  std::string generator;  // offending generator, empty if none
  std::string message;
};

/// Checks every structural invariant; an empty result means valid.
std::vector<Violation> validate(const Presentation& p);

class PresentationParseError : public std::runtime_error {
 public:
  PresentationParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format:
///   family <name> g <int> s <int>
///   generators: <tokens>
///   <label>: <lhs word> = <rhs word>     (one line per relation)
std::string emit_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);
Presentation read_presentation_file(const std::string& path);
void write_presentation_file(const Presentation& p, const std::string& path);

/// Parses a word restricted to the auxiliary names of `p`.
Word parse_word_in(const Presentation& p, std::string_view text);

}  // namespace mcgpres
