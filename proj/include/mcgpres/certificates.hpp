#pragma once

// Text formats for consequence witnesses, Tietze scripts and coset
// enumeration specs, plus their checkers. All formats are line based; '#'
// starts a comment and blank lines are ignored. Words use the word syntax,
// with "1" for the empty word.
//
// Sources of relations (witness files) or of a presentation (scripts and
// enumeration specs):
//   family <name> g <int>          catalog presentation
//   presentation <path>            presentation file, relative to the file
//   aux <X|C1aC5a|hyperelliptic|F> g <int>   auxiliary relations
//   relation <label>: <lhs> = <rhs>
//
// Witness file: sources, then one or more records
//   target <label>: <lhs> = <rhs>
//   factor <label> <+1|-1> <conjugator>     (repeated)
//
// Script file:
//   start family <name> g <int> | start presentation <path>
//   add-generator <label>: <symbol> = <word>
//   remove-generator <symbol> <label>
//   add-relation <label>: <lhs> = <rhs>     followed by factor lines
//   remove-relation <label>                 followed by factor lines
//   expect-generators <symbols>
//   equivalent family <name> g <int> | equivalent presentation <path>
//   certify final <label>                   followed by factor lines
//   certify target <label>                  followed by factor lines
//
// Enumeration spec: one source (family or presentation), optional extra
// relation lines, then
//   subgroup <word>                         (repeated; none = trivial)
//   expect-index <int>
//   max-cosets <int>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcgpres/coset.hpp"
#include "mcgpres/presentation.hpp"
#include "mcgpres/tietze.hpp"

namespace mcgpres {

class FileParseError : public std::runtime_error {
 public:
  FileParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses a word, declaring every generator name it mentions.
Word parse_free_word(std::string_view text);

struct WitnessRecord {
  LabeledRelation target;
  ConsequenceWitness witness;
};

struct WitnessFile {
  std::vector<LabeledRelation> relations;
  std::vector<WitnessRecord> records;
};

/// `base_dir` resolves relative presentation paths.
WitnessFile parse_witness_file(std::string_view text, const std::string& base_dir = ".");
WitnessFile read_witness_file(const std::string& path);
std::string emit_witness_file(const WitnessFile& f);

struct RecordReport {
  std::string label;
  CheckReport check;
};
std::vector<RecordReport> check_witness_file(const WitnessFile& f);

struct CrossCertificate {
  enum class Side { Final, Target };
  Side side;
  std::string label;
  ConsequenceWitness witness;
};

struct ScriptFile {
  Presentation start;
  std::vector<TietzeMove> moves;
  std::vector<GeneratorSymbol> expect_generators;  // empty: not checked
  std::optional<Presentation> equivalent;
  std::vector<CrossCertificate> certificates;
};

ScriptFile parse_script_file(std::string_view text, const std::string& base_dir = ".");
ScriptFile read_script_file(const std::string& path);
/// `start_line` and `equivalent_line` are source clauses such as
/// "family parszep-bordered g 3"; an empty equivalent_line omits it.
std::string emit_script_file(const ScriptFile& f, const std::string& start_line,
                             const std::string& equivalent_line = "");

struct ScriptReport {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // one-based
  std::vector<std::string> transcript;
  std::vector<std::string> findings;  // every failure, in order
  Presentation final;
};
ScriptReport check_script(const ScriptFile& f);

struct EnumSpec {
  Presentation presentation;
  std::vector<Word> subgroup;
  std::optional<std::size_t> expect_index;
  std::size_t max_cosets = kDefaultMaxCosets;
};

EnumSpec parse_enum_spec(std::string_view text, const std::string& base_dir = ".");
EnumSpec read_enum_spec(const std::string& path);

struct EnumReport {
  CosetTable table;
  bool verified = false;      // verify_table
  bool homomorphism = false;  // permutation_rep satisfies every relation
  bool index_ok = true;       // matches expect-index when given
  bool ok() const { return table.complete() && verified && homomorphism && index_ok; }
};
/// `max_cosets` overrides the spec's value when set.
EnumReport check_enum_spec(const EnumSpec& spec,
                           std::optional<std::size_t> max_cosets = std::nullopt);

}  // namespace mcgpres
