#pragma once

// Tietze transformations certified by consequence witnesses. A witness for a
// word t is a list of factors (label, sign, c) with
//   t == prod_k c_k * R_k^sign_k * c_k^-1
// in the free group, R_k the relator of the relation named label_k.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mcgpres/presentation.hpp"

namespace mcgpres {

struct WitnessFactor {
  std::string label;
  int sign = 1;
  Word conjugator;
  bool operator==(const WitnessFactor&) const = default;
};

struct ConsequenceWitness {
  std::vector<WitnessFactor> factors;
  bool operator==(const ConsequenceWitness&) const = default;
};

class UnresolvedLabel : public std::invalid_argument {
 public:
  UnresolvedLabel(const std::string& label, std::size_t factor)
      : std::invalid_argument("factor " + std::to_string(factor) +
                              ": unknown relation label '" + label + "'"),
        label_(label),
        factor_(factor) {}
  const std::string& label() const { return label_; }
  std::size_t factor() const { return factor_; }

 private:
  std::string label_;
  std::size_t factor_;
};

const LabeledRelation* find_relation(const std::vector<LabeledRelation>& rels,
                                     std::string_view label);

/// Reduced product of the factors. Throws UnresolvedLabel.
Word witness_product(const std::vector<LabeledRelation>& relations,
                     const ConsequenceWitness& w);

bool check_consequence(const Word& target, const std::vector<LabeledRelation>& relations,
                       const ConsequenceWitness& witness);

struct CheckReport {
  bool ok = false;
  /// Zero-based index of the factor blamed for a failure, if any.
  std::optional<std::size_t> factor;
  std::string message;
};

/// Like check_consequence, with a diagnostic on failure. When exactly one
/// factor can be replaced by a conjugate of a relator to make the product
/// match, the first such factor is named together with the replacement.
CheckReport explain_consequence(const Word& target,
                                const std::vector<LabeledRelation>& relations,
                                const ConsequenceWitness& witness);

/// If w == c * R^sign * c^-1 for the relator R, returns (sign, c) with the
/// shortest such c.
std::optional<std::pair<int, Word>> match_conjugate(const Word& w, const Word& relator);

/// Factors for t^-1 given factors for t.
ConsequenceWitness invert_witness(const ConsequenceWitness& w);
/// Factors for c t c^-1 given factors for t.
ConsequenceWitness conjugate_witness(const ConsequenceWitness& w, const Word& c);
ConsequenceWitness concat_witness(const ConsequenceWitness& a, const ConsequenceWitness& b);

/// Replaces every factor naming `lemma` by the conjugated factors of
/// `lemma_witness`, which certifies the lemma's relator.
ConsequenceWitness inline_lemma(const ConsequenceWitness& w, const std::string& lemma,
                                const ConsequenceWitness& lemma_witness);

/// `w` certifies relator(target_label) and uses `used` exactly once. Returns
/// a witness for relator(used) that uses target_label once and otherwise the
/// factors of `w`.
ConsequenceWitness solve_witness_for(const ConsequenceWitness& w,
                                     const std::string& target_label,
                                     const std::string& used);

struct AddGenerator {
  GeneratorSymbol symbol;
  LabeledRelation defining;  // contains `symbol` exactly once
};
struct RemoveGenerator {
  GeneratorSymbol symbol;
  std::string defining_label;
};
struct AddRelation {
  LabeledRelation relation;
  ConsequenceWitness witness;  // over the current relations
};
struct RemoveRelation {
  std::string label;
  ConsequenceWitness witness;  // over the relations that remain
};
using TietzeMove = std::variant<AddGenerator, RemoveGenerator, AddRelation, RemoveRelation>;

/// AddGenerator whose defining relation reads `symbol = word`.
AddGenerator define_generator(GeneratorSymbol symbol, const Word& word, std::string label);

class TietzeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Presentation apply_move(const Presentation& p, const TietzeMove& m);

/// Removes `symbol` using the relation `defining_label`, in which it must
/// occur exactly once, substituting it out of every other relation.
Presentation eliminate_generator(const Presentation& p, GeneratorSymbol symbol,
                                 const std::string& defining_label);

std::string describe_move(const TietzeMove& m);

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t step, const std::string& cause)
      : std::runtime_error("step " + std::to_string(step) + ": " + cause), step_(step) {}
  /// One-based index of the failing move.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct ReplayResult {
  Presentation final;
  std::vector<std::string> transcript;
};

ReplayResult replay_script(const Presentation& p, const std::vector<TietzeMove>& script);

/// u_1 = a1 y and u_{i+1} = M u_i^-1 M^-1 with M = a1 ... a_{g-1}, freely
/// reduced only.
std::map<int, Word> u_words_by_recursion(int g);

struct SearchLimits {
  std::size_t max_factors = 4;
  std::size_t max_conj_len = 6;
  std::size_t max_states = 200000;
};

struct SearchResult {
  enum class Status { Found, NotFound, ResourceCap };
  Status status = Status::NotFound;
  ConsequenceWitness witness;
  std::size_t states = 0;
};

/// Breadth-first search for a witness of target. Each step rewrites a
/// nonempty subword u of the current word to v, where u v^-1 is a cyclic
/// permutation of a relator or its inverse; the step's factor is recorded on
/// whichever side gives the shorter conjugator. Levels are ordered by total
/// conjugator length, then by the relation order of the factors used.
SearchResult bounded_consequence_search(const Word& target,
                                        const std::vector<LabeledRelation>& relations,
                                        const SearchLimits& limits);

/// As above, rewriting `from` into `to`; the witness certifies from * to^-1.
SearchResult bounded_rewrite_search(const Word& from, const Word& to,
                                    const std::vector<LabeledRelation>& relations,
                                    const SearchLimits& limits);

/// Certifies chain.front() * chain.back()^-1 by searching each link
/// chain[k] -> chain[k+1] separately. Throws TietzeError naming the first
/// link that could not be certified.
ConsequenceWitness derive_chain(const std::vector<Word>& chain,
                                const std::vector<LabeledRelation>& relations,
                                const SearchLimits& limits);

}  // namespace mcgpres
