#pragma once

// Todd-Coxeter coset enumeration, HLT strategy: relators are traced at each
// live coset in order of definition, undefined entries are filled in, and
// coincidences are processed immediately and exhaustively.

#include <cstddef>
#include <string>
#include <vector>

#include "mcgpres/presentation.hpp"
#include "mcgpres/quotient.hpp"

namespace mcgpres {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

struct CosetTable {
  enum class Status { Complete, Overflow };

  Status status = Status::Overflow;
  std::size_t max_cosets = 0;
  std::vector<GeneratorSymbol> generators;
  /// rows[c][2k] is c * g_k, rows[c][2k+1] is c * g_k^-1; -1 when undefined.
  /// Cosets are numbered from 0; coset 0 is the subgroup itself.
  std::vector<std::vector<int>> rows;

  bool complete() const { return status == Status::Complete; }
  std::size_t index() const { return rows.size(); }
  bool operator==(const CosetTable&) const = default;
};

class ForeignGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic for fixed inputs. Overflow keeps the compacted partial
/// table reached when the cap was hit.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Generator images on {0..n-1}, acting on the right. Requires Complete.
FiniteAssignment permutation_rep(const CosetTable& t);

/// Re-traces every relator at every coset and every subgroup generator at
/// coset 0 using only the table entries. False for incomplete tables.
bool verify_table(const CosetTable& t, const Presentation& p,
                  const std::vector<Word>& subgroup);

/// Text grid: a header naming the signed generators, then `<coset>: <images>`
/// rows with 1-based cosets and `-` for undefined entries.
std::string export_table(const CosetTable& t);
CosetTable import_table(std::string_view text);

}  // namespace mcgpres
