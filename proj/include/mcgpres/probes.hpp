#pragma once

// Cross-presentation probes: abelianization and homomorphism status under
// shipped finite assignments.

#include <string>
#include <vector>

#include "mcgpres/catalog.hpp"
#include "mcgpres/quotient.hpp"

namespace mcgpres {

/// A finite assignment given either on the crosscap generators a_i, u_i, b
/// or on the slide generators a_i, y, b. `realize` extends it to any family.
struct ShippedAssignment {
  std::string name;
  FiniteAssignment base;
};

/// Images on the generators of `p`, derived from `base`. A base assigning y
/// and no u_i is read as slide generators, otherwise as crosscap generators.
FiniteAssignment realize(const Presentation& p, const FiniteAssignment& base);

/// Mod-2 homology action and the sign characters of the crosscap
/// presentation of genus g (closed or bordered).
std::vector<ShippedAssignment> computed_assignments(int g, bool closed);

/// Files named g<g>-<bordered|closed>-<name>.txt under `dir`, sorted by name.
/// A missing directory yields no assignments.
std::vector<ShippedAssignment> load_assignment_fixtures(const std::string& dir,
                                                        int g, bool closed);

std::vector<ShippedAssignment> shipped_assignments(int g, bool closed,
                                                   const std::string& fixtures_dir);

/// Default fixture tree: $MCGPRES_FIXTURES if set, else the source tree.
std::string default_fixtures_dir();

struct ProbeResult {
  std::string probe;
  std::string left;
  std::string right;
  bool equal = false;
};

struct Comparison {
  std::vector<ProbeResult> probes;
  bool equal() const;
};

/// Abelianization by both pivoting strategies on each side, then for each
/// assignment whether it realizes a homomorphism on each side.
Comparison compare_presentations(const Presentation& left, const Presentation& right,
                                 const std::vector<ShippedAssignment>& assignments);

}  // namespace mcgpres
