#pragma once

// Presentations of the mapping class group of the nonorientable surface
// N_{g,s}, s in {0,1}: the crosscap-transposition presentation with
// generators a_i, u_i, b (and b_i for even g >= 6), the simplified one with
// a single crosscap slide y, their closed-surface quotients, and the mixed
// presentation keeping u_1..u_5.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgpres/presentation.hpp"

namespace mcgpres {

class CatalogError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ClosedVariant { Prop, Thm };

Presentation build_parszep_bordered(int g);
Presentation build_parszep_closed(int g);
Presentation build_simplified_bordered(int g);
Presentation build_simplified_closed(int g, ClosedVariant variant);
Presentation build_corollary_mixed(int g);

/// Dispatches on family; `s` must match the family (0 closed, 1 bordered).
Presentation build_family(PresentationFamily family, int g);

enum class AuxiliaryKind { X, C1aC5a, Hyperelliptic, F };

/// Relations used inside the elimination argument. Kind X introduces the
/// auxiliary generator M; Hyperelliptic and F involve rho.
std::vector<LabeledRelation> auxiliary_relations(AuxiliaryKind kind, int g);

/// Named words: "Y_mu1_a13", "Y_mu1_a14", "Y_mu1_a15", "Y_mu2_a2",
/// "Y_mu3_a3", "Y_mu5_a5", "e", "M", "u1".."u5".
Word derived_word(const std::string& name, int g);
std::vector<std::string> derived_word_names();

/// Words in the generators of the (bordered or closed) crosscap-transposition
/// presentation that define each generator of `target`'s family, e.g.
/// y = a1^-1 u1 and rho = a1..a_{g-1} u_{g-1}..u1.
std::map<GeneratorSymbol, Word> definitions_from_parszep(
    PresentationFamily target, int g);

/// Inverse direction: the crosscap transpositions written in the simplified
/// generators, u_1 = a_1 y and u_{i+1} = M u_i^-1 M^-1.
std::map<GeneratorSymbol, Word> definitions_from_simplified(int g);

/// True for the families presenting the closed surface (s = 0).
bool is_closed_family(PresentationFamily f);

}  // namespace mcgpres
