#include "mcgpres/catalog.hpp"

#include <algorithm>

namespace mcgpres {

namespace {

using G = GeneratorSymbol;

Word A(int i, int sign = 1) { return Word::generator(G::a(i), sign); }
Word U(int i, int sign = 1) { return Word::generator(G::u(i), sign); }
Word Bx(int i, int sign = 1) { return Word::generator(G::bext(i), sign); }
Word B(int sign = 1) { return Word::generator(G::b(), sign); }
Word Y(int sign = 1) { return Word::generator(G::y(), sign); }
Word Rho(int sign = 1) { return Word::generator(G::rho(), sign); }
Word M(int sign = 1) { return Word::generator(G::aux("M"), sign); }

Word W(std::string_view text) { return parse_word(text); }

/// a_from a_{from+1} ... a_to, or descending when from > to.
Word a_run(int from, int to) {
  std::vector<Letter> out;
  int step = from <= to ? 1 : -1;
  for (int i = from; i != to + step; i += step) out.emplace_back(G::a(i), 1);
  return Word(out);
}

Word u_run(int from, int to) {
  std::vector<Letter> out;
  int step = from <= to ? 1 : -1;
  for (int i = from; i != to + step; i += step) out.emplace_back(G::u(i), 1);
  return Word(out);
}

std::string idx(std::string_view family, int i) {
  return std::string(family) + "." + std::to_string(i);
}
std::string idx(std::string_view family, int i, int j) {
  return idx(family, i) + "." + std::to_string(j);
}

void require_genus(int g, int min, std::string_view what) {
  if (g < min)
    throw CatalogError(std::string(what) + " requires g >= " +
                       std::to_string(min) + ", got g = " + std::to_string(g));
}

bool has_bext(int g) { return g >= 6 && g % 2 == 0; }

std::vector<GeneratorSymbol> twist_generators(int g) {
  std::vector<GeneratorSymbol> out;
  for (int i = 1; i <= g - 1; ++i) out.push_back(G::a(i));
  return out;
}

void append_b_generators(std::vector<GeneratorSymbol>& gens, int g) {
  if (g >= 4) gens.push_back(G::b());
  if (has_bext(g))
    for (int i = 0; i <= (g - 2) / 2; ++i) gens.push_back(G::bext(i));
}

// (A1)-(A6), plus (A7)-(A9) for even g >= 6.
void append_a_family(std::vector<LabeledRelation>& rel, int g) {
  if (g >= 4)
    for (int i = 1; i <= g - 1; ++i)
      for (int j = i + 2; j <= g - 1; ++j)
        rel.emplace_back(idx("A1", i, j), concat(A(i), A(j)), concat(A(j), A(i)));
  for (int i = 1; i <= g - 2; ++i)
    rel.emplace_back(idx("A2", i), concat({A(i), A(i + 1), A(i)}),
                     concat({A(i + 1), A(i), A(i + 1)}));
  if (g >= 4)
    for (int i = 1; i <= g - 1; ++i)
      if (i != 4) rel.emplace_back(idx("A3", i), concat(A(i), B()), concat(B(), A(i)));
  if (g >= 5) {
    rel.emplace_back("A4", concat({B(), A(4), B()}), concat({A(4), B(), A(4)}));
    rel.emplace_back("A5", power(concat(a_run(2, 4), B()), 10),
                     power(concat(a_run(1, 4), B()), 6));
  }
  if (g >= 7)
    rel.emplace_back("A6", power(concat(a_run(2, 6), B()), 12),
                     power(concat(a_run(1, 6), B()), 9));
  if (!has_bext(g)) return;
  rel.emplace_back("A7.0", Bx(0), A(1));
  rel.emplace_back("A7.1", Bx(1), B());
  for (int i = 1; i <= (g - 4) / 2; ++i) {
    Word chain = concat(Bx(i - 1), a_run(2 * i, 2 * i + 3));
    rel.emplace_back(idx("A8", i), Bx(i + 1),
                     concat(power(concat(chain, Bx(i)), 5), power(chain, -6)));
  }
  const int top = (g - 2) / 2;
  if (g == 6) rel.emplace_back("A9a", concat(Bx(2), B()), concat(B(), Bx(2)));
  if (g >= 8)
    rel.emplace_back("A9b", concat(Bx(top), A(g - 5)), concat(A(g - 5), Bx(top)));
}

Word y_mu3_a3() { return W("a2 a3 a1 a2 y a2^-1 a1^-1 a3^-1 a2^-1"); }
Word y_mu5_a5() {
  return W("a4 a5 a3 a4 a2 a3 a1 a2 y a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 "
           "a5^-1 a4^-1");
}

// (B1'), (B2'), (C1'), (C2'), (C4'), (C6'), (C7'), (C8').
void append_simplified_y_relations(std::vector<LabeledRelation>& rel, int g) {
  if (g >= 4)
    rel.emplace_back("B1'", concat(Y(), y_mu3_a3()), concat(y_mu3_a3(), Y()));
  const Word inner = W("a2 a1 y^-1 a2^-1 y a1 a2");
  rel.emplace_back("B2'", concat({Y(), inner, Y()}), concat({A(1), inner, A(1)}));
  if (g >= 4)
    for (int i = 3; i <= g - 1; ++i)
      rel.emplace_back(idx("C1'", i), concat(A(i), Y()), concat(Y(), A(i)));
  const Word e_conj = W("y a2 y^-1");
  rel.emplace_back("C2'", concat(A(2), e_conj), concat(e_conj, A(2)));
  rel.emplace_back("C4'", concat(A(1), Y()), concat(Y(), A(1, -1)));
  if (g >= 4)
    rel.emplace_back("C6'", W("b y b y^-1"),
                     concat(W("a1 a2 a3 y^-1 a2 y a3^-1 a2^-1 a1^-1"),
                            W("a2^-1 a3^-1 y a2 y^-1 a3 a2")));
  if (g >= 6)
    rel.emplace_back("C7'", concat(y_mu5_a5(), B()), concat(B(), y_mu5_a5()));
  if (g >= 5)
    rel.emplace_back(
        "C8'",
        concat(W("y a1^-1 a2^-1 a3^-1 a4^-1 b a4 a3 a2 a1 y^-1"),
               W("a1^-1 a2^-1 a3^-1 a4^-1 b^-1 a4 a3 a2 a1")),
        concat({W("a4^-1 a3^-1 a2^-1 y a2 a3 a4"), W("a3^-1 a2^-1 y^-1 a2 a3"),
                W("a2^-1 y a2"), Y(-1)}));
}

void append_c6_c7_c8(std::vector<LabeledRelation>& rel, int g) {
  if (g >= 4)
    rel.emplace_back("C6", power(concat(U(3), B()), 2),
                     concat(power(a_run(1, 3), 2), power(u_run(1, 3), 2)));
  if (g >= 6) rel.emplace_back("C7", concat(U(5), B()), concat(B(), U(5)));
  if (g >= 5)
    rel.emplace_back("C8", concat({B(), A(4), U(4)}),
                     concat({A(4), U(4), a_run(4, 1), u_run(1, 4), B()}));
}

}  // namespace

bool is_closed_family(PresentationFamily f) {
  return f == PresentationFamily::ParSzepClosed ||
         f == PresentationFamily::SimplifiedClosedProp ||
         f == PresentationFamily::SimplifiedClosedThm;
}

Presentation build_parszep_bordered(int g) {
  require_genus(g, 3, "parszep-bordered");
  Presentation p;
  p.family = PresentationFamily::ParSzepBordered;
  p.g = g;
  p.s = 1;
  p.generators = twist_generators(g);
  for (int i = 1; i <= g - 1; ++i) p.generators.push_back(G::u(i));
  append_b_generators(p.generators, g);

  auto& rel = p.relations;
  append_a_family(rel, g);
  if (g >= 4)
    for (int i = 1; i <= g - 1; ++i)
      for (int j = i + 2; j <= g - 1; ++j)
        rel.emplace_back(idx("B1", i, j), concat(U(i), U(j)), concat(U(j), U(i)));
  for (int i = 1; i <= g - 2; ++i)
    rel.emplace_back(idx("B2", i), concat({U(i), U(i + 1), U(i)}),
                     concat({U(i + 1), U(i), U(i + 1)}));
  if (g >= 4)
    for (int i = 3; i <= g - 1; ++i)
      rel.emplace_back(idx("C1", i), concat(A(1), U(i)), concat(U(i), A(1)));
  for (int i = 1; i <= g - 2; ++i)
    rel.emplace_back(idx("C2", i), concat({A(i), U(i + 1), U(i)}),
                     concat({U(i + 1), U(i), A(i + 1)}));
  for (int i = 1; i <= g - 2; ++i)
    rel.emplace_back(idx("C3", i), concat({A(i + 1), U(i), U(i + 1)}),
                     concat({U(i), U(i + 1), A(i)}));
  rel.emplace_back("C4", concat({A(1), U(1), A(1)}), U(1));
  rel.emplace_back("C5", concat({U(2), A(1), A(2), U(1)}), concat(A(1), A(2)));
  append_c6_c7_c8(rel, g);
  return p;
}

Presentation build_parszep_closed(int g) {
  require_genus(g, 4, "parszep-closed");
  Presentation p = build_parszep_bordered(g);
  p.family = PresentationFamily::ParSzepClosed;
  p.s = 0;
  p.relations.emplace_back("B3", power(u_run(1, g - 1), g), Word{});
  p.relations.emplace_back("B4", concat(u_run(g - 1, 1), u_run(1, g - 1)), Word{});
  const Word middle = concat(a_run(2, g - 1), u_run(g - 1, 2));
  p.relations.emplace_back("D", concat({A(1), middle, A(1)}), middle);
  return p;
}

Presentation build_simplified_bordered(int g) {
  require_genus(g, 3, "simplified-bordered");
  Presentation p;
  p.family = PresentationFamily::SimplifiedBordered;
  p.g = g;
  p.s = 1;
  p.generators = twist_generators(g);
  append_b_generators(p.generators, g);
  p.generators.push_back(G::y());
  append_a_family(p.relations, g);
  append_simplified_y_relations(p.relations, g);
  return p;
}

Presentation build_simplified_closed(int g, ClosedVariant variant) {
  require_genus(g, 4, "simplified-closed");
  Presentation p = build_simplified_bordered(g);
  p.family = variant == ClosedVariant::Prop
                 ? PresentationFamily::SimplifiedClosedProp
                 : PresentationFamily::SimplifiedClosedThm;
  p.s = 0;
  p.generators.push_back(G::rho());
  auto& rel = p.relations;
  const Word m = a_run(1, g - 1);
  rel.emplace_back("B3'", power(m, g), g % 2 == 0 ? Word{} : Rho());
  const Word tail = a_run(2, g - 1);  // a_2 a_3 ... a_{g-1}
  if (variant == ClosedVariant::Prop) {
    rel.emplace_back("D'", concat(Rho(), A(1)), concat(A(1), Rho()));
    rel.emplace_back("E", power(Rho(), 2), Word{});
    const Word block = concat({Y(-1), tail, Y(), tail});
    if (g % 2 == 1)
      rel.emplace_back("Fa", power(block, (g - 1) / 2), Word{});
    else
      rel.emplace_back("Fb", concat({power(block, (g - 2) / 2), Y(-1), tail}),
                       Rho());
  } else {
    for (int i = 1; i <= g - 1; ++i)
      rel.emplace_back(idx("D1", i), concat(Rho(), A(i)), concat(A(i), Rho()));
    rel.emplace_back("D2", concat(Y(), Rho()), concat(Rho(), Y(-1)));
    rel.emplace_back("E", power(Rho(), 2), Word{});
    rel.emplace_back("F'", power(concat({Y(), Rho(), tail}), g - 1), Word{});
  }
  return p;
}

Presentation build_corollary_mixed(int g) {
  if (g < 6)
    throw CatalogError(
        "corollary-mixed requires g >= 6: the relations (C5a) for i = 1..4 "
        "and the kept generators u_1..u_5 must exist, got g = " +
        std::to_string(g));
  Presentation p;
  p.family = PresentationFamily::CorollaryMixed;
  p.g = g;
  p.s = 1;
  p.generators = twist_generators(g);
  for (int i = 1; i <= 5; ++i) p.generators.push_back(G::u(i));
  append_b_generators(p.generators, g);

  auto& rel = p.relations;
  append_a_family(rel, g);
  rel.emplace_back("B1.1.3", concat(U(1), U(3)), concat(U(3), U(1)));
  rel.emplace_back("B2.1", concat({U(1), U(2), U(1)}), concat({U(2), U(1), U(2)}));
  for (int i = 3; i <= g - 1; ++i)
    rel.emplace_back(idx("C1'", i), concat(U(1), A(i)), concat(A(i), U(1)));
  rel.emplace_back("C2.1", concat({A(1), U(2), U(1)}), concat({U(2), U(1), A(2)}));
  rel.emplace_back("C4", concat({A(1), U(1), A(1)}), U(1));
  for (int i = 1; i <= 4; ++i)
    rel.emplace_back(idx("C5a", i), concat({U(i + 1), A(i), A(i + 1)}),
                     concat({A(i), A(i + 1), U(i, -1)}));
  append_c6_c7_c8(rel, g);
  return p;
}

Presentation build_family(PresentationFamily family, int g) {
  switch (family) {
    case PresentationFamily::ParSzepBordered: return build_parszep_bordered(g);
    case PresentationFamily::ParSzepClosed: return build_parszep_closed(g);
    case PresentationFamily::SimplifiedBordered: return build_simplified_bordered(g);
    case PresentationFamily::SimplifiedClosedProp:
      return build_simplified_closed(g, ClosedVariant::Prop);
    case PresentationFamily::SimplifiedClosedThm:
      return build_simplified_closed(g, ClosedVariant::Thm);
    case PresentationFamily::CorollaryMixed: return build_corollary_mixed(g);
    case PresentationFamily::Custom: break;
  }
  throw CatalogError("custom presentations have no builder");
}

std::vector<LabeledRelation> auxiliary_relations(AuxiliaryKind kind, int g) {
  require_genus(g, 3, "auxiliary relations");
  std::vector<LabeledRelation> rel;
  switch (kind) {
    case AuxiliaryKind::X:
      rel.emplace_back("X1", U(1), concat(A(1), Y()));
      rel.emplace_back("X2", M(), a_run(1, g - 1));
      for (int i = 1; i <= g - 2; ++i)
        rel.emplace_back(idx("X3", i), concat(M(), U(i)), concat(U(i + 1, -1), M()));
      for (int i = 1; i <= g - 2; ++i)
        rel.emplace_back(idx("X4", i), concat(M(), A(i)), concat(A(i + 1), M()));
      break;
    case AuxiliaryKind::C1aC5a:
      if (g >= 4)
        for (int i = 1; i <= g - 1; ++i)
          for (int j = 1; j <= g - 1; ++j)
            if (std::abs(i - j) > 1)
              rel.emplace_back(idx("C1a", i, j), concat(A(i), U(j)),
                               concat(U(j), A(i)));
      for (int i = 1; i <= g - 2; ++i)
        rel.emplace_back(idx("C5a", i), concat({A(i), A(i + 1), U(i)}),
                         concat({U(i + 1, -1), A(i), A(i + 1)}));
      break;
    case AuxiliaryKind::Hyperelliptic:
      for (int i = 1; i <= g - 1; ++i)
        rel.emplace_back(idx("Ha", i), conjugate(A(i), Rho()), A(i));
      for (int i = 1; i <= g - 1; ++i)
        rel.emplace_back(idx("Hu", i), conjugate(U(i), Rho()), U(i, -1));
      break;
    case AuxiliaryKind::F:
      rel.emplace_back("F", Rho(), concat(a_run(1, g - 1), u_run(g - 1, 1)));
      break;
  }
  return rel;
}

std::vector<std::string> derived_word_names() {
  return {"Y_mu1_a13", "Y_mu1_a14", "Y_mu1_a15", "Y_mu2_a2", "Y_mu3_a3",
          "Y_mu5_a5",  "e",         "M",         "u1",       "u2",
          "u3",        "u4",        "u5"};
}

Word derived_word(const std::string& name, int g) {
  struct Entry {
    std::string_view name;
    int min_genus;
    std::string_view text;
  };
  static constexpr Entry kTable[] = {
      {"Y_mu1_a13", 3, "a2^-1 y a2"},
      {"Y_mu1_a14", 4, "a3^-1 a2^-1 y a2 a3"},
      {"Y_mu1_a15", 5, "a4^-1 a3^-1 a2^-1 y a2 a3 a4"},
      {"Y_mu2_a2", 3, "a1 a2 y^-1 a2^-1 a1^-1"},
      {"Y_mu3_a3", 4, "a2 a3 a1 a2 y a2^-1 a1^-1 a3^-1 a2^-1"},
      {"Y_mu5_a5", 6,
       "a4 a5 a3 a4 a2 a3 a1 a2 y a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 a5^-1 "
       "a4^-1"},
      {"e", 3, "y a2^-1 y^-1"},
      {"u1", 3, "a1 y"},
      {"u2", 3, "a1 a2 a1 y^-1 a2^-1 a1^-1"},
      {"u3", 4, "a2 a3 a1 a2 a1 y a2^-1 a1^-1 a3^-1 a2^-1"},
      {"u4", 5,
       "a3 a4 a2 a3 a1 a2 a1 y^-1 a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1"},
      {"u5", 6,
       "a4 a5 a3 a4 a2 a3 a1 a2 a1 y a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 "
       "a5^-1 a4^-1"},
  };
  if (name == "M") {
    require_genus(g, 3, "derived word M");
    return a_run(1, g - 1);
  }
  for (const auto& e : kTable) {
    if (e.name != name) continue;
    require_genus(g, e.min_genus, "derived word " + name);
    return W(e.text);
  }
  throw CatalogError("unknown derived word '" + name + "'");
}

std::map<GeneratorSymbol, Word> definitions_from_parszep(
    PresentationFamily target, int g) {
  std::map<GeneratorSymbol, Word> defs;
  Presentation p = build_family(target, g);
  for (const auto& s : p.generators) {
    switch (s.family()) {
      case Family::Y: defs[s] = concat(A(1, -1), U(1)); break;
      case Family::Rho: defs[s] = concat(a_run(1, g - 1), u_run(g - 1, 1)); break;
      default: defs[s] = Word::generator(s); break;
    }
  }
  return defs;
}

std::map<GeneratorSymbol, Word> definitions_from_simplified(int g) {
  std::map<GeneratorSymbol, Word> defs;
  const Word m = a_run(1, g - 1);
  Word u = concat(A(1), Y());
  for (int i = 1; i <= g - 1; ++i) {
    defs[G::u(i)] = u;
    u = conjugate(invert(u), m);
  }
  return defs;
}

}  // namespace mcgpres
