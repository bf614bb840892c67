#include <random>

#include "doctest.h"
#include "mcgpres/catalog.hpp"
#include "mcgpres/quotient.hpp"
#include "mcgpres/tietze.hpp"

using namespace mcgpres;

namespace {

std::vector<LabeledRelation> c4_x1() {
  return {LabeledRelation("C4", parse_word("a1 u1 a1"), parse_word("u1")),
          LabeledRelation("X1", parse_word("u1"), parse_word("a1 y"))};
}

}  // namespace

TEST_CASE("single factor witnesses") {
  auto p = build_parszep_bordered(4);
  const auto& a21 = *p.find("A2.1");
  ConsequenceWitness w{{{"A2.1", 1, parse_word("a3")}}};
  CHECK(check_consequence(conjugate(a21.relator(), parse_word("a3")), p.relations, w));
  for (const auto& r : p.relations)
    CHECK(check_consequence(r.relator(), p.relations, ConsequenceWitness{{{r.label(), 1, {}}}}));
  CHECK_THROWS_AS(witness_product(p.relations, ConsequenceWitness{{{"Z9", 1, {}}}}),
                  UnresolvedLabel);
}

TEST_CASE("product of two relators") {
  auto p = build_simplified_bordered(3);
  Word t = concat(p.find("A2.1")->relator(), p.find("B2'")->relator());
  CHECK(check_consequence(t, p.relations, ConsequenceWitness{{{"A2.1", 1, {}}, {"B2'", 1, {}}}}));
}

TEST_CASE("search finds a conjugated relator") {
  std::vector<LabeledRelation> rels{LabeledRelation("C4", parse_word("a1 u1 a1"), parse_word("u1"))};
  Word t = conjugate(rels[0].relator(), parse_word("a1"));
  auto r = bounded_consequence_search(t, rels, {});
  REQUIRE(r.status == SearchResult::Status::Found);
  CHECK(r.witness.factors.size() == 1);
  CHECK(check_consequence(t, rels, r.witness));
}

TEST_CASE("search derives C4' from C4 and X1") {
  Word target = build_simplified_bordered(3).find("C4'")->relator();
  auto r = bounded_consequence_search(target, c4_x1(), {4, 6, 200000});
  REQUIRE(r.status == SearchResult::Status::Found);
  CHECK(r.witness.factors.size() <= 4);
  CHECK(check_consequence(target, c4_x1(), r.witness));
}

TEST_CASE("parity obstruction defeats the search") {
  std::vector<LabeledRelation> rels{
      LabeledRelation("E1", parse_word("a1 a1")),
      LabeledRelation("E2", parse_word("a1 a2 a1^-1 a2^-1"))};
  auto r = bounded_consequence_search(parse_word("a1"), rels, {3, 4, 20000});
  CHECK(r.status != SearchResult::Status::Found);
}

TEST_CASE("parity obstruction on random witnesses") {
  std::mt19937 rng(11);
  auto p = build_parszep_bordered(5);
  std::vector<LabeledRelation> even;
  for (const auto& r : p.relations)
    if (exponent_sum(r.relator(), GeneratorSymbol::a(1)) % 2 == 0) even.push_back(r);
  for (int trial = 0; trial < 200; ++trial) {
    ConsequenceWitness w;
    for (int k = 0; k < 4; ++k) {
      const auto& r = even[rng() % even.size()];
      std::vector<Letter> c;
      for (int j = 0; j < 5; ++j)
        c.emplace_back(p.generators[rng() % p.generators.size()], rng() % 2 ? 1 : -1);
      w.factors.push_back({r.label(), rng() % 2 ? 1 : -1, Word(c)});
    }
    Word prod = witness_product(even, w);
    CHECK(exponent_sum(prod, GeneratorSymbol::a(1)) % 2 == 0);
    CHECK_FALSE(check_consequence(concat(prod, parse_word("a1")), even, w));
  }
}

TEST_CASE("witness inversion and conjugation") {
  auto p = build_simplified_bordered(4);
  ConsequenceWitness w{{{"A2.1", 1, parse_word("y")}, {"C4'", -1, parse_word("a3 b")}}};
  Word t = witness_product(p.relations, w);
  CHECK(check_consequence(invert(t), p.relations, invert_witness(w)));
  Word c = parse_word("a2 y^-1");
  CHECK(check_consequence(conjugate(t, c), p.relations, conjugate_witness(w, c)));
}

TEST_CASE("lemma inlining and solving") {
  auto rels = c4_x1();
  Word c4p = build_simplified_bordered(3).find("C4'")->relator();
  auto found = bounded_consequence_search(c4p, rels, {4, 6, 200000});
  REQUIRE(found.status == SearchResult::Status::Found);
  auto with_lemma = rels;
  with_lemma.emplace_back("C4'", parse_word("a1 y"), parse_word("y a1^-1"));
  ConsequenceWitness uses{{{"C4'", -1, parse_word("a2")}, {"X1", 1, {}}}};
  Word t = witness_product(with_lemma, uses);
  CHECK(check_consequence(t, rels, inline_lemma(uses, "C4'", found.witness)));

  int c4_uses = 0;
  for (const auto& f : found.witness.factors) c4_uses += f.label == "C4";
  if (c4_uses == 1) {
    auto solved = solve_witness_for(found.witness, "C4'", "C4");
    std::vector<LabeledRelation> others{rels[1], with_lemma[2]};
    CHECK(check_consequence(rels[0].relator(), others, solved));
  }
}

TEST_CASE("corrupted witness names the factor") {
  auto p = build_simplified_bordered(3);
  ConsequenceWitness w{{{"A2.1", 1, parse_word("y")}, {"C4'", 1, parse_word("a2")},
                        {"B2'", -1, {}}}};
  Word t = witness_product(p.relations, w);
  auto bad = w;
  bad.factors[1].conjugator = parse_word("a1");
  auto rep = explain_consequence(t, p.relations, bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.factor);
  CHECK(*rep.factor == 1);
  CHECK(explain_consequence(t, p.relations, w).ok);
}

TEST_CASE("moves") {
  auto p = build_parszep_bordered(3);
  auto q = apply_move(p, define_generator(GeneratorSymbol::y(), parse_word("a1^-1 u1"), "X1"));
  CHECK(q.generators.size() == 5);
  CHECK(q.relations.size() == 7);
  CHECK_THROWS_AS(eliminate_generator(p, GeneratorSymbol::a(1), "A2.1"), TietzeError);

  Presentation small;
  small.generators = {GeneratorSymbol::a(1), GeneratorSymbol::y(), GeneratorSymbol::u(1)};
  small.relations = c4_x1();
  auto e = eliminate_generator(small, GeneratorSymbol::u(1), "X1");
  REQUIRE(e.relations.size() == 1);
  CHECK(format_word(e.relations[0].relator()) == "a1 a1 y a1 y^-1 a1^-1");

  AddRelation bad{LabeledRelation("C4'", parse_word("a1 y"), parse_word("y a1^-1")),
                  ConsequenceWitness{{{"C4", 1, {}}}}};
  CHECK_THROWS_AS(apply_move(small, bad), TietzeError);
}

TEST_CASE("replay reports the failing step") {
  auto p = build_parszep_bordered(3);
  CHECK(replay_script(p, {}).final == p);
  std::vector<TietzeMove> script{
      define_generator(GeneratorSymbol::y(), parse_word("a1^-1 u1"), "X1"),
      RemoveRelation{"C4", ConsequenceWitness{{{"X1", 1, {}}}}}};
  try {
    replay_script(p, script);
    FAIL("expected failure");
  } catch (const ReplayError& e) {
    CHECK(e.step() == 2);
  }
}

TEST_CASE("u words by recursion") {
  auto u = u_words_by_recursion(4);
  CHECK(u[1] == parse_word("a1 y"));
  CHECK(u[2].size() == 8);
  auto u5 = u_words_by_recursion(5);
  CHECK(exponent_sum(u5[3], GeneratorSymbol::y()) == 1);
}

TEST_CASE("elimination preserves abelianization") {
  auto p = build_parszep_bordered(4);
  auto before = abelianization(p);
  auto q = apply_move(p, define_generator(GeneratorSymbol::y(), parse_word("a1^-1 u1"), "X1"));
  CHECK(abelianization(q) == before);
  auto r = eliminate_generator(q, GeneratorSymbol::u(1), "X1");
  CHECK(abelianization(r) == before);
}
