#include "doctest.h"
#include "mcgpres/catalog.hpp"
#include "mcgpres/coset.hpp"

using namespace mcgpres;

namespace {

Presentation s3(bool extra_relator = false) {
  Presentation p;
  p.generators = {declare_symbol("x"), GeneratorSymbol::y()};
  p.relations.emplace_back("X2", parse_word("x x", p.generators));
  p.relations.emplace_back("Y2", parse_word("y y"));
  p.relations.emplace_back("XY3", parse_word("x y x y x y", p.generators));
  if (extra_relator) p.relations.emplace_back("XY", parse_word("x y x^-1 y^-1", p.generators));
  return p;
}

int order(const FiniteAssignment& a, const FiniteAssignment::Element& e) {
  auto x = e;
  int k = 1;
  while (x != a.identity()) {
    x = a.multiply(x, e);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("symmetric group of degree three") {
  auto p = s3();
  Word x = parse_word("x", p.generators);
  auto t = todd_coxeter(p, {x});
  REQUIRE(t.complete());
  CHECK(t.index() == 3);
  CHECK(verify_table(t, p, {x}));
  auto full = todd_coxeter(p, {});
  REQUIRE(full.complete());
  CHECK(full.index() == 6);
  CHECK(verify_table(full, p, {}));
  auto rep = permutation_rep(full);
  CHECK(order(rep, rep.image(declare_symbol("x"))) == 2);
  CHECK(check_homomorphism(p, rep).empty());
}

TEST_CASE("index does not depend on the cap") {
  auto p = s3();
  bool seen_complete = false;
  for (std::size_t cap = 1; cap <= 200; ++cap) {
    auto t = todd_coxeter(p, {}, cap);
    if (seen_complete) REQUIRE(t.complete());
    if (!t.complete()) continue;
    seen_complete = true;
    CHECK(t.index() == 6);
  }
  CHECK(seen_complete);
  CHECK_FALSE(todd_coxeter(p, {}, 2).complete());
}

TEST_CASE("adding a relator does not increase the index") {
  auto small = todd_coxeter(s3(true), {});
  REQUIRE(small.complete());
  CHECK(small.index() <= 6);
  CHECK(small.index() == 2);
}

TEST_CASE("killed presentation has index one") {
  auto p = build_simplified_bordered(4);
  for (auto g : p.generators)
    p.relations.emplace_back("K." + g.name(), Word::generator(g));
  auto t = todd_coxeter(p, {});
  REQUIRE(t.complete());
  CHECK(t.index() == 1);
  auto rep = permutation_rep(t);
  for (auto g : p.generators) CHECK(rep.image(g) == rep.identity());
  CHECK(check_homomorphism(p, rep).empty());
}

TEST_CASE("verify_table rejects damaged or partial tables") {
  auto p = s3();
  auto t = todd_coxeter(p, {});
  auto bad = t;
  bad.rows[1][0] = (bad.rows[1][0] + 1) % 6;
  CHECK_FALSE(verify_table(bad, p, {}));
  auto partial = todd_coxeter(p, {}, 3);
  CHECK_FALSE(verify_table(partial, p, {}));
}

TEST_CASE("table export round trip") {
  auto t = todd_coxeter(s3(), {});
  CHECK(import_table(export_table(t)) == t);
}

TEST_CASE("foreign generators are rejected") {
  CHECK_THROWS_AS(todd_coxeter(s3(), {parse_word("a1")}), ForeignGenerator);
}

TEST_CASE("mapping class presentations overflow") {
  auto t = todd_coxeter(build_simplified_bordered(3), {}, 2000);
  CHECK_FALSE(t.complete());
}
