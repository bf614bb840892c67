#include "doctest.h"
#include "mcgpres/catalog.hpp"

using namespace mcgpres;

TEST_CASE("generator and relation counts") {
  auto p3 = build_parszep_bordered(3);
  CHECK(p3.relations.size() == 6);
  auto p4 = build_parszep_bordered(4);
  CHECK(p4.generators.size() == 7);
  CHECK(p4.relations.size() == 17);
  auto p6 = build_parszep_bordered(6);
  CHECK(p6.generators.size() == 14);
  CHECK(p6.relations.size() == 46);
  auto s3 = build_simplified_bordered(3);
  CHECK(s3.generators.size() == 3);
  CHECK(s3.relations.size() == 4);
  auto s4 = build_simplified_bordered(4);
  CHECK(s4.generators.size() == 5);
  CHECK(s4.relations.size() == 12);
  CHECK(build_corollary_mixed(7).generators.size() == 12);
}

TEST_CASE("catalog presentations validate") {
  for (int g = 3; g <= 9; ++g) {
    CHECK(validate(build_parszep_bordered(g)).empty());
    CHECK(validate(build_simplified_bordered(g)).empty());
    if (g >= 4) {
      CHECK(validate(build_parszep_closed(g)).empty());
      CHECK(validate(build_simplified_closed(g, ClosedVariant::Prop)).empty());
      CHECK(validate(build_simplified_closed(g, ClosedVariant::Thm)).empty());
    }
    if (g >= 6) CHECK(validate(build_corollary_mixed(g)).empty());
  }
}

TEST_CASE("commutator forms of simplified relations") {
  auto p = build_simplified_bordered(6);
  auto y = parse_word("y");
  CHECK(p.find("B1'")->relator() ==
        commutator(y, derived_word("Y_mu3_a3", 6)));
  CHECK(p.find("C7'")->relator() ==
        commutator(derived_word("Y_mu5_a5", 6), parse_word("b")));
  CHECK(p.find("C2'")->relator() ==
        commutator(parse_word("a2"), parse_word("y a2 y^-1")));
}

TEST_CASE("emit and parse round trip") {
  for (int g : {3, 4, 6, 7}) {
    auto p = build_parszep_bordered(g);
    CHECK(parse_presentation(emit_presentation(p)) == p);
  }
}

TEST_CASE("corollary requires g >= 6") {
  CHECK_THROWS_AS(build_corollary_mixed(5), CatalogError);
}
