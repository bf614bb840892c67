#include "doctest.h"
#include "mcgpres/catalog.hpp"
#include "mcgpres/certificates.hpp"
#include "mcgpres/probes.hpp"

using namespace mcgpres;

namespace {

std::string fixture(const std::string& rel) { return default_fixtures_dir() + "/" + rel; }

}  // namespace

TEST_CASE("witness file round trip") {
  WitnessFile f = read_witness_file(fixture("witnesses/c4prime-g3.wit"));
  REQUIRE(f.relations.size() == 2);
  REQUIRE(f.records.size() == 1);
  CHECK(f.records[0].witness.factors.size() <= 4);
  WitnessFile g = parse_witness_file(emit_witness_file(f));
  CHECK(g.relations == f.relations);
  CHECK(g.records[0].target == f.records[0].target);
  CHECK(g.records[0].witness == f.records[0].witness);
}

TEST_CASE("shipped witnesses verify") {
  for (const char* name : {"witnesses/c4prime-g3.wit", "witnesses/c1-3-g4.wit",
                           "witnesses/c2prime-g4.wit"}) {
    CAPTURE(name);
    WitnessFile f = read_witness_file(fixture(name));
    for (const auto& r : check_witness_file(f)) CHECK_MESSAGE(r.check.ok, r.check.message);
  }
}

TEST_CASE("shipped witness targets match the catalog") {
  auto c4 = read_witness_file(fixture("witnesses/c4prime-g3.wit"));
  CHECK(c4.records[0].target == *build_simplified_bordered(3).find("C4'"));
  auto c13 = read_witness_file(fixture("witnesses/c1-3-g4.wit"));
  CHECK(c13.records[0].target == *build_parszep_bordered(4).find("C1.3"));
  auto c2 = read_witness_file(fixture("witnesses/c2prime-g4.wit"));
  CHECK(c2.records[0].target == *build_simplified_bordered(4).find("C2'"));
}

TEST_CASE("corrupted witness names a factor") {
  WitnessFile f = read_witness_file(fixture("witnesses/c4prime-g3-corrupted.wit"));
  auto reports = check_witness_file(f);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].check.ok);
  REQUIRE(reports[0].check.factor);
  CHECK(*reports[0].check.factor == f.records[0].witness.factors.size() - 1);
}

TEST_CASE("witness file errors carry line numbers") {
  try {
    parse_witness_file("relation X1: u1 = a1 y\ntarget T: u1 = u1\nfactor X1 +2 1\n");
    FAIL("expected error");
  } catch (const FileParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_witness_file("relation X1: u1 = a1 y\n"), FileParseError);
  CHECK_THROWS_AS(parse_witness_file("bogus line\n"), FileParseError);
}

TEST_CASE("g3 elimination script replays") {
  ScriptFile s = read_script_file(fixture("scripts/g3-elimination.tz"));
  ScriptReport r = check_script(s);
  CHECK(r.findings.empty());
  CHECK(r.ok);
  CHECK(r.final.generators.size() == 3);
  CHECK(r.transcript.size() == s.moves.size());
  for (const auto& m : s.moves) {
    const ConsequenceWitness* w = nullptr;
    if (auto* a = std::get_if<AddRelation>(&m)) w = &a->witness;
    if (auto* d = std::get_if<RemoveRelation>(&m)) w = &d->witness;
    if (!w) continue;
    CHECK(w->factors.size() <= 8);
    for (const auto& f : w->factors) CHECK(f.conjugator.size() <= 12);
  }
}

TEST_CASE("script round trip") {
  ScriptFile s = read_script_file(fixture("scripts/g3-elimination.tz"));
  std::string text = emit_script_file(s, "family parszep-bordered g 3",
                                      "family simplified-bordered g 3");
  ScriptFile t = parse_script_file(text);
  CHECK(emit_script_file(t, "family parszep-bordered g 3", "family simplified-bordered g 3") ==
        text);
  CHECK(check_script(t).ok);
}

TEST_CASE("broken script fails at the damaged step") {
  ScriptFile s = read_script_file(fixture("scripts/g3-elimination-bad.tz"));
  std::size_t expected = 0;
  for (std::size_t k = 0; k < s.moves.size(); ++k)
    if (auto* r = std::get_if<RemoveRelation>(&s.moves[k]); r && r->label == "C4") expected = k + 1;
  REQUIRE(expected > 0);
  ScriptReport r = check_script(s);
  CHECK_FALSE(r.ok);
  REQUIRE(r.failed_step);
  CHECK(*r.failed_step == expected);
}

TEST_CASE("equivalence certificates are required") {
  ScriptFile s = read_script_file(fixture("scripts/g3-elimination.tz"));
  s.certificates.pop_back();
  ScriptReport r = check_script(s);
  CHECK_FALSE(r.ok);
  CHECK(r.findings.size() == 1);
}

TEST_CASE("enumeration specs") {
  auto three = check_enum_spec(read_enum_spec(fixture("enum/s3-index3.enum")));
  CHECK(three.ok());
  CHECK(three.table.index() == 3);
  auto six = check_enum_spec(read_enum_spec(fixture("enum/s3-index6.enum")));
  CHECK(six.ok());
  CHECK(six.table.index() == 6);
  auto killed = check_enum_spec(read_enum_spec(fixture("enum/g4-killed.enum")));
  CHECK(killed.ok());
  CHECK(killed.table.index() == 1);
  auto capped = check_enum_spec(read_enum_spec(fixture("enum/s3-index6.enum")), 2);
  CHECK_FALSE(capped.ok());
  EnumSpec wrong = read_enum_spec(fixture("enum/s3-index3.enum"));
  wrong.expect_index = 2;
  CHECK_FALSE(check_enum_spec(wrong).ok());
}

TEST_CASE("enumeration spec errors") {
  CHECK_THROWS_AS(parse_enum_spec("subgroup x\n"), FileParseError);
  CHECK_THROWS_AS(parse_enum_spec("family simplified-bordered g 4\nrelation Z: zz = 1\n"),
                  FileParseError);
  CHECK_THROWS_AS(parse_enum_spec("family nope g 4\n"), FileParseError);
}
