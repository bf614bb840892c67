// Regenerates the fixtures/ tree: witness files and the g=3 script found by
// bounded search, enumeration specs, and finite quotient assignments obtained
// by coset enumeration. Usage: make_fixtures <fixtures-dir>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "mcgpres/catalog.hpp"
#include "mcgpres/certificates.hpp"
#include "mcgpres/coset.hpp"
#include "mcgpres/quotient.hpp"
#include "mcgpres/tietze.hpp"

using namespace mcgpres;
namespace fs = std::filesystem;

namespace {

const SearchLimits kLimits{8, 12, 2000000};

fs::path root;

void write(const fs::path& rel, const std::string& text) {
  fs::path p = root / rel;
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
  std::cout << "wrote " << rel.string() << "\n";
}

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(parse_free_word(s));
  return out;
}

class Pool {
 public:
  explicit Pool(int g) {
    for (auto& p : {build_parszep_bordered(g), build_simplified_bordered(g)})
      rels_.insert(rels_.end(), p.relations.begin(), p.relations.end());
    auto x = auxiliary_relations(AuxiliaryKind::X, g);
    rels_.insert(rels_.end(), x.begin(), x.end());
  }
  LabeledRelation operator()(const std::string& label) const {
    const LabeledRelation* r = find_relation(rels_, label);
    if (!r) throw std::runtime_error("no relation " + label);
    return *r;
  }
  std::vector<LabeledRelation> operator()(std::initializer_list<const char*> labels) const {
    std::vector<LabeledRelation> out;
    for (const char* l : labels) out.push_back((*this)(l));
    return out;
  }

 private:
  std::vector<LabeledRelation> rels_;
};

ConsequenceWitness search(const Word& target, const std::vector<LabeledRelation>& rels,
                          const std::string& what) {
  auto r = bounded_consequence_search(target, rels, kLimits);
  if (r.status != SearchResult::Status::Found)
    throw std::runtime_error("search failed for " + what);
  return r.witness;
}

WitnessFile c4_prime() {
  Pool P(3);
  WitnessFile f;
  f.relations = P({"C4", "X1"});
  LabeledRelation target = *build_simplified_bordered(3).find("C4'");
  f.records.push_back({target, search(target.relator(), f.relations, "C4'")});
  return f;
}

WitnessFile c1_3_g4() {
  Pool P(4);
  WitnessFile f;
  f.relations = P({"A1.1.3", "A2.1", "A2.2", "C1'.3", "X1", "X2", "X3.1", "X3.2", "X4.1", "X4.2"});
  // Lemma: a1 M^2 = M^2 a3, from (X2) and the braid relations.
  LabeledRelation lemma("N", parse_free_word("a1 M M"), parse_free_word("M M a3"));
  ConsequenceWitness n = derive_chain(
      words({"a1 M M", "a1 a1 a2 a3 M", "a1 a1 a2 a3 a1 a2 a3", "a1 a2 a3 a1 a2 a3 a3",
             "M a1 a2 a3 a3", "M M a3"}),
      f.relations, kLimits);
  auto with_lemma = f.relations;
  with_lemma.push_back(lemma);
  ConsequenceWitness main = derive_chain(
      words({"a1 u3", "a1 M u2^-1 M^-1", "a1 M M u1 M^-1 M^-1", "M M a3 u1 M^-1 M^-1",
             "M M a3 a1 y M^-1 M^-1", "M M a1 a3 y M^-1 M^-1", "M M a1 y a3 M^-1 M^-1",
             "M M u1 a3 M^-1 M^-1", "M M u1 M^-1 M^-1 a1", "M u2^-1 M^-1 a1", "u3 a1"}),
      with_lemma, kLimits);
  f.records.push_back({P("C1.3"), inline_lemma(main, "N", n)});
  return f;
}

WitnessFile c2_prime_g4() {
  Pool P(4);
  WitnessFile f;
  f.relations = P({"A1.1.3", "A2.1", "A2.2", "C1'.3", "C4'", "X1", "X2", "X3.1", "X3.2",
                   "X4.1", "X4.2", "C2.1"});
  // Certify (C2.1) from (C2') along the substitution u2 = M u1^-1 M^-1, then
  // solve for (C2').
  auto with_c2 = f.relations;
  with_c2.push_back(P("C2'"));
  ConsequenceWitness w = derive_chain(
      words({"a1 u2 u1", "a1 M u1^-1 M^-1 u1", "a1 M y^-1 a1^-1 M^-1 a1 y",
             "a1 a1 a2 a3 y^-1 a1^-1 a3^-1 a2^-1 y", "a1 a1 a2 y^-1 a1^-1 a2^-1 y",
             "a1 a1 a2 a1 y^-1 a2^-1 y", "a1 a2 a1 a2 y^-1 a2^-1 y", "a1 a2 a1 y^-1 a2^-1 y a2",
             "a1 a2 y^-1 a1^-1 a2^-1 y a2", "a1 a2 a3 y^-1 a1^-1 a3^-1 a2^-1 y a2",
             "M y^-1 a1^-1 M^-1 a1 y a2", "M u1^-1 M^-1 u1 a2", "u2 u1 a2"}),
      with_c2, kLimits);
  f.records.push_back({P("C2'"), solve_witness_for(w, "C2.1", "C2'")});
  return f;
}

std::vector<LabeledRelation> without(const Presentation& p, const std::string& label) {
  std::vector<LabeledRelation> out;
  for (const auto& r : p.relations)
    if (r.label() != label) out.push_back(r);
  return out;
}

ScriptFile g3_script() {
  ScriptFile s;
  s.start = build_parszep_bordered(3);
  const Presentation target = build_simplified_bordered(3);
  Presentation p = s.start;
  auto push = [&](TietzeMove m) {
    p = apply_move(p, m);
    s.moves.push_back(std::move(m));
  };
  auto remove_by_search = [&](const std::string& label) {
    push(RemoveRelation{label, search(p.find(label)->relator(), without(p, label), label)});
  };
  const GeneratorSymbol M = declare_symbol("M");
  push(define_generator(GeneratorSymbol::y(), parse_free_word("a1^-1 u1"), "X1"));
  push(define_generator(M, parse_free_word("a1 a2"), "X2"));
  LabeledRelation x3("X3.1", parse_free_word("M u1"), parse_free_word("u2^-1 M"));
  push(AddRelation{x3, search(x3.relator(), p.relations, "X3.1")});
  LabeledRelation c4p = *target.find("C4'");
  push(AddRelation{c4p, search(c4p.relator(), p.relations, "C4'")});
  remove_by_search("C5");
  remove_by_search("C4");
  push(RemoveGenerator{GeneratorSymbol::u(2), "X3.1"});
  push(RemoveGenerator{GeneratorSymbol::u(1), "X1"});
  push(RemoveGenerator{M, "X2"});

  LabeledRelation c2p = *target.find("C2'");
  ConsequenceWitness wc2 = search(c2p.relator(), p.relations, "C2'");
  push(AddRelation{c2p, wc2});
  push(RemoveRelation{"C3.1", solve_witness_for(wc2, "C2'", "C3.1")});

  LabeledRelation b2p = *target.find("B2'");
  ConsequenceWitness wb2 = derive_chain(
      words({"y a2 a1 y^-1 a2^-1 y a1 a2 y", "a1 y a1 a2 a1 y^-1 a2^-1 y a1 a2 y",
             "a1 y a1 a2 y^-1 a1^-1 a2^-1 y a1 a2 y",
             "a1 a2 y^-1 a1^-1 a2^-1 y a1 a2 y^-1 a1^-1 y", "a1 a2 a1 y^-1 a2^-1 y a1 a2 a1"}),
      p.relations, kLimits);
  push(AddRelation{b2p, wb2});
  push(RemoveRelation{"B2.1", solve_witness_for(wb2, "B2'", "B2.1")});
  remove_by_search("C2.1");

  s.expect_generators = {GeneratorSymbol::a(1), GeneratorSymbol::a(2), GeneratorSymbol::y()};
  s.equivalent = target;
  for (const auto& r : p.relations)
    s.certificates.push_back({CrossCertificate::Side::Final, r.label(),
                              search(r.relator(), target.relations, r.label())});
  for (const auto& r : target.relations)
    s.certificates.push_back({CrossCertificate::Side::Target, r.label(),
                              search(r.relator(), p.relations, r.label())});
  return s;
}

std::string header(const std::string& what) {
  return "# " + what + "\n# generated by make_fixtures\n";
}

void witnesses() {
  WitnessFile c4 = c4_prime();
  write("witnesses/c4prime-g3.wit", header("(C4') from (C4) and (X1)") + emit_witness_file(c4));
  WitnessFile bad = c4;
  bad.records[0].witness.factors.back().conjugator =
      concat(bad.records[0].witness.factors.back().conjugator, parse_free_word("a1"));
  write("witnesses/c4prime-g3-corrupted.wit",
        header("deliberately corrupted: last conjugator altered") + emit_witness_file(bad));
  write("witnesses/c1-3-g4.wit",
        header("(C1) i=3 from (C1'), (X1)-(X4) and braid relations") +
            emit_witness_file(c1_3_g4()));
  write("witnesses/c2prime-g4.wit",
        header("(C2') from (C2) i=1, (X1)-(X4), (C1'), (C4') and braid relations") +
            emit_witness_file(c2_prime_g4()));
}

void script() {
  ScriptFile s = g3_script();
  write("scripts/g3-elimination.tz",
        header("parszep-bordered g=3 to the simplified presentation on a1, a2, y") +
            emit_script_file(s, "family parszep-bordered g 3",
                             "family simplified-bordered g 3"));
  ScriptFile bad = s;
  for (auto& m : bad.moves)
    if (auto* r = std::get_if<RemoveRelation>(&m); r && r->label == "C4") {
      r->witness.factors.pop_back();
      break;
    }
  write("scripts/g3-elimination-bad.tz",
        header("deliberately broken: a removal witness lost its last factor") +
            emit_script_file(bad, "family parszep-bordered g 3",
                             "family simplified-bordered g 3"));
}

void enumerations() {
  write("presentations/s3.pres",
        "family custom g 0 s 0\ngenerators: x y\nX2: x x = 1\nY2: y y = 1\nXY3: x y x y x y = 1\n");
  write("presentations/free2.pres", "family custom g 0 s 0\ngenerators: x y\n");
  write("presentations/malformed.pres",
        "family custom g 0 s 0\ngenerators: x y\nX2: x x = 1\nbroken line without equals\n");
  write("enum/s3-index3.enum",
        header("symmetric group of degree 3, subgroup <x>") +
            "presentation ../presentations/s3.pres\nsubgroup x\nexpect-index 3\n");
  write("enum/s3-index6.enum", header("symmetric group of degree 3, trivial subgroup") +
                                   "presentation ../presentations/s3.pres\nexpect-index 6\n");
  std::string killed = header("simplified-bordered g=4 with every generator killed") +
                       "family simplified-bordered g 4\n";
  for (const auto& g : build_simplified_bordered(4).generators)
    killed += "relation K." + g.name() + ": " + g.name() + " = 1\n";
  write("enum/g4-killed.enum", killed + "expect-index 1\n");
}

// Finite quotients of the simplified presentations by a^k, y^m, b^k, read off
// as the permutation action on cosets.
struct Quotient {
  int g;
  bool closed;
  int a_order, y_order, b_order;  // 0: not imposed
  bool subgroup_ab;               // cosets of <a_i, b> instead of the trivial subgroup
};

void quotients() {
  const Quotient list[] = {
      {3, false, 2, 2, 0, false}, {3, false, 3, 2, 0, false}, {3, false, 2, 4, 0, false},
      {4, false, 2, 2, 2, true},  {4, false, 3, 2, 3, true},  {5, false, 2, 2, 2, true},
      {4, true, 2, 2, 0, true},   {4, true, 3, 2, 0, true},   {5, true, 2, 2, 0, true},
      {5, true, 3, 2, 0, true},
  };
  for (const auto& q : list) {
    Presentation p = q.closed ? build_simplified_closed(q.g, ClosedVariant::Thm)
                              : build_simplified_bordered(q.g);
    std::string tag = "quotient";
    auto kill = [&](const char* name, int order, GeneratorSymbol s) {
      if (order == 0 || !p.has_generator(s)) return;
      p.relations.emplace_back(std::string("K.") + name, power(Word::generator(s), order));
      tag += "-" + std::string(name) + std::to_string(order);
    };
    kill("a", q.a_order, GeneratorSymbol::a(1));
    kill("y", q.y_order, GeneratorSymbol::y());
    kill("b", q.b_order, GeneratorSymbol::b());
    std::vector<Word> sub;
    if (q.subgroup_ab) {
      for (const auto& g : p.generators)
        if (g.family() == Family::A || g.family() == Family::B) sub.push_back(Word::generator(g));
      tag += "-on-ab";
    }
    auto t0 = std::chrono::steady_clock::now();
    CosetTable t = todd_coxeter(p, sub, 200000);
    if (!t.complete() || !verify_table(t, p, sub))
      throw std::runtime_error("enumeration failed for " + tag);
    FiniteAssignment rep = permutation_rep(t);
    if (!check_homomorphism(p, rep).empty()) throw std::runtime_error("not a homomorphism");
    FiniteAssignment base = FiniteAssignment::permutations(static_cast<int>(t.index()));
    for (const auto& g : p.generators)
      if (g.family() == Family::A || g.family() == Family::Y || g.family() == Family::B)
        base.assign(g, rep.image(g));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << tag << " g=" << q.g << (q.closed ? " closed" : " bordered") << " degree "
              << t.index() << " (" << secs << " s)\n";
    write("assignments/g" + std::to_string(q.g) + (q.closed ? "-closed-" : "-bordered-") + tag +
              ".txt",
          emit_assignment(base));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <fixtures-dir>\n";
    return 2;
  }
  root = argv[1];
  try {
    enumerations();
    witnesses();
    script();
    quotients();
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
