// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcgpres/catalog.hpp"
#include "mcgpres/certificates.hpp"
#include "mcgpres/coset.hpp"
#include "mcgpres/probes.hpp"
#include "mcgpres/quotient.hpp"
#include "mcgpres/tietze.hpp"
#include "word_properties.hpp"

using namespace mcgpres;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fixture(const std::string& rel) { return default_fixtures_dir() + "/" + rel; }

// Exponent sum computed letter by letter, independent of the library matrix code.
std::map<GeneratorSymbol, long> exponent_vector(const Word& w) {
  std::map<GeneratorSymbol, long> v;
  for (Letter l : w) v[l.symbol()] += l.sign();
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  return v;
}

std::string format_vector(const std::map<GeneratorSymbol, long>& v) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& [g, e] : v) {
    out << (first ? "" : ", ") << g.name() << ":" << e;
    first = false;
  }
  out << ")";
  return out.str();
}

// Invariant factors from gcds of k x k minors; small dense matrices only.
long long det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  long long sign = 1;
  // Bareiss fraction-free elimination.
  long long prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<long long> torsion_by_minors(const std::vector<std::vector<long long>>& a) {
  const std::size_t rows = a.size(), cols = a.front().size();
  std::vector<long long> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        g = std::gcd(g, det(sub));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<long long> torsion;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    const long long d = divisors[k] / divisors[k - 1];
    if (d > 1) torsion.push_back(d);
  }
  return torsion;
}

Outcome criterion1() {
  Outcome o;
  for (int g = 3; g <= 12; ++g) {
    std::vector<std::pair<std::string, Presentation>> ps = {
        {"parszep-bordered", build_parszep_bordered(g)},
        {"simplified-bordered", build_simplified_bordered(g)}};
    if (g >= 4) {
      ps.emplace_back("parszep-closed", build_parszep_closed(g));
      ps.emplace_back("simplified-closed-prop", build_simplified_closed(g, ClosedVariant::Prop));
      ps.emplace_back("simplified-closed-thm", build_simplified_closed(g, ClosedVariant::Thm));
    }
    if (g >= 6) ps.emplace_back("corollary-mixed", build_corollary_mixed(g));
    for (const auto& [name, p] : ps) {
      const auto v = validate(p);
      o.expect(v.empty(), name + " g=" + std::to_string(g) + ": " +
                              (v.empty() ? "" : v.front().message));
    }
  }
  auto counts = [&](const Presentation& p, std::size_t gens, std::size_t rels,
                    const std::string& what) {
    o.expect(p.generators.size() == gens && p.relations.size() == rels,
             what + ": " + std::to_string(p.generators.size()) + "/" +
                 std::to_string(p.relations.size()));
  };
  counts(build_simplified_bordered(3), 3, 4, "simplified-bordered g=3");
  counts(build_parszep_bordered(4), 7, 17, "parszep-bordered g=4");
  counts(build_parszep_bordered(6), 14, 46, "parszep-bordered g=6");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int g = 6; g <= 12; ++g) {
    const auto p = build_simplified_bordered(g);
    const Word y = parse_word("y"), b = parse_word("b"), a2 = parse_word("a2");
    // x y x^-1 y^-1 spelled out letter by letter.
    auto comm = [](const Word& x, const Word& z) {
      std::vector<Letter> raw;
      for (const Word& part : {x, z, invert(x), invert(z)})
        for (Letter l : part) raw.push_back(l);
      return Word(raw);
    };
    const std::string gs = " g=" + std::to_string(g);
    o.expect(p.find("B1'")->relator() == comm(y, derived_word("Y_mu3_a3", g)), "B1'" + gs);
    o.expect(p.find("C7'")->relator() == comm(derived_word("Y_mu5_a5", g), b), "C7'" + gs);
    o.expect(p.find("C2'")->relator() == comm(a2, parse_word("y a2 y^-1")), "C2'" + gs);
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto both = [&](const Presentation& l, const Presentation& r, const std::string& what) {
    const auto a = abelianization(l, Pivoting::RowFirst);
    const auto b = abelianization(l, Pivoting::ColumnFirst);
    const auto c = abelianization(r, Pivoting::RowFirst);
    const auto d = abelianization(r, Pivoting::ColumnFirst);
    o.expect(a == b && b == c && c == d, what + ": " + format_abelianization(a) + " vs " +
                                             format_abelianization(c));
  };
  for (int g = 3; g <= 9; ++g)
    both(build_parszep_bordered(g), build_simplified_bordered(g),
         "bordered g=" + std::to_string(g));
  for (int g = 4; g <= 9; ++g) {
    both(build_parszep_closed(g), build_simplified_closed(g, ClosedVariant::Prop),
         "closed prop g=" + std::to_string(g));
    both(build_parszep_closed(g), build_simplified_closed(g, ClosedVariant::Thm),
         "closed thm g=" + std::to_string(g));
  }
  const auto s3 = build_simplified_bordered(3);
  std::vector<std::vector<long long>> m;
  for (const auto& r : s3.relations) {
    const auto v = exponent_vector(r.relator());
    std::vector<long long> row;
    for (const auto& gen : s3.generators) row.push_back(v.contains(gen) ? v.at(gen) : 0);
    m.push_back(row);
  }
  const auto oracle = torsion_by_minors(m);
  o.expect(oracle == std::vector<long long>{2, 2}, "minor oracle for simplified-bordered g=3");
  for (auto piv : {Pivoting::RowFirst, Pivoting::ColumnFirst}) {
    const auto a = abelianization(s3, piv);
    o.expect(a.free_rank == 0 && a.torsion == std::vector<mpz_class>{2, 2},
             "simplified-bordered g=3 torsion " + format_abelianization(a));
  }
  return o;
}

bool labels_match(const std::vector<LabeledRelation>& rels,
                  const std::function<bool(const std::string&)>& allowed) {
  return std::all_of(rels.begin(), rels.end(),
                     [&](const LabeledRelation& r) { return allowed(r.label()); });
}

std::size_t max_conj(const ConsequenceWitness& w) {
  std::size_t m = 0;
  for (const auto& f : w.factors) m = std::max(m, f.conjugator.size());
  return m;
}

Outcome criterion4() {
  Outcome o;
  {
    const auto f = read_witness_file(fixture("witnesses/c4prime-g3.wit"));
    std::set<std::string> labels;
    for (const auto& r : f.relations) labels.insert(r.label());
    o.expect(labels == std::set<std::string>{"C4", "X1"}, "(a) sources are C4 and X1");
    o.expect(f.records.size() == 1 &&
                 f.records[0].target == *build_simplified_bordered(3).find("C4'"),
             "(a) target is C4'");
    for (const auto& rec : f.records)
      o.expect(check_consequence(rec.target.relator(), f.relations, rec.witness),
               "(a) witness for " + rec.target.label());
  }
  {
    const auto f = read_witness_file(fixture("witnesses/c1-3-g4.wit"));
    o.expect(labels_match(f.relations,
                          [](const std::string& l) {
                            return l.rfind("C1'", 0) == 0 || l.rfind("X1", 0) == 0 ||
                                   l.rfind("X2", 0) == 0 || l.rfind("X3", 0) == 0 ||
                                   l.rfind("X4", 0) == 0 || l.rfind("A1", 0) == 0 ||
                                   l.rfind("A2", 0) == 0;
                          }),
             "(b) sources are C1', X1-X4 and braid relations");
    o.expect(f.records.size() == 1 &&
                 f.records[0].target == *build_parszep_bordered(4).find("C1.3"),
             "(b) target is C1 with i=3");
    for (const auto& rec : f.records)
      o.expect(check_consequence(rec.target.relator(), f.relations, rec.witness),
               "(b) witness for " + rec.target.label());
  }
  {
    const auto script = read_script_file(fixture("scripts/g3-elimination.tz"));
    const auto rep = check_script(script);
    o.expect(rep.ok, "(c) script replays" +
                         (rep.findings.empty() ? std::string() : ": " + rep.findings.front()));
    const std::vector<GeneratorSymbol> want = {GeneratorSymbol::a(1), GeneratorSymbol::a(2),
                                               GeneratorSymbol::y()};
    o.expect(rep.final.generators == want, "(c) final generators a1 a2 y");
    const auto target = build_simplified_bordered(3);
    std::size_t factors = 0, conj = 0;
    auto bound = [&](const ConsequenceWitness& w) {
      factors = std::max(factors, w.factors.size());
      conj = std::max(conj, max_conj(w));
    };
    for (const auto& m : script.moves) {
      if (const auto* a = std::get_if<AddRelation>(&m)) bound(a->witness);
      if (const auto* r = std::get_if<RemoveRelation>(&m)) bound(r->witness);
    }
    auto certified = [&](CrossCertificate::Side side, const Presentation& of,
                         const Presentation& from, const std::string& what) {
      for (const auto& r : of.relations) {
        const auto it = std::find_if(script.certificates.begin(), script.certificates.end(),
                                     [&](const CrossCertificate& c) {
                                       return c.side == side && c.label == r.label();
                                     });
        if (it == script.certificates.end()) {
          o.expect(false, "(c) no certificate for " + what + " " + r.label());
          continue;
        }
        bound(it->witness);
        o.expect(check_consequence(r.relator(), from.relations, it->witness),
                 "(c) certificate for " + what + " " + r.label());
      }
    };
    certified(CrossCertificate::Side::Final, rep.final, target, "final");
    certified(CrossCertificate::Side::Target, target, rep.final, "target");
    o.expect(factors <= 8, "(c) factors " + std::to_string(factors) + " > 8");
    o.expect(conj <= 12, "(c) conjugator length " + std::to_string(conj) + " > 12");
    o.notes.push_back("max factors " + std::to_string(factors) + ", max conjugator " +
                      std::to_string(conj));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto compare = [&](int g, int i) {
    const Word rec = u_words_by_recursion(g).at(i);
    const Word closed = derived_word("u" + std::to_string(i), g);
    const auto rv = exponent_vector(rec), pv = exponent_vector(closed);
    const std::string what = "u" + std::to_string(i) + " g=" + std::to_string(g);
    o.expect(rv == pv, what + " exponents: recursion " + format_vector(rv) + ", closed form " +
                           format_vector(pv));
    const auto p = build_simplified_bordered(g);
    for (const auto& a : shipped_assignments(g, false, default_fixtures_dir())) {
      const auto img = realize(p, a.base);
      o.expect(img.evaluate(rec) == img.evaluate(closed), what + " under " + a.name);
    }
  };
  // The recursion at genus g yields u_1..u_{g-1}; u_5 needs g=6.
  for (int i = 2; i <= 4; ++i) compare(5, i);
  compare(6, 5);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto p = build_parszep_bordered(7);
  auto a = FiniteAssignment::permutations(2);
  for (const auto& g : p.generators) a.assign(g, {1, 0});
  const auto failing = check_homomorphism(p, a);
  std::vector<std::string> odd;
  for (const auto& r : p.relations) {
    long total = 0;
    for (Letter l : r.relator()) total += l.sign();
    if (total % 2 != 0) odd.push_back(r.label());
  }
  o.expect(failing == odd, "failing set differs from odd exponent-sum relations");
  o.expect(std::find(failing.begin(), failing.end(), "A6") != failing.end(), "A6 fails");
  const auto* a6 = p.find("A6");
  o.expect(a6 && a6->lhs().size() == 72 && a6->rhs().size() == 63,
           "A6 letter counts " + (a6 ? std::to_string(a6->lhs().size()) + " vs " +
                                           std::to_string(a6->rhs().size())
                                     : std::string("missing")));
  o.notes.push_back(std::to_string(failing.size()) + " of " +
                    std::to_string(p.relations.size()) + " relations fail");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> specs = {
      {"enum/s3-index3.enum", 3}, {"enum/s3-index6.enum", 6}, {"enum/g4-killed.enum", 1}};
  for (const auto& [file, index] : specs) {
    const auto spec = read_enum_spec(fixture(file));
    const auto t = todd_coxeter(spec.presentation, spec.subgroup, spec.max_cosets);
    o.expect(t.complete() && t.index() == index,
             file + ": index " + std::to_string(t.index()) + ", want " + std::to_string(index));
    o.expect(verify_table(t, spec.presentation, spec.subgroup), file + ": verify_table");
    if (t.complete())
      o.expect(check_homomorphism(spec.presentation, permutation_rep(t)).empty(),
               file + ": permutation_rep is a homomorphism");
  }
  const auto s3 = read_presentation_file(fixture("presentations/s3.pres"));
  o.expect(s3.generators.size() == 2, "S3 presentation has two generators");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::uint64_t seed = 20240101;
  for (const auto& p : props::word_properties()) {
    const auto bad = props::count_failures(p, 10000, seed++);
    o.expect(bad == 0, p.name + ": " + std::to_string(bad) + " failures");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto full = build_parszep_closed(4);
  auto reduced = full;
  std::erase_if(reduced.relations, [](const LabeledRelation& r) { return r.label() == "B4"; });
  o.expect(reduced.relations.size() + 1 == full.relations.size(), "B4 present once");
  const auto assignments = shipped_assignments(4, true, default_fixtures_dir());
  const auto cmp = compare_presentations(full, reduced, assignments);
  for (const auto& pr : cmp.probes)
    o.expect(pr.equal, pr.probe + ": " + pr.left + " vs " + pr.right);
  for (const auto& a : assignments) {
    const auto l = realize(full, a.base), r = realize(reduced, a.base);
    o.expect(l == r && check_homomorphism(reduced, r).empty() &&
                 check_homomorphism(full, l).empty(),
             "image under " + a.name);
  }
  o.notes.push_back(std::to_string(assignments.size()) + " assignments");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "catalog exactness", 1.0, criterion1},
      {2, "syntactic identities", 1.0, criterion2},
      {3, "abelianization cross-equality", 5.0, criterion3},
      {4, "witness replay", 1.0, criterion4},
      {5, "u-word consistency", 1.0, criterion5},
      {6, "parity obstruction", 1.0, criterion6},
      {7, "coset enumeration", 1.0, criterion7},
      {8, "word-core invariants", 10.0, criterion8},
      {9, "B4 redundancy probe", 5.0, criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s)
      o.failures.push_back("runtime " + std::to_string(s) + " s over " +
                           std::to_string(c.limit_s) + " s");
    const bool ok = o.failures.empty();
    if (!ok) ++failed;
    std::printf("%s %d %s (%.3f s)", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), s);
    for (const auto& n : o.notes) std::printf("; %s", n.c_str());
    std::printf("\n");
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, all.size());
  return failed == 0 ? 0 : 1;
}
