#include <random>

#include "doctest.h"
#include "mcgpres/catalog.hpp"
#include "mcgpres/quotient.hpp"

using namespace mcgpres;

namespace {

// Exact determinant by fraction-free elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t start,
             std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
std::vector<mpz_class> determinantal_factors(const IntegerMatrix& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(r[i], c[j]);
        g = gcd(g, bareiss_det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("exponent sums") {
  auto s = build_simplified_bordered(3);
  CHECK(exponent_sum(s.find("C4'")->relator(), GeneratorSymbol::a(1)) == 2);
  CHECK(exponent_sum(Word{}, GeneratorSymbol::y()) == 0);
  auto p7 = build_parszep_bordered(7);
  CHECK(exponent_sum(p7.find("A6")->relator(), GeneratorSymbol::b()) == 3);
}

TEST_CASE("relation matrix of simplified g=3") {
  auto m = relation_matrix(build_simplified_bordered(3));
  CHECK(format_matrix(m) == "1 -1 0\n-2 0 2\n0 0 0\n2 0 0\n");
  CHECK(relation_matrix(Presentation{}).rows() == 0);
}

TEST_CASE("smith normal form examples") {
  auto check = [](const char* text, std::vector<long> factors, std::size_t free) {
    for (auto piv : {Pivoting::RowFirst, Pivoting::ColumnFirst}) {
      auto s = smith_normal_form(parse_matrix(text), piv);
      std::vector<mpz_class> want(factors.begin(), factors.end());
      CHECK(s.invariant_factors == want);
      CHECK(s.free_rank == free);
    }
  };
  check("2 0\n0 3\n", {1, 6}, 0);
  check("0 0\n0 0\n", {}, 2);
  check("1 0 0\n0 1 0\n0 0 1\n", {1, 1, 1}, 0);
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = static_cast<long>(rng() % 13) - 6;
    auto oracle = determinantal_factors(m);
    for (auto piv : {Pivoting::RowFirst, Pivoting::ColumnFirst}) {
      auto s = smith_normal_form(m, piv);
      CHECK(s.invariant_factors == oracle);
      CHECK(s.free_rank == c - oracle.size());
    }
  }
}

TEST_CASE("abelianization formatting") {
  auto a = abelianization(build_simplified_bordered(3));
  CHECK(format_abelianization(a) == "Z/2 + Z/2");
  Presentation free2;
  free2.generators = {GeneratorSymbol::a(1), GeneratorSymbol::a(2)};
  CHECK(format_abelianization(abelianization(free2)) == "Z^2");
}

TEST_CASE("parity obstruction at g=7") {
  auto p = build_parszep_bordered(7);
  auto a = FiniteAssignment::permutations(2);
  for (auto s : p.generators) a.assign(s, {1, 0});
  auto failing = check_homomorphism(p, a);
  std::vector<std::string> odd;
  for (const auto& r : p.relations) {
    int total = 0;
    for (auto s : p.generators) total += exponent_sum(r.relator(), s);
    if (total % 2 != 0) odd.push_back(r.label());
  }
  CHECK(failing == odd);
  CHECK(failing == std::vector<std::string>{"A6"});
}

TEST_CASE("mod-2 homology action is a homomorphism of every family") {
  for (int g = 3; g <= 9; ++g) {
    auto base = homology_mod2_action(g);
    CHECK(check_homomorphism(build_parszep_bordered(g),
                             extend_from_crosscap_generators(build_parszep_bordered(g), base))
              .empty());
    auto simp = build_simplified_bordered(g);
    CHECK(check_homomorphism(simp, extend_from_crosscap_generators(simp, base)).empty());
    if (g >= 4) {
      auto closed = build_parszep_closed(g);
      CHECK(check_homomorphism(closed, extend_from_crosscap_generators(closed, base)).empty());
    }
  }
}

TEST_CASE("sign characters are homomorphisms") {
  for (int g : {3, 4, 5, 7}) {
    auto p = build_parszep_bordered(g);
    auto chars = sign_characters(p);
    CHECK(!chars.empty());
    for (const auto& chi : chars) CHECK(check_homomorphism(p, chi).empty());
  }
}

TEST_CASE("assignment file round trip") {
  auto a = homology_mod2_action(4);
  CHECK(parse_assignment(emit_assignment(a)) == a);
  CHECK_THROWS(parse_assignment("target permutations 3\na1: 1 1 2\n"));
  CHECK_THROWS(parse_assignment("target matrices 2 mod 4\n"));
}
