#pragma once

// Sound necessary conditions for two presentations to present the same
// group: abelianization through Smith normal form and homomorphisms into
// finite permutation or matrix groups.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcgpres/presentation.hpp"

namespace mcgpres {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerMatrix transposed() const;
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Whitespace-separated integer grid, one row per line. An empty text is the
/// 0x0 matrix; ragged rows are rejected.
IntegerMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntegerMatrix& m);

int exponent_sum(const Word& w, GeneratorSymbol g);

/// Rows follow the relations, columns the generator list.
IntegerMatrix relation_matrix(const Presentation& p);

/// Pivot search order. Both produce the same normal form; they exist so the
/// normal form can be cross-checked by two different elimination paths.
enum class Pivoting { RowFirst, ColumnFirst };

struct SmithForm {
  std::vector<mpz_class> invariant_factors;  // d_1 | d_2 | ..., one per rank
  std::size_t free_rank = 0;                 // cols - rank
  bool operator==(const SmithForm&) const = default;
};

SmithForm smith_normal_form(const IntegerMatrix& m,
                            Pivoting pivoting = Pivoting::RowFirst);

struct Abelianization {
  std::vector<mpz_class> torsion;  // invariant factors greater than 1
  std::size_t free_rank = 0;
  bool operator==(const Abelianization&) const = default;
};

Abelianization abelianization(const Presentation& p,
                              Pivoting pivoting = Pivoting::RowFirst);

/// `Z^r + Z/d1 + Z/d2 + ...`; the trivial group prints as `0`.
std::string format_abelianization(const Abelianization& a);

enum class TargetKind { Permutations, MatricesModP };

/// Permutations act on the right on {0..n-1}: the image of a word x1 x2 ...
/// sends i to (i^x1)^x2. Matrices multiply left to right.
class FiniteAssignment {
 public:
  using Element = std::vector<int>;

  static FiniteAssignment permutations(int n);
  static FiniteAssignment matrices(int n, int p);

  TargetKind kind() const { return kind_; }
  int degree() const { return n_; }
  int modulus() const { return p_; }

  /// Throws std::invalid_argument for a non-bijection or a singular matrix.
  void assign(GeneratorSymbol g, Element image);
  bool has(GeneratorSymbol g) const { return images_.contains(g); }
  const Element& image(GeneratorSymbol g) const;
  const std::map<GeneratorSymbol, Element>& images() const { return images_; }

  Element identity() const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  /// Throws MissingGenerator if a letter has no image.
  Element evaluate(const Word& w) const;

  bool operator==(const FiniteAssignment&) const = default;

 private:
  TargetKind kind_ = TargetKind::Permutations;
  int n_ = 1;
  int p_ = 0;
  std::map<GeneratorSymbol, Element> images_;
};

class MissingGenerator : public std::runtime_error {
 public:
  explicit MissingGenerator(const GeneratorSymbol& g)
      : std::runtime_error("no image assigned to generator " + g.name()) {}
};

/// Labels of every relation whose relator does not map to the identity.
std::vector<std::string> check_homomorphism(const Presentation& p,
                                            const FiniteAssignment& a);

/// Assignment file:
///   target permutations <n>            images as 1-based point lists
///   target matrices <n> mod <p>        images as n*n row-major entries
///   <generator>: <entries>
FiniteAssignment parse_assignment(std::string_view text);
std::string emit_assignment(const FiniteAssignment& a);

/// Extends images of a_i, u_i and b to every generator of `p`: b_0..b_k
/// through (A7)/(A8), y = a1^-1 u1, rho = a1..a_{g-1} u_{g-1}..u1.
/// Missing base images for generators `p` needs throw MissingGenerator.
FiniteAssignment extend_from_crosscap_generators(const Presentation& p,
                                                 const FiniteAssignment& base);

/// Extends images of a_i, y and b: u_1 = a1 y, u_{i+1} = M u_i^-1 M^-1, and
/// b_i, rho as in extend_from_crosscap_generators.
FiniteAssignment extend_from_slide_generators(const Presentation& p,
                                              const FiniteAssignment& base);

/// Action on first homology with Z/2 coefficients, basis the crosscap
/// classes: a_i and u_i swap e_i and e_{i+1}; b is the transvection along
/// e_1 + e_2 + e_3 + e_4. Defined on a_i, u_i and b.
FiniteAssignment homology_mod2_action(int g);

/// Homomorphisms onto Z/2 = Sym(2), one per basis vector of the mod-2 null
/// space of the relation matrix, as images of the generators of `p`.
std::vector<FiniteAssignment> sign_characters(const Presentation& p);

}  // namespace mcgpres
