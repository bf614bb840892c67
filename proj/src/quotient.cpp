#include "mcgpres/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mcgpres {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int parse_int(std::string_view t) {
  std::size_t used = 0;
  std::string s(t);
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int x, int p) {
  int result = 1, base = mod(x, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<int>(1LL * result * base % p);
    base = static_cast<int>(1LL * base * base % p);
    e >>= 1;
  }
  return result;
}

// Smith normal form working state.
class SmithReducer {
 public:
  SmithReducer(IntegerMatrix m, Pivoting pivoting)
      : a_(std::move(m)), pivoting_(pivoting) {}

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      while (!clear_cross(t)) {
        place_cross_pivot(t);
      }
      diag.push_back(abs(a_.at(t, t)));
    }
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        mpz_class g = gcd(diag[i], diag[j]);
        if (g == diag[i]) continue;
        mpz_class l = lcm(diag[i], diag[j]);
        diag[i] = g;
        diag[j] = l;
      }
    SmithForm out;
    out.free_rank = a_.cols() - diag.size();
    out.invariant_factors = std::move(diag);
    return out;
  }

 private:
  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_.at(r1, c), a_.at(r2, c));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_.at(r, c1), a_.at(r, c2));
  }

  // Smallest nonzero entry of the trailing submatrix, scanned in the
  // strategy's order; the first minimum wins.
  bool place_pivot(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    mpz_class best;
    auto consider = [&](std::size_t r, std::size_t c) {
      const mpz_class& v = a_.at(r, c);
      if (v == 0) return;
      if (!found || abs(v) < best) {
        best = abs(v);
        br = r;
        bc = c;
        found = true;
      }
    };
    if (pivoting_ == Pivoting::RowFirst) {
      for (std::size_t r = t; r < a_.rows(); ++r)
        for (std::size_t c = t; c < a_.cols(); ++c) consider(r, c);
    } else {
      for (std::size_t c = t; c < a_.cols(); ++c)
        for (std::size_t r = t; r < a_.rows(); ++r) consider(r, c);
    }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Moves the smallest nonzero entry of row t or column t onto the diagonal.
  void place_cross_pivot(std::size_t t) {
    std::size_t br = t, bc = t;
    mpz_class best = abs(a_.at(t, t));
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      if (a_.at(r, t) != 0 && abs(a_.at(r, t)) < best) {
        best = abs(a_.at(r, t));
        br = r;
        bc = t;
      }
    for (std::size_t c = t + 1; c < a_.cols(); ++c)
      if (a_.at(t, c) != 0 && abs(a_.at(t, c)) < best) {
        best = abs(a_.at(t, c));
        br = t;
        bc = c;
      }
    swap_rows(t, br);
    swap_cols(t, bc);
  }

  bool clear_column(std::size_t t) {
    bool clean = true;
    const mpz_class p = a_.at(t, t);
    for (std::size_t r = t + 1; r < a_.rows(); ++r) {
      if (a_.at(r, t) == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), a_.at(r, t).get_mpz_t(), p.get_mpz_t());
      if (q != 0)
        for (std::size_t c = t; c < a_.cols(); ++c) a_.at(r, c) -= q * a_.at(t, c);
      if (a_.at(r, t) != 0) clean = false;
    }
    return clean;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    const mpz_class p = a_.at(t, t);
    for (std::size_t c = t + 1; c < a_.cols(); ++c) {
      if (a_.at(t, c) == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), a_.at(t, c).get_mpz_t(), p.get_mpz_t());
      if (q != 0)
        for (std::size_t r = t; r < a_.rows(); ++r) a_.at(r, c) -= q * a_.at(r, t);
      if (a_.at(t, c) != 0) clean = false;
    }
    return clean;
  }

  bool clear_cross(std::size_t t) {
    if (pivoting_ == Pivoting::RowFirst) {
      bool col = clear_column(t);
      bool row = clear_row(t);
      return col && row && column_is_zero(t);
    }
    bool row = clear_row(t);
    bool col = clear_column(t);
    return row && col && row_is_zero(t);
  }

  bool column_is_zero(std::size_t t) const {
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      if (a_.at(r, t) != 0) return false;
    return true;
  }
  bool row_is_zero(std::size_t t) const {
    for (std::size_t c = t + 1; c < a_.cols(); ++c)
      if (a_.at(t, c) != 0) return false;
    return true;
  }

  IntegerMatrix a_;
  Pivoting pivoting_;
};

Word a_run(int from, int to) {
  std::vector<Letter> out;
  int step = from <= to ? 1 : -1;
  for (int i = from; i != to + step; i += step)
    out.emplace_back(GeneratorSymbol::a(i), 1);
  return Word(out);
}

// Completes `out` with b_0..b_k, y, rho and u_i computed from images
// already present in `out`.
void extend_common(const Presentation& p, FiniteAssignment& out) {
  auto need = [&](GeneratorSymbol s) {
    if (!out.has(s)) throw MissingGenerator(s);
  };
  std::map<int, FiniteAssignment::Element> bext;
  auto bext_image = [&](int i) -> const FiniteAssignment::Element& {
    if (auto it = bext.find(i); it != bext.end()) return it->second;
    throw MissingGenerator(GeneratorSymbol::bext(i));
  };
  int top = -1;
  for (const auto& s : p.generators)
    if (s.family() == Family::BExt) top = std::max(top, static_cast<int>(s.index()));
  if (top >= 0) {
    need(GeneratorSymbol::a(1));
    bext[0] = out.image(GeneratorSymbol::a(1));
    if (top >= 1) {
      need(GeneratorSymbol::b());
      bext[1] = out.image(GeneratorSymbol::b());
    }
    for (int i = 1; i + 1 <= top; ++i) {
      auto chain = out.multiply(bext_image(i - 1), out.evaluate(a_run(2 * i, 2 * i + 3)));
      auto with_b = out.multiply(chain, bext_image(i));
      auto lhs = out.identity();
      for (int k = 0; k < 5; ++k) lhs = out.multiply(lhs, with_b);
      auto chain_inv = out.inverse(chain);
      for (int k = 0; k < 6; ++k) lhs = out.multiply(lhs, chain_inv);
      bext[i + 1] = lhs;
    }
  }
  for (const auto& s : p.generators) {
    switch (s.family()) {
      case Family::BExt:
        out.assign(s, bext_image(static_cast<int>(s.index())));
        break;
      case Family::Y:
        if (!out.has(s)) {
          need(GeneratorSymbol::u(1));
          out.assign(s, out.evaluate(parse_word("a1^-1 u1")));
        }
        break;
      case Family::Rho:
        if (!out.has(s)) {
          auto e = out.evaluate(a_run(1, p.g - 1));
          for (int i = p.g - 1; i >= 1; --i) {
            need(GeneratorSymbol::u(i));
            e = out.multiply(e, out.image(GeneratorSymbol::u(i)));
          }
          out.assign(s, e);
        }
        break;
      default:
        need(s);
        break;
    }
  }
}

FiniteAssignment empty_like(const FiniteAssignment& a) {
  return a.kind() == TargetKind::Permutations
             ? FiniteAssignment::permutations(a.degree())
             : FiniteAssignment::matrices(a.degree(), a.modulus());
}

FiniteAssignment restrict_to(const Presentation& p, const FiniteAssignment& a) {
  FiniteAssignment out = empty_like(a);
  for (const auto& [g, img] : a.images())
    if (p.has_generator(g)) out.assign(g, img);
  return out;
}

}  // namespace

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntegerMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<mpz_class>> rows;
  for (auto line : split_lines(text)) {
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    std::vector<mpz_class> row;
    for (auto t : toks) {
      mpz_class v;
      if (v.set_str(std::string(t), 10) != 0)
        throw std::invalid_argument("bad matrix entry '" + std::string(t) + "'");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("ragged matrix row " + std::to_string(rows.size() + 1));
    rows.push_back(std::move(row));
  }
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

std::string format_matrix(const IntegerMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << "\n";
  }
  return os.str();
}

int exponent_sum(const Word& w, GeneratorSymbol g) {
  int sum = 0;
  for (Letter l : w)
    if (l.symbol() == g) sum += l.sign();
  return sum;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relations.size(), p.generators.size());
  std::map<GeneratorSymbol, std::size_t> column;
  for (std::size_t c = 0; c < p.generators.size(); ++c) column[p.generators[c]] = c;
  for (std::size_t r = 0; r < p.relations.size(); ++r)
    for (Letter l : p.relations[r].relator()) {
      auto it = column.find(l.symbol());
      if (it == column.end())
        throw std::invalid_argument("relation " + p.relations[r].label() +
                                    " uses undeclared generator " + l.symbol().name());
      m.at(r, it->second) += l.sign();
    }
  return m;
}

SmithForm smith_normal_form(const IntegerMatrix& m, Pivoting pivoting) {
  return SmithReducer(m, pivoting).run();
}

Abelianization abelianization(const Presentation& p, Pivoting pivoting) {
  SmithForm s = smith_normal_form(relation_matrix(p), pivoting);
  Abelianization a;
  a.free_rank = s.free_rank;
  for (const auto& d : s.invariant_factors)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

std::string format_abelianization(const Abelianization& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (const auto& d : a.torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

FiniteAssignment FiniteAssignment::permutations(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  FiniteAssignment a;
  a.kind_ = TargetKind::Permutations;
  a.n_ = n;
  return a;
}

FiniteAssignment FiniteAssignment::matrices(int n, int p) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  FiniteAssignment a;
  a.kind_ = TargetKind::MatricesModP;
  a.n_ = n;
  a.p_ = p;
  return a;
}

void FiniteAssignment::assign(GeneratorSymbol g, Element image) {
  if (kind_ == TargetKind::Permutations) {
    if (image.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument(g.name() + ": expected " + std::to_string(n_) +
                                  " points");
    std::vector<bool> hit(n_, false);
    for (int v : image) {
      if (v < 0 || v >= n_ || hit[v])
        throw std::invalid_argument(g.name() + ": image is not a permutation");
      hit[v] = true;
    }
  } else {
    if (image.size() != static_cast<std::size_t>(n_) * n_)
      throw std::invalid_argument(g.name() + ": expected " + std::to_string(n_ * n_) +
                                  " entries");
    for (int& v : image) v = mod(v, p_);
    inverse(image);
  }
  images_[g] = std::move(image);
}

const FiniteAssignment::Element& FiniteAssignment::image(GeneratorSymbol g) const {
  auto it = images_.find(g);
  if (it == images_.end()) throw MissingGenerator(g);
  return it->second;
}

FiniteAssignment::Element FiniteAssignment::identity() const {
  if (kind_ == TargetKind::Permutations) {
    Element e(n_);
    std::iota(e.begin(), e.end(), 0);
    return e;
  }
  Element e(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) e[i * n_ + i] = 1;
  return e;
}

FiniteAssignment::Element FiniteAssignment::multiply(const Element& x,
                                                     const Element& y) const {
  if (kind_ == TargetKind::Permutations) {
    Element out(n_);
    for (int i = 0; i < n_; ++i) out[i] = y[x[i]];
    return out;
  }
  Element out(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long long xik = x[i * n_ + k];
      if (xik == 0) continue;
      for (int j = 0; j < n_; ++j)
        out[i * n_ + j] = mod(out[i * n_ + j] + xik * y[k * n_ + j], p_);
    }
  return out;
}

FiniteAssignment::Element FiniteAssignment::inverse(const Element& x) const {
  if (kind_ == TargetKind::Permutations) {
    Element out(n_);
    for (int i = 0; i < n_; ++i) out[x[i]] = i;
    return out;
  }
  const int n = n_;
  std::vector<long long> a(x.begin(), x.end());
  Element inv = identity();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col] % p_ != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("matrix is singular mod " + std::to_string(p_));
    for (int c = 0; c < n; ++c) {
      std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(inv[col * n + c], inv[pivot * n + c]);
    }
    const int s = inverse_mod(static_cast<int>(a[col * n + col] % p_), p_);
    for (int c = 0; c < n; ++c) {
      a[col * n + c] = mod(a[col * n + c] * s, p_);
      inv[col * n + c] = mod(1LL * inv[col * n + c] * s, p_);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const long long f = a[r * n + col] % p_;
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) {
        a[r * n + c] = mod(a[r * n + c] - f * a[col * n + c], p_);
        inv[r * n + c] = mod(inv[r * n + c] - f * inv[col * n + c], p_);
      }
    }
  }
  return inv;
}

FiniteAssignment::Element FiniteAssignment::evaluate(const Word& w) const {
  Element e = identity();
  std::map<GeneratorSymbol, Element> inverses;
  for (Letter l : w) {
    const Element& img = image(l.symbol());
    if (l.sign() > 0) {
      e = multiply(e, img);
    } else {
      auto [it, fresh] = inverses.try_emplace(l.symbol());
      if (fresh) it->second = inverse(img);
      e = multiply(e, it->second);
    }
  }
  return e;
}

std::vector<std::string> check_homomorphism(const Presentation& p,
                                            const FiniteAssignment& a) {
  for (const auto& s : p.generators)
    if (!a.has(s)) throw MissingGenerator(s);
  std::vector<std::string> failing;
  const auto id = a.identity();
  for (const auto& r : p.relations)
    if (a.evaluate(r.relator()) != id) failing.push_back(r.label());
  return failing;
}

FiniteAssignment parse_assignment(std::string_view text) {
  std::optional<FiniteAssignment> out;
  std::size_t line_no = 0;
  for (auto raw : split_lines(text)) {
    ++line_no;
    auto toks = split_ws(raw);
    if (toks.empty() || toks.front().front() == '#') continue;
    try {
      if (!out) {
        if (toks.size() == 3 && toks[0] == "target" && toks[1] == "permutations")
          out = FiniteAssignment::permutations(parse_int(toks[2]));
        else if (toks.size() == 5 && toks[0] == "target" && toks[1] == "matrices" &&
                 toks[3] == "mod")
          out = FiniteAssignment::matrices(parse_int(toks[2]), parse_int(toks[4]));
        else
          throw std::invalid_argument(
              "expected 'target permutations <n>' or 'target matrices <n> mod <p>'");
        continue;
      }
      std::string_view head = toks.front();
      if (head.size() < 2 || head.back() != ':')
        throw std::invalid_argument("expected '<generator>: <entries>'");
      GeneratorSymbol g = declare_symbol(head.substr(0, head.size() - 1));
      FiniteAssignment::Element e;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        int v = parse_int(toks[i]);
        e.push_back(out->kind() == TargetKind::Permutations ? v - 1 : v);
      }
      out->assign(g, std::move(e));
    } catch (const std::exception& ex) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (!out) throw std::invalid_argument("missing target line");
  return *out;
}

std::string emit_assignment(const FiniteAssignment& a) {
  std::ostringstream os;
  if (a.kind() == TargetKind::Permutations)
    os << "target permutations " << a.degree() << "\n";
  else
    os << "target matrices " << a.degree() << " mod " << a.modulus() << "\n";
  for (const auto& [g, img] : a.images()) {
    os << g.name() << ":";
    for (int v : img) os << ' ' << (a.kind() == TargetKind::Permutations ? v + 1 : v);
    os << "\n";
  }
  return os.str();
}

FiniteAssignment extend_from_crosscap_generators(const Presentation& p,
                                                 const FiniteAssignment& base) {
  FiniteAssignment out = empty_like(base);
  for (const auto& [g, img] : base.images())
    if (g.family() == Family::A || g.family() == Family::U || g.family() == Family::B)
      out.assign(g, img);
  extend_common(p, out);
  return restrict_to(p, out);
}

FiniteAssignment extend_from_slide_generators(const Presentation& p,
                                              const FiniteAssignment& base) {
  FiniteAssignment out = empty_like(base);
  for (const auto& [g, img] : base.images())
    if (g.family() == Family::A || g.family() == Family::Y || g.family() == Family::B)
      out.assign(g, img);
  const GeneratorSymbol y = GeneratorSymbol::y();
  if (!out.has(y)) throw MissingGenerator(y);
  const auto m = out.evaluate(a_run(1, p.g - 1));
  const auto m_inv = out.inverse(m);
  auto u = out.multiply(out.image(GeneratorSymbol::a(1)), out.image(y));
  for (int i = 1; i <= p.g - 1; ++i) {
    out.assign(GeneratorSymbol::u(i), u);
    u = out.multiply(out.multiply(m, out.inverse(u)), m_inv);
  }
  extend_common(p, out);
  return restrict_to(p, out);
}

FiniteAssignment homology_mod2_action(int g) {
  if (g < 3) throw std::invalid_argument("genus must be at least 3");
  FiniteAssignment a = FiniteAssignment::matrices(g, 2);
  auto swap_matrix = [g](int i) {
    FiniteAssignment::Element e(static_cast<std::size_t>(g) * g, 0);
    for (int k = 0; k < g; ++k) e[k * g + k] = 1;
    const int x = i - 1, y = i;
    e[x * g + x] = e[y * g + y] = 0;
    e[x * g + y] = e[y * g + x] = 1;
    return e;
  };
  for (int i = 1; i <= g - 1; ++i) {
    a.assign(GeneratorSymbol::a(i), swap_matrix(i));
    a.assign(GeneratorSymbol::u(i), swap_matrix(i));
  }
  if (g >= 4) {
    // Row vectors times matrix: x -> x + (x . c) c with c = e1+e2+e3+e4.
    FiniteAssignment::Element e(static_cast<std::size_t>(g) * g, 0);
    for (int k = 0; k < g; ++k) e[k * g + k] = 1;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) e[r * g + c] = (e[r * g + c] + 1) % 2;
    a.assign(GeneratorSymbol::b(), e);
  }
  return a;
}

std::vector<FiniteAssignment> sign_characters(const Presentation& p) {
  const IntegerMatrix m = relation_matrix(p);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_odd_p(m.at(r, c).get_mpz_t()) ? 1 : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && a[r][c])
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
    pivot_cols.push_back(c);
    ++rank;
  }
  std::vector<FiniteAssignment> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = a[r][free];
    FiniteAssignment chi = FiniteAssignment::permutations(2);
    for (std::size_t c = 0; c < cols; ++c)
      chi.assign(p.generators[c], v[c] ? FiniteAssignment::Element{1, 0}
                                       : FiniteAssignment::Element{0, 1});
    out.push_back(std::move(chi));
  }
  return out;
}

}  // namespace mcgpres
