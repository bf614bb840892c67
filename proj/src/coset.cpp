#include "mcgpres/coset.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace mcgpres {

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.generators.size()), max_cosets_(max_cosets) {
    for (std::size_t k = 0; k < p.generators.size(); ++k)
      column_[p.generators[k]] = static_cast<int>(k);
    new_coset();
  }

  std::vector<int> encode(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter l : w) {
      auto it = column_.find(l.symbol());
      if (it == column_.end())
        throw ForeignGenerator("word uses generator " + l.symbol().name() +
                               " outside the presentation");
      out.push_back(2 * it->second + (l.sign() < 0 ? 1 : 0));
    }
    return out;
  }

  bool run(const std::vector<std::vector<int>>& relators,
           const std::vector<std::vector<int>>& subgroup) {
    for (const auto& w : subgroup)
      if (!scan_and_fill(0, w)) return false;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators) {
        if (!live(c)) break;
        if (!scan_and_fill(static_cast<int>(c), r)) return false;
      }
      if (!live(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x)
        if (table_[c][x] < 0 && !define(static_cast<int>(c), static_cast<int>(x)))
          return false;
    }
    return true;
  }

  // Renumbers live cosets consecutively in order of definition.
  std::vector<std::vector<int>> compact() const {
    std::vector<int> number(table_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) number[c] = n++;
    std::vector<std::vector<int>> out;
    out.reserve(n);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<int> row(ncols_, -1);
      for (std::size_t x = 0; x < ncols_; ++x)
        if (table_[c][x] >= 0) row[x] = number[rep(table_[c][x])];
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  static int inv(int x) { return x ^ 1; }

  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int rep(int c) const {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  int new_coset() {
    int c = static_cast<int>(table_.size());
    table_.emplace_back(ncols_, -1);
    parent_.push_back(c);
    return c;
  }

  bool define(int c, int x) {
    if (table_.size() >= max_cosets_) return false;
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
    return true;
  }

  bool scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return true;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const int d = table_[e][x];
        if (d < 0) continue;
        table_[d][inv(static_cast<int>(x))] = -1;
        const int mu = rep(e), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][inv(static_cast<int>(x))] >= 0) {
          merge(mu, table_[nu][inv(static_cast<int>(x))], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv(static_cast<int>(x))] = mu;
        }
      }
    }
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::map<GeneratorSymbol, int> column_;
  std::vector<std::vector<int>> table_;
  mutable std::vector<int> parent_;
};

std::string column_name(const std::vector<GeneratorSymbol>& gens, std::size_t x) {
  return format_letter(Letter(gens[x / 2], x % 2 ? -1 : 1));
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max cosets must be at least 1");
  Enumerator e(p, max_cosets);
  std::vector<std::vector<int>> relators, gens;
  for (const auto& r : p.relations) relators.push_back(e.encode(r.relator()));
  for (const auto& w : subgroup) gens.push_back(e.encode(w));
  CosetTable t;
  t.max_cosets = max_cosets;
  t.generators = p.generators;
  t.status = e.run(relators, gens) ? CosetTable::Status::Complete
                                   : CosetTable::Status::Overflow;
  t.rows = e.compact();
  return t;
}

FiniteAssignment permutation_rep(const CosetTable& t) {
  if (!t.complete()) throw std::invalid_argument("coset table is incomplete");
  FiniteAssignment a = FiniteAssignment::permutations(static_cast<int>(t.index()));
  for (std::size_t k = 0; k < t.generators.size(); ++k) {
    FiniteAssignment::Element img(t.index());
    for (std::size_t c = 0; c < t.index(); ++c) img[c] = t.rows[c][2 * k];
    a.assign(t.generators[k], std::move(img));
  }
  return a;
}

bool verify_table(const CosetTable& t, const Presentation& p,
                  const std::vector<Word>& subgroup) {
  if (!t.complete() || t.rows.empty() || t.generators != p.generators) return false;
  const std::size_t n = t.rows.size(), ncols = 2 * t.generators.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (t.rows[c].size() != ncols) return false;
    for (std::size_t x = 0; x < ncols; ++x) {
      const int d = t.rows[c][x];
      if (d < 0 || static_cast<std::size_t>(d) >= n) return false;
      if (t.rows[d][x ^ 1] != static_cast<int>(c)) return false;
    }
  }
  std::map<GeneratorSymbol, std::size_t> column;
  for (std::size_t k = 0; k < t.generators.size(); ++k) column[t.generators[k]] = k;
  auto trace = [&](std::size_t start, const Word& w) -> bool {
    std::size_t c = start;
    for (Letter l : w) {
      auto it = column.find(l.symbol());
      if (it == column.end()) return false;
      c = static_cast<std::size_t>(t.rows[c][2 * it->second + (l.sign() < 0)]);
    }
    return c == start;
  };
  for (const auto& r : p.relations)
    for (std::size_t c = 0; c < n; ++c)
      if (!trace(c, r.relator())) return false;
  for (const auto& w : subgroup)
    if (!trace(0, w)) return false;
  return true;
}

std::string export_table(const CosetTable& t) {
  std::ostringstream os;
  os << "status " << (t.complete() ? "complete" : "overflow") << " cosets "
     << t.rows.size() << " max " << t.max_cosets << "\n";
  os << "coset";
  for (std::size_t x = 0; x < 2 * t.generators.size(); ++x)
    os << ' ' << column_name(t.generators, x);
  os << "\n";
  for (std::size_t c = 0; c < t.rows.size(); ++c) {
    os << c + 1 << ":";
    for (int d : t.rows[c]) {
      if (d < 0)
        os << " -";
      else
        os << ' ' << d + 1;
    }
    os << "\n";
  }
  return os.str();
}

CosetTable import_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CosetTable t;
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("coset table: " + why);
  };
  if (!std::getline(in, line)) fail("missing status line");
  {
    std::istringstream ls(line);
    std::string kw, status, ckw, mkw;
    std::size_t count = 0;
    if (!(ls >> kw >> status >> ckw >> count >> mkw >> t.max_cosets) || kw != "status" ||
        ckw != "cosets" || mkw != "max")
      fail("bad status line");
    if (status == "complete")
      t.status = CosetTable::Status::Complete;
    else if (status == "overflow")
      t.status = CosetTable::Status::Overflow;
    else
      fail("unknown status '" + status + "'");
    t.rows.reserve(count);
  }
  if (!std::getline(in, line)) fail("missing header line");
  {
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok != "coset") fail("bad header line");
    std::vector<std::string> cols;
    while (ls >> tok) cols.push_back(tok);
    if (cols.size() % 2 != 0) fail("odd number of columns");
    for (std::size_t k = 0; k < cols.size(); k += 2) {
      GeneratorSymbol g = declare_symbol(cols[k]);
      if (cols[k + 1] != cols[k] + "^-1") fail("columns must pair g and g^-1");
      t.generators.push_back(g);
    }
  }
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != std::to_string(t.rows.size() + 1) + ":") fail("bad row label " + head);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok == "-" ? -1 : std::stoi(tok) - 1);
    if (row.size() != 2 * t.generators.size()) fail("row " + head + " has wrong width");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace mcgpres
