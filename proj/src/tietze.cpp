#include "mcgpres/tietze.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mcgpres {

namespace {

Word prefix(const Word& w, std::size_t n) { return w.subword(0, n); }
Word suffix_from(const Word& w, std::size_t k) { return w.subword(k, w.size() - k); }

Word rotate(const Word& w, std::size_t k) {
  return concat(suffix_from(w, k), prefix(w, k));
}

std::string format_factor(const WitnessFactor& f) {
  return "(" + f.label + ", " + (f.sign > 0 ? "+1" : "-1") + ", " +
         format_word(f.conjugator) + ")";
}

Word factor_word(const Word& relator, int sign, const Word& c) {
  return conjugate(sign > 0 ? relator : invert(relator), c);
}

}  // namespace

const LabeledRelation* find_relation(const std::vector<LabeledRelation>& rels,
                                     std::string_view label) {
  for (const auto& r : rels)
    if (r.label() == label) return &r;
  return nullptr;
}

Word witness_product(const std::vector<LabeledRelation>& relations,
                     const ConsequenceWitness& w) {
  std::vector<Letter> raw;
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    const auto& f = w.factors[k];
    const LabeledRelation* r = find_relation(relations, f.label);
    if (!r) throw UnresolvedLabel(f.label, k);
    Word piece = factor_word(r->relator(), f.sign, f.conjugator);
    raw.insert(raw.end(), piece.begin(), piece.end());
  }
  return reduce(raw);
}

bool check_consequence(const Word& target, const std::vector<LabeledRelation>& relations,
                       const ConsequenceWitness& witness) {
  return witness_product(relations, witness) == target;
}

std::optional<std::pair<int, Word>> match_conjugate(const Word& w, const Word& relator) {
  if (w.empty() || relator.empty()) return std::nullopt;
  const CyclicReduction cw = cyclically_reduce(w);
  const CyclicReduction cr = cyclically_reduce(relator);
  if (cw.core.size() != cr.core.size()) return std::nullopt;
  std::optional<std::pair<int, Word>> best;
  for (int sign : {1, -1}) {
    const Word t = sign > 0 ? cr.core : invert(cr.core);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (rotate(t, k) != cw.core) continue;
      // core_w = s^-1 t s with s = t[0..k), and R^sign = d t d^-1.
      Word c = concat({cw.conjugator, invert(prefix(t, k)), invert(cr.conjugator)});
      if (!best || c.size() < best->second.size()) best = std::make_pair(sign, c);
    }
  }
  return best;
}

CheckReport explain_consequence(const Word& target,
                                const std::vector<LabeledRelation>& relations,
                                const ConsequenceWitness& witness) {
  CheckReport rep;
  std::vector<Word> pieces;
  for (std::size_t k = 0; k < witness.factors.size(); ++k) {
    const auto& f = witness.factors[k];
    const LabeledRelation* r = find_relation(relations, f.label);
    if (!r) {
      rep.factor = k;
      rep.message = "factor " + std::to_string(k + 1) + ": unknown relation label '" +
                    f.label + "'";
      return rep;
    }
    pieces.push_back(factor_word(r->relator(), f.sign, f.conjugator));
  }
  const std::size_t n = pieces.size();
  std::vector<Word> before(n + 1), after(n + 1);
  for (std::size_t k = 0; k < n; ++k) before[k + 1] = concat(before[k], pieces[k]);
  for (std::size_t k = n; k-- > 0;) after[k] = concat(pieces[k], after[k + 1]);
  if (before[n] == target) {
    rep.ok = true;
    return rep;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Word needed = concat({invert(before[k]), target, invert(after[k + 1])});
    for (const auto& r : relations) {
      auto m = match_conjugate(needed, r.relator());
      if (!m) continue;
      WitnessFactor fix{r.label(), m->first, m->second};
      rep.factor = k;
      rep.message = "factor " + std::to_string(k + 1) + " " +
                    format_factor(witness.factors[k]) + " does not fit; " +
                    format_factor(fix) + " would";
      return rep;
    }
  }
  const Word& got = before[n];
  std::size_t pos = 0;
  while (pos < got.size() && pos < target.size() && got[pos] == target[pos]) ++pos;
  rep.message = "product differs from target at letter " + std::to_string(pos + 1) +
                ": got " + format_word(got) + ", expected " + format_word(target);
  return rep;
}

ConsequenceWitness invert_witness(const ConsequenceWitness& w) {
  ConsequenceWitness out;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.factors.push_back({it->label, -it->sign, it->conjugator});
  return out;
}

ConsequenceWitness conjugate_witness(const ConsequenceWitness& w, const Word& c) {
  ConsequenceWitness out;
  for (const auto& f : w.factors)
    out.factors.push_back({f.label, f.sign, concat(c, f.conjugator)});
  return out;
}

ConsequenceWitness concat_witness(const ConsequenceWitness& a, const ConsequenceWitness& b) {
  ConsequenceWitness out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

ConsequenceWitness inline_lemma(const ConsequenceWitness& w, const std::string& lemma,
                                const ConsequenceWitness& lemma_witness) {
  ConsequenceWitness out;
  for (const auto& f : w.factors) {
    if (f.label != lemma) {
      out.factors.push_back(f);
      continue;
    }
    ConsequenceWitness piece = f.sign > 0 ? lemma_witness : invert_witness(lemma_witness);
    piece = conjugate_witness(piece, f.conjugator);
    out.factors.insert(out.factors.end(), piece.factors.begin(), piece.factors.end());
  }
  return out;
}

ConsequenceWitness solve_witness_for(const ConsequenceWitness& w,
                                     const std::string& target_label,
                                     const std::string& used) {
  std::size_t at = w.factors.size(), count = 0;
  for (std::size_t k = 0; k < w.factors.size(); ++k)
    if (w.factors[k].label == used) {
      at = k;
      ++count;
    }
  if (count != 1)
    throw TietzeError("relation " + used + " is used " + std::to_string(count) +
                      " times; it must be used exactly once to be solved for");
  // T = A (c U^e c^-1) B, so U^e = c^-1 A^-1 T B^-1 c.
  const WitnessFactor& f = w.factors[at];
  ConsequenceWitness a, b;
  a.factors.assign(w.factors.begin(), w.factors.begin() + static_cast<std::ptrdiff_t>(at));
  b.factors.assign(w.factors.begin() + static_cast<std::ptrdiff_t>(at) + 1, w.factors.end());
  const Word c_inv = invert(f.conjugator);
  ConsequenceWitness out = conjugate_witness(invert_witness(a), c_inv);
  out.factors.push_back({target_label, 1, c_inv});
  out = concat_witness(out, conjugate_witness(invert_witness(b), c_inv));
  return f.sign > 0 ? out : invert_witness(out);
}

AddGenerator define_generator(GeneratorSymbol symbol, const Word& word, std::string label) {
  return AddGenerator{symbol, LabeledRelation(std::move(label), Word::generator(symbol), word)};
}

namespace {

void require_generators(const Presentation& p, const LabeledRelation& r,
                        std::optional<GeneratorSymbol> allowed = std::nullopt) {
  for (const Word* w : {&r.lhs(), &r.rhs()})
    for (Letter l : *w)
      if (!p.has_generator(l.symbol()) && l.symbol() != allowed)
        throw TietzeError("relation " + r.label() + " uses generator " +
                          l.symbol().name() + " outside the presentation");
}

Presentation apply_add_generator(const Presentation& p, const AddGenerator& m) {
  if (p.has_generator(m.symbol))
    throw TietzeError("generator " + m.symbol.name() + " already present");
  if (p.find(m.defining.label()))
    throw TietzeError("label " + m.defining.label() + " already present");
  const int n = occurrences(m.defining.relator(), m.symbol);
  if (n != 1)
    throw TietzeError("defining relation " + m.defining.label() + " must contain " +
                      m.symbol.name() + " exactly once, found " + std::to_string(n));
  require_generators(p, m.defining, m.symbol);
  Presentation out = p;
  out.family = PresentationFamily::Custom;
  out.generators.push_back(m.symbol);
  out.relations.push_back(m.defining);
  return out;
}

Presentation apply_add_relation(const Presentation& p, const AddRelation& m) {
  if (p.find(m.relation.label()))
    throw TietzeError("label " + m.relation.label() + " already present");
  require_generators(p, m.relation);
  CheckReport rep = explain_consequence(m.relation.relator(), p.relations, m.witness);
  if (!rep.ok) throw TietzeError("witness for " + m.relation.label() + ": " + rep.message);
  Presentation out = p;
  out.family = PresentationFamily::Custom;
  out.relations.push_back(m.relation);
  return out;
}

Presentation apply_remove_relation(const Presentation& p, const RemoveRelation& m) {
  const LabeledRelation* r = p.find(m.label);
  if (!r) throw TietzeError("no relation labeled " + m.label);
  Presentation out = p;
  out.family = PresentationFamily::Custom;
  const Word relator = r->relator();
  std::erase_if(out.relations, [&](const LabeledRelation& x) { return x.label() == m.label; });
  CheckReport rep = explain_consequence(relator, out.relations, m.witness);
  if (!rep.ok) throw TietzeError("witness for removing " + m.label + ": " + rep.message);
  return out;
}

}  // namespace

Presentation eliminate_generator(const Presentation& p, GeneratorSymbol symbol,
                                 const std::string& defining_label) {
  if (!p.has_generator(symbol))
    throw TietzeError("generator " + symbol.name() + " not present");
  const LabeledRelation* def = p.find(defining_label);
  if (!def) throw TietzeError("no relation labeled " + defining_label);
  const Word& r = def->relator();
  const int n = occurrences(r, symbol);
  if (n != 1)
    throw TietzeError("relation " + defining_label + " cannot define " + symbol.name() +
                      ": it occurs " + std::to_string(n) + " times in the relator " +
                      format_word(r));
  std::size_t pos = 0;
  while (r[pos].symbol() != symbol) ++pos;
  // r = x s^e z, so s^e = x^-1 z^-1.
  const Word x = prefix(r, pos), z = suffix_from(r, pos + 1);
  Word image = concat(invert(x), invert(z));
  if (r[pos].sign() < 0) image = invert(image);
  Presentation out;
  out.family = PresentationFamily::Custom;
  out.g = p.g;
  out.s = p.s;
  for (const auto& g : p.generators)
    if (g != symbol) out.generators.push_back(g);
  for (const auto& rel : p.relations) {
    if (rel.label() == defining_label) continue;
    out.relations.emplace_back(rel.label(), substitute(rel.lhs(), symbol, image),
                               substitute(rel.rhs(), symbol, image));
  }
  return out;
}

Presentation apply_move(const Presentation& p, const TietzeMove& m) {
  return std::visit(
      [&](const auto& move) -> Presentation {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, AddGenerator>)
          return apply_add_generator(p, move);
        else if constexpr (std::is_same_v<T, RemoveGenerator>)
          return eliminate_generator(p, move.symbol, move.defining_label);
        else if constexpr (std::is_same_v<T, AddRelation>)
          return apply_add_relation(p, move);
        else
          return apply_remove_relation(p, move);
      },
      m);
}

std::string describe_move(const TietzeMove& m) {
  return std::visit(
      [](const auto& move) -> std::string {
        using T = std::decay_t<decltype(move)>;
        if constexpr (std::is_same_v<T, AddGenerator>)
          return "add-generator " + move.symbol.name() + " via " + move.defining.label();
        else if constexpr (std::is_same_v<T, RemoveGenerator>)
          return "remove-generator " + move.symbol.name() + " via " + move.defining_label;
        else if constexpr (std::is_same_v<T, AddRelation>)
          return "add-relation " + move.relation.label() + " (" +
                 std::to_string(move.witness.factors.size()) + " factors)";
        else
          return "remove-relation " + move.label + " (" +
                 std::to_string(move.witness.factors.size()) + " factors)";
      },
      m);
}

ReplayResult replay_script(const Presentation& p, const std::vector<TietzeMove>& script) {
  ReplayResult res;
  res.final = p;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      res.final = apply_move(res.final, script[i]);
    } catch (const std::exception& e) {
      throw ReplayError(i + 1, describe_move(script[i]) + ": " + e.what());
    }
    res.transcript.push_back("step " + std::to_string(i + 1) + ": " +
                             describe_move(script[i]) + " -> " +
                             std::to_string(res.final.generators.size()) + " generators, " +
                             std::to_string(res.final.relations.size()) + " relations");
  }
  return res;
}

std::map<int, Word> u_words_by_recursion(int g) {
  if (g < 3) throw std::invalid_argument("genus must be at least 3");
  std::vector<Letter> m;
  for (int i = 1; i <= g - 1; ++i) m.emplace_back(GeneratorSymbol::a(i), 1);
  const Word M(m);
  std::map<int, Word> out;
  Word u = parse_word("a1 y");
  for (int i = 1; i <= g - 1; ++i) {
    out[i] = u;
    u = conjugate(invert(u), M);
  }
  return out;
}

namespace {

// A cyclic permutation r' of R^sign together with e such that r' = e R^sign e^-1.
struct Piece {
  std::size_t relation;
  int sign;
  Word word;
  Word to_relator;
};

struct SearchState {
  Word word;
  std::vector<WitnessFactor> left;   // applied before the word
  std::vector<WitnessFactor> right;  // applied after the word, conjugators final
  std::size_t conj_total = 0;
  std::vector<std::size_t> order;  // relation indices of the factors, in order
};

bool state_less(const SearchState& a, const SearchState& b) {
  if (a.conj_total != b.conj_total) return a.conj_total < b.conj_total;
  if (a.order != b.order) return a.order < b.order;
  return a.word < b.word;
}

struct Candidate {
  ConsequenceWitness witness;
  std::size_t conj_total;
  std::vector<std::size_t> order;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.conj_total != b.conj_total) return a.conj_total < b.conj_total;
  return a.order < b.order;
}

}  // namespace

SearchResult bounded_rewrite_search(const Word& from, const Word& to,
                                    const std::vector<LabeledRelation>& relations,
                                    const SearchLimits& limits) {
  SearchResult result;
  if (from == to) {
    result.status = SearchResult::Status::Found;
    return result;
  }
  std::vector<Piece> pieces;
  std::size_t longest = 0;
  std::set<std::pair<std::size_t, Word>> seen_pieces;
  for (std::size_t ri = 0; ri < relations.size(); ++ri) {
    const Word& rel = relations[ri].relator();
    if (rel.empty()) continue;
    const CyclicReduction cr = cyclically_reduce(rel);
    longest = std::max(longest, cr.core.size());
    for (int sign : {1, -1}) {
      const Word t = sign > 0 ? cr.core : invert(cr.core);
      for (std::size_t k = 0; k < t.size(); ++k) {
        Word r = rotate(t, k);
        if (!seen_pieces.insert({ri, r}).second) continue;
        pieces.push_back({ri, sign, r, concat(invert(prefix(t, k)), invert(cr.conjugator))});
      }
    }
  }
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_first;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    by_first[pieces[i].word[0].code()].push_back(i);
  const std::size_t max_len = from.size() + to.size() + 2 * longest;
  const Word to_inv = invert(to);

  auto finish = [&](const SearchState& s, std::optional<WitnessFactor> middle,
                    std::size_t middle_index) {
    Candidate c;
    c.witness.factors = s.left;
    c.conj_total = s.conj_total;
    c.order = s.order;
    if (middle) {
      c.witness.factors.push_back(*middle);
      c.conj_total += middle->conjugator.size();
      c.order.push_back(middle_index);
    }
    c.witness.factors.insert(c.witness.factors.end(), s.right.begin(), s.right.end());
    return c;
  };

  std::unordered_set<Word, WordHash> visited{from};
  std::vector<SearchState> level{SearchState{from, {}, {}, 0, {}}};
  result.states = 1;
  for (std::size_t depth = 0; depth < limits.max_factors; ++depth) {
    std::vector<Candidate> found;
    std::vector<SearchState> next;
    bool capped = false;
    for (const auto& s : level) {
      // One more factor can close the gap exactly.
      const Word gap = concat(s.word, to_inv);
      for (std::size_t ri = 0; ri < relations.size(); ++ri) {
        auto m = match_conjugate(gap, relations[ri].relator());
        if (m && m->second.size() <= limits.max_conj_len)
          found.push_back(finish(s, WitnessFactor{relations[ri].label(), m->first, m->second}, ri));
      }
      if (!found.empty() || capped) continue;
      const Word& w = s.word;
      for (std::size_t i = 0; i < w.size() && !capped; ++i) {
        auto it = by_first.find(w[i].code());
        if (it == by_first.end()) continue;
        for (std::size_t pi : it->second) {
          const Piece& pc = pieces[pi];
          std::size_t match = 0;
          while (match < pc.word.size() && i + match < w.size() &&
                 w[i + match] == pc.word[match])
            ++match;
          const Word x = prefix(w, i);
          for (std::size_t k = 1; k <= match; ++k) {
            const Word u = pc.word.subword(0, k);
            const Word v = invert(suffix_from(pc.word, k));
            const Word z = suffix_from(w, i + k);
            Word next_word = concat({x, v, z});
            if (next_word.size() > max_len || visited.contains(next_word)) continue;
            const Word left_c = concat(x, pc.to_relator);
            // Factors after the word end up conjugated by `to` as well.
            const Word right_c = concat({to, invert(z), invert(u), pc.to_relator});
            const bool left_ok = left_c.size() <= limits.max_conj_len;
            const bool right_ok = right_c.size() <= limits.max_conj_len;
            if (!left_ok && !right_ok) continue;
            SearchState ns;
            ns.word = std::move(next_word);
            ns.left = s.left;
            ns.right = s.right;
            ns.order = s.order;
            ns.order.push_back(pc.relation);
            const std::string& label = relations[pc.relation].label();
            if (left_ok && (!right_ok || left_c.size() <= right_c.size())) {
              ns.left.push_back({label, pc.sign, left_c});
              ns.conj_total = s.conj_total + left_c.size();
            } else {
              ns.right.insert(ns.right.begin(), WitnessFactor{label, pc.sign, right_c});
              ns.conj_total = s.conj_total + right_c.size();
            }
            if (ns.word == to) {
              found.push_back(finish(ns, std::nullopt, 0));
              continue;
            }
            visited.insert(ns.word);
            next.push_back(std::move(ns));
            if (++result.states >= limits.max_states) {
              capped = true;
              break;
            }
          }
          if (capped) break;
        }
      }
    }
    if (!found.empty()) {
      auto best = std::min_element(found.begin(), found.end(), candidate_less);
      result.status = SearchResult::Status::Found;
      result.witness = best->witness;
      return result;
    }
    if (capped) {
      result.status = SearchResult::Status::ResourceCap;
      return result;
    }
    if (next.empty()) break;
    std::stable_sort(next.begin(), next.end(), state_less);
    level = std::move(next);
  }
  result.status = SearchResult::Status::NotFound;
  return result;
}

SearchResult bounded_consequence_search(const Word& target,
                                        const std::vector<LabeledRelation>& relations,
                                        const SearchLimits& limits) {
  return bounded_rewrite_search(target, Word{}, relations, limits);
}

ConsequenceWitness derive_chain(const std::vector<Word>& chain,
                                const std::vector<LabeledRelation>& relations,
                                const SearchLimits& limits) {
  ConsequenceWitness out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    SearchResult r = bounded_rewrite_search(chain[k], chain[k + 1], relations, limits);
    if (r.status != SearchResult::Status::Found)
      throw TietzeError("link " + std::to_string(k + 1) + " (" + format_word(chain[k]) +
                        " -> " + format_word(chain[k + 1]) + ") not certified: " +
                        (r.status == SearchResult::Status::ResourceCap ? "state cap reached"
                                                                       : "not found"));
    out = concat_witness(out, r.witness);
  }
  return out;
}

}  // namespace mcgpres
