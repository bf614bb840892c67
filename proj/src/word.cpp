#include "mcgpres/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace mcgpres {

namespace {

struct AuxRegistry {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
};

AuxRegistry& registry() {
  static AuxRegistry r;
  return r;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isalpha(static_cast<unsigned char>(s[0])) == 0)
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

std::optional<GeneratorSymbol> reserved_symbol(std::string_view t) {
  if (t == "b") return GeneratorSymbol::b();
  if (t == "y") return GeneratorSymbol::y();
  if (t == "rho") return GeneratorSymbol::rho();
  if (t == "M") return GeneratorSymbol::aux("M");
  if (t.size() >= 2 && all_digits(t.substr(1)) && t.size() <= 8) {
    int idx = std::stoi(std::string(t.substr(1)));
    switch (t[0]) {
      case 'a': return GeneratorSymbol::a(idx);
      case 'u': return GeneratorSymbol::u(idx);
      case 'b': return GeneratorSymbol::bext(idx);
      default: break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::uint32_t intern_aux_name(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::string key(name);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  auto id = static_cast<std::uint32_t>(r.names.size());
  if (id >= (1u << 27)) throw std::length_error("too many auxiliary names");
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return id;
}

const std::string& aux_name(std::uint32_t id) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.at(id);
}

std::string GeneratorSymbol::name() const {
  switch (family_) {
    case Family::A: return "a" + std::to_string(index_);
    case Family::U: return "u" + std::to_string(index_);
    case Family::B: return "b";
    case Family::BExt: return "b" + std::to_string(index_);
    case Family::Y: return "y";
    case Family::Rho: return "rho";
    case Family::Aux: return aux_name(index_);
  }
  return "?";
}

std::strong_ordering GeneratorSymbol::operator<=>(
    const GeneratorSymbol& other) const {
  if (family_ != other.family_) return family_ <=> other.family_;
  if (family_ == Family::Aux && index_ != other.index_)
    return aux_name(index_) <=> aux_name(other.index_);
  return index_ <=> other.index_;
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back().cancels(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (size() != other.size()) return size() <=> other.size();
  for (std::size_t i = 0; i < size(); ++i) {
    Letter x = letters_[i], y = other.letters_[i];
    if (x == y) continue;
    if (x.symbol() != y.symbol()) return x.symbol() <=> y.symbol();
    return y.sign() <=> x.sign();
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l.code();
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(out);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(out);
}

Word concat(std::initializer_list<Word> parts) {
  std::vector<Letter> out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return Word(out);
}

Word conjugate(const Word& w, const Word& by) {
  return concat({by, w, invert(by)});
}

Word commutator(const Word& x, const Word& y) {
  return concat({x, y, invert(x), invert(y)});
}

Word power(const Word& w, int n) {
  const Word base = n < 0 ? invert(w) : w;
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(n); ++i)
    out.insert(out.end(), base.begin(), base.end());
  return Word(out);
}

Word substitute(const Word& w, GeneratorSymbol g, const Word& replacement) {
  return substitute(w, std::map<GeneratorSymbol, Word>{{g, replacement}});
}

Word substitute(const Word& w, const std::map<GeneratorSymbol, Word>& images) {
  std::map<GeneratorSymbol, Word> inverses;
  std::vector<Letter> out;
  for (Letter l : w) {
    auto it = images.find(l.symbol());
    if (it == images.end()) {
      out.push_back(l);
      continue;
    }
    if (l.sign() > 0) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    } else {
      auto [inv, fresh] = inverses.try_emplace(l.symbol());
      if (fresh) inv->second = invert(it->second);
      out.insert(out.end(), inv->second.begin(), inv->second.end());
    }
  }
  return Word(out);
}

CyclicReduction cyclically_reduce(const Word& w) {
  std::size_t n = w.size(), i = 0;
  while (2 * i + 1 < n && w[i].cancels(w[n - 1 - i])) ++i;
  return {w.subword(i, n - 2 * i), w.subword(0, i)};
}

bool contains_symbol(const Word& w, GeneratorSymbol g) {
  return std::any_of(w.begin(), w.end(),
                     [g](Letter l) { return l.symbol() == g; });
}

int occurrences(const Word& w, GeneratorSymbol g) {
  return static_cast<int>(std::count_if(
      w.begin(), w.end(), [g](Letter l) { return l.symbol() == g; }));
}

GeneratorSymbol parse_symbol(std::string_view token,
                             std::span<const GeneratorSymbol> aux) {
  if (auto s = reserved_symbol(token)) return *s;
  for (const auto& s : aux) {
    if (s.family() == Family::Aux && aux_name(s.index()) == token) return s;
  }
  throw WordSyntaxError("unknown generator '" + std::string(token) + "'", 0, 0);
}

GeneratorSymbol declare_symbol(std::string_view token) {
  if (auto s = reserved_symbol(token)) return *s;
  if (!is_identifier(token))
    throw WordSyntaxError("malformed generator name '" + std::string(token) + "'",
                          0, 0);
  return GeneratorSymbol::aux(token);
}

Word parse_word(std::string_view text, std::span<const GeneratorSymbol> aux) {
  std::vector<Letter> raw;
  std::size_t pos = 0, token = 0;
  bool saw_identity = false;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string_view t = text.substr(start, pos - start);
    if (t == "1") {
      saw_identity = true;
      ++token;
      continue;
    }
    int sign = 1;
    if (auto caret = t.find('^'); caret != std::string_view::npos) {
      if (t.substr(caret) != "^-1")
        throw WordSyntaxError("bad exponent in token '" + std::string(t) +
                                  "' (only ^-1 is allowed)",
                              token, start);
      sign = -1;
      t = t.substr(0, caret);
    }
    try {
      raw.emplace_back(parse_symbol(t, aux), sign);
    } catch (const WordSyntaxError& e) {
      throw WordSyntaxError(std::string(e.what()) + " at token " +
                                std::to_string(token),
                            token, start);
    }
    ++token;
  }
  if (saw_identity && token != 1)
    throw WordSyntaxError("'1' must stand alone", 0, 0);
  return reduce(raw);
}

std::string format_letter(Letter l) {
  std::string s = l.symbol().name();
  if (l.sign() < 0) s += "^-1";
  return s;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

}  // namespace mcgpres
