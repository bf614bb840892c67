#pragma once

// Free-group words over the generator alphabet used by the mapping class
// group presentations: a_i, u_i, b, b_i, y, rho and named auxiliary symbols.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcgpres {

/// Generator families, declared in display order.
enum class Family : std::uint8_t { A, U, B, BExt, Y, Rho, Aux };

/// Interns an auxiliary generator name and returns its id. Thread-safe.
std::uint32_t intern_aux_name(std::string_view name);
/// Name previously registered with intern_aux_name.
const std::string& aux_name(std::uint32_t id);

class GeneratorSymbol {
 public:
  constexpr GeneratorSymbol() = default;
  constexpr GeneratorSymbol(Family family, std::uint32_t index)
      : family_(family), index_(index) {}

  static GeneratorSymbol a(int i) { return {Family::A, checked(i)}; }
  static GeneratorSymbol u(int i) { return {Family::U, checked(i)}; }
  static GeneratorSymbol b() { return {Family::B, 0}; }
  static GeneratorSymbol bext(int i) { return {Family::BExt, checked(i)}; }
  static GeneratorSymbol y() { return {Family::Y, 0}; }
  static GeneratorSymbol rho() { return {Family::Rho, 0}; }
  static GeneratorSymbol aux(std::string_view name) {
    return {Family::Aux, intern_aux_name(name)};
  }

  constexpr Family family() const { return family_; }
  /// Index for A, U and BExt; interned name id for Aux; zero otherwise.
  constexpr std::uint32_t index() const { return index_; }
  constexpr bool indexed() const {
    return family_ == Family::A || family_ == Family::U ||
           family_ == Family::BExt;
  }

  std::string name() const;

  constexpr bool operator==(const GeneratorSymbol&) const = default;
  /// Display order: a_1 < ... < u_1 < ... < b < b_0 < ... < y < rho < aux by name.
  std::strong_ordering operator<=>(const GeneratorSymbol& other) const;

 private:
  static std::uint32_t checked(int i) {
    if (i < 0) throw std::invalid_argument("negative generator index");
    return static_cast<std::uint32_t>(i);
  }

  Family family_ = Family::A;
  std::uint32_t index_ = 0;
};

/// A generator or its inverse, packed into 32 bits.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(GeneratorSymbol s, int sign)
      : code_((static_cast<std::uint32_t>(s.family()) << 28) |
              (s.index() << 1) | (sign < 0 ? 1u : 0u)) {}

  constexpr GeneratorSymbol symbol() const {
    return {static_cast<Family>(code_ >> 28), (code_ & 0x0FFFFFFFu) >> 1};
  }
  constexpr int sign() const { return (code_ & 1u) ? -1 : 1; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }
  constexpr bool cancels(Letter other) const {
    return (code_ ^ other.code_) == 1u;
  }

  constexpr bool operator==(const Letter&) const = default;

 private:
  constexpr explicit Letter(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// A freely reduced word. Every constructor reduces its input.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word generator(GeneratorSymbol s, int sign = 1) {
    Word w;
    w.letters_.emplace_back(s, sign);
    return w;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  /// Subword [pos, pos+len); a subword of a reduced word is reduced.
  Word subword(std::size_t pos, std::size_t len) const;

  bool operator==(const Word&) const = default;
  /// Shortlex with letters compared by display order, inverse after positive.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word reduce(std::span<const Letter> raw);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> parts);
/// by * w * by^-1
Word conjugate(const Word& w, const Word& by);
/// x * y * x^-1 * y^-1
Word commutator(const Word& x, const Word& y);
Word power(const Word& w, int n);
Word substitute(const Word& w, GeneratorSymbol g, const Word& replacement);
Word substitute(const Word& w, const std::map<GeneratorSymbol, Word>& images);

struct CyclicReduction {
  Word core;
  Word conjugator;
};
/// w == conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclically_reduce(const Word& w);

bool contains_symbol(const Word& w, GeneratorSymbol g);
int occurrences(const Word& w, GeneratorSymbol g);

class WordSyntaxError : public std::runtime_error {
 public:
  WordSyntaxError(const std::string& message, std::size_t token,
                  std::size_t column)
      : std::runtime_error(message), token_(token), column_(column) {}
  /// Zero-based token index within the parsed text.
  std::size_t token() const { return token_; }
  /// Zero-based character offset of the offending token.
  std::size_t column() const { return column_; }

 private:
  std::size_t token_;
  std::size_t column_;
};

/// Parses one generator name. `M` and any name listed in `aux` are accepted
/// as auxiliary symbols; everything else must be a reserved form.
GeneratorSymbol parse_symbol(std::string_view token,
                             std::span<const GeneratorSymbol> aux = {});
/// Accepts any identifier, registering unknown names as auxiliary symbols.
GeneratorSymbol declare_symbol(std::string_view token);

/// Whitespace-separated tokens `a3`, `a3^-1`, `u2`, `y`, `b`, `b2`, `rho`,
/// `M`. A lone `1` denotes the empty word.
Word parse_word(std::string_view text,
                std::span<const GeneratorSymbol> aux = {});
std::string format_word(const Word& w);
std::string format_letter(Letter l);

}  // namespace mcgpres
