/// @file word.hpp
/// @brief Free-group words over indexed generators: parsing, printing,
///        free reduction.
///
/// Words are the transport representation of the kit: flat sequences of
/// (generator, exponent) pairs, always freely reduced.  Commutator
/// brackets in the surface syntax are expanded at parse time using the
/// convention [a,b] = a b a^-1 b^-1, left-normed for longer brackets
/// ([a,b,c] = [[a,b],c]); a Word never stores a bracket.
///
/// Grammar (whitespace separates terms and is otherwise ignored):
///   word      := term* ;
///   term      := atom ("^" integer)? ;
///   atom      := generator | "[" word ("," word)+ "]" | "(" word ")" ;
///   generator := "x" decimal-index ;
///   integer   := "-"? digit+ ;
///
/// Exponents are machine-width integers; overflow on merge is an error.
/// Arithmetic that needs big exponents lives in the normal-form layer.

#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace nilpotra {

/// One maximal run of a single generator: gen^exp with exp != 0.
struct Letter {
  int gen = 0;            // 1-based generator index
  std::int64_t exp = 0;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

/// A freely reduced word.  The empty vector is the identity.
using Word = std::vector<Letter>;

/// Number of group letters (sum of |exp|), saturating at int64 max.
inline std::int64_t word_length(const Word& w) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  for (const Letter& l : w) {
    std::uint64_t mag = l.exp == std::numeric_limits<std::int64_t>::min()
                            ? std::uint64_t(1) << 63
                            : std::uint64_t(l.exp < 0 ? -l.exp : l.exp);
    if (mag > std::uint64_t(kMax - total)) return kMax;
    total += std::int64_t(mag);
  }
  return total;
}

/// Freely reduces an arbitrary letter sequence: merges adjacent equal
/// generators, drops zero exponents, cancels recursively.
/// Throws domain_error if merged exponents overflow int64.
inline Word free_reduce(const Word& raw) {
  Word out;
  for (const Letter& l : raw) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      std::int64_t merged = 0;
      if (__builtin_add_overflow(out.back().exp, l.exp, &merged))
        throw domain_error("word exponent overflow while reducing");
      if (merged == 0)
        out.pop_back();
      else
        out.back().exp = merged;
    } else {
      out.push_back(l);
    }
  }
  return out;
}

/// Concatenation in the free group (freely reduced).
inline Word concat(const Word& a, const Word& b) {
  Word raw = a;
  raw.insert(raw.end(), b.begin(), b.end());
  return free_reduce(raw);
}

/// Inverse word: reversed letters with negated exponents.
inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->exp == std::numeric_limits<std::int64_t>::min())
      throw domain_error("word exponent overflow while inverting");
    out.push_back({it->gen, -it->exp});
  }
  return out;  // already reduced if w was
}

/// w^k for machine-width k (k == 0 gives the identity).
inline Word word_pow(const Word& w, std::int64_t k) {
  Word base = k < 0 ? inverse_word(w) : w;
  std::uint64_t reps = k < 0 ? std::uint64_t(-(k + 1)) + 1 : std::uint64_t(k);
  Word out;
  for (std::uint64_t i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

/// [u, v] = u v u^-1 v^-1, freely reduced.
inline Word commutator_word(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse_word(u), inverse_word(v)));
}

namespace detail {

/// Recursive-descent parser for the word grammar above.
class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  Word parse() {
    Word w = parse_word_body();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected character '" +
                            std::string(1, text_[pos_]) + "'",
                        pos_);
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end_of_word() {
    skip_ws();
    if (pos_ == text_.size()) return true;
    char ch = text_[pos_];
    return ch == ',' || ch == ']' || ch == ')';
  }

  // word := term*
  Word parse_word_body() {
    Word acc;
    while (!at_end_of_word()) acc = concat(acc, parse_term());
    return acc;
  }

  // term := atom ("^" integer)?
  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::int64_t e = parse_integer();
      return word_pow(atom, e);
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ == text_.size()) throw parse_error("expected atom", pos_);
    char ch = text_[pos_];
    if (ch == 'x') return parse_generator();
    if (ch == '(') {
      ++pos_;
      Word inner = parse_word_body();
      expect(')');
      return inner;
    }
    if (ch == '[') {
      ++pos_;
      Word acc = parse_word_body();
      expect(',');
      acc = commutator_word(acc, parse_word_body());
      while (peek() == ',') {
        ++pos_;
        acc = commutator_word(acc, parse_word_body());
      }
      expect(']');
      return acc;
    }
    throw parse_error("expected generator, '[' or '('", pos_);
  }

  Word parse_generator() {
    std::size_t start = pos_;
    ++pos_;  // consume 'x'
    if (pos_ == text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("generator index expected after 'x'", pos_);
    std::int64_t idx = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      idx = idx * 10 + (text_[pos_] - '0');
      if (idx > std::numeric_limits<int>::max())
        throw parse_error("generator index too large", start);
      ++pos_;
    }
    if (idx < 1 || idx > rank_)
      throw parse_error("generator index " + std::to_string(idx) +
                            " out of range 1.." + std::to_string(rank_),
                        start);
    return Word{{static_cast<int>(idx), 1}};
  }

  std::int64_t parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ == text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("integer expected", pos_);
    std::uint64_t mag = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      mag = mag * 10 + std::uint64_t(text_[pos_] - '0');
      if (mag > (std::uint64_t(1) << 62))
        throw parse_error("exponent too large", start);
      ++pos_;
    }
    return neg ? -std::int64_t(mag) : std::int64_t(mag);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch)
      throw parse_error(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` against the word grammar; all generator indices must be
/// <= rank.  Returns the free reduction of the denoted word.
/// Throws parse_error with a position on malformed input.
inline Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw domain_error("rank must be >= 1");
  return detail::WordParser(text, rank).parse();
}

/// Prints a word in the same grammar; exponent 1 is omitted.  The empty
/// word prints as the empty string.
inline std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.gen);
    if (l.exp != 1) {
      out += '^';
      out += std::to_string(l.exp);
    }
  }
  return out;
}

}  // namespace nilpotra
