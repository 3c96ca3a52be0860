#pragma once

// Letters a_i / bar(a_i), words over Sigma_n, tuples of words, the language
// O_n, and the text format shared by every tool.
//
// Text format: `a<k>` is a positive letter, `A<k>` its bar; whitespace
// between letters is ignored; tuple components are separated by `|` and an
// empty component is the empty string.

#include <mcfl/error.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcfl {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

struct Letter {
  int type = 1;
  Sign sign = Sign::positive;

  static constexpr Letter pos(int i) noexcept { return {i, Sign::positive}; }
  static constexpr Letter neg(int i) noexcept { return {i, Sign::negative}; }

  constexpr bool positive() const noexcept { return sign == Sign::positive; }

  friend constexpr bool operator==(Letter, Letter) = default;

  // a1 < A1 < a2 < A2 < ...
  friend constexpr std::strong_ordering operator<=>(Letter l, Letter r) noexcept {
    if (auto c = l.type <=> r.type; c != 0) return c;
    return -to_int(l.sign) <=> -to_int(r.sign);
  }
};

/// Left or right end of a word.
enum class Side : char { left = 'L', right = 'R' };

constexpr Letter bar(Letter l) noexcept { return {l.type, -l.sign}; }

constexpr bool compatible(Letter l, Letter r) noexcept { return l == bar(r); }

using Word = std::vector<Letter>;
using WordTuple = std::vector<Word>;

inline Word bar(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(bar(l));
  return out;
}

inline std::size_t count(std::span<const Letter> w, Letter c) {
  return static_cast<std::size_t>(std::ranges::count(w, c));
}

inline int max_type(std::span<const Letter> w) {
  int m = 0;
  for (Letter l : w) m = std::max(m, l.type);
  return m;
}

inline Word concat(const WordTuple& t) {
  Word out;
  for (const auto& s : t) out.insert(out.end(), s.begin(), s.end());
  return out;
}

inline std::size_t total_length(const WordTuple& t) {
  return std::accumulate(t.begin(), t.end(), std::size_t{0},
                         [](std::size_t acc, const Word& s) { return acc + s.size(); });
}

inline void check_alphabet(std::span<const Letter> w, int n) {
  for (Letter l : w)
    if (l.type < 1 || l.type > n)
      throw malformed_input("letter type " + std::to_string(l.type) +
                            " outside alphabet of size " + std::to_string(n));
}

/// Membership in O_n: equally many a_i and bar(a_i) for each i in [n].
inline bool is_in_On(std::span<const Letter> w, int n) {
  check_alphabet(w, n);
  std::vector<int> balance(static_cast<std::size_t>(n) + 1, 0);
  for (Letter l : w) balance[static_cast<std::size_t>(l.type)] += to_int(l.sign);
  return std::ranges::all_of(balance, [](int b) { return b == 0; });
}

/// First and last letter of every nonempty component. A length-1 component
/// contributes its letter twice.
inline std::vector<Letter> endpoints(const WordTuple& t) {
  std::vector<Letter> out;
  for (const auto& s : t) {
    if (s.empty()) continue;
    out.push_back(s.front());
    out.push_back(s.back());
  }
  return out;
}

inline bool is_irreducible(const WordTuple& t) {
  const auto ends = endpoints(t);
  for (Letter e : ends)
    if (std::ranges::find(ends, bar(e)) != ends.end()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// text format

inline std::string format_letter(Letter l) {
  return (l.positive() ? "a" : "A") + std::to_string(l.type);
}

inline std::string format_word(std::span<const Letter> w) {
  std::string out;
  for (Letter l : w) out += format_letter(l);
  return out;
}

inline std::string format_tuple(const WordTuple& t) {
  std::string out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) out += '|';
    out += format_word(t[j]);
  }
  return out;
}

/// Parses a word. With `n > 0` every letter type must lie in [n].
inline Word parse_word(std::string_view text, int n = 0) {
  Word out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw malformed_input("bad word '" + std::string(text) + "' at offset " +
                          std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'a' && c != 'A') fail("expected 'a' or 'A'");
    const Sign sign = c == 'a' ? Sign::positive : Sign::negative;
    ++i;
    const std::size_t digits = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) fail("letter index too large");
      ++i;
    }
    if (i == digits) fail("missing letter index");
    if (value < 1) fail("letter index must be >= 1");
    out.push_back({static_cast<int>(value), sign});
  }
  if (n > 0) check_alphabet(out, n);
  return out;
}

inline WordTuple parse_tuple(std::string_view text, int n = 0) {
  WordTuple out;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar_pos = text.find('|', start);
    out.push_back(parse_word(text.substr(start, bar_pos - start), n));
    if (bar_pos == std::string_view::npos) break;
    start = bar_pos + 1;
  }
  return out;
}

} // namespace mcfl
