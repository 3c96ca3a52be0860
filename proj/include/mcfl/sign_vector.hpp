#pragma once

// Vectors over {-1, 0, +1} ordered by x <= y iff every nonzero entry of x
// equals the entry of y at the same position, plus the component profile
// needed to count sign alternations across tuple boundaries.

#include <mcfl/error.hpp>
#include <mcfl/words.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace mcfl {

struct SignVector {
  std::vector<int> entries;

  SignVector() = default;
  explicit SignVector(std::vector<int> e) : entries(std::move(e)) {}
  explicit SignVector(std::size_t m) : entries(m, 0) {}

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t i) const noexcept { return entries[i]; }
  int& operator[](std::size_t i) noexcept { return entries[i]; }

  bool all_zero() const noexcept {
    return std::ranges::all_of(entries, [](int v) { return v == 0; });
  }
  bool fully_signed() const noexcept {
    return std::ranges::none_of(entries, [](int v) { return v == 0; });
  }
  std::size_t count(int sign) const noexcept {
    return static_cast<std::size_t>(std::ranges::count(entries, sign));
  }

  SignVector operator-() const {
    SignVector out = *this;
    for (int& v : out.entries) v = -v;
    return out;
  }

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// x <= y: zeros of x may be filled, signed entries must agree.
inline bool precedes(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && x[i] != y[i]) return false;
  return true;
}

/// `+`, `-`, `0` per entry.
inline std::string format_sign_vector(const SignVector& x) {
  std::string out;
  for (int v : x.entries) out += v > 0 ? '+' : v < 0 ? '-' : '0';
  return out;
}

inline SignVector parse_sign_vector(std::string_view text) {
  SignVector x;
  for (char c : text) {
    if (c == '+') x.entries.push_back(1);
    else if (c == '-') x.entries.push_back(-1);
    else if (c == '0') x.entries.push_back(0);
    else if (c == ',' || c == ' ') continue;
    else throw malformed_input("bad sign vector '" + std::string(text) + "'");
  }
  return x;
}

/// Component lengths |s_1| .. |s_n|. Position pair (p-1, p) is a boundary pair
/// when p is the first position of some component other than the first.
class Profile {
public:
  Profile() = default;

  explicit Profile(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
    std::size_t m = 0;
    for (std::size_t l : lengths_) {
      if (l == 0) throw precondition_error("profile components must be nonempty");
      m += l;
    }
    boundary_.assign(m, false);
    std::size_t acc = 0;
    for (std::size_t j = 0; j + 1 < lengths_.size(); ++j) {
      acc += lengths_[j];
      boundary_[acc] = true;
    }
  }

  static Profile single(std::size_t m) { return m == 0 ? Profile() : Profile({m}); }

  static Profile of(const WordTuple& t) {
    std::vector<std::size_t> lengths;
    for (const auto& s : t) lengths.push_back(s.size());
    return Profile(std::move(lengths));
  }

  const std::vector<std::size_t>& lengths() const noexcept { return lengths_; }
  std::size_t total() const noexcept { return boundary_.size(); }

  /// True when positions p-1 and p are neighboring endpoints.
  bool boundary_before(std::size_t p) const noexcept { return p < boundary_.size() && boundary_[p]; }

private:
  std::vector<std::size_t> lengths_;
  std::vector<bool> boundary_;
};

/// Number of sign alternations of a fully signed x, where every boundary pair
/// carries a mandatory alternation: equal signs across a boundary count 2.
inline int malt(const SignVector& x, const Profile& profile) {
  if (x.size() != profile.total()) throw precondition_error("sign vector and profile differ in length");
  if (!x.fully_signed()) throw precondition_error("malt needs a fully signed vector");
  int out = 0;
  for (std::size_t p = 1; p < x.size(); ++p) {
    const bool differ = x[p] != x[p - 1];
    if (profile.boundary_before(p))
      out += differ ? 1 : 2;
    else
      out += differ ? 1 : 0;
  }
  return out;
}

/// Calls f(x) for every x in {0,+,-}^m except 0^m, in lexicographic order
/// with 0 < + < - and position 0 most significant. Stops when f returns true
/// and reports whether it did.
template <class F>
bool scan_sign_vectors(std::size_t m, F&& f) {
  if (m == 0) return false;
  std::vector<int> digit(m, 0);
  SignVector x(m);
  static constexpr int value[3] = {0, 1, -1};
  while (true) {
    std::size_t i = m;
    while (i > 0 && digit[i - 1] == 2) {
      digit[i - 1] = 0;
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) return false;
    ++digit[i - 1];
    x[i - 1] = value[digit[i - 1]];
    if (f(static_cast<const SignVector&>(x))) return true;
  }
}

/// Calls f(y) for every y in {+,-}^m in lexicographic order with + < -.
template <class F>
bool scan_full_sign_vectors(std::size_t m, F&& f) {
  SignVector y(std::vector<int>(m, 1));
  while (true) {
    if (f(static_cast<const SignVector&>(y))) return true;
    std::size_t i = m;
    while (i > 0 && y[i - 1] == -1) {
      y[i - 1] = 1;
      --i;
    }
    if (i == 0) return false;
    y[i - 1] = -1;
  }
}

} // namespace mcfl
