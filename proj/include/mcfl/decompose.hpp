#pragma once

// Splitting an irreducible balanced tuple into 2n pieces whose odd and even
// interleavings are both balanced and nonempty.

#include <mcfl/decomposition.hpp>
#include <mcfl/error.hpp>
#include <mcfl/necklace.hpp>
#include <mcfl/sign_vector.hpp>
#include <mcfl/tucker.hpp>
#include <mcfl/words.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcfl {

enum class Backend : unsigned char { necklace, brute, kyfan };

inline std::string to_string(Backend b) {
  switch (b) {
  case Backend::necklace: return "necklace";
  case Backend::brute: return "brute";
  case Backend::kyfan: return "kyfan";
  }
  return "?";
}

inline Backend parse_backend(std::string_view text) {
  if (text == "necklace") return Backend::necklace;
  if (text == "brute") return Backend::brute;
  if (text == "kyfan") return Backend::kyfan;
  throw malformed_input("unknown backend '" + std::string(text) + "'");
}

/// u_1 is the shortest nonempty balanced prefix, u_2 the rest. A word starting
/// with bar(a1) is solved on its bar.
inline Decomposition decompose_n1(const Word& s) {
  check_alphabet(s, 1);
  if (s.size() < 2) throw precondition_error("word needs length at least 2");
  if (!is_in_On(s, 1)) throw precondition_error("word is not balanced");
  if (!s.front().positive()) {
    Decomposition d = decompose_n1(bar(s));
    for (Word& u : d.pieces) u = bar(u);
    return d;
  }
  int surplus = 0;
  std::size_t cut = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    surplus += to_int(s[p].sign);
    if (surplus == 0) {
      cut = p + 1;
      break;
    }
  }
  if (cut == s.size()) throw precondition_error("no proper balanced prefix");
  return {{0, 2}, {Word(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut)),
                   Word(s.begin() + static_cast<std::ptrdiff_t>(cut), s.end())}};
}

namespace detail {

inline Decomposition from_collection_split(const WordTuple& t, const CollectionSplit& split) {
  const std::size_t n = t.size();
  if (split.pieces.size() != 2 * n) throw soundness_error("collection split does not have 2n pieces");
  Decomposition d;
  d.boundaries.assign(n + 1, 0);
  for (const Piece& p : split.pieces) {
    const Word& s = t[p.component];
    d.pieces.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(p.begin),
                          s.begin() + static_cast<std::ptrdiff_t>(p.end));
    for (std::size_t j = p.component + 1; j <= n; ++j) ++d.boundaries[j];
  }
  return d;
}

inline Decomposition decompose_brute(const WordTuple& t, const ScanBounds& bounds) {
  const int n = static_cast<int>(t.size());
  const Word s = concat(t);
  require_bound(s.size(), bounds.zero_scan);
  const Profile profile = Profile::of(t);
  std::optional<Decomposition> found;
  scan_full_sign_vectors(s.size(), [&](const SignVector& y) {
    if (y.count(1) == 0 || y.count(-1) == 0) return false;
    if (malt(y, profile) > 2 * n - 1) return false;
    const auto b = type_balance(y, s, n);
    for (int v : b.signed_sum)
      if (v != 0) return false;
    found = decode_decomposition(y, t);
    return true;
  });
  if (!found) throw soundness_error("no decomposition found");
  return *found;
}

} // namespace detail

inline Decomposition decompose(const WordTuple& t, Backend backend = Backend::necklace,
                               const ScanBounds& bounds = {}) {
  detail::check_decomposable(t);
  Decomposition d;
  switch (backend) {
  case Backend::necklace:
    d = t.size() == 1 ? decompose_n1(t[0]) : detail::from_collection_split(t, split_collection(t));
    break;
  case Backend::brute:
    d = detail::decompose_brute(t, bounds);
    break;
  case Backend::kyfan:
    d = find_zero_53(t, bounds).decomposition;
    break;
  }
  if (!verify_decomposition(t, d)) throw soundness_error(to_string(backend) + " backend returned an invalid decomposition");
  return d;
}

} // namespace mcfl
