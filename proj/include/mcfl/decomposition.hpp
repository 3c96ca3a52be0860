#pragma once

// Boundaries k_0..k_n and pieces u_1..u_2n with s_j = u_{k_{j-1}+1} ... u_{k_j},
// and the correspondence with fully signed vectors: positions covered by an
// odd piece carry the sign of the first position, even pieces the other one.

#include <mcfl/error.hpp>
#include <mcfl/sign_vector.hpp>
#include <mcfl/words.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mcfl {

struct Decomposition {
  std::vector<std::size_t> boundaries; // k_0 .. k_n
  std::vector<Word> pieces;            // u_1 .. u_2n (0-based here)

  /// (u_1, u_3, ..., u_{2n-1})
  WordTuple odd() const {
    WordTuple out;
    for (std::size_t l = 0; l < pieces.size(); l += 2) out.push_back(pieces[l]);
    return out;
  }
  /// (u_2, u_4, ..., u_2n)
  WordTuple even() const {
    WordTuple out;
    for (std::size_t l = 1; l < pieces.size(); l += 2) out.push_back(pieces[l]);
    return out;
  }
  /// c_j = k_j - k_{j-1}
  std::vector<int> composition() const {
    std::vector<int> out;
    for (std::size_t j = 1; j < boundaries.size(); ++j)
      out.push_back(static_cast<int>(boundaries[j] - boundaries[j - 1]));
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline bool verify_decomposition(const WordTuple& t, const Decomposition& d) {
  const std::size_t n = t.size();
  if (n == 0) return false;
  if (d.boundaries.size() != n + 1 || d.pieces.size() != 2 * n) return false;
  if (d.boundaries.front() != 0 || d.boundaries.back() != 2 * n) return false;
  for (std::size_t j = 1; j <= n; ++j)
    if (d.boundaries[j] < d.boundaries[j - 1]) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Word s;
    for (std::size_t l = d.boundaries[j]; l < d.boundaries[j + 1]; ++l)
      s.insert(s.end(), d.pieces[l].begin(), d.pieces[l].end());
    if (s != t[j]) return false;
  }
  const int types = static_cast<int>(n);
  for (const Word& w : {concat(d.odd()), concat(d.even())}) {
    if (w.empty()) return false;
    if (max_type(w) > types) return false;
    if (!is_in_On(w, types)) return false;
  }
  return true;
}

inline std::string format_decomposition(const Decomposition& d) {
  std::string out = "k=";
  for (std::size_t j = 0; j < d.boundaries.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(d.boundaries[j]);
  }
  out += " u=" + format_tuple(d.pieces);
  return out;
}

/// Pieces are the maximal sign runs of y. Equal signs across a component
/// boundary insert an empty piece, which belongs to the next component.
/// Returns nothing when more than 2n pieces are needed.
inline std::optional<Decomposition> decode_decomposition(const SignVector& y, const WordTuple& t) {
  const Profile profile = Profile::of(t);
  if (y.size() != profile.total()) throw precondition_error("sign vector and tuple differ in length");
  if (!y.fully_signed()) throw precondition_error("decoding needs a fully signed vector");
  const std::size_t n = t.size();
  const Word letters = concat(t);

  Decomposition d;
  d.boundaries.push_back(0);
  d.pieces.emplace_back();
  std::size_t comp_end = profile.lengths().empty() ? 0 : profile.lengths()[0];
  std::size_t comp = 0;
  for (std::size_t p = 0; p < y.size(); ++p) {
    if (p > 0) {
      if (p == comp_end) {
        d.boundaries.push_back(d.pieces.size());
        ++comp;
        comp_end += profile.lengths()[comp];
        d.pieces.emplace_back();
        if (y[p] == y[p - 1]) d.pieces.emplace_back();
      } else if (y[p] != y[p - 1]) {
        d.pieces.emplace_back();
      }
    }
    d.pieces.back().push_back(letters[p]);
  }
  if (d.pieces.size() > 2 * n) return std::nullopt;
  d.pieces.resize(2 * n);
  d.boundaries.push_back(2 * n);
  return d;
}

/// Odd pieces get +, even pieces get -.
inline SignVector encode_decomposition(const Decomposition& d) {
  SignVector x;
  for (std::size_t l = 0; l < d.pieces.size(); ++l)
    for (std::size_t i = 0; i < d.pieces[l].size(); ++i) x.entries.push_back(l % 2 == 0 ? 1 : -1);
  return x;
}

} // namespace mcfl
