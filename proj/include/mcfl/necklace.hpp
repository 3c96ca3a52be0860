#pragma once

// Signed necklace splitting.
//
// A necklace is a word: bead type = letter type, bead sign = letter sign.
// The amount of type i in a stretch of beads is (#positive - #negative).
//
// split_single: one necklace, at most n cuts, two thieves, prescribed
// per-type discrepancy d in {-1, 0, 1}^n (exhaustive search).
//
// split_collection: n >= 2 necklaces, at most n cuts in total, two balanced
// nonempty parts of at most n subnecklaces each. Built the constructive way:
// normalize the end beads, glue s' = s_1' bar(s_2) s_3 bar(s_4) ... with the
// two outer beads dropped, split s' as a single necklace, then slice the
// original collection along those cuts and the necklace boundaries into
// u_1 .. u_2n, odd pieces to part A and even pieces to part B.

#include <mcfl/error.hpp>
#include <mcfl/words.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcfl {

/// Per-type amount; entry i-1 belongs to type i.
using AmountVector = std::vector<int>;

inline AmountVector amount(std::span<const Letter> x, int n_types) {
  check_alphabet(x, n_types);
  AmountVector out(static_cast<std::size_t>(n_types), 0);
  for (Letter l : x) out[static_cast<std::size_t>(l.type - 1)] += to_int(l.sign);
  return out;
}

inline bool is_zero(const AmountVector& a) {
  return std::ranges::all_of(a, [](int v) { return v == 0; });
}

enum class Part : unsigned char { A, B };

constexpr Part other(Part p) noexcept { return p == Part::A ? Part::B : Part::A; }

/// Cuts are gap positions in [0, m]; gap g sits before bead g+1. The
/// intervals between consecutive cuts alternate between the two thieves,
/// `start` owning the first one.
struct NecklaceSplit {
  std::vector<std::size_t> cuts;
  Part start = Part::A;

  friend bool operator==(const NecklaceSplit&, const NecklaceSplit&) = default;

  std::vector<std::pair<std::size_t, std::size_t>> intervals(std::size_t m) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t prev = 0;
    for (std::size_t c : cuts) {
      out.emplace_back(prev, c);
      prev = c;
    }
    out.emplace_back(prev, m);
    return out;
  }

  Part owner(std::size_t interval) const noexcept {
    return interval % 2 == 0 ? start : other(start);
  }
};

/// amount(thief A) - amount(thief B).
inline AmountVector discrepancy(std::span<const Letter> x, int n_types, const NecklaceSplit& s) {
  AmountVector d(static_cast<std::size_t>(n_types), 0);
  const auto iv = s.intervals(x.size());
  for (std::size_t k = 0; k < iv.size(); ++k) {
    const auto [lo, hi] = iv[k];
    if (lo > hi || hi > x.size()) throw precondition_error("cuts out of order or out of range");
    const auto a = amount(x.subspan(lo, hi - lo), n_types);
    const int sgn = s.owner(k) == Part::A ? 1 : -1;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += sgn * a[i];
  }
  return d;
}

/// The targets split_single accepts: d_i = 0 for even totals, d_i = +-1 for odd.
inline bool parity_feasible(std::span<const Letter> x, int n_types, const AmountVector& target) {
  if (target.size() != static_cast<std::size_t>(n_types)) return false;
  const auto total = amount(x, n_types);
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < -1 || target[i] > 1) return false;
    if ((total[i] - target[i]) % 2 != 0) return false;
  }
  return true;
}

/// Every parity-feasible target, in lexicographic order.
inline std::vector<AmountVector> feasible_targets(std::span<const Letter> x, int n_types) {
  const auto total = amount(x, n_types);
  std::vector<AmountVector> out{AmountVector{}};
  for (int t : total) {
    std::vector<AmountVector> next;
    for (const auto& prefix : out) {
      for (int d : {-1, 0, 1}) {
        if ((t - d) % 2 != 0) continue;
        auto v = prefix;
        v.push_back(d);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Lexicographically first split in (number of cuts, cut positions, start)
/// order with at most n_types distinct cuts and discrepancy exactly `target`.
/// `start` pins which thief owns the first interval.
inline NecklaceSplit split_single(std::span<const Letter> x, int n_types, const AmountVector& target,
                                  std::optional<Part> start = std::nullopt) {
  if (n_types < 1) throw precondition_error("need at least one bead type");
  check_alphabet(x, n_types);
  if (!parity_feasible(x, n_types, target))
    throw parity_error("target does not match the parity of the per-type totals");

  const std::size_t m = x.size();
  const std::size_t types = static_cast<std::size_t>(n_types);
  // prefix[g] = amount of the first g beads
  std::vector<AmountVector> prefix(m + 1, AmountVector(types, 0));
  for (std::size_t g = 0; g < m; ++g) {
    prefix[g + 1] = prefix[g];
    prefix[g + 1][static_cast<std::size_t>(x[g].type - 1)] += to_int(x[g].sign);
  }

  std::vector<std::size_t> cuts;
  AmountVector odd_minus_even(types);
  auto matches = [&](Part s) {
    // odd_minus_even is amount(first interval's owner) - amount(other owner)
    const int sgn = s == Part::A ? 1 : -1;
    for (std::size_t i = 0; i < types; ++i)
      if (sgn * odd_minus_even[i] != target[i]) return false;
    return true;
  };
  auto evaluate = [&] {
    std::fill(odd_minus_even.begin(), odd_minus_even.end(), 0);
    std::size_t prev = 0;
    int sgn = 1;
    for (std::size_t k = 0; k <= cuts.size(); ++k) {
      const std::size_t next = k < cuts.size() ? cuts[k] : m;
      for (std::size_t i = 0; i < types; ++i) odd_minus_even[i] += sgn * (prefix[next][i] - prefix[prev][i]);
      prev = next;
      sgn = -sgn;
    }
  };

  for (std::size_t r = 0; r <= types; ++r) {
    if (r > m + 1) break;
    cuts.resize(r);
    std::iota(cuts.begin(), cuts.end(), std::size_t{0});
    while (true) {
      evaluate();
      for (Part s : {Part::A, Part::B}) {
        if (start && *start != s) continue;
        if (matches(s)) return {cuts, s};
      }
      // next r-combination of {0..m}
      std::size_t i = r;
      while (i > 0 && cuts[i - 1] == m - (r - i)) --i;
      if (i == 0) break;
      ++cuts[i - 1];
      for (std::size_t j = i; j < r; ++j) cuts[j] = cuts[j - 1] + 1;
    }
  }
  throw soundness_error("no split with at most " + std::to_string(n_types) +
                        " cuts reaches the requested discrepancy");
}

// ---------------------------------------------------------------------------
// collections

enum class SplitCase : unsigned char { reducible, case_i, case_ii };

/// Relabeling that makes the first bead of s_1 a positive type-1 bead and the
/// last bead of s_n a positive bead of type 1 (case i) or type n (case ii).
/// perm[t-1] is the new type of old type t; flip[t-1] swaps its signs.
struct Normalization {
  std::vector<int> perm;
  std::vector<bool> flip;
  SplitCase tag = SplitCase::reducible;

  Letter apply(Letter l) const {
    const auto t = static_cast<std::size_t>(l.type - 1);
    return {perm[t], flip[t] ? -l.sign : l.sign};
  }

  Letter invert(Letter l) const {
    const auto it = std::ranges::find(perm, l.type);
    const auto t = static_cast<std::size_t>(it - perm.begin());
    return {static_cast<int>(t) + 1, flip[t] ? -l.sign : l.sign};
  }

  WordTuple apply(const WordTuple& col) const {
    WordTuple out = col;
    for (auto& s : out)
      for (auto& l : s) l = apply(l);
    return out;
  }

  WordTuple invert(const WordTuple& col) const {
    WordTuple out = col;
    for (auto& s : out)
      for (auto& l : s) l = invert(l);
    return out;
  }
};

inline Normalization identity_normalization(int n) {
  Normalization nz;
  nz.perm.resize(static_cast<std::size_t>(n));
  std::iota(nz.perm.begin(), nz.perm.end(), 1);
  nz.flip.assign(static_cast<std::size_t>(n), false);
  return nz;
}

/// Requires n >= 2 and that the first bead of s_1 and the last bead of s_n
/// are not compatible.
inline Normalization normalize(const WordTuple& col) {
  const int n = static_cast<int>(col.size());
  if (n < 2) throw precondition_error("normalization needs at least two necklaces");
  if (col.front().empty() || col.back().empty())
    throw precondition_error("outer necklaces must be nonempty");
  const Letter first = col.front().front();
  const Letter last = col.back().back();
  if (compatible(first, last)) throw precondition_error("outer end beads are compatible");

  Normalization nz;
  nz.perm.assign(static_cast<std::size_t>(n), 0);
  nz.flip.assign(static_cast<std::size_t>(n), false);
  nz.perm[static_cast<std::size_t>(first.type - 1)] = 1;
  nz.flip[static_cast<std::size_t>(first.type - 1)] = !first.positive();
  int next = 2;
  if (last.type == first.type) {
    nz.tag = SplitCase::case_i;
  } else {
    nz.tag = SplitCase::case_ii;
    nz.perm[static_cast<std::size_t>(last.type - 1)] = n;
    nz.flip[static_cast<std::size_t>(last.type - 1)] = !last.positive();
  }
  for (auto& p : nz.perm)
    if (p == 0) p = next++;
  return nz;
}

/// One subnecklace: beads [begin, end) of necklace `component` (0-based).
struct Piece {
  std::size_t component = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  Part part = Part::A;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Pieces in necklace order. Outside the reducible shortcut there are exactly
/// 2n of them, u_1 .. u_2n, alternating A, B, A, B, ...
struct CollectionSplit {
  std::vector<Piece> pieces;
  Normalization normalization;

  SplitCase tag() const noexcept { return normalization.tag; }

  std::vector<Word> part(const WordTuple& col, Part p) const {
    std::vector<Word> out;
    for (const auto& pc : pieces)
      if (pc.part == p) {
        const auto& s = col[pc.component];
        out.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(pc.begin),
                         s.begin() + static_cast<std::ptrdiff_t>(pc.end));
      }
    return out;
  }
};

namespace detail {

inline void check_collection(const WordTuple& col) {
  const int n = static_cast<int>(col.size());
  if (n < 2) throw precondition_error("collection splitting needs n >= 2 necklaces");
  for (const auto& s : col) {
    check_alphabet(s, n);
    if (s.size() < 2) throw precondition_error("every necklace needs at least two beads");
  }
  if (!is_zero(amount(concat(col), n))) throw precondition_error("collection is not balanced");
}

struct Endpoint {
  std::size_t component;
  Side side;
};

inline Letter endpoint_letter(const WordTuple& col, Endpoint e) {
  const auto& s = col[e.component];
  return e.side == Side::left ? s.front() : s.back();
}

inline std::optional<std::pair<Endpoint, Endpoint>> first_compatible_endpoints(const WordTuple& col) {
  std::vector<Endpoint> ends;
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (col[j].empty()) continue;
    ends.push_back({j, Side::left});
    ends.push_back({j, Side::right});
  }
  for (std::size_t p = 0; p < ends.size(); ++p)
    for (std::size_t q = p + 1; q < ends.size(); ++q)
      if (compatible(endpoint_letter(col, ends[p]), endpoint_letter(col, ends[q])))
        return std::pair{ends[p], ends[q]};
  return std::nullopt;
}

} // namespace detail

inline bool verify_collection_split(const WordTuple& col, const CollectionSplit& split);

/// Splitting of a balanced collection of n >= 2 necklaces.
inline CollectionSplit split_collection(const WordTuple& col) {
  detail::check_collection(col);
  const int n = static_cast<int>(col.size());
  const auto nn = static_cast<std::size_t>(n);

  CollectionSplit out;

  if (auto pair = detail::first_compatible_endpoints(col)) {
    // Two compatible end beads form part A on their own.
    out.normalization = identity_normalization(n);
    out.normalization.tag = SplitCase::reducible;
    const auto [e1, e2] = *pair;
    for (std::size_t j = 0; j < nn; ++j) {
      const std::size_t len = col[j].size();
      const bool left = (e1.component == j && e1.side == Side::left) ||
                        (e2.component == j && e2.side == Side::left);
      const bool right = (e1.component == j && e1.side == Side::right) ||
                         (e2.component == j && e2.side == Side::right);
      if (left && right && len == 2) {
        out.pieces.push_back({j, 0, 2, Part::A});
        continue;
      }
      const std::size_t lo = left ? 1 : 0;
      const std::size_t hi = right ? len - 1 : len;
      if (left) out.pieces.push_back({j, 0, 1, Part::A});
      out.pieces.push_back({j, lo, hi, Part::B});
      if (right) out.pieces.push_back({j, len - 1, len, Part::A});
    }
    if (!verify_collection_split(col, out))
      throw soundness_error("reducible shortcut produced an invalid split");
    return out;
  }

  out.normalization = normalize(col);
  const WordTuple norm = out.normalization.apply(col);

  // s' = s_1' bar(s_2) s_3 bar(s_4) ... with the outer beads removed.
  Word big;
  for (std::size_t j = 0; j < nn; ++j) {
    auto begin = norm[j].begin() + (j == 0 ? 1 : 0);
    auto end = norm[j].end() - (j + 1 == nn ? 1 : 0);
    for (auto it = begin; it != end; ++it) big.push_back(j % 2 == 0 ? *it : bar(*it));
  }

  AmountVector target(nn, 0);
  if (out.normalization.tag == SplitCase::case_ii) {
    target.front() = -1;
    target.back() = 1;
  }
  const NecklaceSplit t = split_single(big, n, target, Part::A);

  // Gap g of s' is gap g+1 of s = s_1 ... s_n; missing cuts are padded at the
  // final gap of s', which lies after every bead of s'.
  const std::size_t m = big.size() + 2;
  std::vector<std::size_t> cuts;
  for (std::size_t c : t.cuts) cuts.push_back(c + 1);
  while (cuts.size() < nn) cuts.push_back(m - 1);
  std::vector<std::size_t> bounds;
  std::size_t acc = 0;
  for (std::size_t j = 0; j + 1 < nn; ++j) {
    acc += col[j].size();
    bounds.push_back(acc);
    cuts.push_back(acc);
  }
  std::ranges::sort(cuts);
  bounds.push_back(m);

  // u_l = [e_{l-1}, e_l); piece l belongs to the first necklace whose right
  // boundary is >= e_l.
  std::size_t prev = 0;
  std::size_t comp = 0;
  std::size_t comp_start = 0;
  for (std::size_t l = 0; l < 2 * nn; ++l) {
    const std::size_t end = l < cuts.size() ? cuts[l] : m;
    while (end > bounds[comp]) {
      comp_start = bounds[comp];
      ++comp;
    }
    out.pieces.push_back({comp, prev - comp_start, end - comp_start, l % 2 == 0 ? Part::A : Part::B});
    prev = end;
  }

  if (!verify_collection_split(col, out))
    throw soundness_error("collection split failed post-verification");
  return out;
}

/// Pieces tile every necklace in order, at most n distinct interior cuts,
/// and each part is balanced, nonempty and made of at most n subnecklaces.
inline bool verify_collection_split(const WordTuple& col, const CollectionSplit& split) {
  const std::size_t n = col.size();
  if (n == 0) return false;
  std::size_t comp = 0;
  std::size_t pos = 0;
  for (const Piece& p : split.pieces) {
    if (p.component >= n) return false;
    while (p.component > comp) {
      if (pos != col[comp].size()) return false;
      ++comp;
      pos = 0;
    }
    if (p.component != comp || p.begin != pos || p.end < p.begin || p.end > col[comp].size())
      return false;
    pos = p.end;
  }
  if (comp + 1 != n || pos != col[comp].size()) return false;

  // Distinct interior cut positions per necklace.
  std::size_t cut_count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> inner;
    for (const Piece& p : split.pieces)
      if (p.component == j && p.begin > 0 && p.begin < col[j].size()) inner.push_back(p.begin);
    std::ranges::sort(inner);
    cut_count += static_cast<std::size_t>(std::ranges::unique(inner).begin() - inner.begin());
  }
  if (cut_count > n) return false;

  const int types = std::max(static_cast<int>(n), max_type(concat(col)));
  for (Part part : {Part::A, Part::B}) {
    const auto words = split.part(col, part);
    if (words.size() > n) return false;
    Word all;
    for (const auto& w : words) all.insert(all.end(), w.begin(), w.end());
    if (all.empty()) return false;
    if (!is_zero(amount(all, types))) return false;
  }
  return true;
}

} // namespace mcfl
