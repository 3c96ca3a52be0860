#pragma once

// Labelings of O^m \ {0} whose zeros encode balanced splits.
//
// Position p of a sign vector carries bead s_p. Completing x to y and giving
// the + positions to thief A, the per-type discrepancy A - B is
// sum_p y_p * sign(s_p) over the beads of that type.

#include <mcfl/decomposition.hpp>
#include <mcfl/error.hpp>
#include <mcfl/necklace.hpp>
#include <mcfl/sign_vector.hpp>
#include <mcfl/words.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mcfl {

struct ScanBounds {
  std::size_t zero_scan = 12; // 3^m scans
  std::size_t pair_scan = 9;  // comparable-pair scans
};

namespace detail {

inline void require_nonzero(const SignVector& x) {
  if (x.all_zero()) throw precondition_error("sign vector must not be all zero");
}

inline void require_length(const SignVector& x, std::span<const Letter> s) {
  if (x.size() != s.size()) throw precondition_error("sign vector and word differ in length");
}

inline void require_bound(std::size_t m, std::size_t bound) {
  if (m > bound)
    throw bound_exceeded("length " + std::to_string(m) + " exceeds scan bound " + std::to_string(bound));
}

/// D_i(x) = sum over signed type-i positions of x_p * sign(s_p), and u_i the
/// number of unsigned type-i positions; index i-1.
struct TypeBalance {
  std::vector<int> signed_sum;
  std::vector<int> unsigned_count;
};

inline TypeBalance type_balance(const SignVector& x, std::span<const Letter> s, int n_types) {
  TypeBalance b{std::vector<int>(static_cast<std::size_t>(n_types), 0),
                std::vector<int>(static_cast<std::size_t>(n_types), 0)};
  for (std::size_t p = 0; p < x.size(); ++p) {
    const auto i = static_cast<std::size_t>(s[p].type - 1);
    if (x[p] == 0)
      ++b.unsigned_count[i];
    else
      b.signed_sum[i] += x[p] * to_int(s[p].sign);
  }
  return b;
}

inline void check_label(int label, std::size_t m, int n) {
  const int bound = static_cast<int>(m) + n;
  if (label > bound || label < -bound)
    throw soundness_error("label " + std::to_string(label) + " outside +-" + std::to_string(bound));
}

} // namespace detail

/// Maximum number of sign alternations over the completions of x.
inline int alt(const SignVector& x) {
  detail::require_nonzero(x);
  const std::size_t m = x.size();
  int out = 0;
  std::optional<std::size_t> last;
  for (std::size_t p = 0; p < m; ++p) {
    if (x[p] == 0) continue;
    if (!last)
      out += static_cast<int>(p); // leading zeros
    else {
      const int gap = static_cast<int>(p - *last - 1);
      // gap zeros between two signed entries: gap + 1 alternations are
      // possible exactly when the endpoints allow that parity
      const bool same = x[p] == x[*last];
      out += (gap % 2 == 1) == same ? gap + 1 : gap;
    }
    last = p;
  }
  out += static_cast<int>(m - *last - 1);
  return out;
}

/// First letter of an alt-maximizing completion: x = 0^k kappa ... gives
/// kappa * (-1)^k.
inline int sign_of(const SignVector& x) {
  detail::require_nonzero(x);
  std::size_t k = 0;
  while (x[k] == 0) ++k;
  return k % 2 == 0 ? x[k] : -x[k];
}

/// kappa * i for the smallest type i such that every completion gives the
/// kappa side strictly more of type i, else 0.
inline int unbalance(const SignVector& x, std::span<const Letter> s) {
  detail::require_length(x, s);
  const int n_types = max_type(s);
  const auto b = detail::type_balance(x, s, n_types);
  for (int i = 1; i <= n_types; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    if (b.signed_sum[k] > b.unsigned_count[k]) return i;
    if (-b.signed_sum[k] > b.unsigned_count[k]) return -i;
  }
  return 0;
}

inline int lambda_52(const SignVector& x, std::span<const Letter> s, int n) {
  detail::require_length(x, s);
  check_alphabet(s, n);
  const int a = alt(x);
  const int label = a > n ? sign_of(x) * a : unbalance(x, s);
  detail::check_label(label, x.size(), n);
  return label;
}

/// Completion of x by the propagation rule: an unsigned neighbor of a signed
/// position takes the same sign across a component boundary and the opposite
/// sign otherwise. The result maximizes malt.
inline SignVector h_completion(const SignVector& x, const Profile& profile) {
  detail::require_nonzero(x);
  if (x.size() != profile.total()) throw precondition_error("sign vector and profile differ in length");
  SignVector y = x;
  const std::size_t m = y.size();
  for (std::size_t p = 1; p < m; ++p)
    if (y[p] == 0 && y[p - 1] != 0) y[p] = profile.boundary_before(p) ? y[p - 1] : -y[p - 1];
  for (std::size_t p = m - 1; p-- > 0;)
    if (y[p] == 0 && y[p + 1] != 0) y[p] = profile.boundary_before(p + 1) ? y[p + 1] : -y[p + 1];
  return y;
}

inline int h(const SignVector& x, const Profile& profile) { return malt(h_completion(x, profile), profile); }

/// First letter shared by the malt-maximizing completions.
inline int leading_sign(const SignVector& x, const Profile& profile) { return h_completion(x, profile)[0]; }

inline int lambda_53(int b, const SignVector& x, const Profile& profile, std::span<const Letter> s, int n) {
  if (b != 1 && b != -1) throw precondition_error("b must be +1 or -1");
  detail::require_length(x, s);
  check_alphabet(s, n);
  const SignVector y = h_completion(x, profile);
  const int hv = malt(y, profile);
  int label;
  if (hv >= 2 * n)
    label = y[0] * (hv - n + 2);
  else if (x.count(1) == 0 || x.count(-1) == 0) {
    const int absent = x.count(1) == 0 ? 1 : -1;
    label = -b * absent * (n + 1);
  } else
    label = unbalance(x, s);
  detail::check_label(label, x.size(), n);
  return label;
}

/// Fills the zeros of x so that every type reaches its target discrepancy.
/// Zeros are filled left to right, each moving its type toward the target.
inline SignVector balance_completion(const SignVector& x, std::span<const Letter> s, int n_types,
                                     const AmountVector& target) {
  detail::require_length(x, s);
  auto b = detail::type_balance(x, s, n_types);
  std::vector<int> left = b.unsigned_count;
  SignVector y = x;
  for (std::size_t p = 0; p < y.size(); ++p) {
    if (y[p] != 0) continue;
    const auto i = static_cast<std::size_t>(s[p].type - 1);
    int& c = b.signed_sum[i];
    const int t = target[i];
    const int e = c < t ? 1 : c > t ? -1 : (left[i] % 2 == 0 ? 1 : -1);
    y[p] = e * to_int(s[p].sign);
    c += e;
    --left[i];
  }
  for (std::size_t i = 0; i < target.size(); ++i)
    if (b.signed_sum[i] != target[i]) throw soundness_error("completion misses the target discrepancy");
  return y;
}

/// Cuts at sign changes; thief A owns the + positions.
inline NecklaceSplit split_from_signs(const SignVector& y) {
  NecklaceSplit split;
  split.start = y.size() > 0 && y[0] == -1 ? Part::B : Part::A;
  for (std::size_t p = 1; p < y.size(); ++p)
    if (y[p] != y[p - 1]) split.cuts.push_back(p);
  return split;
}

struct Zero52 {
  SignVector zero;
  SignVector completion;
  NecklaceSplit split;
};

/// Default target: 0 for even totals, +1 for odd ones.
inline AmountVector default_target(std::span<const Letter> s, int n_types) {
  AmountVector t = amount(s, n_types);
  for (int& v : t) v = v % 2 == 0 ? 0 : 1;
  return t;
}

inline Zero52 find_zero_52(std::span<const Letter> s, int n, std::optional<AmountVector> target = std::nullopt,
                           const ScanBounds& bounds = {}) {
  if (n < 1) throw precondition_error("need at least one bead type");
  check_alphabet(s, n);
  if (s.empty()) throw precondition_error("empty necklace has no sign vectors");
  if (s.size() <= static_cast<std::size_t>(n) && !is_in_On(s, n))
    throw precondition_error("an unbalanced necklace needs more than n beads");
  detail::require_bound(s.size(), bounds.zero_scan);
  const AmountVector t = target ? *target : default_target(s, n);
  if (!parity_feasible(s, n, t)) throw parity_error("target does not match the parity of the per-type totals");

  std::optional<SignVector> zero;
  scan_sign_vectors(s.size(), [&](const SignVector& x) {
    if (lambda_52(x, s, n) != 0) return false;
    zero = x;
    return true;
  });
  if (!zero) throw soundness_error("labeling has no zero");

  Zero52 out{*zero, balance_completion(*zero, s, n, t), {}};
  out.split = split_from_signs(out.completion);
  if (out.split.cuts.size() > static_cast<std::size_t>(n) || discrepancy(s, n, out.split) != t)
    throw soundness_error("decoded zero is not a valid split");
  return out;
}

namespace detail {

inline void check_decomposable(const WordTuple& t) {
  if (t.empty()) throw precondition_error("tuple must have at least one component");
  const int n = static_cast<int>(t.size());
  for (const Word& s : t) {
    check_alphabet(s, n);
    if (s.size() < 2) throw precondition_error("every component needs length at least 2");
  }
  if (!is_in_On(concat(t), n)) throw precondition_error("concatenation is not balanced");
  if (!is_irreducible(t)) throw precondition_error("tuple is reducible");
}

} // namespace detail

struct Zero53 {
  SignVector zero;
  SignVector completion;
  Decomposition decomposition;
};

/// Zeros only come from the unbalance case, which does not depend on b, so a
/// zero of one labeling is a zero of the other.
inline Zero53 find_zero_53(const WordTuple& t, const ScanBounds& bounds = {}) {
  detail::check_decomposable(t);
  const int n = static_cast<int>(t.size());
  const Word s = concat(t);
  detail::require_bound(s.size(), bounds.zero_scan);
  const Profile profile = Profile::of(t);

  std::optional<SignVector> zero;
  scan_sign_vectors(s.size(), [&](const SignVector& x) {
    if (lambda_53(1, x, profile, s, n) != 0) return false;
    zero = x;
    return true;
  });
  if (!zero) throw soundness_error("no zero on an irreducible instance");
  if (lambda_53(-1, *zero, profile, s, n) != 0) throw soundness_error("labelings disagree on a zero");

  Zero53 out{*zero, balance_completion(*zero, s, n, AmountVector(static_cast<std::size_t>(n), 0)), {}};
  auto d = decode_decomposition(out.completion, t);
  if (!d || !verify_decomposition(t, *d)) throw soundness_error("decoded zero is not a valid decomposition");
  out.decomposition = std::move(*d);
  return out;
}

struct KyFanReport {
  enum class Kind : unsigned char { ok, zero, antisymmetry, complementary_pair };
  Kind kind = Kind::ok;
  SignVector x;
  SignVector y;
  int label_x = 0;
  int label_y = 0;

  bool ok_or_zero() const noexcept { return kind == Kind::ok || kind == Kind::zero; }
};

inline std::string to_string(KyFanReport::Kind k) {
  switch (k) {
  case KyFanReport::Kind::ok: return "ok";
  case KyFanReport::Kind::zero: return "zero";
  case KyFanReport::Kind::antisymmetry: return "antisymmetry";
  case KyFanReport::Kind::complementary_pair: return "complementary_pair";
  }
  return "?";
}

/// Checks lambda(-x) = -lambda(x) and lambda(x) + lambda(y) != 0 for x <= y.
/// A zero is reported first, in scan order.
inline KyFanReport check_kyfan_hypotheses(const std::function<int(const SignVector&)>& labeling, std::size_t m,
                                          const ScanBounds& bounds = {}) {
  detail::require_bound(m, bounds.pair_scan);
  KyFanReport report;
  if (m == 0) return report;

  // index = sum digit_p * 3^(m-1-p), digit 0 -> 0, 1 -> +, 2 -> -
  std::size_t total = 1;
  for (std::size_t p = 0; p < m; ++p) total *= 3;
  std::vector<std::size_t> weight(m);
  for (std::size_t p = m, w = 1; p-- > 0; w *= 3) weight[p] = w;

  auto decode = [&](std::size_t code) {
    SignVector x(m);
    for (std::size_t p = 0; p < m; ++p) {
      const std::size_t d = code / weight[p] % 3;
      x[p] = d == 0 ? 0 : d == 1 ? 1 : -1;
    }
    return x;
  };
  auto negate = [&](std::size_t code) {
    std::size_t out = 0;
    for (std::size_t p = 0; p < m; ++p) {
      const std::size_t d = code / weight[p] % 3;
      out += (d == 0 ? 0 : 3 - d) * weight[p];
    }
    return out;
  };

  std::vector<int> label(total, 0);
  for (std::size_t c = 1; c < total; ++c) {
    label[c] = labeling(decode(c));
    if (label[c] == 0) {
      report.kind = KyFanReport::Kind::zero;
      report.x = decode(c);
      return report;
    }
  }
  for (std::size_t c = 1; c < total; ++c) {
    const std::size_t nc = negate(c);
    if (label[nc] != -label[c]) {
      report = {KyFanReport::Kind::antisymmetry, decode(c), decode(nc), label[c], label[nc]};
      return report;
    }
  }
  std::vector<std::size_t> support;
  for (std::size_t c = 1; c < total; ++c) {
    support.clear();
    for (std::size_t p = 0; p < m; ++p)
      if (c / weight[p] % 3 != 0) support.push_back(p);
    const std::size_t subsets = std::size_t{1} << support.size();
    // mask marks the support positions zeroed out to get x <= y = c
    for (std::size_t mask = 1; mask + 1 < subsets; ++mask) {
      std::size_t x = c;
      for (std::size_t k = 0; k < support.size(); ++k)
        if (mask >> k & 1) x -= (c / weight[support[k]] % 3) * weight[support[k]];
      if (label[x] + label[c] == 0) {
        report = {KyFanReport::Kind::complementary_pair, decode(x), decode(c), label[x], label[c]};
        return report;
      }
    }
  }
  return report;
}

} // namespace mcfl
