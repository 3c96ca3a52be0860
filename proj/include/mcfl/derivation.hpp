#pragma once

// Derivation trees of G_n for every balanced tuple, built by induction on
// (total length, number of empty components).

#include <mcfl/decompose.hpp>
#include <mcfl/error.hpp>
#include <mcfl/grammar_gn.hpp>
#include <mcfl/mcfg.hpp>
#include <mcfl/words.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mcfl {

struct DeriveOptions {
  Backend backend = Backend::necklace;
  ScanBounds bounds;
};

namespace detail {

class Deriver {
public:
  Deriver(int n, DeriveOptions opts) : n_(n), opts_(opts) {}

  DerivationTree tuple(const WordTuple& t) {
    DerivationTree node{"", {gn_inner(n_), t}, {}};
    const std::size_t nn = t.size();

    auto child = [&](WordTuple sub) {
      if (!(measure(sub) < measure(t))) throw soundness_error("induction measure did not decrease");
      node.children.push_back(tuple(sub));
    };

    // compatible endpoints
    if (auto pair = first_compatible_endpoints(t)) {
      const auto [e1, e2] = *pair;
      const Letter alpha = endpoint_letter(t, e1);
      WordTuple sub = t;
      if (e1.component == e2.component) {
        node.rule_id = wrap_rule_id(static_cast<int>(e1.component) + 1, alpha);
        Word& s = sub[e1.component];
        s = Word(s.begin() + 1, s.end() - 1);
      } else {
        node.rule_id = pair_rule_id(static_cast<int>(e1.component) + 1, e1.side,
                                    static_cast<int>(e2.component) + 1, e2.side, alpha);
        for (Endpoint e : {e1, e2}) {
          Word& s = sub[e.component];
          if (e.side == Side::left)
            s.erase(s.begin());
          else
            s.pop_back();
        }
      }
      child(std::move(sub));
      return node;
    }

    // a component of length 1
    for (std::size_t j = 0; j < nn; ++j) {
      if (t[j].size() != 1) continue;
      const Letter alpha = t[j][0];
      // lowest carrier of bar(alpha), leftmost occurrence
      std::size_t k = 0;
      std::size_t at = 0;
      while (k < nn) {
        const auto it = std::ranges::find(t[k], bar(alpha));
        if (it != t[k].end()) {
          at = static_cast<std::size_t>(it - t[k].begin());
          break;
        }
        ++k;
      }
      if (k == nn) throw soundness_error("no carrier for a length-1 component");
      const Word& sk = t[k];
      const Word v1(sk.begin(), sk.begin() + static_cast<std::ptrdiff_t>(at));
      const Word v2(sk.begin() + static_cast<std::ptrdiff_t>(at) + 1, sk.end());

      WordTuple pair(nn);
      pair[j] = {alpha};
      pair[k] = {bar(alpha)};
      WordTuple rest;
      for (std::size_t i = 0; i < nn; ++i) {
        if (i == j) continue;
        if (i == k) {
          rest.push_back(v1);
          rest.push_back(v2);
        } else {
          rest.push_back(t[i]);
        }
      }
      std::vector<int> c(nn, 2);
      c[j] = 1;
      c[k] = 3;
      node.rule_id = binary_rule_id(c);
      if (j < k) {
        child(std::move(pair));
        child(std::move(rest));
      } else {
        child(std::move(rest));
        child(std::move(pair));
      }
      return node;
    }

    // all components empty
    const auto empties = static_cast<std::size_t>(std::ranges::count_if(t, [](const Word& s) { return s.empty(); }));
    if (empties == nn) {
      node.rule_id = "empty";
      return node;
    }

    // some empty component next to a long one
    if (empties > 0) {
      for (int orient = 0; orient < 2; ++orient) {
        for (std::size_t j = 0; j + 1 < nn; ++j) {
          const std::size_t e = orient == 0 ? j : j + 1;
          const std::size_t l = orient == 0 ? j + 1 : j;
          if (!t[e].empty() || t[l].size() < 2) continue;
          WordTuple sub = t;
          sub[j] = {t[l][0]};
          sub[j + 1] = Word(t[l].begin() + 1, t[l].end());
          std::vector<int> c(nn, 2);
          c[e] = 0;
          c[l] = 4;
          node.rule_id = binary_rule_id(c);
          child(std::move(sub));
          child(WordTuple(nn));
          return node;
        }
      }
      throw soundness_error("no empty component next to a long one");
    }

    // irreducible, every component of length >= 2
    const Decomposition d = decompose(t, opts_.backend, opts_.bounds);
    node.rule_id = binary_rule_id(d.composition());
    child(d.odd());
    child(d.even());
    return node;
  }

private:
  static std::pair<std::size_t, std::size_t> measure(const WordTuple& t) {
    const auto empties = static_cast<std::size_t>(std::ranges::count_if(t, [](const Word& s) { return s.empty(); }));
    return {total_length(t), empties};
  }

  int n_;
  DeriveOptions opts_;
};

} // namespace detail

inline DerivationTree derive_tuple(const WordTuple& t, const DeriveOptions& opts = {}) {
  if (t.empty()) throw precondition_error("tuple must have at least one component");
  const int n = static_cast<int>(t.size());
  const Word w = concat(t);
  if (!is_in_On(w, n)) throw not_in_language("'" + format_tuple(t) + "' is not balanced");
  return detail::Deriver(n, opts).tuple(t);
}

inline DerivationTree derive_word(const Word& w, int n, const DeriveOptions& opts = {}) {
  if (n < 1) throw precondition_error("n must be at least 1");
  if (!is_in_On(w, n)) throw not_in_language("'" + format_word(w) + "' is not in O_" + std::to_string(n));
  WordTuple t(static_cast<std::size_t>(n));
  t[0] = w;
  return {"init", {gn_start(), {w}}, {derive_tuple(t, opts)}};
}

} // namespace mcfl
