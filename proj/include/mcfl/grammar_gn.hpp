#pragma once

// The dimension-n grammar G_n over Sigma_n with non-terminals S (rank 1) and
// I (rank n):
//
//   init   S(x1...xn) <- I(x1,...,xn)
//   bin    I(w1,...,wn) <- I(x1,...,xn), I(y1,...,yn)   with w1...wn = x1y1...xnyn
//   un     I(...) <- I(x1,...,xn) adding a compatible pair at two endpoints
//   empty  I(,...,)
//
// Rule ids:
//   init
//   bin:<c1>,...,<cn>            c_j = number of variables in w_j
//   un:<k>:wrap:<letter>         w_k = letter x_k bar(letter)
//   un:<k>:<L|R>:<l>:<L|R>:<letter>   k < l; letter at the left/right of x_k,
//                                     its bar at the left/right of x_l
//   empty
//
// The (k,l,alpha) and (l,k,bar alpha) instances of the unary family are one
// rule; the id always names it with k < l.

#include <mcfl/mcfg.hpp>
#include <mcfl/words.hpp>

#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace mcfl {


struct GnGrammar {
  int n = 0;
  Grammar grammar;
};

struct RuleCensus {
  std::size_t init = 0;
  std::size_t binary = 0;
  std::size_t unary = 0;
  std::size_t empty = 0;

  std::size_t total() const noexcept { return init + binary + unary + empty; }
  friend bool operator==(const RuleCensus&, const RuleCensus&) = default;
};

inline NonTerminal gn_start() { return {"S", 1}; }
inline NonTerminal gn_inner(int n) { return {"I", n}; }

inline std::string binary_rule_id(const std::vector<int>& composition) {
  std::string id = "bin:";
  for (std::size_t j = 0; j < composition.size(); ++j) {
    if (j) id += ',';
    id += std::to_string(composition[j]);
  }
  return id;
}

inline std::string wrap_rule_id(int k, Letter alpha) {
  return "un:" + std::to_string(k) + ":wrap:" + format_letter(alpha);
}

/// Id of the rule putting `alpha` at side `side_k` of component k and
/// bar(alpha) at side `side_l` of component l (1-based, k != l).
inline std::string pair_rule_id(int k, Side side_k, int l, Side side_l, Letter alpha) {
  if (k > l) return pair_rule_id(l, side_l, k, side_k, bar(alpha));
  return "un:" + std::to_string(k) + ":" + static_cast<char>(side_k) + ":" + std::to_string(l) +
         ":" + static_cast<char>(side_l) + ":" + format_letter(alpha);
}

/// Compositions of `total` into `parts` nonnegative integers, in decreasing
/// lexicographic order (so n = 2 gives 4,0 3,1 2,2 1,3 0,4).
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == parts - 1) {
      cur[static_cast<std::size_t>(j)] = left;
      out.push_back(cur);
      return;
    }
    for (int c = left; c >= 0; --c) {
      cur[static_cast<std::size_t>(j)] = c;
      self(self, j + 1, left - c);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

namespace detail {

inline Pattern identity_pattern(int premise, int index) {
  return Pattern{Variable{premise, index}};
}

inline Rule binary_rule(int n, const std::vector<int>& composition) {
  // Fixed token string x1 y1 x2 y2 ... xn yn cut into n factors.
  std::vector<Symbol> tokens;
  for (int i = 1; i <= n; ++i) {
    tokens.emplace_back(Variable{0, i});
    tokens.emplace_back(Variable{1, i});
  }
  Rule r{binary_rule_id(composition), gn_inner(n), {}, {gn_inner(n), gn_inner(n)}};
  std::size_t at = 0;
  for (int c : composition) {
    r.patterns.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(at),
                            tokens.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(c)));
    at += static_cast<std::size_t>(c);
  }
  return r;
}

inline Pattern attach(int k, Side side, Letter l) {
  Pattern p{Variable{0, k}};
  if (side == Side::left)
    p.insert(p.begin(), l);
  else
    p.push_back(l);
  return p;
}

inline Rule unary_base(int n, std::string id) {
  Rule r{std::move(id), gn_inner(n), {}, {gn_inner(n)}};
  for (int j = 1; j <= n; ++j) r.patterns.push_back(identity_pattern(0, j));
  return r;
}

inline Rule wrap_rule(int n, int k, Letter alpha) {
  Rule r = unary_base(n, wrap_rule_id(k, alpha));
  r.patterns[static_cast<std::size_t>(k - 1)] = Pattern{alpha, Variable{0, k}, bar(alpha)};
  return r;
}

inline Rule pair_rule(int n, int k, Side side_k, int l, Side side_l, Letter alpha) {
  Rule r = unary_base(n, pair_rule_id(k, side_k, l, side_l, alpha));
  r.patterns[static_cast<std::size_t>(k - 1)] = attach(k, side_k, alpha);
  r.patterns[static_cast<std::size_t>(l - 1)] = attach(l, side_l, bar(alpha));
  return r;
}

} // namespace detail

/// Ground instance of a unary rule, as generated by build_gn.
inline Rule gn_pair_rule(int n, int k, Side side_k, int l, Side side_l, Letter alpha) {
  if (k > l) return gn_pair_rule(n, l, side_l, k, side_k, bar(alpha));
  return detail::pair_rule(n, k, side_k, l, side_l, alpha);
}

inline Rule gn_wrap_rule(int n, int k, Letter alpha) { return detail::wrap_rule(n, k, alpha); }

inline Rule gn_binary_rule(int n, const std::vector<int>& composition) {
  return detail::binary_rule(n, composition);
}

inline GnGrammar build_gn(int n) {
  if (n < 1) throw precondition_error("G_n needs n >= 1, got " + std::to_string(n));
  std::vector<Rule> rules;

  {
    Rule init{"init", gn_start(), {Pattern{}}, {gn_inner(n)}};
    for (int j = 1; j <= n; ++j) init.patterns[0].emplace_back(Variable{0, j});
    rules.push_back(std::move(init));
  }

  for (const auto& c : compositions(2 * n, n)) rules.push_back(detail::binary_rule(n, c));

  std::vector<Letter> sigma;
  for (int i = 1; i <= n; ++i) {
    sigma.push_back(Letter::pos(i));
    sigma.push_back(Letter::neg(i));
  }
  // Every (k, l, alpha) with both orientations; the id set removes the
  // duplicates (k, l, alpha) ~ (l, k, bar alpha).
  std::set<std::string> seen;
  constexpr Side sides[] = {Side::left, Side::right};
  for (int k = 1; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      if (k == l) {
        for (Letter a : sigma)
          if (seen.insert(wrap_rule_id(k, a)).second) rules.push_back(detail::wrap_rule(n, k, a));
        continue;
      }
      for (Side sk : sides)
        for (Side sl : sides)
          for (Letter a : sigma) {
            for (auto [kk, skk, ll, sll, aa] : {std::tuple{k, sk, l, sl, a}, std::tuple{l, sl, k, sk, bar(a)}}) {
              if (seen.insert(pair_rule_id(kk, skk, ll, sll, aa)).second)
                rules.push_back(gn_pair_rule(n, kk, skk, ll, sll, aa));
            }
          }
    }
  }

  rules.push_back(Rule{"empty", gn_inner(n), std::vector<Pattern>(static_cast<std::size_t>(n)), {}});

  return {n, Grammar({gn_start(), gn_inner(n)}, gn_start(), std::move(rules))};
}

inline RuleCensus rule_census(const GnGrammar& g) {
  RuleCensus c;
  for (const Rule& r : g.grammar.rules()) {
    if (r.id == "init") ++c.init;
    else if (r.id == "empty") ++c.empty;
    else if (r.id.starts_with("bin:")) ++c.binary;
    else if (r.id.starts_with("un:")) ++c.unary;
  }
  return c;
}

} // namespace mcfl
