#pragma once

// Generic multiple context-free grammars.
//
// A rule  A(w_1, ..., w_n) <- B_1(x_{1,1}, ...), ..., B_p(x_{p,1}, ...)
// stores the patterns w_j as strings over letters and variables. Variables
// are implicit: premise k of rank l declares x_{k,1} .. x_{k,l}. A rule is
// linear when every variable occurs at most once across all patterns.

#include <mcfl/error.hpp>
#include <mcfl/words.hpp>

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mcfl {

struct NonTerminal {
  std::string name;
  int rank = 0;

  friend bool operator==(const NonTerminal&, const NonTerminal&) = default;
  friend auto operator<=>(const NonTerminal&, const NonTerminal&) = default;
};

struct Variable {
  int premise = 0; ///< 0-based index into the rule's right-hand side
  int index = 1;   ///< 1-based component of that premise

  friend bool operator==(Variable, Variable) = default;
  friend auto operator<=>(Variable, Variable) = default;
};

using Symbol = std::variant<Letter, Variable>;
using Pattern = std::vector<Symbol>;

struct Rule {
  std::string id;
  NonTerminal lhs;
  std::vector<Pattern> patterns;
  std::vector<NonTerminal> rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Judgment {
  NonTerminal head;
  WordTuple args;

  friend bool operator==(const Judgment&, const Judgment&) = default;
  friend auto operator<=>(const Judgment&, const Judgment&) = default;
};

struct DerivationTree {
  std::string rule_id;
  Judgment conclusion;
  std::vector<DerivationTree> children;

  friend bool operator==(const DerivationTree&, const DerivationTree&) = default;
};

class Grammar {
public:
  Grammar() = default;

  Grammar(std::vector<NonTerminal> nonterminals, NonTerminal start, std::vector<Rule> rules)
      : nonterminals_(std::move(nonterminals)), start_(std::move(start)), rules_(std::move(rules)) {
    if (start_.rank != 1) throw precondition_error("initial non-terminal must have rank 1");
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (!index_.emplace(rules_[i].id, i).second)
        throw precondition_error("duplicate rule id '" + rules_[i].id + "'");
  }

  const std::vector<NonTerminal>& nonterminals() const noexcept { return nonterminals_; }
  const NonTerminal& start() const noexcept { return start_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  const Rule* find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &rules_[it->second];
  }

private:
  std::vector<NonTerminal> nonterminals_;
  NonTerminal start_;
  std::vector<Rule> rules_;
  std::map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// text formats

inline std::string format_variable(Variable v) {
  static constexpr std::string_view names = "xyz";
  std::string out;
  if (v.premise >= 0 && static_cast<std::size_t>(v.premise) < names.size())
    out += names[static_cast<std::size_t>(v.premise)];
  else
    out += "v" + std::to_string(v.premise + 1) + "_";
  return out + std::to_string(v.index);
}

inline std::string format_pattern(const Pattern& p) {
  std::string out;
  for (const Symbol& s : p) {
    if (const auto* l = std::get_if<Letter>(&s))
      out += format_letter(*l);
    else
      out += format_variable(std::get<Variable>(s));
  }
  return out;
}

/// `A(p1, p2) <- B(x1,x2), C(y1,y2)`; nullary rules omit the arrow.
inline std::string format_rule(const Rule& r) {
  std::string out = r.lhs.name + "(";
  for (std::size_t j = 0; j < r.patterns.size(); ++j) {
    if (j) out += ", ";
    out += format_pattern(r.patterns[j]);
  }
  out += ")";
  for (std::size_t k = 0; k < r.rhs.size(); ++k) {
    out += k ? ", " : " <- ";
    out += r.rhs[k].name + "(";
    for (int i = 1; i <= r.rhs[k].rank; ++i) {
      if (i > 1) out += ",";
      out += format_variable({static_cast<int>(k), i});
    }
    out += ")";
  }
  return out;
}

inline std::string format_grammar(const Grammar& g) {
  std::string out;
  for (const Rule& r : g.rules()) out += format_rule(r) + "\n";
  return out;
}

inline std::string format_judgment(const Judgment& j) {
  return j.head.name + "(" + format_tuple(j.args) + ")";
}

/// Inverse of format_judgment; the rank is the number of components.
inline Judgment parse_judgment(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || open == 0 || text.empty() || text.back() != ')')
    throw malformed_input("bad judgment '" + std::string(text) + "'");
  Judgment j;
  j.head.name = std::string(text.substr(0, open));
  j.args = parse_tuple(text.substr(open + 1, text.size() - open - 2));
  j.head.rank = static_cast<int>(j.args.size());
  return j;
}

namespace detail {
inline void format_tree(const DerivationTree& t, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += t.rule_id + " :: " + format_judgment(t.conclusion) + "\n";
  for (const auto& c : t.children) format_tree(c, depth + 1, out);
}
} // namespace detail

/// One node per line, `rule_id :: judgment`, children indented two spaces.
inline std::string format_tree(const DerivationTree& t) {
  std::string out;
  detail::format_tree(t, 0, out);
  return out;
}

inline DerivationTree parse_tree(std::string_view text) {
  struct Line {
    int depth;
    DerivationTree node;
  };
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t indent = line.find_first_not_of(' ');
    if (indent % 2 != 0) throw malformed_input("odd indentation in tree line '" + line + "'");
    const auto sep = line.find(" :: ", indent);
    if (sep == std::string::npos) throw malformed_input("tree line without ' :: ': '" + line + "'");
    DerivationTree node;
    node.rule_id = line.substr(indent, sep - indent);
    node.conclusion = parse_judgment(std::string_view(line).substr(sep + 4));
    lines.push_back({static_cast<int>(indent / 2), std::move(node)});
  }
  if (lines.empty()) throw malformed_input("empty derivation tree");

  // Rebuild bottom-up: a node's children are the following lines one level deeper.
  std::vector<std::pair<int, DerivationTree>> stack;
  for (auto& l : lines) {
    if (stack.empty() ? l.depth != 0 : l.depth > stack.back().first + 1)
      throw malformed_input("tree indentation jumps by more than one level");
    while (!stack.empty() && stack.back().first >= l.depth) {
      auto done = std::move(stack.back());
      stack.pop_back();
      if (stack.empty()) throw malformed_input("derivation tree has more than one root");
      stack.back().second.children.push_back(std::move(done.second));
    }
    stack.emplace_back(l.depth, std::move(l.node));
  }
  while (stack.size() > 1) {
    auto done = std::move(stack.back());
    stack.pop_back();
    stack.back().second.children.push_back(std::move(done.second));
  }
  return std::move(stack.front().second);
}

// ---------------------------------------------------------------------------
// rule semantics

/// Linearity, variable scoping and arity. Returns the first violation.
inline std::optional<std::string> validate_rule(const Rule& r) {
  if (static_cast<int>(r.patterns.size()) != r.lhs.rank)
    return "rule " + r.id + ": " + std::to_string(r.patterns.size()) + " patterns for " +
           r.lhs.name + " of rank " + std::to_string(r.lhs.rank);
  std::set<Variable> seen;
  for (const Pattern& p : r.patterns) {
    for (const Symbol& s : p) {
      const auto* v = std::get_if<Variable>(&s);
      if (!v) continue;
      if (v->premise < 0 || v->premise >= static_cast<int>(r.rhs.size()) || v->index < 1 ||
          v->index > r.rhs[static_cast<std::size_t>(v->premise)].rank)
        return "rule " + r.id + ": variable " + format_variable(*v) + " is not declared";
      if (!seen.insert(*v).second)
        return "rule " + r.id + ": variable " + format_variable(*v) + " occurs more than once";
    }
  }
  return std::nullopt;
}

inline Judgment apply_rule(const Rule& r, std::span<const Judgment> premises) {
  if (premises.size() != r.rhs.size())
    throw precondition_error("rule " + r.id + " expects " + std::to_string(r.rhs.size()) +
                             " premises, got " + std::to_string(premises.size()));
  for (std::size_t k = 0; k < premises.size(); ++k) {
    if (premises[k].head != r.rhs[k])
      throw precondition_error("rule " + r.id + ": premise " + std::to_string(k + 1) +
                               " has head " + premises[k].head.name);
    if (premises[k].args.size() != static_cast<std::size_t>(r.rhs[k].rank))
      throw precondition_error("rule " + r.id + ": premise " + std::to_string(k + 1) +
                               " has wrong arity");
  }
  Judgment out{r.lhs, WordTuple(r.patterns.size())};
  for (std::size_t j = 0; j < r.patterns.size(); ++j) {
    Word& w = out.args[j];
    for (const Symbol& s : r.patterns[j]) {
      if (const auto* l = std::get_if<Letter>(&s)) {
        w.push_back(*l);
      } else {
        const auto& v = std::get<Variable>(s);
        const Word& sub = premises[static_cast<std::size_t>(v.premise)]
                              .args[static_cast<std::size_t>(v.index - 1)];
        w.insert(w.end(), sub.begin(), sub.end());
      }
    }
  }
  return out;
}

struct TreeCheck {
  bool ok = true;
  std::string path;   ///< child indices from the root to the first failing node, e.g. "0.1"
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {
inline TreeCheck verify_tree(const Grammar& g, const DerivationTree& t, const std::string& path) {
  const Rule* r = g.find(t.rule_id);
  if (!r) return {false, path, "unknown rule id '" + t.rule_id + "'"};
  std::vector<Judgment> premises;
  premises.reserve(t.children.size());
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const auto sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (auto c = verify_tree(g, t.children[i], sub); !c) return c;
    premises.push_back(t.children[i].conclusion);
  }
  Judgment replayed;
  try {
    replayed = apply_rule(*r, premises);
  } catch (const domain_error& e) {
    return {false, path, e.what()};
  }
  if (replayed != t.conclusion)
    return {false, path,
            "replay gives " + format_judgment(replayed) + ", node claims " +
                format_judgment(t.conclusion)};
  return {};
}
} // namespace detail

/// Replays every node of `t` bottom-up against the rules of `g`.
inline TreeCheck verify_tree(const Grammar& g, const DerivationTree& t) {
  return detail::verify_tree(g, t, "");
}

// ---------------------------------------------------------------------------
// bounded language enumeration

namespace detail {

inline std::size_t terminal_count(const Rule& r) {
  std::size_t n = 0;
  for (const auto& p : r.patterns)
    for (const auto& s : p) n += std::holds_alternative<Letter>(s);
  return n;
}

inline bool is_non_erasing(const Rule& r) {
  std::set<Variable> used;
  for (const auto& p : r.patterns)
    for (const auto& s : p)
      if (const auto* v = std::get_if<Variable>(&s)) used.insert(*v);
  std::size_t declared = 0;
  for (const auto& b : r.rhs) declared += static_cast<std::size_t>(b.rank);
  return used.size() == declared;
}

class Enumerator {
public:
  Enumerator(const Grammar& g, std::size_t max_len) : g_(g), max_len_(max_len) {
    for (const Rule& r : g.rules()) {
      if (auto v = validate_rule(r)) throw unsupported_grammar(*v);
      if (!is_non_erasing(r))
        throw unsupported_grammar("rule " + r.id + " erases a variable and may shrink length");
      terminals_.push_back(terminal_count(r));
    }
  }

  std::set<Word> run() {
    for (std::size_t len = 0; len <= max_len_; ++len) {
      stratum_ = len;
      std::vector<Judgment> work;
      // Premises all strictly shorter than the stratum.
      for (std::size_t ri = 0; ri < g_.rules().size(); ++ri) {
        if (terminals_[ri] > len) continue;
        std::vector<Judgment> found;
        std::vector<const WordTuple*> chosen(g_.rules()[ri].rhs.size(), nullptr);
        combine(ri, 0, len - terminals_[ri], std::nullopt, chosen, true, found);
        commit(found, work);
      }
      // Semi-naive closure inside the stratum: every new judgment is tried in
      // every premise slot against everything known so far.
      while (!work.empty()) {
        const Judgment j = std::move(work.back());
        work.pop_back();
        const std::size_t jl = total_length(j.args);
        std::vector<Judgment> found;
        for (std::size_t ri = 0; ri < g_.rules().size(); ++ri) {
          const Rule& r = g_.rules()[ri];
          if (jl + terminals_[ri] > len) continue;
          for (std::size_t pos = 0; pos < r.rhs.size(); ++pos) {
            if (r.rhs[pos] != j.head) continue;
            std::vector<const WordTuple*> chosen(r.rhs.size(), nullptr);
            chosen[pos] = &j.args;
            combine(ri, 0, len - terminals_[ri] - jl, pos, chosen, false, found);
          }
        }
        commit(found, work);
      }
    }
    std::set<Word> out;
    for (const auto& bucket : table_[g_.start()])
      for (const auto& t : bucket) out.insert(t.front());
    return out;
  }

private:
  // Fills the free premise slots from `pos` on so that their lengths sum to
  // `budget`, and collects every conclusion. Never mutates the table.
  void combine(std::size_t ri, std::size_t pos, std::size_t budget, std::optional<std::size_t> fixed,
               std::vector<const WordTuple*>& chosen, bool strictly_shorter,
               std::vector<Judgment>& out) {
    const Rule& r = g_.rules()[ri];
    if (pos == r.rhs.size()) {
      if (budget != 0) return;
      std::vector<Judgment> premises;
      premises.reserve(chosen.size());
      for (std::size_t k = 0; k < chosen.size(); ++k) premises.push_back({r.rhs[k], *chosen[k]});
      out.push_back(apply_rule(r, premises));
      return;
    }
    if (fixed && *fixed == pos) {
      combine(ri, pos + 1, budget, fixed, chosen, strictly_shorter, out);
      return;
    }
    bool last_free = true;
    for (std::size_t q = pos + 1; q < r.rhs.size(); ++q)
      if (!fixed || *fixed != q) last_free = false;
    const auto& buckets = table_[r.rhs[pos]];
    for (std::size_t l = last_free ? budget : 0; l <= budget; ++l) {
      if (strictly_shorter && l >= stratum_) break;
      if (l >= buckets.size()) break;
      for (const WordTuple& t : buckets[l]) {
        chosen[pos] = &t;
        combine(ri, pos + 1, budget - l, fixed, chosen, strictly_shorter, out);
      }
    }
    chosen[pos] = nullptr;
  }

  void commit(std::vector<Judgment>& found, std::vector<Judgment>& work) {
    for (auto& j : found) {
      if (!known_.insert(j).second) continue;
      auto& buckets = table_[j.head];
      const std::size_t l = total_length(j.args);
      if (buckets.size() <= l) buckets.resize(l + 1);
      buckets[l].push_back(j.args);
      work.push_back(std::move(j));
    }
  }

  const Grammar& g_;
  std::size_t max_len_;
  std::size_t stratum_ = 0;
  std::vector<std::size_t> terminals_;
  std::set<Judgment> known_;
  std::map<NonTerminal, std::vector<std::vector<WordTuple>>> table_;
};

} // namespace detail

/// All words w with |w| <= max_len such that S(w) is derivable, computed as a
/// least fixpoint over judgments stratified by total argument length.
inline std::set<Word> enumerate_language(const Grammar& g, std::size_t max_len) {
  return detail::Enumerator(g, max_len).run();
}

} // namespace mcfl
