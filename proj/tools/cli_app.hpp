#pragma once

// mcfl command line. run() takes the arguments without the program name and
// returns the exit status: 0 success, 1 domain error, 2 usage or malformed
// input, 3 soundness failure.

#include <mcfl/mcfl.hpp>

#include "../tests/support/acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#ifndef MCFL_GOLDEN_DIR
#define MCFL_GOLDEN_DIR "tests/golden"
#endif

namespace mcfl::cli {

using json = nlohmann::json;

enum class Format { text, json };

struct Config {
  int n = 0;
  Backend backend = Backend::necklace;
  ScanBounds bounds;
  Format format = Format::text;
};

namespace detail {

inline std::vector<std::string> words_of(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(format_word(w));
  return out;
}

inline AmountVector parse_target(const std::string& text) {
  AmountVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw malformed_input("bad target entry '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline json tree_json(const DerivationTree& t) {
  json children = json::array();
  for (const auto& c : t.children) children.push_back(tree_json(c));
  return {{"rule", t.rule_id}, {"judgment", format_judgment(t.conclusion)}, {"children", children}};
}

inline std::vector<std::string> parts_of(const Word& x, const NecklaceSplit& s, Part p) {
  std::vector<std::string> out;
  const auto iv = s.intervals(x.size());
  for (std::size_t k = 0; k < iv.size(); ++k)
    if (s.owner(k) == p)
      out.push_back(format_word(std::span(x).subspan(iv[k].first, iv[k].second - iv[k].first)));
  return out;
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

inline std::string join(const std::vector<std::size_t>& items) {
  std::vector<std::string> s;
  for (std::size_t v : items) s.push_back(std::to_string(v));
  return join(s, ",");
}

inline std::string case_name(SplitCase c) {
  switch (c) {
  case SplitCase::reducible: return "reducible";
  case SplitCase::case_i: return "i";
  case SplitCase::case_ii: return "ii";
  }
  return "?";
}

inline int infer_n(const Word& w, int n) { return n > 0 ? n : std::max(1, max_type(w)); }

inline json decomposition_json(const Decomposition& d) {
  std::vector<std::string> u;
  for (const Word& w : d.pieces) u.push_back(format_word(w));
  return {{"k", d.boundaries}, {"u", u}};
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple context-free grammars for O_n, necklace splitting and sign-vector search", "mcfl"};
  app.require_subcommand(1);

  Config cfg;
  std::string format = "text";
  std::string backend = "necklace";
  std::optional<std::size_t> bound_m;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string input;
  bool census = false;
  bool check = false;
  bool as_tuple = false;
  std::size_t max_len = 0;
  std::string target;
  std::string variant = "53";
  std::string golden = MCFL_GOLDEN_DIR;

  auto add_n = [&](CLI::App* s) { s->add_option("--n", cfg.n, "Alphabet size / dimension")->check(CLI::PositiveNumber); };
  auto add_input = [&](CLI::App* s, const char* what) { s->add_option("input", input, what)->required(); };
  auto add_bounds = [&](CLI::App* s) {
    s->add_option("--bound-m", bound_m, "Largest length for exhaustive sign-vector scans")->check(CLI::PositiveNumber);
  };
  auto add_backend = [&](CLI::App* s) {
    s->add_option("--backend", backend, "Decomposition backend")->check(CLI::IsMember({"necklace", "brute", "kyfan"}));
  };

  auto* grammar = app.add_subcommand("grammar", "Dump the grammar G_n");
  add_n(grammar);
  grammar->add_flag("--census", census, "Print rule counts per family instead");

  auto* member = app.add_subcommand("member", "Decide membership in O_n");
  add_n(member);
  add_input(member, "Word");

  auto* derive = app.add_subcommand("derive", "Build a derivation tree");
  add_n(derive);
  add_input(derive, "Word, or tuple with --tuple");
  derive->add_flag("--tuple", as_tuple, "Derive I(tuple) instead of S(word)");
  derive->add_flag("--check", check, "Replay the tree against the grammar");
  add_backend(derive);
  add_bounds(derive);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split an irreducible tuple into 2n pieces");
  add_input(decompose_cmd, "Tuple");
  add_backend(decompose_cmd);
  add_bounds(decompose_cmd);

  auto* necklace = app.add_subcommand("necklace-split", "Split one signed necklace between two thieves");
  add_n(necklace);
  add_input(necklace, "Necklace word");
  necklace->add_option("--target", target, "Discrepancy per type, e.g. --target=0,-1");

  auto* collection = app.add_subcommand("collection-split", "Split a balanced collection of necklaces");
  add_input(collection, "Tuple of necklaces");

  auto* tucker = app.add_subcommand("tucker-zero", "Find a zero of a sign-vector labeling");
  add_n(tucker);
  add_input(tucker, "Word (variant 52) or tuple (variant 53)");
  tucker->add_option("--variant", variant, "Labeling")->check(CLI::IsMember({"52", "53"}));
  tucker->add_option("--target", target, "Discrepancy per type for variant 52");
  add_bounds(tucker);

  auto* enumerate = app.add_subcommand("enumerate", "List the words of G_n up to a length");
  add_n(enumerate);
  enumerate->add_option("--max-len", max_len, "Largest word length")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_option("--golden", golden, "Directory holding the golden files");

  std::vector<const char*> argv{"mcfl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "json" ? Format::json : Format::text;
  cfg.backend = parse_backend(backend);
  if (const char* env = std::getenv("MCFL_ON_BOUND_M")) {
    try {
      cfg.bounds.zero_scan = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::logic_error&) {
      err << "error: usage: MCFL_ON_BOUND_M must be a positive integer\n";
      return 2;
    }
  }
  if (bound_m) cfg.bounds.zero_scan = *bound_m;
  const bool js = cfg.format == Format::json;
  auto emit = [&](const json& j) { out << j.dump() << "\n"; };

  try {
    if (grammar->parsed()) {
      const int n = cfg.n > 0 ? cfg.n : 1;
      const GnGrammar g = build_gn(n);
      if (census) {
        const RuleCensus c = rule_census(g);
        if (js)
          emit({{"init", c.init}, {"binary", c.binary}, {"unary", c.unary}, {"empty", c.empty}, {"total", c.total()}});
        else
          out << "init " << c.init << "\nbinary " << c.binary << "\nunary " << c.unary << "\nempty " << c.empty
              << "\ntotal " << c.total() << "\n";
      } else if (js) {
        for (const Rule& r : g.grammar.rules()) emit({{"id", r.id}, {"rule", format_rule(r)}});
      } else {
        out << format_grammar(g.grammar);
      }
    } else if (member->parsed()) {
      const Word w = parse_word(input);
      const int n = detail::infer_n(w, cfg.n);
      const bool in = is_in_On(w, n);
      if (js)
        emit({{"word", format_word(w)}, {"n", n}, {"member", in}});
      else
        out << (in ? "true" : "false") << "\n";
    } else if (derive->parsed()) {
      DerivationTree tree;
      int n = cfg.n;
      if (as_tuple) {
        const WordTuple t = parse_tuple(input, n);
        if (n > 0 && static_cast<int>(t.size()) != n)
          throw precondition_error("tuple has " + std::to_string(t.size()) + " components, expected " + std::to_string(n));
        n = static_cast<int>(t.size());
        tree = derive_tuple(t, {cfg.backend, cfg.bounds});
      } else {
        const Word w = parse_word(input);
        n = detail::infer_n(w, n);
        tree = derive_word(w, n, {cfg.backend, cfg.bounds});
      }
      if (js)
        emit(detail::tree_json(tree));
      else
        out << format_tree(tree);
      if (check) {
        const TreeCheck c = verify_tree(build_gn(n).grammar, tree);
        if (!c) throw soundness_error("replay failed at node '" + c.path + "': " + c.reason);
      }
    } else if (decompose_cmd->parsed()) {
      const WordTuple t = parse_tuple(input);
      const Decomposition d = decompose(t, cfg.backend, cfg.bounds);
      if (js)
        emit(detail::decomposition_json(d));
      else
        out << "k=" << detail::join(d.boundaries) << "\nu=" << format_tuple(d.pieces) << "\n";
    } else if (necklace->parsed()) {
      const Word x = parse_word(input);
      const int n = detail::infer_n(x, cfg.n);
      const AmountVector d = target.empty() ? default_target(x, n) : detail::parse_target(target);
      const NecklaceSplit s = split_single(x, n, d);
      const auto a = detail::parts_of(x, s, Part::A);
      const auto b = detail::parts_of(x, s, Part::B);
      if (js)
        emit({{"cuts", s.cuts}, {"start", s.start == Part::A ? "A" : "B"}, {"A", a}, {"B", b}});
      else
        out << "cuts=" << detail::join(s.cuts) << "\nstart=" << (s.start == Part::A ? "A" : "B")
            << "\nA=" << detail::join(a, "|") << "\nB=" << detail::join(b, "|") << "\n";
    } else if (collection->parsed()) {
      const WordTuple col = parse_tuple(input);
      const CollectionSplit s = split_collection(col);
      std::vector<std::string> pieces;
      std::vector<std::string> owners;
      for (const Piece& p : s.pieces) {
        const Word& w = col[p.component];
        pieces.push_back(format_word(std::span(w).subspan(p.begin, p.end - p.begin)));
        owners.push_back(p.part == Part::A ? "A" : "B");
      }
      const auto a = detail::words_of(s.part(col, Part::A));
      const auto b = detail::words_of(s.part(col, Part::B));
      if (js)
        emit({{"case", detail::case_name(s.tag())}, {"u", pieces}, {"parts", owners}, {"A", a}, {"B", b}});
      else
        out << "case=" << detail::case_name(s.tag()) << "\nu=" << detail::join(pieces, "|")
            << "\nparts=" << detail::join(owners, "") << "\nA=" << detail::join(a, "|") << "\nB=" << detail::join(b, "|")
            << "\n";
    } else if (tucker->parsed()) {
      if (variant == "52") {
        const Word s = parse_word(input);
        const int n = detail::infer_n(s, cfg.n);
        std::optional<AmountVector> d;
        if (!target.empty()) d = detail::parse_target(target);
        const Zero52 z = find_zero_52(s, n, d, cfg.bounds);
        if (js)
          emit({{"zero", format_sign_vector(z.zero)},
                {"completion", format_sign_vector(z.completion)},
                {"cuts", z.split.cuts},
                {"start", z.split.start == Part::A ? "A" : "B"}});
        else
          out << "zero=" << format_sign_vector(z.zero) << "\ncompletion=" << format_sign_vector(z.completion)
              << "\ncuts=" << detail::join(z.split.cuts) << "\nstart=" << (z.split.start == Part::A ? "A" : "B") << "\n";
      } else {
        const WordTuple t = parse_tuple(input);
        const Zero53 z = find_zero_53(t, cfg.bounds);
        if (js) {
          json j = detail::decomposition_json(z.decomposition);
          j["zero"] = format_sign_vector(z.zero);
          j["completion"] = format_sign_vector(z.completion);
          emit(j);
        } else {
          out << "zero=" << format_sign_vector(z.zero) << "\ncompletion=" << format_sign_vector(z.completion)
              << "\nk=" << detail::join(z.decomposition.boundaries) << "\nu=" << format_tuple(z.decomposition.pieces)
              << "\n";
        }
      }
    } else if (enumerate->parsed()) {
      const int n = cfg.n > 0 ? cfg.n : 1;
      const auto words = enumerate_language(build_gn(n).grammar, max_len);
      for (const Word& w : words) {
        if (js)
          emit({{"word", format_word(w)}});
        else
          out << format_word(w) << "\n";
      }
    } else if (selftest->parsed()) {
      bool all = true;
      acceptance::run_all(golden + "/g2_grammar.txt", [&](const acceptance::Result& r) {
        all = all && r.pass;
        if (js)
          emit({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        else
          out << acceptance::format_result(r) << std::endl;
      });
      if (!all) {
        err << "error: soundness: selftest failed\n";
        return 3;
      }
    }
  } catch (const malformed_input& e) {
    err << "error: malformed: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: domain: " << e.what() << "\n";
    return 1;
  } catch (const soundness_error& e) {
    err << "error: soundness: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

} // namespace mcfl::cli
