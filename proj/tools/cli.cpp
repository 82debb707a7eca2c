#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "grouplang/corpus.hpp"
#include "grouplang/io.hpp"
#include "grouplang/linear_check.hpp"
#include "grouplang/oracle.hpp"
#include "grouplang/regular_check.hpp"

namespace grouplang::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct RunConfig {
  std::size_t set_cap = kDefaultSetCap;
  bool no_early_fail = false;
  bool literal_omega10 = false;
  std::optional<std::size_t> bound;
  std::size_t max_words = 1'000'000;
  std::string format = "text";
};

struct Inputs {
  std::string group_file;
  std::string language_file;
};

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

json word_json(const std::optional<Word>& w) { return w ? json(*w) : json(nullptr); }
json tokens_json(const std::optional<Word>& w) { return w ? json(to_tokens(*w)) : json(nullptr); }

bool language_empty(const Language& lang) {
  return std::visit(
      [](const auto& l) {
        if constexpr (std::is_same_v<std::decay_t<decltype(l)>, Nfa>) {
          return useful_states(l).empty();
        } else {
          return useful_nonterminals(l).empty();
        }
      },
      lang);
}

int cmd_check(const Inputs& in, const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const GroupBackend g = load_group_file(in.group_file);
  const Language lang = load_language_file(in.language_file);
  for (const auto& w : g.warnings()) err << "warning: " << w << '\n';
  if (rc.literal_omega10) {
    err << "warning: --literal-omega10 pairs cycle prefixes and suffixes independently; "
           "its violations can be spurious and are for demonstration only\n";
  }
  CheckConfig config;
  config.set_cap = rc.set_cap;
  config.early_fail = !rc.no_early_fail;
  config.literal_triple = rc.literal_omega10;

  const auto t0 = Clock::now();
  const CheckReport report = std::holds_alternative<Nfa>(lang)
                                 ? check_regular_inclusion(std::get<Nfa>(lang), g, config)
                                 : check_linear_inclusion(std::get<LinearGrammar>(lang), g, config);
  const double ms = elapsed_ms(t0);

  json j;
  int code = kHolds;
  std::optional<Word> witness;
  if (const auto* h = std::get_if<Holds>(&report.verdict)) {
    j["verdict"] = "holds";
    j["reason"] = nullptr;
    j["empty_language"] = h->empty_language;
  } else if (const auto* f = std::get_if<Fails>(&report.verdict)) {
    code = kFails;
    witness = f->witness;
    j["verdict"] = "fails";
    j["reason"] = std::string(to_string(f->reason));
    if (f->vertex != 0) j["vertex"] = f->vertex;
    if (f->cell) j["cell"] = {f->cell->row, f->cell->col};
  } else {
    const auto& r = std::get<ResourceExceeded>(report.verdict);
    code = kError;
    j["verdict"] = "resource_exceeded";
    j["reason"] = "set_cap";
    j["cell"] = {r.cell.row, r.cell.col};
    j["cardinality"] = r.cardinality;
    j["cap"] = rc.set_cap;
  }
  j["witness"] = word_json(witness);
  j["witness_tokens"] = tokens_json(witness);
  j["counters"] = {{"unions", report.counters.unions},
                   {"products", report.counters.products},
                   {"stars", report.counters.stars},
                   {"diamonds", report.counters.diamonds},
                   {"triples", report.counters.triples}};
  j["elapsed_ms"] = ms;

  if (rc.format == "json") {
    out << j.dump() << '\n';
    return code;
  }
  out << describe(report.verdict) << '\n';
  if (witness) out << "witness: " << to_tokens(*witness) << "  " << json(*witness).dump() << '\n';
  const auto& c = report.counters;
  out << "counters: unions=" << c.unions << " products=" << c.products << " stars=" << c.stars
      << " diamonds=" << c.diamonds << " triples=" << c.triples << '\n';
  out << "elapsed_ms: " << std::fixed << std::setprecision(3) << ms << '\n';
  return code;
}

int cmd_oracle(const Inputs& in, const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const GroupBackend g = load_group_file(in.group_file);
  const Language lang = load_language_file(in.language_file);
  for (const auto& w : g.warnings()) err << "warning: " << w << '\n';

  const std::size_t derived = std::holds_alternative<Nfa>(lang)
                                  ? counterexample_bound_regular(std::get<Nfa>(lang))
                                  : counterexample_bound_linear(std::get<LinearGrammar>(lang));
  const EnumerationBound bound{rc.bound.value_or(derived), rc.max_words};
  const bool empty = language_empty(lang);

  const auto t0 = Clock::now();
  const OracleVerdict v = std::holds_alternative<Nfa>(lang)
                              ? brute_force_inclusion(std::get<Nfa>(lang), g, bound)
                              : brute_force_inclusion(std::get<LinearGrammar>(lang), g, bound);
  const double ms = elapsed_ms(t0);

  int code = kHolds;
  std::string verdict = "holds_at_bound";
  if (v.kind == OracleVerdict::Kind::Fails) {
    code = kFails;
    verdict = "fails";
  } else if (v.kind == OracleVerdict::Kind::BoundExceeded) {
    code = kError;
    verdict = "bound_exceeded";
  }

  if (rc.format == "json") {
    json j{{"verdict", verdict},
           {"bound", bound.max_word_length},
           {"max_words", bound.max_words},
           {"words_checked", v.words_checked},
           {"empty_language", empty},
           {"witness", word_json(v.witness)},
           {"witness_tokens", tokens_json(v.witness)},
           {"elapsed_ms", ms}};
    out << j.dump() << '\n';
    return code;
  }
  if (empty) {
    out << "empty language\n";
  } else if (code == kHolds) {
    out << "holds-at-bound " << bound.max_word_length << '\n';
  } else if (code == kFails) {
    out << "fails\nwitness: " << to_tokens(*v.witness) << "  " << json(*v.witness).dump() << '\n';
  } else {
    out << "bound-exceeded: more than " << bound.max_words << " words within length " << bound.max_word_length
        << '\n';
  }
  out << "words_checked: " << v.words_checked << '\n';
  return code;
}

int cmd_enumerate(const std::string& file, std::size_t max_len, std::size_t max_words, std::ostream& out,
                  std::ostream& err) {
  const Language lang = load_language_file(file);
  const EnumerationBound bound{max_len, max_words};
  auto print = [&](const Word& w) {
    out << to_tokens(w) << '\n';
    return true;
  };
  const EnumerationStop stop = std::holds_alternative<Nfa>(lang)
                                   ? enumerate_nfa_words(std::get<Nfa>(lang), bound, print)
                                   : enumerate_grammar_words(std::get<LinearGrammar>(lang), bound, print);
  if (stop == EnumerationStop::WordCap) {
    err << "error: stopped after " << max_words << " words; more exist within length " << max_len << '\n';
    return kError;
  }
  return kHolds;
}

struct CorpusArgs {
  std::uint64_t seed = 1;
  std::string kind = "automaton";
  int size = 5;
  int rank = 1;
  int max_production_length = 2;
  int count = 1;
  std::string out_dir;
};

int cmd_gen_corpus(const CorpusArgs& a, std::ostream& out) {
  CorpusRng rng(a.seed);
  std::vector<json> docs;
  for (int k = 0; k < a.count; ++k) {
    if (a.kind == "automaton") {
      docs.push_back(to_json(random_nfa(rng, NfaShape{1, a.size, a.rank})));
    } else {
      docs.push_back(to_json(random_grammar(rng, GrammarShape{1, a.size, a.rank, a.max_production_length})));
    }
  }
  if (a.out_dir.empty()) {
    for (const auto& d : docs) out << d.dump() << '\n';
    return kHolds;
  }
  std::filesystem::create_directories(a.out_dir);
  for (std::size_t k = 0; k < docs.size(); ++k) {
    std::ostringstream name;
    name << a.kind << '_' << std::setw(4) << std::setfill('0') << k << ".json";
    const auto path = std::filesystem::path(a.out_dir) / name.str();
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path.string());
    f << docs[k].dump(2) << '\n';
  }
  out << "wrote " << docs.size() << " files to " << a.out_dir << '\n';
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide inclusion of regular and linear languages in group languages", "grouplang"};
  app.require_subcommand(1);

  RunConfig rc;
  Inputs in;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("group", in.group_file, "Group specification (JSON)")->required();
    sub->add_option("language", in.language_file, "Automaton or linear grammar (JSON)")->required();
    sub->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "Decide L ⊆ L(G) by semiring closure");
  add_common(check);
  check->add_option("--cap", rc.set_cap, "Largest label set kept per cell")->check(CLI::PositiveNumber);
  check->add_flag("--no-early-fail", rc.no_early_fail, "Finish the closure before looking for violations");
  check->add_flag("--literal-omega10", rc.literal_omega10,
                  "Use the independent-projection cycle triple (can report spurious violations)");

  auto* oracle = app.add_subcommand("oracle", "Test every word up to a length bound");
  add_common(oracle);
  oracle->add_option("--bound", rc.bound, "Word length bound (default: 3n or (2n+1)·L_max)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-words", rc.max_words, "Give up after this many words")->check(CLI::PositiveNumber);

  std::string enum_file;
  std::size_t max_len = 8;
  std::size_t enum_max_words = 100'000;
  auto* enumerate = app.add_subcommand("enumerate", "List words of a language in length-lex order");
  enumerate->add_option("language", enum_file, "Automaton or linear grammar (JSON)")->required();
  enumerate->add_option("--max-len", max_len, "Longest word listed")->check(CLI::PositiveNumber);
  enumerate->add_option("--max-words", enum_max_words, "Most words listed")->check(CLI::PositiveNumber);

  CorpusArgs corpus;
  auto* gen = app.add_subcommand("gen-corpus", "Write seeded random automata or grammars");
  gen->add_option("--seed", corpus.seed, "Random seed");
  gen->add_option("--kind", corpus.kind, "Instance kind")->check(CLI::IsMember({"automaton", "linear_grammar"}));
  auto* states = gen->add_option("--states", corpus.size, "Largest automaton")->check(CLI::Range(1, 64));
  auto* nts = gen->add_option("--nonterminals", corpus.size, "Largest grammar")->check(CLI::Range(1, 64));
  states->excludes(nts);
  gen->add_option("--rank", corpus.rank, "Number of generators")->check(CLI::Range(1, 16));
  gen->add_option("--max-production-length", corpus.max_production_length, "Bound on |alpha| + |beta|")
      ->check(CLI::Range(0, 16));
  gen->add_option("--count", corpus.count, "Number of instances")->check(CLI::Range(1, 1'000'000));
  gen->add_option("--out", corpus.out_dir, "Directory for one file per instance (default: JSON lines on stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kError;
  }

  try {
    if (*check) return cmd_check(in, rc, out, err);
    if (*oracle) return cmd_oracle(in, rc, out, err);
    if (*enumerate) return cmd_enumerate(enum_file, max_len, enum_max_words, out, err);
    if (nts->count() > 0) corpus.kind = "linear_grammar";
    return cmd_gen_corpus(corpus, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace grouplang::cli
