#include "grouplang/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <tuple>
#include <utility>

#include "grouplang/errors.hpp"

namespace grouplang {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Fewest letters from each state to acceptance.
std::vector<std::size_t> distance_to_final(const Nfa& a) {
  const auto n = static_cast<std::size_t>(a.state_count());
  std::vector<std::vector<StateId>> rev(n + 1);
  for (const auto& t : a.transitions()) rev[static_cast<std::size_t>(t.to)].push_back(t.from);
  std::vector<std::size_t> dist(n + 1, kUnreachable);
  std::deque<StateId> queue;
  for (StateId f : a.finals()) {
    dist[static_cast<std::size_t>(f)] = 0;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (StateId p : rev[static_cast<std::size_t>(q)]) {
      if (dist[static_cast<std::size_t>(p)] == kUnreachable) {
        dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(q)] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

// Fewest letters emitted on a walk from each nonterminal to the sink.
std::vector<std::size_t> distance_to_sink(const LinearGrammar& g) {
  std::vector<std::size_t> dist(static_cast<std::size_t>(g.nonterminal_count()) + 1, kUnreachable);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions()) {
      std::size_t d = kUnreachable;
      if (p.is_terminal()) {
        d = p.alpha.size();
      } else if (dist[static_cast<std::size_t>(*p.rhs)] != kUnreachable) {
        d = p.alpha.size() + p.beta.size() + dist[static_cast<std::size_t>(*p.rhs)];
      }
      if (d < dist[static_cast<std::size_t>(p.lhs)]) {
        dist[static_cast<std::size_t>(p.lhs)] = d;
        changed = true;
      }
    }
  }
  return dist;
}

// Emits in order, enforcing the word cap. Returns the stop reason or nullopt
// to continue.
class Emitter {
 public:
  Emitter(const EnumerationBound& bound, const WordVisitor& visit) : bound_(bound), visit_(visit) {}

  std::optional<EnumerationStop> emit(const Word& w) {
    if (emitted_ == bound_.max_words) return EnumerationStop::WordCap;
    ++emitted_;
    if (!visit_(w)) return EnumerationStop::Visitor;
    return std::nullopt;
  }

 private:
  const EnumerationBound& bound_;
  const WordVisitor& visit_;
  std::size_t emitted_ = 0;
};

}  // namespace

void EnumerationBound::validate() const {
  if (max_word_length < 1) throw InvalidInput("max_word_length must be positive");
  if (max_words < 1) throw InvalidInput("max_words must be positive");
}

EnumerationStop enumerate_nfa_words(const Nfa& a, const EnumerationBound& bound, const WordVisitor& visit) {
  bound.validate();
  const std::size_t max_len = bound.max_word_length;
  const auto dist = distance_to_final(a);
  const auto letters = a.alphabet().letters();
  Emitter out(bound, visit);

  // One entry per prefix that can still reach acceptance within the bound;
  // the state set is the subset reached by that prefix. Extending a sorted
  // level in ascending letter order keeps the next level sorted.
  std::vector<std::pair<Word, std::vector<StateId>>> level;
  if (dist[static_cast<std::size_t>(a.start())] <= max_len) level.push_back({Word{}, {a.start()}});
  for (std::size_t len = 0; !level.empty(); ++len) {
    for (const auto& [w, states] : level) {
      if (std::any_of(states.begin(), states.end(), [&](StateId q) { return a.is_final(q); })) {
        if (auto stop = out.emit(w)) return *stop;
      }
    }
    if (len == max_len) break;
    std::vector<std::pair<Word, std::vector<StateId>>> next;
    const std::size_t budget = max_len - len - 1;
    for (const auto& [w, states] : level) {
      for (Letter l : letters) {
        std::vector<StateId> succ;
        for (StateId q : states) {
          for (const auto& t : a.outgoing(q)) {
            if (t.letter == l && dist[static_cast<std::size_t>(t.to)] <= budget) succ.push_back(t.to);
          }
        }
        if (succ.empty()) continue;
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        Word ext = w;
        ext.push_back(l);
        next.emplace_back(std::move(ext), std::move(succ));
      }
    }
    level = std::move(next);
  }
  return EnumerationStop::LengthBound;
}

EnumerationStop enumerate_grammar_words(const LinearGrammar& g, const EnumerationBound& bound,
                                        const WordVisitor& visit) {
  bound.validate();
  const std::size_t max_len = bound.max_word_length;
  const auto dist = distance_to_sink(g);
  Emitter out(bound, visit);

  // A configuration is a walk prefix ending at `vertex`, with its
  // concatenated left labels and reverse-concatenated right labels.
  using Config = std::tuple<NonterminalId, Word, Word>;
  std::vector<std::vector<Config>> pending(max_len + 1);
  std::vector<std::set<Config>> seen(max_len + 1);
  std::vector<std::set<Word>> words(max_len + 1);

  auto fits = [&](NonterminalId a, std::size_t emitted) {
    const std::size_t d = dist[static_cast<std::size_t>(a)];
    return d != kUnreachable && emitted + d <= max_len;
  };
  if (fits(g.start(), 0)) {
    Config init{g.start(), Word{}, Word{}};
    seen[0].insert(init);
    pending[0].push_back(std::move(init));
  }

  for (std::size_t len = 0; len <= max_len; ++len) {
    // Productions emitting nothing append to the bucket being processed.
    for (std::size_t idx = 0; idx < pending[len].size(); ++idx) {
      const auto [vertex, left, right] = pending[len][idx];
      for (const auto& p : g.productions_of(vertex)) {
        if (p.is_terminal()) {
          const std::size_t wl = len + p.alpha.size();
          if (wl <= max_len) words[wl].insert(concat(left, p.alpha, right));
          continue;
        }
        const std::size_t nl = len + p.alpha.size() + p.beta.size();
        if (!fits(*p.rhs, nl)) continue;
        Config cfg{*p.rhs, concat(left, p.alpha), concat(p.beta, right)};
        if (seen[nl].insert(cfg).second) pending[nl].push_back(std::move(cfg));
      }
    }
    for (const auto& w : words[len]) {
      if (auto stop = out.emit(w)) return *stop;
    }
    pending[len] = {};
    seen[len] = {};
    words[len] = {};
  }
  return EnumerationStop::LengthBound;
}

std::vector<Word> collect_nfa_words(const Nfa& a, const EnumerationBound& bound) {
  std::vector<Word> out;
  if (enumerate_nfa_words(a, bound, [&](const Word& w) {
        out.push_back(w);
        return true;
      }) == EnumerationStop::WordCap) {
    throw BoundExceeded("more than " + std::to_string(bound.max_words) + " accepted words");
  }
  return out;
}

std::vector<Word> collect_grammar_words(const LinearGrammar& g, const EnumerationBound& bound) {
  std::vector<Word> out;
  if (enumerate_grammar_words(g, bound, [&](const Word& w) {
        out.push_back(w);
        return true;
      }) == EnumerationStop::WordCap) {
    throw BoundExceeded("more than " + std::to_string(bound.max_words) + " generated words");
  }
  return out;
}

OracleVerdict brute_force_inclusion(std::span<const Word> words, const GroupBackend& g) {
  OracleVerdict v;
  for (const auto& w : words) {
    ++v.words_checked;
    if (!g.word_in_group_language(w)) {
      v.kind = OracleVerdict::Kind::Fails;
      v.witness = w;
      return v;
    }
  }
  return v;
}

namespace {

template <class Enumerate>
OracleVerdict run_oracle(const GroupBackend& g, Enumerate&& enumerate) {
  OracleVerdict v;
  const EnumerationStop stop = enumerate([&](const Word& w) {
    ++v.words_checked;
    if (g.word_in_group_language(w)) return true;
    v.kind = OracleVerdict::Kind::Fails;
    v.witness = w;
    return false;
  });
  if (stop == EnumerationStop::WordCap) v.kind = OracleVerdict::Kind::BoundExceeded;
  return v;
}

}  // namespace

OracleVerdict brute_force_inclusion(const Nfa& a, const GroupBackend& g, const EnumerationBound& bound) {
  if (a.alphabet().rank() != g.rank()) throw BackendMismatch("automaton and group ranks differ");
  return run_oracle(g, [&](const WordVisitor& visit) { return enumerate_nfa_words(a, bound, visit); });
}

OracleVerdict brute_force_inclusion(const LinearGrammar& grammar, const GroupBackend& g,
                                    const EnumerationBound& bound) {
  if (grammar.alphabet().rank() != g.rank()) throw BackendMismatch("grammar and group ranks differ");
  return run_oracle(g, [&](const WordVisitor& visit) { return enumerate_grammar_words(grammar, bound, visit); });
}

std::size_t counterexample_bound_regular(const Nfa& a) { return 3 * static_cast<std::size_t>(a.state_count()); }

std::size_t counterexample_bound_linear(const LinearGrammar& g) {
  // Grammars emitting no letters at all still get a usable bound.
  const std::size_t lmax = std::max<std::size_t>(1, g.max_production_length());
  return (2 * static_cast<std::size_t>(g.nonterminal_count()) + 1) * lmax;
}

}  // namespace grouplang
