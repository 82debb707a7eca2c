// Reference implementations used as ground truth. Nothing here calls the
// closure code; group arithmetic and membership are redone from scratch.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "grouplang/group.hpp"
#include "grouplang/linear_grammar.hpp"
#include "grouplang/nfa.hpp"
#include "grouplang/word.hpp"

namespace grouplang::testing {

// Free reduction by repeatedly deleting the first cancelling pair.
inline Word naive_free_reduce(Word w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<std::int64_t> exponent_sums(const Word& w, int rank) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
  for (Letter l : w) v[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  return v;
}

using Perm3 = std::array<int, 3>;

// Product in S3 acting on points, left factor applied first.
inline Perm3 compose(const Perm3& first, const Perm3& then) {
  return {then[static_cast<std::size_t>(first[0])], then[static_cast<std::size_t>(first[1])],
          then[static_cast<std::size_t>(first[2])]};
}

inline Perm3 perm_inverse(const Perm3& p) {
  Perm3 out{};
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  return out;
}

inline const Perm3 kTransposition{1, 0, 2};
inline const Perm3 kThreeCycle{1, 2, 0};

// Evaluates a word over {transposition, 3-cycle} by explicit composition.
inline Perm3 s3_evaluate(const Word& w) {
  Perm3 acc{0, 1, 2};
  for (Letter l : w) {
    const Perm3 gen = std::abs(l) == 1 ? kTransposition : kThreeCycle;
    acc = compose(acc, l > 0 ? gen : perm_inverse(gen));
  }
  return acc;
}

// S3 Cayley table with elements listed in an order unrelated to the
// library's, built by closing the generators under composition.
inline CayleyTable s3_table_by_closure() {
  std::vector<Perm3> elems{{0, 1, 2}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : {kThreeCycle, kTransposition}) {
      const Perm3 next = compose(elems[k], g);
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
    }
  }
  auto idx = [&](const Perm3& p) {
    return static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  CayleyTable t;
  t.size = static_cast<std::uint32_t>(elems.size());
  t.identity = 0;
  for (const auto& a : elems) {
    for (const auto& b : elems) t.table.push_back(idx(compose(a, b)));
  }
  t.generator_images = {idx(kTransposition), idx(kThreeCycle)};
  return t;
}

// Membership in the group language, computed without GroupBackend.
inline bool reference_trivial(const GroupBackend& g, const Word& w) {
  switch (g.kind()) {
    case GroupKind::Free:
      return naive_free_reduce(w).empty();
    case GroupKind::FreeAbelian: {
      const auto v = exponent_sums(w, g.rank());
      return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    }
    case GroupKind::Cyclic: {
      const auto s = exponent_sums(w, 1)[0];
      const auto n = static_cast<std::int64_t>(g.order());
      return ((s % n) + n) % n == 0;
    }
    case GroupKind::Cayley: {
      // Only the S3 table from the corpus is used with this helper.
      const Perm3 p = s3_evaluate(w);
      return p == Perm3{0, 1, 2};
    }
  }
  return false;
}

// Path search over the transition list, independent of Nfa::accepts.
inline bool reference_accepts(const Nfa& a, const Word& w) {
  std::function<bool(StateId, std::size_t)> walk = [&](StateId q, std::size_t pos) {
    if (pos == w.size()) return a.is_final(q);
    for (const auto& t : a.transitions()) {
      if (t.from == q && t.letter == w[pos] && walk(t.to, pos + 1)) return true;
    }
    return false;
  };
  return walk(a.start(), 0);
}

// Top-down derivation search, independent of LinearGrammar::generates. A
// minimal derivation never revisits (nonterminal, span), so on-stack entries
// are treated as dead ends; failures are cached only when no such cut
// happened below them.
inline bool reference_generates(const LinearGrammar& g, const Word& w) {
  using Key = std::tuple<NonterminalId, std::size_t, std::size_t>;
  std::map<Key, bool> known;
  std::set<Key> on_stack;
  std::function<bool(NonterminalId, std::size_t, std::size_t, bool&)> derives =
      [&](NonterminalId a, std::size_t i, std::size_t j, bool& cut) -> bool {
    const Key key{a, i, j};
    if (auto it = known.find(key); it != known.end()) return it->second;
    if (on_stack.count(key)) {
      cut = true;
      return false;
    }
    on_stack.insert(key);
    bool ok = false;
    bool my_cut = false;
    for (const auto& p : g.productions_of(a)) {
      const std::size_t la = p.alpha.size(), lb = p.beta.size();
      if (la + lb > j - i) continue;
      if (!std::equal(p.alpha.begin(), p.alpha.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
      if (p.is_terminal()) {
        ok = la == j - i;
      } else {
        ok = std::equal(p.beta.begin(), p.beta.end(), w.begin() + static_cast<std::ptrdiff_t>(j - lb)) &&
             derives(*p.rhs, i + la, j - lb, my_cut);
      }
      if (ok) break;
    }
    on_stack.erase(key);
    if (ok || !my_cut) known[key] = ok;
    cut = cut || (!ok && my_cut);
    return ok;
  };
  bool cut = false;
  return derives(g.start(), 0, w.size(), cut);
}

// Every word over the alphabet of length ≤ max_len, in length-lex order.
inline std::vector<Word> all_words(int rank, std::size_t max_len) {
  const auto letters = GeneratorAlphabet(rank).letters();
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (Letter l : letters) {
        Word e = w;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(1, rank);
  std::bernoulli_distribution sign(0.5);
  Word w(len_dist(rng));
  for (auto& l : w) l = sign(rng) ? letter_dist(rng) : -letter_dist(rng);
  return w;
}

}  // namespace grouplang::testing
