#include "grouplang/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "grouplang/errors.hpp"

namespace grouplang {

namespace {

int uniform(CorpusRng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(CorpusRng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Letter random_letter(CorpusRng& rng, int rank) {
  const int k = uniform(rng, 0, 2 * rank - 1);
  return k < rank ? -(k + 1) : k - rank + 1;
}

Word random_word(CorpusRng& rng, int rank, int len) {
  Word w;
  for (int k = 0; k < len; ++k) w.push_back(random_letter(rng, rank));
  return w;
}

}  // namespace

Nfa random_nfa(CorpusRng& rng, const NfaShape& shape) {
  if (shape.min_states < 1 || shape.max_states < shape.min_states || shape.rank < 1) {
    throw InvalidInput("bad automaton shape");
  }
  static constexpr std::array<double, 5> kLadder{0.05, 0.1, 0.15, 0.25, 0.4};
  const int n = uniform(rng, shape.min_states, shape.max_states);
  const double density =
      shape.density > 0 ? shape.density : kLadder[static_cast<std::size_t>(uniform(rng, 0, kLadder.size() - 1))];
  const auto letters = GeneratorAlphabet(shape.rank).letters();
  std::vector<Transition> arcs;
  for (StateId p = 1; p <= n; ++p) {
    for (Letter l : letters) {
      for (StateId q = 1; q <= n; ++q) {
        if (coin(rng, density)) arcs.push_back({p, l, q});
      }
    }
  }
  std::vector<StateId> finals;
  for (StateId q = 1; q <= n; ++q) {
    if (coin(rng, shape.final_probability)) finals.push_back(q);
  }
  return Nfa(n, shape.rank, std::move(arcs), std::move(finals));
}

LinearGrammar random_grammar(CorpusRng& rng, const GrammarShape& shape) {
  if (shape.min_nonterminals < 1 || shape.max_nonterminals < shape.min_nonterminals || shape.rank < 1 ||
      shape.max_production_length < 0) {
    throw InvalidInput("bad grammar shape");
  }
  const int n = uniform(rng, shape.min_nonterminals, shape.max_nonterminals);
  const int count = uniform(rng, 1, 2 * n + 2);
  std::vector<Production> prods;
  for (int k = 0; k < count; ++k) {
    const NonterminalId lhs = uniform(rng, 1, n);
    const int total = uniform(rng, 0, shape.max_production_length);
    if (coin(rng, shape.terminal_probability)) {
      prods.push_back(Production::terminal(lhs, random_word(rng, shape.rank, total)));
      continue;
    }
    const int left = uniform(rng, 0, total);
    Word alpha = random_word(rng, shape.rank, left);
    Word beta = random_word(rng, shape.rank, total - left);
    prods.push_back(Production::chain(lhs, std::move(alpha), uniform(rng, 1, n), std::move(beta)));
  }
  return LinearGrammar(n, shape.rank, std::move(prods));
}

CayleyTable symmetric3_table() {
  using Perm = std::array<int, 3>;
  std::vector<Perm> elems;
  Perm p{0, 1, 2};
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const Perm& q) {
    return static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), q) - elems.begin());
  };
  CayleyTable t;
  t.size = 6;
  t.identity = 0;
  // (a·b)(i) = b(a(i)): apply a first.
  for (const auto& a : elems) {
    for (const auto& b : elems) t.table.push_back(index_of({b[a[0]], b[a[1]], b[a[2]]}));
  }
  t.generator_images = {index_of({1, 0, 2}), index_of({1, 2, 0})};
  return t;
}

std::vector<GroupBackend> standard_backends() {
  return {GroupBackend::free_group(1), GroupBackend::free_group(2),  GroupBackend::free_abelian(2),
          GroupBackend::cyclic(2),     GroupBackend::cyclic(3),      GroupBackend::cyclic(5),
          GroupBackend::cayley(symmetric3_table())};
}

}  // namespace grouplang
