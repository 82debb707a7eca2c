#pragma once

#include <random>
#include <vector>

#include "grouplang/group.hpp"
#include "grouplang/linear_grammar.hpp"
#include "grouplang/nfa.hpp"

namespace grouplang {

/// Seeded random instance generation. Streams are reproducible for a given
/// seed and standard library.
using CorpusRng = std::mt19937_64;

struct NfaShape {
  int min_states = 1;
  int max_states = 5;
  int rank = 1;
  /// Probability of each possible arc (p, a, q). Zero draws one per
  /// automaton from a fixed ladder, so a corpus mixes sparse and dense.
  double density = 0.0;
  double final_probability = 0.35;
};

struct GrammarShape {
  int min_nonterminals = 1;
  int max_nonterminals = 4;
  int rank = 1;
  /// Bound on |α| + |β| per production.
  int max_production_length = 2;
  double terminal_probability = 0.3;
};

Nfa random_nfa(CorpusRng& rng, const NfaShape& shape);
LinearGrammar random_grammar(CorpusRng& rng, const GrammarShape& shape);

/// Symmetric group on three points generated by the transposition (1 2) and
/// the 3-cycle (1 2 3). Element k is the k-th permutation of {0, 1, 2} in
/// lexicographic order; the identity is element 0.
CayleyTable symmetric3_table();

/// FreeGroup{1}, FreeGroup{2}, FreeAbelian{2}, Cyclic{2}, Cyclic{3},
/// Cyclic{5} and the Cayley table of S3.
std::vector<GroupBackend> standard_backends();

}  // namespace grouplang
