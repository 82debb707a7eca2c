#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "grouplang/group.hpp"
#include "grouplang/linear_grammar.hpp"
#include "grouplang/nfa.hpp"
#include "grouplang/word.hpp"

namespace grouplang {

struct EnumerationBound {
  std::size_t max_word_length = 0;
  std::size_t max_words = 1'000'000;

  /// Throws InvalidInput unless both fields are positive.
  void validate() const;
};

enum class EnumerationStop {
  /// Every word up to max_word_length was emitted.
  LengthBound,
  /// More than max_words words exist within the length bound.
  WordCap,
  /// The visitor asked to stop.
  Visitor,
};

/// Receives words in length-lexicographic order; return false to stop.
using WordVisitor = std::function<bool(const Word&)>;

/// Accepted words of length ≤ max_word_length, each exactly once.
EnumerationStop enumerate_nfa_words(const Nfa& a, const EnumerationBound& bound, const WordVisitor& visit);

/// Generated words of length ≤ max_word_length, each exactly once. Walks of
/// the grammar diagram from the start symbol to the sink are expanded by
/// emitted length; a walk labelled (α1, β1)…(αk, βk) yields α1…αk βk…β1.
EnumerationStop enumerate_grammar_words(const LinearGrammar& g, const EnumerationBound& bound,
                                        const WordVisitor& visit);

/// Materialized forms; throw BoundExceeded on WordCap.
std::vector<Word> collect_nfa_words(const Nfa& a, const EnumerationBound& bound);
std::vector<Word> collect_grammar_words(const LinearGrammar& g, const EnumerationBound& bound);

struct OracleVerdict {
  enum class Kind { HoldsAtBound, Fails, BoundExceeded };

  Kind kind = Kind::HoldsAtBound;
  /// First word (length-lex) outside L(G), for Fails.
  std::optional<Word> witness;
  std::size_t words_checked = 0;
};

/// Tests every word of the stream; HoldsAtBound is not a proof of inclusion.
OracleVerdict brute_force_inclusion(std::span<const Word> words, const GroupBackend& g);
OracleVerdict brute_force_inclusion(const Nfa& a, const GroupBackend& g, const EnumerationBound& bound);
OracleVerdict brute_force_inclusion(const LinearGrammar& grammar, const GroupBackend& g,
                                    const EnumerationBound& bound);

/// 3n. If L(a) ⊄ L(G), some counterexample is assembled from a simple path,
/// at most one simple cycle and a simple path to acceptance.
std::size_t counterexample_bound_regular(const Nfa& a);

/// (2n + 1)·max(1, L_max): at most n + 1 arcs of a simple walk to the sink plus one
/// simple cycle of at most n arcs, each emitting at most L_max letters.
std::size_t counterexample_bound_linear(const LinearGrammar& g);

}  // namespace grouplang
