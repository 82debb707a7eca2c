#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "grouplang/word.hpp"

namespace grouplang {

/// States are numbered 1..n.
using StateId = int;

struct Transition {
  StateId from = 0;
  Letter letter = 0;
  StateId to = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton over X ∪ X⁻¹ with single-letter arcs
/// and no ε-transitions.
class Nfa {
 public:
  /// Throws InvalidInput on out-of-range states, ε (zero) letters or
  /// letters outside the alphabet. Duplicate transitions are merged.
  Nfa(int state_count, int alphabet_rank, std::vector<Transition> transitions, std::vector<StateId> finals,
      StateId start = 1);

  int state_count() const noexcept { return state_count_; }
  const GeneratorAlphabet& alphabet() const noexcept { return alphabet_; }
  StateId start() const noexcept { return start_; }
  /// Sorted, duplicate free.
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const std::vector<StateId>& finals() const noexcept { return finals_; }
  bool is_final(StateId q) const;
  /// Arcs leaving q, sorted by (letter, target).
  const std::vector<Transition>& outgoing(StateId q) const { return out_.at(static_cast<std::size_t>(q)); }

  /// Subset simulation.
  bool accepts(std::span<const Letter> w) const;

 private:
  int state_count_;
  GeneratorAlphabet alphabet_;
  StateId start_;
  std::vector<Transition> transitions_;
  std::vector<StateId> finals_;
  std::vector<bool> final_flags_;
  std::vector<std::vector<Transition>> out_;
};

/// States reachable from the start state and co-reachable to a final state.
std::set<StateId> useful_states(const Nfa& a);

/// Shortlex-least word labelling a walk from `from` to `to` (ε if equal).
std::optional<Word> shortest_word_between(const Nfa& a, StateId from, StateId to);
/// Shortlex-least word labelling a walk from `from` to any final state.
std::optional<Word> shortest_word_to_final(const Nfa& a, StateId from);

}  // namespace grouplang
