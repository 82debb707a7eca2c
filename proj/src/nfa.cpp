#include "grouplang/nfa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>

#include "grouplang/errors.hpp"

namespace grouplang {

Nfa::Nfa(int state_count, int alphabet_rank, std::vector<Transition> transitions, std::vector<StateId> finals,
         StateId start)
    : state_count_(state_count), alphabet_(alphabet_rank), start_(start), transitions_(std::move(transitions)) {
  if (state_count < 1) throw InvalidInput("automaton needs at least one state");
  auto in_range = [&](StateId q) { return q >= 1 && q <= state_count_; };
  if (!in_range(start)) throw InvalidInput("start state " + std::to_string(start) + " out of range");
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    const std::string where = "transition " + std::to_string(i) + ": ";
    if (!in_range(t.from) || !in_range(t.to)) throw InvalidInput(where + "state out of range");
    if (t.letter == 0) throw InvalidInput(where + "epsilon transitions are not supported");
    if (!alphabet_.contains(t.letter)) {
      throw InvalidInput(where + "letter " + std::to_string(t.letter) + " outside the alphabet");
    }
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  final_flags_.assign(static_cast<std::size_t>(state_count_) + 1, false);
  for (StateId f : finals) {
    if (!in_range(f)) throw InvalidInput("final state " + std::to_string(f) + " out of range");
    final_flags_[static_cast<std::size_t>(f)] = true;
  }
  for (StateId q = 1; q <= state_count_; ++q) {
    if (final_flags_[static_cast<std::size_t>(q)]) finals_.push_back(q);
  }

  out_.assign(static_cast<std::size_t>(state_count_) + 1, {});
  for (const auto& t : transitions_) out_[static_cast<std::size_t>(t.from)].push_back(t);
  for (auto& arcs : out_) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Transition& a, const Transition& b) { return std::tie(a.letter, a.to) < std::tie(b.letter, b.to); });
  }
}

bool Nfa::is_final(StateId q) const {
  return q >= 1 && q <= state_count_ && final_flags_[static_cast<std::size_t>(q)];
}

bool Nfa::accepts(std::span<const Letter> w) const {
  std::vector<bool> current(static_cast<std::size_t>(state_count_) + 1, false);
  current[static_cast<std::size_t>(start_)] = true;
  for (Letter l : w) {
    std::vector<bool> next(current.size(), false);
    bool any = false;
    for (StateId q = 1; q <= state_count_; ++q) {
      if (!current[static_cast<std::size_t>(q)]) continue;
      for (const auto& t : out_[static_cast<std::size_t>(q)]) {
        if (t.letter == l) {
          next[static_cast<std::size_t>(t.to)] = true;
          any = true;
        }
      }
    }
    if (!any) return false;
    current.swap(next);
  }
  for (StateId f : finals_) {
    if (current[static_cast<std::size_t>(f)]) return true;
  }
  return false;
}

std::set<StateId> useful_states(const Nfa& a) {
  const auto n = static_cast<std::size_t>(a.state_count());
  std::vector<bool> fwd(n + 1, false), bwd(n + 1, false);
  std::vector<std::vector<StateId>> rev(n + 1);
  for (const auto& t : a.transitions()) rev[static_cast<std::size_t>(t.to)].push_back(t.from);

  std::vector<StateId> stack{a.start()};
  fwd[static_cast<std::size_t>(a.start())] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (const auto& t : a.outgoing(q)) {
      if (!fwd[static_cast<std::size_t>(t.to)]) {
        fwd[static_cast<std::size_t>(t.to)] = true;
        stack.push_back(t.to);
      }
    }
  }
  for (StateId f : a.finals()) {
    bwd[static_cast<std::size_t>(f)] = true;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : rev[static_cast<std::size_t>(q)]) {
      if (!bwd[static_cast<std::size_t>(p)]) {
        bwd[static_cast<std::size_t>(p)] = true;
        stack.push_back(p);
      }
    }
  }
  std::set<StateId> out;
  for (StateId q = 1; q <= a.state_count(); ++q) {
    if (fwd[static_cast<std::size_t>(q)] && bwd[static_cast<std::size_t>(q)]) out.insert(q);
  }
  return out;
}

namespace {

// Breadth-first search expanding arcs in ascending letter order; the first
// time a state is discovered its word is shortlex-least.
std::optional<Word> shortest_word(const Nfa& a, StateId from, const std::function<bool(StateId)>& is_target) {
  const auto n = static_cast<std::size_t>(a.state_count());
  std::vector<std::optional<Word>> word(n + 1);
  std::deque<StateId> queue{from};
  word[static_cast<std::size_t>(from)] = Word{};
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    if (is_target(q)) return word[static_cast<std::size_t>(q)];
    for (const auto& t : a.outgoing(q)) {
      auto& slot = word[static_cast<std::size_t>(t.to)];
      if (slot) continue;
      slot = *word[static_cast<std::size_t>(q)];
      slot->push_back(t.letter);
      queue.push_back(t.to);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> shortest_word_between(const Nfa& a, StateId from, StateId to) {
  return shortest_word(a, from, [to](StateId q) { return q == to; });
}

std::optional<Word> shortest_word_to_final(const Nfa& a, StateId from) {
  return shortest_word(a, from, [&a](StateId q) { return a.is_final(q); });
}

}  // namespace grouplang
