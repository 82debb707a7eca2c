#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "grouplang/nfa.hpp"
#include "grouplang/word.hpp"

namespace grouplang {

/// Nonterminals are numbered 1..n; n+1 names the sink vertex of the
/// grammar diagram.
using NonterminalId = int;

/// A_lhs → alpha A_rhs beta, or A_lhs → alpha when rhs is absent.
struct Production {
  NonterminalId lhs = 0;
  Word alpha;
  std::optional<NonterminalId> rhs;
  Word beta;

  bool is_terminal() const noexcept { return !rhs.has_value(); }

  static Production chain(NonterminalId lhs, Word alpha, NonterminalId rhs, Word beta) {
    return Production{lhs, std::move(alpha), rhs, std::move(beta)};
  }
  static Production terminal(NonterminalId lhs, Word alpha) {
    return Production{lhs, std::move(alpha), std::nullopt, {}};
  }

  friend bool operator==(const Production&, const Production&) = default;
  friend auto operator<=>(const Production&, const Production&) = default;
};

class LinearGrammar {
 public:
  /// Throws InvalidInput on out-of-range nonterminals, letters outside the
  /// alphabet, or a terminal production with a non-empty beta. Duplicate
  /// productions are merged.
  LinearGrammar(int nonterminal_count, int alphabet_rank, std::vector<Production> productions,
                NonterminalId start = 1);

  int nonterminal_count() const noexcept { return n_; }
  NonterminalId sink() const noexcept { return n_ + 1; }
  const GeneratorAlphabet& alphabet() const noexcept { return alphabet_; }
  NonterminalId start() const noexcept { return start_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  const std::vector<Production>& productions_of(NonterminalId a) const {
    return by_lhs_.at(static_cast<std::size_t>(a));
  }

  /// max over productions of |alpha| + |beta| (0 with no productions).
  std::size_t max_production_length() const noexcept;

  /// Membership by dynamic programming over substrings (CYK style), with a
  /// fixpoint per span for productions that emit no letters.
  bool generates(std::span<const Letter> w) const;

 private:
  int n_;
  GeneratorAlphabet alphabet_;
  NonterminalId start_;
  std::vector<Production> productions_;
  std::vector<std::vector<Production>> by_lhs_;
};

/// Nonterminals reachable from the start symbol in the grammar diagram and
/// from which the sink is reachable.
std::set<NonterminalId> useful_nonterminals(const LinearGrammar& g);

/// One nonterminal per state, A_i → x A_j per transition, A_f → ε per final
/// state. Generates exactly L(a).
LinearGrammar nfa_to_right_linear(const Nfa& a);

}  // namespace grouplang
