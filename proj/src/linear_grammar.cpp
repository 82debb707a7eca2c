#include "grouplang/linear_grammar.hpp"

#include <algorithm>

#include "grouplang/errors.hpp"

namespace grouplang {

LinearGrammar::LinearGrammar(int nonterminal_count, int alphabet_rank, std::vector<Production> productions,
                             NonterminalId start)
    : n_(nonterminal_count), alphabet_(alphabet_rank), start_(start), productions_(std::move(productions)) {
  if (n_ < 1) throw InvalidInput("grammar needs at least one nonterminal");
  auto in_range = [&](NonterminalId a) { return a >= 1 && a <= n_; };
  if (!in_range(start_)) throw InvalidInput("start nonterminal " + std::to_string(start_) + " out of range");
  for (std::size_t i = 0; i < productions_.size(); ++i) {
    const auto& p = productions_[i];
    const std::string where = "production " + std::to_string(i) + ": ";
    if (!in_range(p.lhs)) throw InvalidInput(where + "lhs out of range");
    if (p.rhs && !in_range(*p.rhs)) throw InvalidInput(where + "rhs out of range");
    if (!p.rhs && !p.beta.empty()) throw InvalidInput(where + "terminal production cannot have beta");
    try {
      alphabet_.validate(p.alpha);
      alphabet_.validate(p.beta);
    } catch (const LetterOutOfRange& e) {
      throw InvalidInput(where + e.what());
    }
  }
  std::sort(productions_.begin(), productions_.end());
  productions_.erase(std::unique(productions_.begin(), productions_.end()), productions_.end());
  by_lhs_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (const auto& p : productions_) by_lhs_[static_cast<std::size_t>(p.lhs)].push_back(p);
}

std::size_t LinearGrammar::max_production_length() const noexcept {
  std::size_t best = 0;
  for (const auto& p : productions_) best = std::max(best, p.alpha.size() + p.beta.size());
  return best;
}

bool LinearGrammar::generates(std::span<const Letter> w) const {
  const std::size_t len = w.size();
  const std::size_t stride = len + 1;
  // derives[(a * stride + i) * stride + j]: A_a ⇒* w[i, j).
  std::vector<char> derives(static_cast<std::size_t>(n_ + 1) * stride * stride, 0);
  auto at = [&](NonterminalId a, std::size_t i, std::size_t j) -> char& {
    return derives[(static_cast<std::size_t>(a) * stride + i) * stride + j];
  };
  auto matches = [&](const Word& part, std::size_t pos) {
    return pos + part.size() <= len && std::equal(part.begin(), part.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  };
  for (std::size_t span = 0; span <= len; ++span) {
    for (std::size_t i = 0; i + span <= len; ++i) {
      const std::size_t j = i + span;
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& p : productions_) {
          if (at(p.lhs, i, j)) continue;
          bool ok = false;
          if (p.is_terminal()) {
            ok = p.alpha.size() == span && matches(p.alpha, i);
          } else {
            const std::size_t emitted = p.alpha.size() + p.beta.size();
            ok = emitted <= span && matches(p.alpha, i) && matches(p.beta, j - p.beta.size()) &&
                 at(*p.rhs, i + p.alpha.size(), j - p.beta.size());
          }
          if (ok) {
            at(p.lhs, i, j) = 1;
            changed = true;
          }
        }
      }
    }
  }
  return at(start_, 0, len) != 0;
}

std::set<NonterminalId> useful_nonterminals(const LinearGrammar& g) {
  const auto n = static_cast<std::size_t>(g.nonterminal_count());
  std::vector<bool> fwd(n + 1, false), bwd(n + 1, false);
  std::vector<NonterminalId> stack{g.start()};
  fwd[static_cast<std::size_t>(g.start())] = true;
  while (!stack.empty()) {
    const NonterminalId a = stack.back();
    stack.pop_back();
    for (const auto& p : g.productions_of(a)) {
      if (p.rhs && !fwd[static_cast<std::size_t>(*p.rhs)]) {
        fwd[static_cast<std::size_t>(*p.rhs)] = true;
        stack.push_back(*p.rhs);
      }
    }
  }
  // Co-reachability to the sink as a fixpoint over productions.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (bwd[static_cast<std::size_t>(p.lhs)]) continue;
      if (p.is_terminal() || bwd[static_cast<std::size_t>(*p.rhs)]) {
        bwd[static_cast<std::size_t>(p.lhs)] = true;
        changed = true;
      }
    }
  }
  std::set<NonterminalId> out;
  for (NonterminalId a = 1; a <= g.nonterminal_count(); ++a) {
    if (fwd[static_cast<std::size_t>(a)] && bwd[static_cast<std::size_t>(a)]) out.insert(a);
  }
  return out;
}

LinearGrammar nfa_to_right_linear(const Nfa& a) {
  std::vector<Production> prods;
  for (const auto& t : a.transitions()) prods.push_back(Production::chain(t.from, Word{t.letter}, t.to, {}));
  for (StateId f : a.finals()) prods.push_back(Production::terminal(f, {}));
  return LinearGrammar(a.state_count(), a.alphabet().rank(), std::move(prods), a.start());
}

}  // namespace grouplang
