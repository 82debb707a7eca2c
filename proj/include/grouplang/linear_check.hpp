#pragma once

#include <optional>

#include "grouplang/errors.hpp"
#include "grouplang/group.hpp"
#include "grouplang/label_matrix.hpp"
#include "grouplang/linear_grammar.hpp"
#include "grouplang/semiring.hpp"
#include "grouplang/verdict.hpp"

namespace grouplang {

/// n × (n+1) grid of pair sets; column n+1 is the sink.
using PairMatrix = LabelMatrix<PairSet>;

/// Raised by closure_pairs() in early-fail mode when an active cell holds
/// two pairs (a, b), (a', b') that agree in exactly one component. In any
/// common context (x, y) and completion v the words x a v b y and
/// x a' v b' y then differ in G, so at most one of them is trivial.
class ComponentCollision : public Error {
 public:
  ComponentCollision(Cell cell, WordPair first, WordPair second);

  Cell cell() const noexcept { return cell_; }
  const WordPair& first() const noexcept { return first_; }
  const WordPair& second() const noexcept { return second_; }

 private:
  Cell cell_;
  WordPair first_;
  WordPair second_;
};

/// Level-0 matrix of the grammar diagram over U_G: A_i → α A_j β puts
/// (α, β) in cell (i, j); A_i → α puts (α, ε) in cell (i, n+1). With
/// `prune`, rows and columns of useless nonterminals stay empty.
PairMatrix build_grammar_matrix(const LinearGrammar& g, const GroupBackend& b, bool prune = true);

/// g_ij^k = g_ij^{k-1} ∪ g_ik^{k-1} ⋄ g_kj^{k-1} for pivots k = 1..n (the
/// sink is never a pivot), i over nonterminals, j over nonterminals and the
/// sink. Throws CapExceeded with the cell set, and ComponentCollision when
/// `early_fail` is set.
PairMatrix closure_pairs(PairMatrix mat, SetAlgebra& alg, bool early_fail = false);

/// Label (x, y) of a walk from `from` to `to` in the grammar diagram with the
/// fewest emitted letters; (ε, ε) when from == to. `to` may be the sink.
std::optional<WordPair> shortest_context(const LinearGrammar& g, NonterminalId from, NonterminalId to);

/// Decides L(g) ⊆ L(G). The cycle condition uses the paired triple
/// {u v w v⁻¹ | (u, w) ∈ g_ii, v ∈ f_d(g_i,n+1)} unless
/// config.literal_triple is set.
CheckReport check_linear_inclusion(const LinearGrammar& g, const GroupBackend& b, const CheckConfig& config = {});

}  // namespace grouplang
