#pragma once

#include "grouplang/errors.hpp"
#include "grouplang/group.hpp"
#include "grouplang/label_matrix.hpp"
#include "grouplang/nfa.hpp"
#include "grouplang/semiring.hpp"
#include "grouplang/verdict.hpp"

namespace grouplang {

using GroupMatrix = LabelMatrix<GroupSet>;

/// Raised by closure() in early-fail mode when a cell between useful
/// vertices acquires a second label. Carries the two best witnesses.
class SingletonViolation : public Error {
 public:
  SingletonViolation(Cell cell, Word first, Word second);

  Cell cell() const noexcept { return cell_; }
  const Word& first() const noexcept { return first_; }
  const Word& second() const noexcept { return second_; }

 private:
  Cell cell_;
  Word first_;
  Word second_;
};

/// Level-0 matrix: cell (i, j) holds the images of the letters on arcs
/// i → j, each witnessed by its one-letter word. With `prune`, only useful
/// states are active and all other rows and columns stay empty.
GroupMatrix build_initial_matrix(const Nfa& a, const GroupBackend& g, bool prune = true);

/// Applies the pivot recurrence g_ij^k = g_ij^{k-1} ∪ g_ik^{k-1} g_kj^{k-1}
/// for k = 1..n over the active vertices, in ascending (k, i, j) order.
///
/// Throws CapExceeded (with the cell set) on overflow, and
/// SingletonViolation when `early_fail` is set and an active cell reaches
/// two elements. Each of the two labels extends to an accepted word with the
/// same context, and at most one of those words can be trivial in G.
GroupMatrix closure(GroupMatrix mat, SetAlgebra& alg, bool early_fail);

/// Given words u (start → j), v (cycle at j) and w (j → final) with
/// u v u⁻¹ ≠ e, returns u·v·w if it is not trivial in G, else u·w. Throws
/// InternalInconsistency if both are trivial.
Word extract_witness(const GroupBackend& g, const Word& u, const Word& v, const Word& w);

/// Decides L(a) ⊆ L(G). Throws BackendMismatch if the automaton and the
/// group have different ranks.
CheckReport check_regular_inclusion(const Nfa& a, const GroupBackend& g, const CheckConfig& config = {});

}  // namespace grouplang
