#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grouplang/errors.hpp"
#include "grouplang/semiring.hpp"
#include "grouplang/word.hpp"

namespace grouplang {

struct CheckConfig {
  std::size_t set_cap = kDefaultSetCap;
  /// Stop as soon as a cell proves non-inclusion on its own: a regular cell
  /// with two distinct labels, or a linear cell with two pairs that agree in
  /// exactly one component.
  bool early_fail = true;
  /// Linear check only: use the independent-projection triple
  /// ⟨f_l(g_ii), f_d(g_i,n+1), f_r(g_ii)⟩ instead of the paired one. Its
  /// violations can be spurious.
  bool literal_triple = false;
};

enum class ViolationKind {
  /// A label of a start-to-accept walk in the final closure is not e.
  SimplePath,
  /// A conjugate (or paired triple) over the cycles at `vertex` is not e.
  Conjugate,
  /// Early failure: one cell holds two labels that cannot both lie in L(G).
  DistinctLabels,
  /// Literal-triple mode only: the independent-projection triple is not {e}
  /// but no generated word witnesses it.
  LiteralTriple,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Holds {
  bool empty_language = false;
};

struct Fails {
  /// A word of the language that is not in L(G). Absent only for
  /// ViolationKind::LiteralTriple.
  std::optional<Word> witness;
  ViolationKind reason = ViolationKind::SimplePath;
  /// Vertex of a Conjugate / LiteralTriple violation.
  int vertex = 0;
  /// Cell of a DistinctLabels violation.
  std::optional<Cell> cell;
};

struct ResourceExceeded {
  Cell cell;
  std::size_t cardinality = 0;
};

using InclusionVerdict = std::variant<Holds, Fails, ResourceExceeded>;

struct CheckReport {
  InclusionVerdict verdict;
  OpCounters counters;

  bool holds() const noexcept { return std::holds_alternative<Holds>(verdict); }
  bool fails() const noexcept { return std::holds_alternative<Fails>(verdict); }
  bool resource_exceeded() const noexcept { return std::holds_alternative<ResourceExceeded>(verdict); }
};

/// One-line human description, e.g. "fails (conjugate violation at vertex 2)".
std::string describe(const InclusionVerdict& v);

}  // namespace grouplang
