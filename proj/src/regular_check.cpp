#include "grouplang/regular_check.hpp"

#include <algorithm>
#include <vector>

namespace grouplang {

namespace {

void require_same_rank(int language_rank, const GroupBackend& g) {
  if (language_rank != g.rank()) {
    throw BackendMismatch("language alphabet has rank " + std::to_string(language_rank) + " but " + g.describe() +
                          " has rank " + std::to_string(g.rank()));
  }
}

// The two best witnesses in a cell holding at least two elements.
std::pair<Word, Word> two_best(const GroupSet& s) {
  std::vector<const Word*> ws;
  for (const auto& entry : s) ws.push_back(&entry.second);
  std::partial_sort(ws.begin(), ws.begin() + 2, ws.end(),
                    [](const Word* a, const Word* b) { return better_witness(*a, *b); });
  return {*ws[0], *ws[1]};
}

Word first_nontrivial(const GroupBackend& g, std::vector<Word> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  for (auto& c : candidates) {
    if (!g.word_in_group_language(c)) return std::move(c);
  }
  throw InternalInconsistency("violation detected but every candidate witness lies in the group language");
}

}  // namespace

SingletonViolation::SingletonViolation(Cell cell, Word first, Word second)
    : Error("cell (" + std::to_string(cell.row) + ", " + std::to_string(cell.col) + ") holds two distinct labels"),
      cell_(cell),
      first_(std::move(first)),
      second_(std::move(second)) {}

GroupMatrix build_initial_matrix(const Nfa& a, const GroupBackend& g, bool prune) {
  require_same_rank(a.alphabet().rank(), g);
  const int n = a.state_count();
  GroupMatrix mat(n, n);
  const auto useful = useful_states(a);
  for (int q = 1; q <= n; ++q) mat.set_active(q, !prune || useful.count(q) != 0);
  for (const auto& t : a.transitions()) {
    if (!mat.active(t.from) || !mat.active(t.to)) continue;
    mat.at(t.from, t.to).insert(g.letter_image(t.letter), Word{t.letter});
  }
  return mat;
}

GroupMatrix closure(GroupMatrix mat, SetAlgebra& alg, bool early_fail) {
  const int n = mat.rows();
  auto check_cell = [&](int i, int j) {
    if (early_fail && mat.at(i, j).size() >= 2) {
      auto [first, second] = two_best(mat.at(i, j));
      throw SingletonViolation(Cell{i, j}, std::move(first), std::move(second));
    }
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (mat.active(i) && mat.active(j)) check_cell(i, j);
    }
  }
  std::vector<GroupSet> row(static_cast<std::size_t>(n) + 1), col(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    mat.set_level(k);
    if (!mat.active(k)) continue;
    // Pivot k reads level k-1 values of row k and column k.
    for (int v = 1; v <= n; ++v) {
      row[static_cast<std::size_t>(v)] = mat.at(k, v);
      col[static_cast<std::size_t>(v)] = mat.at(v, k);
    }
    for (int i = 1; i <= n; ++i) {
      if (!mat.active(i)) continue;
      for (int j = 1; j <= n; ++j) {
        if (!mat.active(j)) continue;
        try {
          GroupSet through = alg.set_product(col[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]);
          mat.at(i, j) = alg.set_union(mat.at(i, j), through);
        } catch (CapExceeded& e) {
          e.set_cell(Cell{i, j});
          throw;
        }
        check_cell(i, j);
      }
    }
  }
  mat.set_level(n);
  return mat;
}

Word extract_witness(const GroupBackend& g, const Word& u, const Word& v, const Word& w) {
  Word uvw = concat(u, v, w);
  if (!g.word_in_group_language(uvw)) return uvw;
  Word uw = concat(u, w);
  if (!g.word_in_group_language(uw)) return uw;
  throw InternalInconsistency("both u·v·w and u·w lie in the group language although u·v·u⁻¹ ≠ e");
}

CheckReport check_regular_inclusion(const Nfa& a, const GroupBackend& g, const CheckConfig& config) {
  require_same_rank(a.alphabet().rank(), g);
  CheckReport report{Holds{}, {}};
  const StateId s = a.start();
  const auto useful = useful_states(a);
  if (!useful.count(s)) {
    report.verdict = Holds{true};
    return report;
  }

  SetAlgebra alg(g, config.set_cap);
  GroupMatrix mat(1, 1);
  try {
    mat = closure(build_initial_matrix(a, g), alg, config.early_fail);
  } catch (const SingletonViolation& sv) {
    const Cell c = sv.cell();
    const auto u = shortest_word_between(a, s, c.row);
    const auto w = shortest_word_to_final(a, c.col);
    if (!u || !w) throw InternalInconsistency("violating cell is not between useful states");
    report.verdict = Fails{first_nontrivial(g, {concat(*u, sv.first(), *w), concat(*u, sv.second(), *w)}),
                           ViolationKind::DistinctLabels, 0, c};
    report.counters = alg.counters();
    return report;
  } catch (const CapExceeded& e) {
    report.verdict = ResourceExceeded{e.cell().value_or(Cell{}), e.cardinality()};
    report.counters = alg.counters();
    return report;
  }

  // Labels of start-to-accept walks must all be e.
  for (StateId t : a.finals()) {
    if (!useful.count(t)) continue;
    if (auto bad = mat.at(s, t).best_non_identity(g)) {
      report.verdict = Fails{bad->second, ViolationKind::SimplePath, 0, std::nullopt};
      report.counters = alg.counters();
      return report;
    }
  }

  // Cycles at every useful vertex must conjugate to e.
  for (StateId j : useful) {
    const bool reaches_final = std::any_of(a.finals().begin(), a.finals().end(), [&](StateId t) {
      return useful.count(t) && !mat.at(j, t).empty();
    });
    if (!reaches_final || mat.at(s, j).empty() || mat.at(j, j).empty()) continue;
    GroupSet conj;
    try {
      conj = alg.star(mat.at(s, j), mat.at(j, j));
    } catch (const CapExceeded& e) {
      report.verdict = ResourceExceeded{Cell{j, j}, e.cardinality()};
      report.counters = alg.counters();
      return report;
    }
    if (conj.is_identity_singleton(g)) continue;

    const auto cycle = mat.at(j, j).best_non_identity(g);
    if (!cycle) throw InternalInconsistency("conjugate set is not {e} but every cycle label is e");
    const Word u = (j == s) ? Word{} : mat.at(s, j).best_element()->second;
    Word w;
    if (!a.is_final(j)) {
      std::optional<Word> best;
      for (StateId t : a.finals()) {
        if (!useful.count(t) || mat.at(j, t).empty()) continue;
        Word cand = mat.at(j, t).best_element()->second;
        if (!best || better_witness(cand, *best)) best = std::move(cand);
      }
      w = *best;
    }
    report.verdict = Fails{extract_witness(g, u, cycle->second, w), ViolationKind::Conjugate, j, std::nullopt};
    report.counters = alg.counters();
    return report;
  }

  report.counters = alg.counters();
  return report;
}

}  // namespace grouplang
