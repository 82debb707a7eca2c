#include "grouplang/linear_check.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

namespace grouplang {

namespace {

void require_same_rank(int language_rank, const GroupBackend& b) {
  if (language_rank != b.rank()) {
    throw BackendMismatch("language alphabet has rank " + std::to_string(language_rank) + " but " + b.describe() +
                          " has rank " + std::to_string(b.rank()));
  }
}

// Two pairs sharing exactly one component, if any.
std::optional<std::pair<WordPair, WordPair>> find_collision(const PairSet& s) {
  if (s.size() < 2) return std::nullopt;
  std::map<GroupElement, const WordPair*> by_left;
  std::map<GroupElement, const WordPair*> by_right;
  for (const auto& [key, w] : s) {
    if (auto [it, fresh] = by_left.try_emplace(key.left, &w); !fresh) return std::make_pair(*it->second, w);
    if (auto [it, fresh] = by_right.try_emplace(key.right, &w); !fresh) return std::make_pair(*it->second, w);
  }
  return std::nullopt;
}

// f_d of the walk (x, y) ⋄ mid ⋄ (v1, v2): x·mid.left·v1·v2·mid.right·y.
Word spell(const WordPair& context, const WordPair& mid, const WordPair& completion) {
  Word out = concat(context.left, mid.left, completion.left);
  out.insert(out.end(), completion.right.begin(), completion.right.end());
  out.insert(out.end(), mid.right.begin(), mid.right.end());
  out.insert(out.end(), context.right.begin(), context.right.end());
  return out;
}

Word first_nontrivial(const GroupBackend& b, const std::vector<Word>& candidates) {
  for (const auto& c : candidates) {
    if (!b.word_in_group_language(c)) return c;
  }
  throw InternalInconsistency("violation detected but every candidate witness lies in the group language");
}

}  // namespace

ComponentCollision::ComponentCollision(Cell cell, WordPair first, WordPair second)
    : Error("cell (" + std::to_string(cell.row) + ", " + std::to_string(cell.col) +
            ") holds two pairs sharing one component"),
      cell_(cell),
      first_(std::move(first)),
      second_(std::move(second)) {}

PairMatrix build_grammar_matrix(const LinearGrammar& g, const GroupBackend& b, bool prune) {
  require_same_rank(g.alphabet().rank(), b);
  const int n = g.nonterminal_count();
  PairMatrix mat(n, n + 1);
  const auto useful = useful_nonterminals(g);
  for (int a = 1; a <= n; ++a) mat.set_active(a, !prune || useful.count(a) != 0);
  mat.set_active(n + 1, true);
  for (const auto& p : g.productions()) {
    const int target = p.rhs.value_or(n + 1);
    if (!mat.active(p.lhs) || !mat.active(target)) continue;
    mat.at(p.lhs, target).insert(PairKey{b.canonicalize(p.alpha), b.canonicalize(p.beta)}, WordPair{p.alpha, p.beta});
  }
  return mat;
}

PairMatrix closure_pairs(PairMatrix mat, SetAlgebra& alg, bool early_fail) {
  const int n = mat.rows();
  const int cols = mat.cols();
  auto check_cell = [&](int i, int j) {
    if (!early_fail) return;
    if (auto hit = find_collision(mat.at(i, j))) {
      throw ComponentCollision(Cell{i, j}, std::move(hit->first), std::move(hit->second));
    }
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (mat.active(i) && mat.active(j)) check_cell(i, j);
    }
  }
  std::vector<PairSet> row(static_cast<std::size_t>(cols) + 1), col(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    mat.set_level(k);
    if (!mat.active(k)) continue;
    for (int v = 1; v <= cols; ++v) row[static_cast<std::size_t>(v)] = mat.at(k, v);
    for (int v = 1; v <= n; ++v) col[static_cast<std::size_t>(v)] = mat.at(v, k);
    for (int i = 1; i <= n; ++i) {
      if (!mat.active(i)) continue;
      for (int j = 1; j <= cols; ++j) {
        if (!mat.active(j)) continue;
        try {
          PairSet through = alg.pair_diamond(col[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]);
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

std::optional<WordPair> shortest_context(const LinearGrammar& g, NonterminalId from, NonterminalId to) {
  const auto count = static_cast<std::size_t>(g.nonterminal_count()) + 2;
  std::vector<std::optional<WordPair>> label(count);
  std::vector<bool> done(count, false);
  using Item = std::pair<std::size_t, NonterminalId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  label[static_cast<std::size_t>(from)] = WordPair{};
  queue.emplace(0, from);
  while (!queue.empty()) {
    const auto [dist, a] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(a)]) continue;
    done[static_cast<std::size_t>(a)] = true;
    if (a == to) return label[static_cast<std::size_t>(a)];
    if (a == g.sink()) continue;
    const WordPair& here = *label[static_cast<std::size_t>(a)];
    for (const auto& p : g.productions_of(a)) {
      const NonterminalId next = p.rhs.value_or(g.sink());
      if (done[static_cast<std::size_t>(next)]) continue;
      WordPair cand{concat(here.left, p.alpha), concat(p.beta, here.right)};
      auto& slot = label[static_cast<std::size_t>(next)];
      if (!slot || better_witness(cand, *slot)) {
        const std::size_t d = cand.left.size() + cand.right.size();
        slot = std::move(cand);
        queue.emplace(d, next);
      }
    }
  }
  return std::nullopt;
}

CheckReport check_linear_inclusion(const LinearGrammar& g, const GroupBackend& b, const CheckConfig& config) {
  require_same_rank(g.alphabet().rank(), b);
  CheckReport report{Holds{}, {}};
  const NonterminalId s = g.start();
  const int sink = g.sink();
  const auto useful = useful_nonterminals(g);
  if (!useful.count(s)) {
    report.verdict = Holds{true};
    return report;
  }

  SetAlgebra alg(b, config.set_cap);
  auto finish = [&](InclusionVerdict v) {
    report.verdict = std::move(v);
    report.counters = alg.counters();
    return report;
  };

  PairMatrix mat(1, 2);
  try {
    mat = closure_pairs(build_grammar_matrix(g, b), alg, config.early_fail);
  } catch (const ComponentCollision& cc) {
    const Cell c = cc.cell();
    const auto context = shortest_context(g, s, c.row);
    const auto completion = c.col == sink ? std::optional<WordPair>(WordPair{}) : shortest_context(g, c.col, sink);
    if (!context || !completion) throw InternalInconsistency("colliding cell is not between useful vertices");
    std::vector<Word> cands{spell(*context, cc.first(), *completion), spell(*context, cc.second(), *completion)};
    std::sort(cands.begin(), cands.end(), [](const Word& x, const Word& y) { return shortlex_less(x, y); });
    return finish(Fails{first_nontrivial(b, cands), ViolationKind::DistinctLabels, 0, c});
  } catch (const CapExceeded& e) {
    return finish(ResourceExceeded{e.cell().value_or(Cell{}), e.cardinality()});
  }

  // Every derivation label A_s → sink must compose to e.
  if (auto bad = alg.proj_d(mat.at(s, sink)).best_non_identity(b)) {
    return finish(Fails{bad->second, ViolationKind::SimplePath, 0, std::nullopt});
  }

  for (NonterminalId i : useful) {
    const PairSet& cycles = mat.at(i, i);
    const PairSet& exits = mat.at(i, sink);
    if (mat.at(s, i).empty() || cycles.empty() || exits.empty()) continue;
    const GroupSet exit_values = alg.proj_d(exits);
    GroupSet triple;
    try {
      triple = config.literal_triple ? alg.triple_literal(alg.proj_l(cycles), exit_values, alg.proj_r(cycles))
                                     : alg.triple_paired(cycles, exit_values);
    } catch (const CapExceeded& e) {
      return finish(ResourceExceeded{Cell{i, i}, e.cardinality()});
    }
    if (triple.is_identity_singleton(b)) continue;

    // Search the paired decomposition for a concrete counterexample.
    const WordPair context = (i == s) ? WordPair{} : mat.at(s, i).best_element()->second;
    for (const auto& [uw, uw_words] : cycles) {
      for (const auto& [v, v_words] : exits) {
        const GroupElement vv = b.multiply(v.left, v.right);
        const GroupElement z = b.multiply(b.multiply(b.multiply(uw.left, vv), uw.right), b.invert(vv));
        if (b.is_identity(z)) continue;
        const Word with_cycle = spell(context, uw_words, v_words);
        const Word without = spell(context, WordPair{}, v_words);
        return finish(Fails{first_nontrivial(b, {with_cycle, without}), ViolationKind::Conjugate, i, std::nullopt});
      }
    }
    if (config.literal_triple) return finish(Fails{std::nullopt, ViolationKind::LiteralTriple, i, std::nullopt});
    throw InternalInconsistency("paired triple is not {e} but no pair decomposition witnesses it");
  }
  return finish(Holds{});
}

}  // namespace grouplang
