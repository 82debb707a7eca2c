#include <gtest/gtest.h>

#include <random>

#include "grouplang/corpus.hpp"
#include "grouplang/linear_check.hpp"
#include "grouplang/oracle.hpp"
#include "grouplang/regular_check.hpp"
#include "support.hpp"

namespace grouplang {
namespace {

using P = Production;

LinearGrammar balanced() { return LinearGrammar(1, 1, {P::chain(1, {1}, 1, {-1}), P::terminal(1, {})}); }
LinearGrammar x_a_x() { return LinearGrammar(1, 1, {P::chain(1, {1}, 1, {1}), P::terminal(1, {})}); }
LinearGrammar nested_powers() {
  return LinearGrammar(1, 1, {P::chain(1, {1}, 1, {-1}), P::chain(1, {1, 1}, 1, {-1, -1}), P::terminal(1, {})});
}

std::set<PairKey> keys(const PairSet& s) {
  std::set<PairKey> out;
  for (const auto& [p, _] : s) out.insert(p);
  return out;
}

PairKey pk(const GroupBackend& g, const Word& l, const Word& r) { return PairKey{g.canonicalize(l), g.canonicalize(r)}; }

TEST(Grammar, ValidatesInput) {
  EXPECT_THROW(LinearGrammar(0, 1, {}), InvalidInput);
  EXPECT_THROW(LinearGrammar(1, 1, {P::chain(1, {}, 2, {})}), InvalidInput);
  EXPECT_THROW(LinearGrammar(1, 1, {P::terminal(1, {2})}), InvalidInput);
  EXPECT_THROW(LinearGrammar(1, 1, {P::terminal(1, {0})}), InvalidInput);
  EXPECT_EQ(LinearGrammar(1, 1, {P::terminal(1, {}), P::terminal(1, {})}).productions().size(), 1u);
}

TEST(Grammar, Generates) {
  const auto g = balanced();
  EXPECT_TRUE(g.generates(Word{}));
  EXPECT_TRUE(g.generates(Word{1, 1, -1, -1}));
  EXPECT_FALSE(g.generates(Word{1, -1, 1, -1}));
  EXPECT_FALSE(g.generates(Word{1}));
}

TEST(UsefulNonterminals, Examples) {
  EXPECT_EQ(useful_nonterminals(LinearGrammar(1, 1, {P::terminal(1, {})})), (std::set<NonterminalId>{1}));
  EXPECT_EQ(useful_nonterminals(LinearGrammar(2, 1, {P::chain(1, {1}, 2, {}), P::terminal(2, {})})),
            (std::set<NonterminalId>{1, 2}));
  EXPECT_EQ(useful_nonterminals(LinearGrammar(2, 1, {P::terminal(1, {}), P::chain(2, {1}, 2, {})})),
            (std::set<NonterminalId>{1}));
}

TEST(GrammarMatrix, Examples) {
  const auto f1 = GroupBackend::free_group(1);
  const LinearGrammar only_loop(1, 1, {P::chain(1, {1}, 1, {-1})});
  EXPECT_EQ(keys(build_grammar_matrix(only_loop, f1, false).at(1, 1)), (std::set<PairKey>{pk(f1, {1}, {-1})}));
  // A₁ never terminates, so pruning empties its row.
  EXPECT_TRUE(build_grammar_matrix(only_loop, f1).at(1, 1).empty());

  const auto mat = build_grammar_matrix(balanced(), f1);
  EXPECT_EQ(keys(mat.at(1, 1)), (std::set<PairKey>{pk(f1, {1}, {-1})}));
  ASSERT_EQ(mat.at(1, 2).size(), 1u);
  EXPECT_EQ(mat.at(1, 2).begin()->second, (WordPair{{}, {}}));

  const auto two = build_grammar_matrix(nested_powers(), f1);
  EXPECT_EQ(keys(two.at(1, 1)), (std::set<PairKey>{pk(f1, {1}, {-1}), pk(f1, {1, 1}, {-1, -1})}));
}

TEST(ClosurePairs, Examples) {
  const auto f1 = GroupBackend::free_group(1);
  {
    SetAlgebra alg(f1);
    const LinearGrammar g(2, 1, {P::chain(1, {1}, 2, {-1}), P::terminal(2, {})});
    const auto mat = closure_pairs(build_grammar_matrix(g, f1), alg);
    EXPECT_EQ(keys(mat.at(1, 3)), (std::set<PairKey>{pk(f1, {1}, {-1})}));
  }
  {
    SetAlgebra alg(f1);
    const auto mat = closure_pairs(build_grammar_matrix(balanced(), f1), alg);
    EXPECT_EQ(keys(mat.at(1, 1)), (std::set<PairKey>{pk(f1, {1}, {-1}), pk(f1, {1, 1}, {-1, -1})}));
  }
  {
    SetAlgebra alg(f1);
    const auto mat = closure_pairs(build_grammar_matrix(LinearGrammar(2, 1, {}), f1), alg);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 3; ++j) EXPECT_TRUE(mat.at(i, j).empty());
    }
  }
}

TEST(CheckLinear, Examples) {
  const auto f1 = GroupBackend::free_group(1);
  const auto c2 = GroupBackend::cyclic(2);
  const auto c3 = GroupBackend::cyclic(3);
  EXPECT_TRUE(check_linear_inclusion(balanced(), f1).holds());

  EXPECT_TRUE(check_linear_inclusion(x_a_x(), c2).holds());
  for (const auto& w : collect_grammar_words(x_a_x(), {12, 1000})) ASSERT_TRUE(testing::reference_trivial(c2, w));

  const auto r = check_linear_inclusion(x_a_x(), c3);
  ASSERT_TRUE(r.fails());
  EXPECT_EQ(std::get<Fails>(r.verdict).witness, (Word{1, 1}));
  const auto oracle = brute_force_inclusion(x_a_x(), c3, {12, 1000});
  EXPECT_EQ(oracle.witness, (Word{1, 1}));
}

TEST(CheckLinear, PairedTripleHoldsWhereLiteralTripleFails) {
  const auto f1 = GroupBackend::free_group(1);
  const auto paired = check_linear_inclusion(nested_powers(), f1);
  EXPECT_TRUE(paired.holds());
  EXPECT_EQ(paired.counters.triples, 1u);

  const auto literal = check_linear_inclusion(nested_powers(), f1, CheckConfig{kDefaultSetCap, true, true});
  ASSERT_TRUE(literal.fails());
  EXPECT_EQ(std::get<Fails>(literal.verdict).reason, ViolationKind::LiteralTriple);
  EXPECT_FALSE(std::get<Fails>(literal.verdict).witness.has_value());

  const auto oracle = brute_force_inclusion(nested_powers(), f1, {12, 100000});
  EXPECT_EQ(oracle.kind, OracleVerdict::Kind::HoldsAtBound);
  EXPECT_GT(oracle.words_checked, 1u);
}

TEST(CheckLinear, HoldsWithSeveralPairsInACell) {
  const auto f1 = GroupBackend::free_group(1);
  SetAlgebra alg(f1);
  const auto mat = closure_pairs(build_grammar_matrix(nested_powers(), f1), alg, true);
  EXPECT_GE(mat.at(1, 1).size(), 2u);
  EXPECT_TRUE(check_linear_inclusion(nested_powers(), f1).holds());
}

TEST(CheckLinear, CapNamesTheCell) {
  const auto r = check_linear_inclusion(nested_powers(), GroupBackend::free_group(1), CheckConfig{2, true, false});
  ASSERT_TRUE(r.resource_exceeded());
  const auto& re = std::get<ResourceExceeded>(r.verdict);
  EXPECT_EQ(re.cell.row, 1);
  EXPECT_EQ(re.cell.col, 1);
  EXPECT_GT(re.cardinality, 2u);
}

TEST(CheckLinear, OnlyEpsilonHoldsEverywhere) {
  const LinearGrammar g(1, 1, {P::terminal(1, {})});
  for (const auto& b : standard_backends()) {
    if (b.rank() == 1) {
      EXPECT_TRUE(check_linear_inclusion(g, b).holds());
    }
  }
}

TEST(CheckLinear, EmptyLanguage) {
  const auto r = check_linear_inclusion(LinearGrammar(1, 1, {P::chain(1, {1}, 1, {-1})}), GroupBackend::cyclic(2));
  ASSERT_TRUE(r.holds());
  EXPECT_TRUE(std::get<Holds>(r.verdict).empty_language);
}

TEST(CheckLinear, ConjugateViolationWitness) {
  // A₁ → x A₁ y⁻¹ | x y⁻¹ generates xⁿ y⁻ⁿ for n ≥ 1, never trivial in F2
  // or Z².
  const LinearGrammar g(1, 2, {P::chain(1, {1}, 1, {-2}), P::terminal(1, {1, -2})});
  for (const auto& b : {GroupBackend::free_group(2), GroupBackend::free_abelian(2)}) {
    const auto r = check_linear_inclusion(g, b);
    ASSERT_TRUE(r.fails());
    const auto& w = *std::get<Fails>(r.verdict).witness;
    EXPECT_TRUE(testing::reference_generates(g, w));
    EXPECT_FALSE(testing::reference_trivial(b, w));
  }
}

TEST(CheckLinear, ShortestWitnessThroughOneCycle) {
  // A₁ → x A₁ x⁻¹ y | ε over F2: ε is trivial, x x⁻¹ y is not.
  const auto f2 = GroupBackend::free_group(2);
  const LinearGrammar g(1, 2, {P::chain(1, {1}, 1, {-1, 2}), P::terminal(1, {})});
  for (bool early : {true, false}) {
    const auto r = check_linear_inclusion(g, f2, CheckConfig{kDefaultSetCap, early, false});
    ASSERT_TRUE(r.fails());
    EXPECT_EQ(std::get<Fails>(r.verdict).witness, (Word{1, -1, 2}));
  }
}

TEST(NfaToRightLinear, Examples) {
  const auto chain = nfa_to_right_linear(Nfa(2, 1, {{1, 1, 2}}, {2}));
  EXPECT_EQ(chain.productions(), (std::vector<P>{P::chain(1, {1}, 2, {}), P::terminal(2, {})}));
  const auto eps = nfa_to_right_linear(Nfa(1, 1, {}, {1}));
  EXPECT_EQ(eps.productions(), (std::vector<P>{P::terminal(1, {})}));
  const auto loop = nfa_to_right_linear(Nfa(1, 1, {{1, 1, 1}}, {1}));
  EXPECT_EQ(loop.productions(), (std::vector<P>{P::terminal(1, {}), P::chain(1, {1}, 1, {})}));
}

TEST(ShortestContext, FindsFewestLetters) {
  const LinearGrammar g(3, 1,
                        {P::chain(1, {1, 1}, 3, {}), P::chain(1, {}, 2, {-1}), P::chain(2, {}, 3, {}), P::terminal(3, {})});
  EXPECT_EQ(shortest_context(g, 1, 3), (WordPair{{}, {-1}}));
  EXPECT_EQ(shortest_context(g, 1, 1), (WordPair{}));
  EXPECT_EQ(shortest_context(g, 3, 4), (WordPair{}));
  EXPECT_FALSE(shortest_context(g, 3, 1).has_value());
}

// Seeded random grammars.

struct Instance {
  LinearGrammar grammar;
  GroupBackend group;
};

std::vector<Instance> small_corpus(std::uint64_t seed, int per_backend) {
  CorpusRng rng(seed);
  std::vector<Instance> out;
  for (const auto& g : standard_backends()) {
    for (int k = 0; k < per_backend; ++k) out.push_back({random_grammar(rng, GrammarShape{1, 3, g.rank(), 2}), g});
  }
  return out;
}

TEST(LinearProperties, AgreesWithOracleAndWitnessesAreValid) {
  for (const auto& [gr, g] : small_corpus(21, 40)) {
    const auto r = check_linear_inclusion(gr, g);
    if (r.resource_exceeded()) continue;
    const auto bound = std::max(counterexample_bound_linear(gr), std::size_t{1});
    const auto oracle = brute_force_inclusion(gr, g, {bound, 2'000'000});
    ASSERT_NE(oracle.kind, OracleVerdict::Kind::BoundExceeded);
    ASSERT_EQ(r.holds(), oracle.kind == OracleVerdict::Kind::HoldsAtBound) << g.describe();
    if (r.fails()) {
      const auto& w = *std::get<Fails>(r.verdict).witness;
      ASSERT_TRUE(testing::reference_generates(gr, w));
      ASSERT_FALSE(testing::reference_trivial(g, w));
    }
  }
}

TEST(LinearProperties, EarlyFailDoesNotChangeVerdicts) {
  for (const auto& [gr, g] : small_corpus(22, 30)) {
    const auto on = check_linear_inclusion(gr, g, CheckConfig{kDefaultSetCap, true, false});
    const auto off = check_linear_inclusion(gr, g, CheckConfig{256, false, false});
    if (on.resource_exceeded() || off.resource_exceeded()) continue;
    ASSERT_EQ(on.holds(), off.holds());
  }
}

TEST(LinearProperties, OperationCounts) {
  for (const auto& [gr, g] : small_corpus(23, 30)) {
    const auto r = check_linear_inclusion(gr, g, CheckConfig{256, false, false});
    const auto n = static_cast<std::uint64_t>(gr.nonterminal_count());
    ASSERT_LE(r.counters.unions, n * n * (n + 1));
    ASSERT_LE(r.counters.diamonds, n * n * (n + 1));
    ASSERT_LE(r.counters.triples, n);
  }
}

TEST(LinearProperties, MatchesRegularCheckOnAutomata) {
  CorpusRng rng(24);
  for (const auto& g : standard_backends()) {
    for (int k = 0; k < 40; ++k) {
      const auto a = random_nfa(rng, NfaShape{1, 4, g.rank()});
      const auto reg = check_regular_inclusion(a, g);
      const auto lin = check_linear_inclusion(nfa_to_right_linear(a), g);
      ASSERT_FALSE(lin.resource_exceeded());
      ASSERT_EQ(reg.holds(), lin.holds());
    }
  }
}

// Images of walk labels from the start to the sink equal images of words
// produced by derivations with the same number of steps. Walk labels are
// composed with ⋄; derivations rewrite sentential forms.
TEST(LinearProperties, WalkLabelsMatchDerivations) {
  CorpusRng rng(25);
  constexpr int kSteps = 4;
  for (const auto& b : standard_backends()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto gr = random_grammar(rng, GrammarShape{1, 3, b.rank(), 2});
      SetAlgebra alg(b);

      std::set<GroupElement> via_walks;
      std::function<void(NonterminalId, const PairSet&, int)> walk = [&](NonterminalId a, const PairSet& label,
                                                                         int left) {
        if (left == 0) return;
        for (const auto& p : gr.productions_of(a)) {
          const auto next = alg.pair_diamond(label, alg.pair_singleton(p.alpha, p.beta));
          if (p.is_terminal()) {
            for (const auto& [e, _] : alg.proj_d(next)) via_walks.insert(e);
          } else {
            walk(*p.rhs, next, left - 1);
          }
        }
      };
      walk(gr.start(), alg.identity_pair_set(), kSteps);

      // Sentential forms: prefix, nonterminal, suffix.
      std::set<GroupElement> via_derivations;
      std::function<void(const Word&, NonterminalId, const Word&, int)> derive =
          [&](const Word& pre, NonterminalId a, const Word& suf, int left) {
            if (left == 0) return;
            for (const auto& p : gr.productions_of(a)) {
              Word npre = pre;
              npre.insert(npre.end(), p.alpha.begin(), p.alpha.end());
              if (p.is_terminal()) {
                npre.insert(npre.end(), suf.begin(), suf.end());
                via_derivations.insert(b.canonicalize(npre));
              } else {
                Word nsuf = p.beta;
                nsuf.insert(nsuf.end(), suf.begin(), suf.end());
                derive(npre, *p.rhs, nsuf, left - 1);
              }
            }
          };
      derive({}, gr.start(), {}, kSteps);
      ASSERT_EQ(via_walks, via_derivations) << b.describe();
    }
  }
}

}  // namespace
}  // namespace grouplang
