#include <gtest/gtest.h>

#include <random>

#include "grouplang/corpus.hpp"
#include "grouplang/errors.hpp"
#include "grouplang/semiring.hpp"
#include "support.hpp"

namespace grouplang {
namespace {

GroupSet set_of(const SetAlgebra& alg, std::initializer_list<Word> words) {
  GroupSet s;
  for (const auto& w : words) s.insert(alg.backend().canonicalize(w), w);
  return s;
}

PairSet pairs_of(const SetAlgebra& alg, std::initializer_list<WordPair> pairs) {
  PairSet s;
  for (const auto& p : pairs) {
    s.insert(PairKey{alg.backend().canonicalize(p.left), alg.backend().canonicalize(p.right)}, p);
  }
  return s;
}

// Canonical elements only, for set equality that ignores witnesses.
std::set<GroupElement> keys(const GroupSet& s) {
  std::set<GroupElement> out;
  for (const auto& [e, _] : s) out.insert(e);
  return out;
}

std::set<PairKey> keys(const PairSet& s) {
  std::set<PairKey> out;
  for (const auto& [p, _] : s) out.insert(p);
  return out;
}

class FreeOne : public ::testing::Test {
 protected:
  GroupBackend g = GroupBackend::free_group(1);
  SetAlgebra alg{g};
};

TEST_F(FreeOne, UnionExamples) {
  EXPECT_EQ(alg.set_union(alg.identity_set(), GroupSet{}), alg.identity_set());
  const auto x = alg.singleton({1});
  EXPECT_EQ(alg.set_union(x, x), x);
  const auto both = alg.set_union(x, alg.identity_set());
  EXPECT_EQ(both.size(), 2u);
  EXPECT_TRUE(both.contains(g.identity()));
  EXPECT_TRUE(both.contains(g.canonicalize(Word{1})));
}

TEST_F(FreeOne, ProductExamples) {
  EXPECT_TRUE(alg.set_product(alg.singleton({1}), alg.singleton({-1})).is_identity_singleton(g));
  const auto y = set_of(alg, {{1}, {1, 1}, {-1}});
  EXPECT_EQ(alg.set_product(alg.identity_set(), y), y);
  EXPECT_TRUE(alg.set_product(GroupSet{}, y).empty());
}

TEST(Semiring, StarConjugates) {
  const auto g = GroupBackend::free_group(2);
  SetAlgebra alg(g);
  const auto conj = alg.star(alg.singleton({1}), alg.singleton({2}));
  ASSERT_EQ(conj.size(), 1u);
  EXPECT_EQ(conj.begin()->first.as<ReducedWord>().letters, (Word{1, 2, -1}));
  EXPECT_EQ(conj.begin()->second, (Word{1, 2, -1}));
  EXPECT_TRUE(alg.star(set_of(alg, {{1}, {2, 2}}), alg.identity_set()).is_identity_singleton(g));
}

TEST(Semiring, StarIsTrivialInAbelianGroups) {
  const auto g = GroupBackend::free_abelian(2);
  SetAlgebra alg(g);
  const auto y = set_of(alg, {{1, 2}, {-2}});
  EXPECT_EQ(keys(alg.star(set_of(alg, {{1}, {2, -1, 2}}), y)), keys(y));
}

TEST(Semiring, DiamondExamples) {
  const auto g = GroupBackend::free_group(4);
  SetAlgebra alg(g);
  const auto d = alg.pair_diamond(alg.pair_singleton({1}, {2}), alg.pair_singleton({3}, {4}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->second, (WordPair{{1, 3}, {4, 2}}));
  const auto y = pairs_of(alg, {{{1}, {2}}, {{3, 3}, {}}});
  EXPECT_EQ(alg.pair_diamond(alg.identity_pair_set(), y), y);

  const auto f1 = GroupBackend::free_group(1);
  SetAlgebra a1(f1);
  const auto sq = a1.pair_diamond(a1.pair_singleton({1}, {-1}), a1.pair_singleton({1}, {-1}));
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq.begin()->first, (PairKey{f1.canonicalize(Word{1, 1}), f1.canonicalize(Word{-1, -1})}));
}

TEST(Semiring, ProjectionExamples) {
  const auto g = GroupBackend::free_group(2);
  SetAlgebra alg(g);
  const auto d = alg.proj_d(alg.pair_singleton({1}, {2}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, g.canonicalize(Word{1, 2}));
  EXPECT_TRUE(alg.proj_d(alg.pair_singleton({1, -2, 1}, {-1, 2, -1})).is_identity_singleton(g));
  EXPECT_TRUE(alg.proj_l(alg.identity_pair_set()).is_identity_singleton(g));
}

TEST(Semiring, TripleLiteralExamples) {
  const auto g = GroupBackend::free_group(3);
  SetAlgebra alg(g);
  const auto xz = alg.triple_literal(alg.singleton({1}), alg.identity_set(), alg.singleton({3}));
  ASSERT_EQ(xz.size(), 1u);
  EXPECT_EQ(xz.begin()->first, g.canonicalize(Word{1, 3}));
  EXPECT_TRUE(alg.triple_literal(alg.identity_set(), alg.singleton({2}), alg.identity_set()).is_identity_singleton(g));

  const auto ab = GroupBackend::free_abelian(1);
  SetAlgebra a1(ab);
  EXPECT_TRUE(a1.triple_literal(a1.singleton({1}), a1.singleton({1, 1, 1}), a1.singleton({-1})).is_identity_singleton(ab));
}

TEST(Semiring, TriplePairedExamples) {
  const auto f1 = GroupBackend::free_group(1);
  SetAlgebra alg(f1);
  EXPECT_TRUE(alg.triple_paired(alg.pair_singleton({1}, {-1}), alg.identity_set()).is_identity_singleton(f1));

  const auto c2 = GroupBackend::cyclic(2);
  SetAlgebra a2(c2);
  EXPECT_TRUE(a2.triple_paired(a2.pair_singleton({1}, {1}), a2.identity_set()).is_identity_singleton(c2));
}

TEST(Semiring, PairedAndLiteralTriplesDisagree) {
  const auto g = GroupBackend::free_group(1);
  SetAlgebra alg(g);
  const auto p = pairs_of(alg, {{{1}, {-1}}, {{1, 1}, {-1, -1}}});
  const auto v = alg.identity_set();
  EXPECT_TRUE(alg.triple_paired(p, v).is_identity_singleton(g));

  // Brute force over all independent choices of u, w.
  std::set<Word> expected;
  for (const Word& u : {Word{1}, Word{1, 1}}) {
    for (const Word& w : {Word{-1}, Word{-1, -1}}) expected.insert(testing::naive_free_reduce(concat(u, w)));
  }
  ASSERT_EQ(expected, (std::set<Word>{{}, {1}, {-1}}));
  std::set<Word> got;
  for (const auto& [e, _] : alg.triple_literal(alg.proj_l(p), v, alg.proj_r(p))) got.insert(e.as<ReducedWord>().letters);
  EXPECT_EQ(got, expected);
}

TEST(Semiring, RetentionPrefersShorterThenLexicographicallySmaller) {
  const auto g = GroupBackend::free_abelian(2);
  GroupSet s;
  const auto e = g.canonicalize(Word{1, 2});
  EXPECT_TRUE(s.insert(e, {2, 1}));
  EXPECT_FALSE(s.insert(e, {1, 2}));
  EXPECT_EQ(s.witness(e), (Word{1, 2}));
  s.insert(e, {2, 1, 1, -1});
  EXPECT_EQ(s.witness(e), (Word{1, 2}));

  const auto f = GroupBackend::free_group(1);
  SetAlgebra alg(f);
  const auto u = alg.set_union(set_of(alg, {{1, 1, -1}}), set_of(alg, {{1}}));
  EXPECT_EQ(u.witness(f.canonicalize(Word{1})), (Word{1}));
}

TEST(Semiring, PairRetentionUsesTotalLengthFirst) {
  EXPECT_TRUE(better_witness(WordPair{{1, 1}, {}}, WordPair{{1}, {1, -1}}));
  EXPECT_TRUE(better_witness(WordPair{{-1}, {1}}, WordPair{{1}, {-1}}));
  EXPECT_TRUE(better_witness(WordPair{{1}, {-1}}, WordPair{{1}, {1}}));
}

TEST(Semiring, CapExceededReportsCardinality) {
  const auto g = GroupBackend::free_group(1);
  SetAlgebra alg(g, 3);
  const auto x = set_of(alg, {{1}, {1, 1}});
  try {
    alg.set_product(x, x);  // {x², x³, x⁴}
    alg.set_product(set_of(alg, {{1}, {1, 1}, {1, 1, 1}}), x);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cardinality(), 4u);
    EXPECT_EQ(e.cap(), 3u);
    EXPECT_FALSE(e.cell().has_value());
  }
}

TEST(Semiring, CountersTrackInvocations) {
  const auto g = GroupBackend::cyclic(3);
  SetAlgebra alg(g);
  const auto x = alg.singleton({1});
  alg.set_union(x, x);
  alg.set_product(x, GroupSet{});
  alg.star(x, x);
  alg.pair_diamond(alg.identity_pair_set(), alg.identity_pair_set());
  alg.triple_paired(alg.identity_pair_set(), x);
  alg.triple_literal(x, x, x);
  alg.proj_d(alg.identity_pair_set());
  const auto& c = alg.counters();
  EXPECT_EQ(c.unions, 1u);
  EXPECT_EQ(c.products, 1u);
  EXPECT_EQ(c.stars, 1u);
  EXPECT_EQ(c.diamonds, 1u);
  EXPECT_EQ(c.triples, 2u);
}

// Random small sets for the law checks.
GroupSet random_set(std::mt19937_64& rng, const GroupBackend& g, std::size_t max_size) {
  GroupSet s;
  std::uniform_int_distribution<std::size_t> n(0, max_size);
  for (std::size_t k = n(rng); k > 0; --k) {
    const Word w = testing::random_word(rng, g.rank(), 4);
    s.insert(g.canonicalize(w), w);
  }
  return s;
}

PairSet random_pairs(std::mt19937_64& rng, const GroupBackend& g, std::size_t max_size) {
  PairSet s;
  std::uniform_int_distribution<std::size_t> n(0, max_size);
  for (std::size_t k = n(rng); k > 0; --k) {
    const Word l = testing::random_word(rng, g.rank(), 3);
    const Word r = testing::random_word(rng, g.rank(), 3);
    s.insert(PairKey{g.canonicalize(l), g.canonicalize(r)}, WordPair{l, r});
  }
  return s;
}

class SemiringLaws : public ::testing::TestWithParam<int> {
 protected:
  GroupBackend g = standard_backends()[static_cast<std::size_t>(GetParam())];
};

TEST_P(SemiringLaws, UnionAndProduct) {
  SetAlgebra alg(g);
  std::mt19937_64 rng(40 + static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_set(rng, g, 4), y = random_set(rng, g, 4), z = random_set(rng, g, 4);
    ASSERT_EQ(alg.set_union(x, y), alg.set_union(y, x));
    ASSERT_EQ(alg.set_union(alg.set_union(x, y), z), alg.set_union(x, alg.set_union(y, z)));
    ASSERT_EQ(alg.set_union(x, GroupSet{}), x);
    ASSERT_EQ(keys(alg.set_product(alg.set_product(x, y), z)), keys(alg.set_product(x, alg.set_product(y, z))));
    ASSERT_EQ(keys(alg.set_product(x, alg.identity_set())), keys(x));
    ASSERT_EQ(keys(alg.set_product(alg.identity_set(), x)), keys(x));
    ASSERT_EQ(keys(alg.set_product(x, alg.set_union(y, z))),
              keys(alg.set_union(alg.set_product(x, y), alg.set_product(x, z))));
    ASSERT_EQ(keys(alg.set_product(alg.set_union(y, z), x)),
              keys(alg.set_union(alg.set_product(y, x), alg.set_product(z, x))));
    ASSERT_TRUE(alg.set_product(x, GroupSet{}).empty());
    ASSERT_TRUE(alg.set_product(GroupSet{}, x).empty());

    const auto prod = alg.set_product(x, y);
    const auto conj = alg.star(x, y);
    ASSERT_LE(prod.size(), x.size() * y.size());
    ASSERT_LE(conj.size(), x.size() * y.size());
    ASSERT_TRUE(witnesses_sound(g, prod));
    ASSERT_TRUE(witnesses_sound(g, conj));
    ASSERT_TRUE(witnesses_sound(g, alg.set_union(x, y)));
  }
}

TEST_P(SemiringLaws, DiamondAndProjections) {
  SetAlgebra alg(g);
  std::mt19937_64 rng(80 + static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_pairs(rng, g, 3), q = random_pairs(rng, g, 3), r = random_pairs(rng, g, 3);
    ASSERT_EQ(keys(alg.pair_diamond(alg.pair_diamond(p, q), r)), keys(alg.pair_diamond(p, alg.pair_diamond(q, r))));
    ASSERT_EQ(keys(alg.pair_diamond(alg.identity_pair_set(), p)), keys(p));
    ASSERT_EQ(keys(alg.pair_diamond(p, alg.identity_pair_set())), keys(p));
    ASSERT_TRUE(witnesses_sound(g, alg.pair_diamond(p, q)));
    ASSERT_TRUE(witnesses_sound(g, alg.set_union(p, q)));
    ASSERT_TRUE(witnesses_sound(g, alg.proj_d(p)));

    for (const auto& [pk, pw] : p) {
      // (x, y) ⋄ (x⁻¹, y⁻¹) = (e, e)
      const auto inv = alg.pair_singleton(inverse(pw.left), inverse(pw.right));
      const auto unit = alg.pair_diamond(alg.pair_singleton(pw.left, pw.right), inv);
      ASSERT_EQ(keys(unit), keys(alg.identity_pair_set()));
      for (const auto& [qk, qw] : q) {
        const auto sp = alg.pair_singleton(pw.left, pw.right);
        const auto sq = alg.pair_singleton(qw.left, qw.right);
        const auto lhs = alg.proj_d(alg.pair_diamond(sp, sq));
        const auto rhs = alg.set_product(alg.set_product(alg.proj_l(sp), alg.proj_d(sq)), alg.proj_r(sp));
        ASSERT_EQ(keys(lhs), keys(rhs));
      }
    }
  }
}

TEST_P(SemiringLaws, PairedTripleMatchesDirectComputation) {
  SetAlgebra alg(g);
  std::mt19937_64 rng(120 + static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_pairs(rng, g, 3);
    const auto v = random_set(rng, g, 3);
    std::set<GroupElement> expected;
    for (const auto& [_, uw] : p) {
      for (const auto& [__, vw] : v) {
        expected.insert(g.canonicalize(concat(concat(uw.left, vw), concat(uw.right, inverse(vw)))));
      }
    }
    const auto got = alg.triple_paired(p, v);
    ASSERT_EQ(keys(got), expected);
    ASSERT_TRUE(witnesses_sound(g, got));
  }
}

INSTANTIATE_TEST_SUITE_P(Standard, SemiringLaws, ::testing::Range(0, 7));

}  // namespace
}  // namespace grouplang
