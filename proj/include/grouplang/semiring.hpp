#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "grouplang/group.hpp"
#include "grouplang/word.hpp"

namespace grouplang {

inline constexpr std::size_t kDefaultSetCap = 4096;

/// Invocation counts of the set operations, for complexity accounting.
struct OpCounters {
  std::uint64_t unions = 0;
  std::uint64_t products = 0;
  std::uint64_t stars = 0;
  std::uint64_t diamonds = 0;
  std::uint64_t triples = 0;
};

/// Retention order for witnesses: shorter first, then lexicographically
/// smaller signed-letter sequence.
inline bool better_witness(const Word& a, const Word& b) noexcept { return shortlex_less(a, b); }

/// A finite subset of G in which every element carries one witness word
/// whose image is that element. Element of the semiring (P(G), ∪, ·, ∅, {e}).
class GroupSet {
 public:
  using Map = std::map<GroupElement, Word>;

  GroupSet() = default;

  /// Adds `e` with `witness`, keeping the better witness if `e` is present.
  /// Returns true if `e` was not present before.
  bool insert(const GroupElement& e, Word witness);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(const GroupElement& e) const { return elems_.count(e) != 0; }
  const Word& witness(const GroupElement& e) const { return elems_.at(e); }
  const Map& elements() const noexcept { return elems_; }
  Map::const_iterator begin() const noexcept { return elems_.begin(); }
  Map::const_iterator end() const noexcept { return elems_.end(); }

  /// True iff this set is exactly {e}.
  bool is_identity_singleton(const GroupBackend& g) const;
  /// Non-identity element with the best witness, if any.
  std::optional<std::pair<GroupElement, Word>> best_non_identity(const GroupBackend& g) const;
  /// Element with the best witness, if any.
  std::optional<std::pair<GroupElement, Word>> best_element() const;

  friend bool operator==(const GroupSet& a, const GroupSet& b) { return a.elems_ == b.elems_; }

 private:
  Map elems_;
};

/// Witness words for an element of U_G: the α and β contexts.
struct WordPair {
  Word left;
  Word right;

  friend bool operator==(const WordPair&, const WordPair&) = default;
};

/// Total length, then left part, then right part.
bool better_witness(const WordPair& a, const WordPair& b) noexcept;

/// Canonical element (x, y) of U_G = G × G.
struct PairKey {
  GroupElement left;
  GroupElement right;

  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// Element of the semiring (P(U_G), ∪, ⋄, ∅, {(e, e)}) with witnesses.
class PairSet {
 public:
  using Map = std::map<PairKey, WordPair>;

  PairSet() = default;

  bool insert(const PairKey& p, WordPair witness);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  bool contains(const PairKey& p) const { return elems_.count(p) != 0; }
  const WordPair& witness(const PairKey& p) const { return elems_.at(p); }
  const Map& elements() const noexcept { return elems_; }
  Map::const_iterator begin() const noexcept { return elems_.begin(); }
  Map::const_iterator end() const noexcept { return elems_.end(); }

  std::optional<std::pair<PairKey, WordPair>> best_element() const;

  friend bool operator==(const PairSet& a, const PairSet& b) { return a.elems_ == b.elems_; }

 private:
  Map elems_;
};

/// Set operations of F_G and F_U over one backend, with a per-result
/// cardinality cap and invocation counters. Not thread-safe (counters);
/// use one instance per check.
class SetAlgebra {
 public:
  explicit SetAlgebra(const GroupBackend& g, std::size_t cap = kDefaultSetCap);

  const GroupBackend& backend() const noexcept { return *g_; }
  std::size_t cap() const noexcept { return cap_; }
  const OpCounters& counters() const noexcept { return counters_; }

  GroupSet identity_set() const;
  PairSet identity_pair_set() const;
  /// Single-element set for word w.
  GroupSet singleton(const Word& w) const;
  PairSet pair_singleton(const Word& left, const Word& right) const;

  GroupSet set_union(const GroupSet& x, const GroupSet& y);
  PairSet set_union(const PairSet& x, const PairSet& y);
  /// {ab | a ∈ X, b ∈ Y}.
  GroupSet set_product(const GroupSet& x, const GroupSet& y);
  /// Conjugates {x y x⁻¹ | x ∈ X, y ∈ Y}.
  GroupSet star(const GroupSet& x, const GroupSet& y);
  /// {(xz, ty) | (x, y) ∈ X, (z, t) ∈ Y}. The right component composes in
  /// reverse order.
  PairSet pair_diamond(const PairSet& x, const PairSet& y);

  GroupSet proj_l(const PairSet& p) const;
  GroupSet proj_r(const PairSet& p) const;
  /// {xy | (x, y) ∈ P}.
  GroupSet proj_d(const PairSet& p) const;

  /// {x y z y⁻¹} over independent x ∈ X, y ∈ Y, z ∈ Z.
  GroupSet triple_literal(const GroupSet& x, const GroupSet& y, const GroupSet& z);
  /// {u v w v⁻¹ | (u, w) ∈ P, v ∈ V}: u and w come from the same pair.
  GroupSet triple_paired(const PairSet& p, const GroupSet& v);

 private:
  void add(GroupSet& out, const GroupElement& e, Word witness) const;
  void add(PairSet& out, const PairKey& p, WordPair witness) const;

  const GroupBackend* g_;
  std::size_t cap_;
  OpCounters counters_;
};

/// Every stored witness canonicalizes to its element.
bool witnesses_sound(const GroupBackend& g, const GroupSet& s);
bool witnesses_sound(const GroupBackend& g, const PairSet& s);

}  // namespace grouplang
