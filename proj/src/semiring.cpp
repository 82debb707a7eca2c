#include "grouplang/semiring.hpp"

#include <cassert>

#include "grouplang/errors.hpp"

namespace grouplang {

bool GroupSet::insert(const GroupElement& e, Word witness) {
  auto [it, inserted] = elems_.try_emplace(e, std::move(witness));
  if (!inserted && better_witness(witness, it->second)) it->second = std::move(witness);
  return inserted;
}

bool GroupSet::is_identity_singleton(const GroupBackend& g) const {
  return elems_.size() == 1 && g.is_identity(elems_.begin()->first);
}

std::optional<std::pair<GroupElement, Word>> GroupSet::best_non_identity(const GroupBackend& g) const {
  const Map::value_type* best = nullptr;
  for (const auto& entry : elems_) {
    if (g.is_identity(entry.first)) continue;
    if (!best || better_witness(entry.second, best->second)) best = &entry;
  }
  if (!best) return std::nullopt;
  return std::make_pair(best->first, best->second);
}

std::optional<std::pair<GroupElement, Word>> GroupSet::best_element() const {
  const Map::value_type* best = nullptr;
  for (const auto& entry : elems_) {
    if (!best || better_witness(entry.second, best->second)) best = &entry;
  }
  if (!best) return std::nullopt;
  return std::make_pair(best->first, best->second);
}

bool better_witness(const WordPair& a, const WordPair& b) noexcept {
  const std::size_t la = a.left.size() + a.right.size();
  const std::size_t lb = b.left.size() + b.right.size();
  if (la != lb) return la < lb;
  if (a.left != b.left) return shortlex_less(a.left, b.left);
  return shortlex_less(a.right, b.right);
}

bool PairSet::insert(const PairKey& p, WordPair witness) {
  auto [it, inserted] = elems_.try_emplace(p, std::move(witness));
  if (!inserted && better_witness(witness, it->second)) it->second = std::move(witness);
  return inserted;
}

std::optional<std::pair<PairKey, WordPair>> PairSet::best_element() const {
  const Map::value_type* best = nullptr;
  for (const auto& entry : elems_) {
    if (!best || better_witness(entry.second, best->second)) best = &entry;
  }
  if (!best) return std::nullopt;
  return std::make_pair(best->first, best->second);
}

SetAlgebra::SetAlgebra(const GroupBackend& g, std::size_t cap) : g_(&g), cap_(cap) {
  if (cap < 1) throw InvalidInput("set cap must be at least 1");
}

void SetAlgebra::add(GroupSet& out, const GroupElement& e, Word witness) const {
  assert(g_->canonicalize(witness) == e);
  out.insert(e, std::move(witness));
  if (out.size() > cap_) throw CapExceeded(out.size(), cap_);
}

void SetAlgebra::add(PairSet& out, const PairKey& p, WordPair witness) const {
  assert(g_->canonicalize(witness.left) == p.left && g_->canonicalize(witness.right) == p.right);
  out.insert(p, std::move(witness));
  if (out.size() > cap_) throw CapExceeded(out.size(), cap_);
}

GroupSet SetAlgebra::identity_set() const {
  GroupSet s;
  s.insert(g_->identity(), Word{});
  return s;
}

PairSet SetAlgebra::identity_pair_set() const {
  PairSet s;
  s.insert(PairKey{g_->identity(), g_->identity()}, WordPair{});
  return s;
}

GroupSet SetAlgebra::singleton(const Word& w) const {
  GroupSet s;
  s.insert(g_->canonicalize(w), w);
  return s;
}

PairSet SetAlgebra::pair_singleton(const Word& left, const Word& right) const {
  PairSet s;
  s.insert(PairKey{g_->canonicalize(left), g_->canonicalize(right)}, WordPair{left, right});
  return s;
}

GroupSet SetAlgebra::set_union(const GroupSet& x, const GroupSet& y) {
  ++counters_.unions;
  if (y.empty()) return x;
  if (x.empty()) return y;
  GroupSet out = x;
  for (const auto& [e, w] : y) add(out, e, w);
  return out;
}

PairSet SetAlgebra::set_union(const PairSet& x, const PairSet& y) {
  ++counters_.unions;
  if (y.empty()) return x;
  if (x.empty()) return y;
  PairSet out = x;
  for (const auto& [p, w] : y) add(out, p, w);
  return out;
}

GroupSet SetAlgebra::set_product(const GroupSet& x, const GroupSet& y) {
  ++counters_.products;
  GroupSet out;
  if (x.empty() || y.empty()) return out;
  for (const auto& [a, wa] : x) {
    for (const auto& [b, wb] : y) add(out, g_->multiply(a, b), concat(wa, wb));
  }
  return out;
}

GroupSet SetAlgebra::star(const GroupSet& x, const GroupSet& y) {
  ++counters_.stars;
  GroupSet out;
  if (x.empty() || y.empty()) return out;
  for (const auto& [a, wa] : x) {
    const GroupElement a_inv = g_->invert(a);
    const Word wa_inv = inverse(wa);
    for (const auto& [b, wb] : y) {
      add(out, g_->multiply(g_->multiply(a, b), a_inv), concat(wa, wb, wa_inv));
    }
  }
  return out;
}

PairSet SetAlgebra::pair_diamond(const PairSet& x, const PairSet& y) {
  ++counters_.diamonds;
  PairSet out;
  if (x.empty() || y.empty()) return out;
  for (const auto& [p, wp] : x) {
    for (const auto& [q, wq] : y) {
      add(out, PairKey{g_->multiply(p.left, q.left), g_->multiply(q.right, p.right)},
          WordPair{concat(wp.left, wq.left), concat(wq.right, wp.right)});
    }
  }
  return out;
}

GroupSet SetAlgebra::proj_l(const PairSet& p) const {
  GroupSet out;
  for (const auto& [k, w] : p) out.insert(k.left, w.left);
  return out;
}

GroupSet SetAlgebra::proj_r(const PairSet& p) const {
  GroupSet out;
  for (const auto& [k, w] : p) out.insert(k.right, w.right);
  return out;
}

GroupSet SetAlgebra::proj_d(const PairSet& p) const {
  GroupSet out;
  for (const auto& [k, w] : p) out.insert(g_->multiply(k.left, k.right), concat(w.left, w.right));
  return out;
}

GroupSet SetAlgebra::triple_literal(const GroupSet& x, const GroupSet& y, const GroupSet& z) {
  ++counters_.triples;
  GroupSet out;
  if (x.empty() || y.empty() || z.empty()) return out;
  for (const auto& [b, wb] : y) {
    const GroupElement b_inv = g_->invert(b);
    const Word wb_inv = inverse(wb);
    for (const auto& [a, wa] : x) {
      const GroupElement ab = g_->multiply(a, b);
      for (const auto& [c, wc] : z) {
        Word w = concat(wa, wb, wc);
        w.insert(w.end(), wb_inv.begin(), wb_inv.end());
        add(out, g_->multiply(g_->multiply(ab, c), b_inv), std::move(w));
      }
    }
  }
  return out;
}

GroupSet SetAlgebra::triple_paired(const PairSet& p, const GroupSet& v) {
  ++counters_.triples;
  GroupSet out;
  if (p.empty() || v.empty()) return out;
  for (const auto& [b, wb] : v) {
    const GroupElement b_inv = g_->invert(b);
    const Word wb_inv = inverse(wb);
    for (const auto& [uw, wuw] : p) {
      const GroupElement e = g_->multiply(g_->multiply(g_->multiply(uw.left, b), uw.right), b_inv);
      Word w = concat(wuw.left, wb, wuw.right);
      w.insert(w.end(), wb_inv.begin(), wb_inv.end());
      add(out, e, std::move(w));
    }
  }
  return out;
}

bool witnesses_sound(const GroupBackend& g, const GroupSet& s) {
  for (const auto& [e, w] : s) {
    if (g.canonicalize(w) != e) return false;
  }
  return true;
}

bool witnesses_sound(const GroupBackend& g, const PairSet& s) {
  for (const auto& [p, w] : s) {
    if (g.canonicalize(w.left) != p.left || g.canonicalize(w.right) != p.right) return false;
  }
  return true;
}

}  // namespace grouplang
