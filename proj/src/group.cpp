#include "grouplang/group.hpp"

#include <sstream>

#include "grouplang/errors.hpp"

namespace grouplang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Appends `letters` to the freely reduced word `acc`, cancelling at the seam.
void append_reduced(Word& acc, std::span<const Letter> letters) {
  for (Letter l : letters) {
    if (!acc.empty() && acc.back() == letter_inverse(l)) {
      acc.pop_back();
    } else {
      acc.push_back(l);
    }
  }
}

std::uint64_t mod_residue(std::int64_t value, std::uint64_t order) {
  const auto n = static_cast<std::int64_t>(order);
  const std::int64_t r = value % n;
  return static_cast<std::uint64_t>(r < 0 ? r + n : r);
}

}  // namespace

std::string GroupElement::to_string() const {
  return std::visit(overloaded{
                        [](const ReducedWord& w) { return to_tokens(w.letters); },
                        [](const ExponentVector& v) {
                          std::string out = "(";
                          for (std::size_t i = 0; i < v.exponents.size(); ++i) {
                            if (i) out += ", ";
                            out += std::to_string(v.exponents[i]);
                          }
                          return out + ")";
                        },
                        [](const Residue& r) { return std::to_string(r.value) + " (mod)"; },
                        [](const CayleyIndex& c) { return "#" + std::to_string(c.index); },
                    },
                    form_);
}

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::Free:
      return "free";
    case GroupKind::FreeAbelian:
      return "free_abelian";
    case GroupKind::Cyclic:
      return "cyclic";
    case GroupKind::Cayley:
      return "cayley";
  }
  return "unknown";
}

GroupBackend GroupBackend::free_group(int rank) { return GroupBackend(GroupKind::Free, rank); }

GroupBackend GroupBackend::free_abelian(int rank) {
  return GroupBackend(GroupKind::FreeAbelian, rank);
}

GroupBackend GroupBackend::cyclic(std::uint64_t order) {
  if (order < 1) throw InvalidGroup("cyclic group order must be at least 1");
  if (order > static_cast<std::uint64_t>(INT64_MAX)) throw InvalidGroup("cyclic group order too large");
  GroupBackend g(GroupKind::Cyclic, 1);
  g.order_ = order;
  return g;
}

GroupBackend GroupBackend::cayley(CayleyTable t, CayleyOptions options) {
  const std::uint32_t s = t.size;
  if (s < 1) throw InvalidGroup("cayley table size must be at least 1");
  if (t.table.size() != static_cast<std::size_t>(s) * s) {
    throw InvalidGroup("cayley table must have size*size = " +
                       std::to_string(static_cast<std::size_t>(s) * s) + " entries, got " +
                       std::to_string(t.table.size()));
  }
  if (t.identity >= s) throw InvalidGroup("identity index out of range");
  if (t.generator_images.empty()) throw InvalidGroup("cayley group needs at least one generator image");
  for (std::uint32_t img : t.generator_images) {
    if (img >= s) throw InvalidGroup("generator image " + std::to_string(img) + " out of range");
  }
  auto at = [&](std::uint32_t a, std::uint32_t b) { return t.table[static_cast<std::size_t>(a) * s + b]; };
  for (std::uint32_t v : t.table) {
    if (v >= s) throw InvalidGroup("table entry " + std::to_string(v) + " out of range");
  }
  for (std::uint32_t a = 0; a < s; ++a) {
    if (at(t.identity, a) != a || at(a, t.identity) != a) {
      throw InvalidGroup("identity row/column does not act as identity at element " + std::to_string(a));
    }
  }
  // Latin square: every row and column is a permutation.
  for (std::uint32_t a = 0; a < s; ++a) {
    std::vector<bool> row_seen(s), col_seen(s);
    for (std::uint32_t b = 0; b < s; ++b) {
      if (row_seen[at(a, b)]) throw InvalidGroup("row " + std::to_string(a) + " is not a permutation");
      if (col_seen[at(b, a)]) throw InvalidGroup("column " + std::to_string(a) + " is not a permutation");
      row_seen[at(a, b)] = true;
      col_seen[at(b, a)] = true;
    }
  }
  GroupBackend g(GroupKind::Cayley, static_cast<int>(t.generator_images.size()));
  if (s <= options.associativity_check_limit) {
    for (std::uint32_t a = 0; a < s; ++a) {
      for (std::uint32_t b = 0; b < s; ++b) {
        for (std::uint32_t c = 0; c < s; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            throw InvalidGroup("table is not associative: (" + std::to_string(a) + "*" + std::to_string(b) +
                               ")*" + std::to_string(c) + " != " + std::to_string(a) + "*(" +
                               std::to_string(b) + "*" + std::to_string(c) + ")");
          }
        }
      }
    }
  } else {
    g.warnings_.push_back("associativity check skipped for cayley table of size " + std::to_string(s) +
                          " (limit " + std::to_string(options.associativity_check_limit) + ")");
  }
  g.cayley_inverse_.assign(s, 0);
  for (std::uint32_t a = 0; a < s; ++a) {
    for (std::uint32_t b = 0; b < s; ++b) {
      if (at(a, b) == t.identity) {
        g.cayley_inverse_[a] = b;
        break;
      }
    }
  }
  g.order_ = s;
  g.cayley_ = std::move(t);
  return g;
}

GroupElement GroupBackend::identity() const {
  switch (kind_) {
    case GroupKind::Free:
      return ReducedWord{};
    case GroupKind::FreeAbelian:
      return ExponentVector{std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 0)};
    case GroupKind::Cyclic:
      return Residue{0};
    case GroupKind::Cayley:
      return CayleyIndex{cayley_.identity};
  }
  return {};
}

std::uint32_t GroupBackend::cayley_letter(Letter l) const {
  const std::uint32_t img = cayley_.generator_images[static_cast<std::size_t>(l > 0 ? l : -l) - 1];
  return l > 0 ? img : cayley_inverse_[img];
}

GroupElement GroupBackend::letter_image(Letter l) const {
  const Letter single[1] = {l};
  return canonicalize(single);
}

GroupElement GroupBackend::canonicalize(std::span<const Letter> w) const {
  alphabet_.validate(w);
  switch (kind_) {
    case GroupKind::Free: {
      Word acc;
      acc.reserve(w.size());
      append_reduced(acc, w);
      return ReducedWord{std::move(acc)};
    }
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> exps(static_cast<std::size_t>(rank()), 0);
      for (Letter l : w) exps[static_cast<std::size_t>(l > 0 ? l : -l) - 1] += (l > 0 ? 1 : -1);
      return ExponentVector{std::move(exps)};
    }
    case GroupKind::Cyclic: {
      std::int64_t sum = 0;
      for (Letter l : w) sum += (l > 0 ? 1 : -1);
      return Residue{mod_residue(sum, order_)};
    }
    case GroupKind::Cayley: {
      std::uint32_t acc = cayley_.identity;
      for (Letter l : w) acc = cayley_.table[static_cast<std::size_t>(acc) * cayley_.size + cayley_letter(l)];
      return CayleyIndex{acc};
    }
  }
  return {};
}

void GroupBackend::check_element(const GroupElement& a) const {
  auto mismatch = [&](const std::string& why) {
    throw BackendMismatch("element " + a.to_string() + " does not belong to " + describe() + ": " + why);
  };
  switch (kind_) {
    case GroupKind::Free: {
      const auto* w = std::get_if<ReducedWord>(&a.form());
      if (!w) mismatch("expected a reduced word");
      for (std::size_t i = 0; i < w->letters.size(); ++i) {
        if (!alphabet_.contains(w->letters[i])) mismatch("letter out of range");
        if (i && w->letters[i] == letter_inverse(w->letters[i - 1])) mismatch("word is not freely reduced");
      }
      return;
    }
    case GroupKind::FreeAbelian: {
      const auto* v = std::get_if<ExponentVector>(&a.form());
      if (!v) mismatch("expected an exponent vector");
      if (v->exponents.size() != static_cast<std::size_t>(rank())) mismatch("wrong exponent vector length");
      return;
    }
    case GroupKind::Cyclic: {
      const auto* r = std::get_if<Residue>(&a.form());
      if (!r) mismatch("expected a residue");
      if (r->value >= order_) mismatch("residue out of range");
      return;
    }
    case GroupKind::Cayley: {
      const auto* c = std::get_if<CayleyIndex>(&a.form());
      if (!c) mismatch("expected a table index");
      if (c->index >= cayley_.size) mismatch("index out of range");
      return;
    }
  }
}

GroupElement GroupBackend::multiply(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  switch (kind_) {
    case GroupKind::Free: {
      Word acc = a.as<ReducedWord>().letters;
      append_reduced(acc, b.as<ReducedWord>().letters);
      return ReducedWord{std::move(acc)};
    }
    case GroupKind::FreeAbelian: {
      auto out = a.as<ExponentVector>().exponents;
      const auto& rhs = b.as<ExponentVector>().exponents;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs[i];
      return ExponentVector{std::move(out)};
    }
    case GroupKind::Cyclic: {
      // Both operands are < order_ ≤ INT64_MAX, so the sum fits in 64 bits.
      return Residue{(a.as<Residue>().value + b.as<Residue>().value) % order_};
    }
    case GroupKind::Cayley:
      return CayleyIndex{
          cayley_.table[static_cast<std::size_t>(a.as<CayleyIndex>().index) * cayley_.size + b.as<CayleyIndex>().index]};
  }
  return {};
}

GroupElement GroupBackend::invert(const GroupElement& a) const {
  check_element(a);
  switch (kind_) {
    case GroupKind::Free:
      return ReducedWord{inverse(a.as<ReducedWord>().letters)};
    case GroupKind::FreeAbelian: {
      auto out = a.as<ExponentVector>().exponents;
      for (auto& e : out) e = -e;
      return ExponentVector{std::move(out)};
    }
    case GroupKind::Cyclic: {
      const std::uint64_t v = a.as<Residue>().value;
      return Residue{v == 0 ? 0 : order_ - v};
    }
    case GroupKind::Cayley:
      return CayleyIndex{cayley_inverse_[a.as<CayleyIndex>().index]};
  }
  return {};
}

bool GroupBackend::is_identity(const GroupElement& a) const { return a == identity(); }

bool GroupBackend::word_in_group_language(std::span<const Letter> w) const {
  return is_identity(canonicalize(w));
}

std::string GroupBackend::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case GroupKind::Free:
      out << "FreeGroup{" << rank() << "}";
      break;
    case GroupKind::FreeAbelian:
      out << "FreeAbelian{" << rank() << "}";
      break;
    case GroupKind::Cyclic:
      out << "Cyclic{" << order_ << "}";
      break;
    case GroupKind::Cayley:
      out << "FiniteCayley{size " << cayley_.size << ", rank " << rank() << "}";
      break;
  }
  return out.str();
}

}  // namespace grouplang
