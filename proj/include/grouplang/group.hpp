#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "grouplang/word.hpp"

namespace grouplang {

// Canonical forms, one per backend kind. Two elements of the same backend
// are equal in the group iff their forms compare equal.

struct ReducedWord {
  Word letters;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

struct ExponentVector {
  std::vector<std::int64_t> exponents;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

struct CayleyIndex {
  std::uint32_t index = 0;
  friend bool operator==(const CayleyIndex&, const CayleyIndex&) = default;
  friend auto operator<=>(const CayleyIndex&, const CayleyIndex&) = default;
};

class GroupElement {
 public:
  using Form = std::variant<ReducedWord, ExponentVector, Residue, CayleyIndex>;

  GroupElement() = default;
  GroupElement(Form form) : form_(std::move(form)) {}  // NOLINT(google-explicit-constructor)
  template <typename T>
    requires std::is_constructible_v<Form, T&&> && (!std::is_same_v<std::remove_cvref_t<T>, Form>) &&
             (!std::is_same_v<std::remove_cvref_t<T>, GroupElement>)
  GroupElement(T&& form) : form_(std::forward<T>(form)) {}  // NOLINT(google-explicit-constructor)

  const Form& form() const noexcept { return form_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(form_);
  }

  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  Form form_;
};

enum class GroupKind { Free, FreeAbelian, Cyclic, Cayley };

std::string_view to_string(GroupKind kind) noexcept;

/// Raw description of a finite group by its multiplication table.
struct CayleyTable {
  std::uint32_t size = 0;
  std::uint32_t identity = 0;
  /// Row-major: table[a * size + b] is the index of a·b.
  std::vector<std::uint32_t> table;
  /// Image of x_i for i = 1..m, in order. Images of x_i⁻¹ are derived.
  std::vector<std::uint32_t> generator_images;
};

struct CayleyOptions {
  /// Associativity is verified exhaustively (O(s³)) only up to this size.
  std::uint32_t associativity_check_limit = 64;
};

/// A group with decidable word problem over the alphabet X ∪ X⁻¹.
///
/// Backends are immutable value types; every operation is a pure function
/// of its arguments.
class GroupBackend {
 public:
  static GroupBackend free_group(int rank);
  static GroupBackend free_abelian(int rank);
  static GroupBackend cyclic(std::uint64_t order);
  /// Validates the group axioms; throws InvalidGroup on failure.
  static GroupBackend cayley(CayleyTable table, CayleyOptions options = {});

  GroupKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return alphabet_.rank(); }
  const GeneratorAlphabet& alphabet() const noexcept { return alphabet_; }
  std::uint64_t order() const noexcept { return order_; }
  const CayleyTable& cayley_table() const noexcept { return cayley_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  GroupElement identity() const;
  GroupElement letter_image(Letter l) const;

  /// Image of w in G. Throws LetterOutOfRange.
  GroupElement canonicalize(std::span<const Letter> w) const;
  /// Throws BackendMismatch if either operand is not an element of this group.
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;
  /// ω ≡ e (mod G).
  bool word_in_group_language(std::span<const Letter> w) const;

  /// Throws BackendMismatch unless a is a well-formed element of this group.
  void check_element(const GroupElement& a) const;

  std::string describe() const;

 private:
  GroupBackend(GroupKind kind, int rank) : kind_(kind), alphabet_(rank) {}

  std::uint32_t cayley_letter(Letter l) const;

  GroupKind kind_;
  GeneratorAlphabet alphabet_;
  std::uint64_t order_ = 0;  // cyclic order or Cayley size; 0 for infinite groups
  CayleyTable cayley_;
  std::vector<std::uint32_t> cayley_inverse_;
  std::vector<std::string> warnings_;
};

}  // namespace grouplang

