#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grouplang {

/// Signed generator index: i stands for x_i, -i for its inverse. Zero is
/// never a valid letter.
using Letter = int;

/// A word over the symmetric alphabet; the empty vector is the empty word.
using Word = std::vector<Letter>;

constexpr Letter letter_inverse(Letter l) noexcept { return -l; }

/// The alphabet X ∪ X⁻¹ on `rank` generators.
class GeneratorAlphabet {
 public:
  explicit GeneratorAlphabet(int rank);

  int rank() const noexcept { return rank_; }
  bool contains(Letter l) const noexcept { return l != 0 && l >= -rank_ && l <= rank_; }

  /// All 2·rank letters in ascending numeric order (-rank .. -1, 1 .. rank).
  /// This is the letter order used for every lexicographic comparison.
  std::vector<Letter> letters() const;

  /// Throws LetterOutOfRange naming the first offending letter.
  void validate(std::span<const Letter> w) const;

 private:
  int rank_;
};

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word concat(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c);

/// Length first, then lexicographic on the signed letter values.
bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) noexcept;

/// x1/X1 token form, space separated; the empty word prints as "(eps)".
std::string to_tokens(std::span<const Letter> w);
std::string letter_token(Letter l);

/// Inverse of to_tokens. Accepts "(eps)" or an empty string for ε.
Word parse_tokens(std::string_view text);

}  // namespace grouplang
