#include "grouplang/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "grouplang/errors.hpp"

namespace grouplang {

GeneratorAlphabet::GeneratorAlphabet(int rank) : rank_(rank) {
  if (rank < 1) {
    throw InvalidInput("alphabet rank must be at least 1, got " + std::to_string(rank));
  }
}

std::vector<Letter> GeneratorAlphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(rank_));
  for (int i = -rank_; i <= rank_; ++i) {
    if (i != 0) out.push_back(i);
  }
  return out;
}

void GeneratorAlphabet::validate(std::span<const Letter> w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (!contains(w[pos])) {
      throw LetterOutOfRange("letter " + std::to_string(w[pos]) + " at position " +
                             std::to_string(pos) + " is outside the rank-" +
                             std::to_string(rank_) + " alphabet");
    }
  }
}

Word inverse(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = letter_inverse(l);
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string letter_token(Letter l) {
  return (l > 0 ? "x" : "X") + std::to_string(l > 0 ? l : -l);
}

std::string to_tokens(std::span<const Letter> w) {
  if (w.empty()) return "(eps)";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_token(w[i]);
  }
  return out;
}

Word parse_tokens(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "(eps)") continue;
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X')) {
      throw InvalidInput("bad letter token '" + tok + "'");
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || index < 1) {
      throw InvalidInput("bad letter token '" + tok + "'");
    }
    out.push_back(tok[0] == 'x' ? index : -index);
  }
  return out;
}

}  // namespace grouplang
