#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "grouplang/errors.hpp"
#include "grouplang/group.hpp"
#include "grouplang/linear_grammar.hpp"
#include "grouplang/nfa.hpp"

namespace grouplang {

/// Malformed input file. what() reads "<source>:<line>: <field>: <detail>".
class ParseError : public InvalidInput {
 public:
  ParseError(std::string source, std::size_t line, std::string field, const std::string& detail);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  /// Path of the offending value, e.g. "transitions[2][1]"; empty for syntax errors.
  const std::string& field() const noexcept { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

using Language = std::variant<Nfa, LinearGrammar>;

GroupBackend parse_group(std::string_view text, const std::string& source = "<group>");
/// The "kind" field ("automaton" | "linear_grammar") is optional; without it
/// the kind follows from "states" or "nonterminals".
Language parse_language(std::string_view text, const std::string& source = "<language>");

GroupBackend load_group_file(const std::filesystem::path& path);
Language load_language_file(const std::filesystem::path& path);

nlohmann::json to_json(const GroupBackend& g);
nlohmann::json to_json(const Nfa& a);
nlohmann::json to_json(const LinearGrammar& g);

}  // namespace grouplang
