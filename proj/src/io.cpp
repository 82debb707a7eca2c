#include "grouplang/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace grouplang {

using nlohmann::json;

ParseError::ParseError(std::string source, std::size_t line, std::string field, const std::string& detail)
    : InvalidInput(source + ":" + std::to_string(line) + ": " + (field.empty() ? std::string{} : field + ": ") +
                   detail),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

namespace {

using PathStep = std::variant<std::string, std::size_t>;
using Path = std::vector<PathStep>;

std::string render(const Path& path) {
  std::string out;
  for (const auto& step : path) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      if (!out.empty()) out += '.';
      out += *key;
    } else {
      out += '[' + std::to_string(std::get<std::size_t>(step)) + ']';
    }
  }
  return out.empty() ? "(root)" : out;
}

// Walks already-valid JSON text to find where a value starts. Only the
// structure matters here; the document has been parsed once already.
class Locator {
 public:
  explicit Locator(std::string_view text) : t_(text) {}

  std::size_t line_of(const Path& path) {
    i_ = 0;
    ws();
    for (const auto& step : path) {
      if (!descend(step)) break;
    }
    return 1 + static_cast<std::size_t>(std::count(t_.begin(), t_.begin() + static_cast<std::ptrdiff_t>(i_), '\n'));
  }

 private:
  bool at_end() const { return i_ >= t_.size(); }

  void ws() {
    while (!at_end() && (t_[i_] == ' ' || t_[i_] == '\t' || t_[i_] == '\n' || t_[i_] == '\r')) ++i_;
  }

  std::string string() {
    std::string out;
    ++i_;
    while (!at_end() && t_[i_] != '"') {
      if (t_[i_] == '\\') ++i_;
      if (!at_end()) out += t_[i_++];
    }
    ++i_;
    return out;
  }

  void skip_value() {
    ws();
    if (at_end()) return;
    const char c = t_[i_];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++i_;
      ws();
      while (!at_end() && t_[i_] != close) {
        if (c == '{') {
          string();
          ws();
          ++i_;  // ':'
        }
        skip_value();
        ws();
        if (!at_end() && t_[i_] == ',') ++i_;
        ws();
      }
      ++i_;
    } else {
      while (!at_end() && std::string_view(",]} \t\r\n").find(t_[i_]) == std::string_view::npos) ++i_;
    }
  }

  // Positions i_ at the child named by `step`; false (and unmoved) if absent.
  bool descend(const PathStep& step) {
    const std::size_t saved = i_;
    if (at_end()) return false;
    const bool object = t_[i_] == '{';
    if (object != std::holds_alternative<std::string>(step) || (t_[i_] != '{' && t_[i_] != '[')) return false;
    const char close = object ? '}' : ']';
    ++i_;
    ws();
    std::size_t index = 0;
    while (!at_end() && t_[i_] != close) {
      bool hit = false;
      if (object) {
        const std::size_t key_pos = i_;
        hit = string() == std::get<std::string>(step);
        ws();
        ++i_;
        ws();
        if (hit && (at_end() || (t_[i_] != '{' && t_[i_] != '['))) {
          i_ = key_pos;  // report the key line for scalars
          return true;
        }
      } else {
        hit = index == std::get<std::size_t>(step);
      }
      if (hit) return true;
      skip_value();
      ws();
      if (!at_end() && t_[i_] == ',') ++i_;
      ws();
      ++index;
    }
    i_ = saved;
    return false;
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

struct Source {
  std::string_view text;
  std::string name;

  [[noreturn]] void fail(const Path& path, const std::string& detail) const {
    throw ParseError(name, Locator(text).line_of(path), render(path), detail);
  }
};

// A value inside the document together with its path, for diagnostics.
class Field {
 public:
  Field(const Source& src, const json& value, Path path) : src_(&src), v_(&value), path_(std::move(path)) {}

  const json& raw() const { return *v_; }
  const Path& path() const { return path_; }

  [[noreturn]] void fail(const std::string& detail) const { src_->fail(path_, detail); }

  void require_object() const {
    if (!v_->is_object()) fail("expected an object");
  }

  void only_keys(std::initializer_list<std::string_view> allowed) const {
    require_object();
    for (const auto& [key, _] : v_->items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) child(key).fail("unknown field");
    }
  }

  bool has(const std::string& key) const { return v_->is_object() && v_->contains(key); }

  Field child(const std::string& key) const {
    Path p = path_;
    p.emplace_back(key);
    return Field(*src_, (*v_)[key], std::move(p));
  }

  Field operator[](const std::string& key) const {
    require_object();
    if (!v_->contains(key)) fail("missing required field \"" + key + "\"");
    return child(key);
  }

  Field operator[](std::size_t index) const {
    Path p = path_;
    p.emplace_back(index);
    return Field(*src_, (*v_)[index], std::move(p));
  }

  std::size_t array_size() const {
    if (!v_->is_array()) fail("expected an array");
    return v_->size();
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) const {
    if (!v_->is_number_integer()) fail("expected an integer");
    if (v_->is_number_unsigned() && v_->get<std::uint64_t>() > static_cast<std::uint64_t>(hi)) {
      fail("must be at most " + std::to_string(hi));
    }
    const auto x = v_->get<std::int64_t>();
    if (x < lo) fail("must be at least " + std::to_string(lo));
    if (x > hi) fail("must be at most " + std::to_string(hi));
    return x;
  }

  std::string string() const {
    if (!v_->is_string()) fail("expected a string");
    return v_->get<std::string>();
  }

  Word word(int rank) const {
    Word w;
    const std::size_t len = array_size();
    for (std::size_t k = 0; k < len; ++k) {
      const Field f = (*this)[k];
      const auto l = f.integer(-rank, rank);
      if (l == 0) f.fail("letter 0 is not allowed (use an empty list for the empty word)");
      w.push_back(static_cast<Letter>(l));
    }
    return w;
  }

 private:
  const Source* src_;
  const json* v_;
  Path path_;
};

constexpr std::int64_t kIntMax = std::numeric_limits<int>::max();

json parse_text(const Source& src) {
  try {
    return json::parse(src.text.begin(), src.text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, src.text.size());
    const std::size_t line =
        1 + static_cast<std::size_t>(std::count(src.text.begin(), src.text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    std::string detail = e.what();
    if (auto pos = detail.find("syntax error"); pos != std::string::npos) detail = detail.substr(pos);
    throw ParseError(src.name, line, "", detail);
  }
}

GroupBackend group_from(const Field& root) {
  root.require_object();
  if (root.has("relators") || root.has("presentation") || root.has("relations")) {
    root.fail("groups given by generators and relators are not supported because their word problem is "
              "undecidable in general; describe a finite group by its Cayley table instead");
  }
  const std::string kind = root["kind"].string();
  if (kind == "free" || kind == "free_abelian") {
    root.only_keys({"kind", "rank"});
    const int rank = static_cast<int>(root["rank"].integer(1, kIntMax));
    return kind == "free" ? GroupBackend::free_group(rank) : GroupBackend::free_abelian(rank);
  }
  if (kind == "cyclic") {
    root.only_keys({"kind", "order"});
    return GroupBackend::cyclic(static_cast<std::uint64_t>(root["order"].integer(1, std::numeric_limits<std::int64_t>::max())));
  }
  if (kind == "cayley") {
    root.only_keys({"kind", "size", "identity", "table", "generator_images"});
    CayleyTable t;
    t.size = static_cast<std::uint32_t>(root["size"].integer(1, 1 << 16));
    const std::int64_t top = static_cast<std::int64_t>(t.size) - 1;
    t.identity = static_cast<std::uint32_t>(root["identity"].integer(0, top));
    const Field table = root["table"];
    if (table.array_size() != t.size) table.fail("expected " + std::to_string(t.size) + " rows");
    for (std::size_t r = 0; r < t.size; ++r) {
      const Field row = table[r];
      if (row.array_size() != t.size) row.fail("expected " + std::to_string(t.size) + " entries");
      for (std::size_t c = 0; c < t.size; ++c) t.table.push_back(static_cast<std::uint32_t>(row[c].integer(0, top)));
    }
    const Field images = root["generator_images"];
    const std::size_t m = images.array_size();
    if (m == 0) images.fail("at least one generator is required");
    for (std::size_t k = 0; k < m; ++k) t.generator_images.push_back(static_cast<std::uint32_t>(images[k].integer(0, top)));
    try {
      return GroupBackend::cayley(std::move(t));
    } catch (const InvalidGroup& e) {
      table.fail(e.what());
    }
  }
  root["kind"].fail("unknown group kind \"" + kind + "\" (expected free, free_abelian, cyclic or cayley)");
}

Nfa automaton_from(const Field& root) {
  root.only_keys({"kind", "states", "alphabet_rank", "transitions", "start", "finals"});
  const int n = static_cast<int>(root["states"].integer(1, kIntMax));
  const int rank = static_cast<int>(root["alphabet_rank"].integer(1, kIntMax));
  const StateId start = root.has("start") ? static_cast<StateId>(root["start"].integer(1, n)) : 1;
  std::vector<Transition> arcs;
  const Field transitions = root["transitions"];
  for (std::size_t k = 0; k < transitions.array_size(); ++k) {
    const Field t = transitions[k];
    if (t.array_size() != 3) t.fail("expected [from, letter, to]");
    const auto from = static_cast<StateId>(t[0].integer(1, n));
    const Letter letter = static_cast<Letter>(t[1].integer(-rank, rank));
    if (letter == 0) t[1].fail("letter 0 is not allowed");
    const auto to = static_cast<StateId>(t[2].integer(1, n));
    arcs.push_back({from, letter, to});
  }
  std::vector<StateId> finals;
  const Field f = root["finals"];
  for (std::size_t k = 0; k < f.array_size(); ++k) finals.push_back(static_cast<StateId>(f[k].integer(1, n)));
  return Nfa(n, rank, std::move(arcs), std::move(finals), start);
}

LinearGrammar grammar_from(const Field& root) {
  root.only_keys({"kind", "nonterminals", "alphabet_rank", "productions", "start"});
  const int n = static_cast<int>(root["nonterminals"].integer(1, kIntMax));
  const int rank = static_cast<int>(root["alphabet_rank"].integer(1, kIntMax));
  const NonterminalId start = root.has("start") ? static_cast<NonterminalId>(root["start"].integer(1, n)) : 1;
  std::vector<Production> prods;
  const Field list = root["productions"];
  for (std::size_t k = 0; k < list.array_size(); ++k) {
    const Field p = list[k];
    p.only_keys({"lhs", "alpha", "rhs", "beta"});
    const auto lhs = static_cast<NonterminalId>(p["lhs"].integer(1, n));
    Word alpha = p["alpha"].word(rank);
    if (p.has("rhs")) {
      const auto rhs = static_cast<NonterminalId>(p["rhs"].integer(1, n));
      Word beta = p.has("beta") ? p["beta"].word(rank) : Word{};
      prods.push_back(Production::chain(lhs, std::move(alpha), rhs, std::move(beta)));
    } else {
      if (p.has("beta")) p["beta"].fail("a production without \"rhs\" cannot have \"beta\"");
      prods.push_back(Production::terminal(lhs, std::move(alpha)));
    }
  }
  return LinearGrammar(n, rank, std::move(prods), start);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

GroupBackend parse_group(std::string_view text, const std::string& source) {
  const Source src{text, source};
  const json doc = parse_text(src);
  return group_from(Field(src, doc, {}));
}

Language parse_language(std::string_view text, const std::string& source) {
  const Source src{text, source};
  const json doc = parse_text(src);
  const Field root(src, doc, {});
  root.require_object();
  std::string kind;
  if (root.has("kind")) {
    kind = root["kind"].string();
    if (kind != "automaton" && kind != "linear_grammar") {
      root["kind"].fail("unknown language kind \"" + kind + "\" (expected automaton or linear_grammar)");
    }
  } else if (root.has("states") && !root.has("nonterminals")) {
    kind = "automaton";
  } else if (root.has("nonterminals") && !root.has("states")) {
    kind = "linear_grammar";
  } else {
    root.fail("cannot tell automaton from grammar; add \"kind\"");
  }
  if (kind == "automaton") return automaton_from(root);
  return grammar_from(root);
}

GroupBackend load_group_file(const std::filesystem::path& path) { return parse_group(read_file(path), path.string()); }

Language load_language_file(const std::filesystem::path& path) {
  return parse_language(read_file(path), path.string());
}

json to_json(const GroupBackend& g) {
  switch (g.kind()) {
    case GroupKind::Free:
      return {{"kind", "free"}, {"rank", g.rank()}};
    case GroupKind::FreeAbelian:
      return {{"kind", "free_abelian"}, {"rank", g.rank()}};
    case GroupKind::Cyclic:
      return {{"kind", "cyclic"}, {"order", g.order()}};
    case GroupKind::Cayley: {
      const auto& t = g.cayley_table();
      json rows = json::array();
      for (std::uint32_t r = 0; r < t.size; ++r) {
        rows.push_back(std::vector<std::uint32_t>(t.table.begin() + r * t.size, t.table.begin() + (r + 1) * t.size));
      }
      return {{"kind", "cayley"},
              {"size", t.size},
              {"identity", t.identity},
              {"table", rows},
              {"generator_images", t.generator_images}};
    }
  }
  throw InternalInconsistency("unknown group kind");
}

json to_json(const Nfa& a) {
  json arcs = json::array();
  for (const auto& t : a.transitions()) arcs.push_back({t.from, t.letter, t.to});
  return {{"kind", "automaton"},       {"states", a.state_count()}, {"alphabet_rank", a.alphabet().rank()},
          {"transitions", arcs},       {"start", a.start()},        {"finals", a.finals()}};
}

json to_json(const LinearGrammar& g) {
  json prods = json::array();
  for (const auto& p : g.productions()) {
    json entry = {{"lhs", p.lhs}, {"alpha", p.alpha}};
    if (p.rhs) {
      entry["rhs"] = *p.rhs;
      entry["beta"] = p.beta;
    }
    prods.push_back(std::move(entry));
  }
  return {{"kind", "linear_grammar"},
          {"nonterminals", g.nonterminal_count()},
          {"alphabet_rank", g.alphabet().rank()},
          {"productions", prods},
          {"start", g.start()}};
}

}  // namespace grouplang
