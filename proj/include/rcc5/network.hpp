#ifndef RCC5_NETWORK_HPP
#define RCC5_NETWORK_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "rcc5/relation.hpp"

namespace rcc5 {

/// A single RCC-5 formula "x rel y" over named region variables.
struct Formula {
  std::string x;
  Relation rel;
  std::string y;

  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula& a, const Formula& b) {
    return std::tie(a.x, a.y, a.rel) <=> std::tie(b.x, b.y, b.rel);
  }
};

/// A finite set of formulas. Set semantics: exact duplicates collapse,
/// but distinct parallel formulas between the same pair are kept.
class Network {
 public:
  Network() = default;

  void add(Formula f) {
    if (!index_.insert(f).second) return;
    formulas_.push_back(std::move(f));
  }
  void add(std::string x, Relation rel, std::string y) {
    add(Formula{std::move(x), rel, std::move(y)});
  }

  const std::vector<Formula>& formulas() const { return formulas_; }
  bool empty() const { return formulas_.empty(); }
  size_t size() const { return formulas_.size(); }

  std::vector<std::string> variables() const {
    std::vector<std::string> vars;
    vars.reserve(2 * formulas_.size());
    for (const Formula& f : formulas_) {
      vars.push_back(f.x);
      vars.push_back(f.y);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  friend bool operator==(const Network& a, const Network& b) {
    auto key = [](const Network& n) {
      std::vector<Formula> v = n.formulas_;
      std::sort(v.begin(), v.end());
      return v;
    };
    return key(a) == key(b);
  }

 private:
  std::vector<Formula> formulas_;
  std::set<Formula> index_;  // duplicate detection in O(log n)
};

/// Parse failure, with the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool is_token_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '{' &&
         c != '}' && c != '#';
}

struct LineScanner {
  std::string_view rest;
  int line;

  void skip_space() {
    while (!rest.empty() &&
           std::isspace(static_cast<unsigned char>(rest.front())))
      rest.remove_prefix(1);
  }

  bool done() {
    skip_space();
    return rest.empty() || rest.front() == '#';
  }

  std::string token() {
    skip_space();
    size_t n = 0;
    while (n < rest.size() && is_token_char(rest[n])) ++n;
    if (n == 0) throw ParseError(line, "expected a variable name");
    std::string tok(rest.substr(0, n));
    rest.remove_prefix(n);
    return tok;
  }

  Relation relation() {
    skip_space();
    if (rest.empty()) throw ParseError(line, "expected a relation");
    std::string_view text;
    if (rest.front() == '{') {
      size_t close = rest.find('}');
      if (close == std::string_view::npos)
        throw ParseError(line, "unterminated relation");
      text = rest.substr(0, close + 1);
      rest.remove_prefix(close + 1);
    } else {
      size_t n = 0;
      while (n < rest.size() && is_token_char(rest[n])) ++n;
      text = rest.substr(0, n);
      rest.remove_prefix(n);
    }
    auto r = Relation::parse(text);
    if (!r)
      throw ParseError(line,
                       "unknown relation '" + std::string(text) + "'");
    return *r;
  }
};

}  // namespace detail

///// File format: one formula per line, "<var> <relation> <var>". '#'
/// starts a comment; blank lines are ignored; LF or CRLF endings.
inline Network parse(std::string_view text) {
  Network net;
  int line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line =
        nl == std::string_view::npos ? text : text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    detail::LineScanner scan{line, line_no};
    if (scan.done()) continue;
    std::string x = scan.token();
    Relation rel = scan.relation();
    std::string y = scan.token();
    if (!scan.done())
      throw ParseError(line_no, "trailing input after formula");
    net.add(std::move(x), rel, std::move(y));
  }
  return net;
}

/// Canonical text: formulas sorted by (x, y, relation mask).
inline std::string serialize(const Network& net) {
  std::vector<Formula> sorted = net.formulas();
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const Formula& f : sorted) {
    out += f.x;
    out += ' ';
    out += f.rel.to_string();
    out += ' ';
    out += f.y;
    out += '\n';
  }
  return out;
}

/// The set of distinct relation labels occurring in a network.
inline Subclass relation_set(const Network& net) {
  Subclass s;
  for (const Formula& f : net.formulas()) s = s.with(f.rel);
  return s;
}

/// Normalization result: either a reduced network or an unsatisfiability
/// verdict discovered on the way.
struct NormalizeResult {
  bool satisfiable = true;
  Network net;
};

/// Subclass-independent reductions: fold both orientations of a pair into
/// one formula by intersecting (with converse), drop reflexive formulas
/// admitting EQ, reject reflexive formulas without EQ and null labels.
/// Output has at most one formula per pair, oriented lexicographically.
inline NormalizeResult normalize(const Network& net) {
  std::map<std::pair<std::string, std::string>, Relation> merged;
  for (const Formula& f : net.formulas()) {
    if (f.x == f.y) {
      if (!f.rel.contains(Basic::EQ)) return {false, {}};
      continue;
    }
    bool flip = f.y < f.x;
    auto key = flip ? std::make_pair(f.y, f.x) : std::make_pair(f.x, f.y);
    Relation rel = flip ? f.rel.converse() : f.rel;
    auto [it, inserted] = merged.try_emplace(key, rel);
    if (!inserted) it->second &= rel;
  }
  NormalizeResult out;
  for (const auto& [key, rel] : merged) {
    if (rel.empty()) return {false, {}};
    out.net.add(key.first, rel, key.second);
  }
  return out;
}

}  // namespace rcc5

#endif  // RCC5_NETWORK_HPP
