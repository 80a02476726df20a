#pragma once

// Text formats: the line-based VASS file format (dim/state/trans/init/
// target lines, '#' comments), its serializer (round-trip stable), and the
// simple-linear-path-scheme syntax (slps/seg/loop lines).

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vassr/basics.hpp"
#include "vassr/slps.hpp"
#include "vassr/vass.hpp"

namespace vassr {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", col " +
                           std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

struct ParsedVass {
  Vass vass;
  std::optional<Configuration> init;
  std::optional<Configuration> target;
};

namespace detail {

// Single-line scanner with column tracking.
class LineScanner {
 public:
  LineScanner(const std::string& text, int line) : s_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int col() const { return (int)pos_ + 1; }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    auto head = [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (pos_ >= s_.size() || !head(s_[pos_]))
      throw ParseError(line_, col(), "identifier expected");
    ++pos_;
    while (pos_ < s_.size() && tail(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == digits)
      throw ParseError(line_, (int)start + 1, "integer expected");
    return Int(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(line_, col(), std::string("'") + c + "' expected");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  IntVec vector(std::size_t dim) {
    expect('(');
    IntVec v;
    if (!peek(')')) {
      v.push_back(integer());
      while (peek(',')) {
        expect(',');
        v.push_back(integer());
      }
    }
    expect(')');
    if (v.size() != dim)
      throw ParseError(line_, col(),
                       "vector has " + std::to_string(v.size()) +
                           " components, dimension is " + std::to_string(dim));
    return v;
  }

  void end_of_line() {
    if (!at_end()) throw ParseError(line_, col(), "trailing tokens");
  }

 private:
  std::string s_;
  int line_;
  std::size_t pos_ = 0;
};

inline std::vector<std::pair<int, std::string>> logical_lines(
    const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = raw.find_last_not_of(" \t\r");
    out.push_back({lineno, raw.substr(0, b + 1)});
  }
  return out;
}

}  // namespace detail

// Parses the line format: `dim d` first, then `state id`,
// `trans tid: src (c1,...,cd) dst`, `init state (c...)`,
// `target state (c...)`.  Transition ids must be declared in order 0,1,...
inline ParsedVass parse_vass_text(const std::string& text) {
  auto lines = detail::logical_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  // First line: dim.
  std::size_t dim = 0;
  {
    detail::LineScanner sc(lines[0].second, lines[0].first);
    if (sc.ident() != "dim")
      throw ParseError(lines[0].first, 1, "first line must be 'dim <d>'");
    Int d = sc.integer();
    if (d < 1 || d > 16)
      throw ParseError(lines[0].first, 1, "dimension out of range [1,16]");
    dim = (std::size_t)d.get_ui();
    sc.end_of_line();
  }
  // Collect state names first (the model is immutable in its state set).
  std::vector<std::string> names;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineScanner sc(lines[i].second, lines[i].first);
    if (sc.ident() == "state") {
      names.push_back(sc.ident());
      sc.end_of_line();
    }
  }
  ParsedVass out{Vass(dim, names), std::nullopt, std::nullopt};
  int expected_tid = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineScanner sc(lines[i].second, lines[i].first);
    std::string kw = sc.ident();
    if (kw == "state") continue;
    if (kw == "trans") {
      Int tid = sc.integer();
      sc.expect(':');
      std::string src = sc.ident();
      IntVec effect = sc.vector(dim);
      std::string dst = sc.ident();
      sc.end_of_line();
      if (tid != expected_tid)
        throw ParseError(lines[i].first, 1,
                         "transition ids must run 0,1,... in order");
      if (!out.vass.has_state(src) || !out.vass.has_state(dst))
        throw ParseError(lines[i].first, 1, "unknown state in transition");
      out.vass.add_transition(out.vass.state_id(src), effect,
                              out.vass.state_id(dst));
      ++expected_tid;
    } else if (kw == "init" || kw == "target") {
      std::string q = sc.ident();
      IntVec vec = sc.vector(dim);
      sc.end_of_line();
      if (!out.vass.has_state(q))
        throw ParseError(lines[i].first, 1, "unknown state " + q);
      Configuration c{out.vass.state_id(q), vec, Mode::Vass};
      if (kw == "init")
        out.init = c;
      else
        out.target = c;
    } else if (kw == "dim") {
      throw ParseError(lines[i].first, 1, "duplicate dim line");
    } else {
      throw ParseError(lines[i].first, 1, "unknown directive " + kw);
    }
  }
  return out;
}

inline std::string serialize_vector(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string serialize_vass(
    const Vass& v, const std::optional<Configuration>& init = std::nullopt,
    const std::optional<Configuration>& target = std::nullopt) {
  std::ostringstream os;
  os << "dim " << v.dimension() << "\n";
  for (const std::string& n : v.state_names()) os << "state " << n << "\n";
  for (const Transition& t : v.transitions())
    os << "trans " << t.id << ": " << v.state_name(t.src) << " "
       << serialize_vector(t.effect) << " " << v.state_name(t.dst) << "\n";
  if (init)
    os << "init " << v.state_name(init->state) << " "
       << serialize_vector(init->vector) << "\n";
  if (target)
    os << "target " << v.state_name(target->state) << " "
       << serialize_vector(target->vector) << "\n";
  return os.str();
}

// Simple-linear-path-scheme syntax: `slps dim 2` header, then alternating
// `seg (a,b)(c,d)...` (possibly empty: bare `seg`) and `loop (a,b)` lines.
// Segments and loops must alternate starting and ending with a segment;
// a trailing segment is implied when the input ends after a loop.
inline Slps parse_slps_text(const std::string& text) {
  auto lines = detail::logical_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  {
    detail::LineScanner sc(lines[0].second, lines[0].first);
    if (sc.ident() != "slps" || sc.ident() != "dim" || sc.integer() != 2)
      throw ParseError(lines[0].first, 1, "header must be 'slps dim 2'");
    sc.end_of_line();
  }
  std::vector<std::vector<IntVec>> segments;
  std::vector<IntVec> loops;
  bool expect_seg = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineScanner sc(lines[i].second, lines[i].first);
    std::string kw = sc.ident();
    if (kw == "seg") {
      if (!expect_seg)
        throw ParseError(lines[i].first, 1, "two consecutive seg lines");
      std::vector<IntVec> seg;
      while (!sc.at_end()) seg.push_back(sc.vector(2));
      segments.push_back(std::move(seg));
      expect_seg = false;
    } else if (kw == "loop") {
      if (expect_seg)
        throw ParseError(lines[i].first, 1, "loop must follow a seg line");
      loops.push_back(sc.vector(2));
      sc.end_of_line();
      expect_seg = true;
    } else {
      throw ParseError(lines[i].first, 1, "unknown directive " + kw);
    }
  }
  if (expect_seg) segments.push_back({});  // implied empty final segment
  if (segments.empty()) segments.push_back({});
  return Slps(std::move(segments), std::move(loops));
}

}  // namespace vassr
