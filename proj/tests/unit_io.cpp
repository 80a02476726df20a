// Text formats: parsing, serialization round trips, and positioned
// error reporting.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "vassr/io.hpp"

using namespace vassr;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TESTDATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parsing the zigzag sample file") {
  ParsedVass p = parse_vass_text(slurp("fig_zigzag2.vass"));
  CHECK(p.vass.dimension() == 2);
  CHECK(p.vass.state_count() == 4);
  CHECK(p.vass.transitions().size() == 7);
  CHECK(p.vass.state_name(0) == "q1");
  CHECK(p.vass.transition(0).effect == IntVec{Int(-1), Int(2)});
  CHECK(p.vass.transition(0).src == 0);
  CHECK(p.vass.transition(0).dst == 0);
  REQUIRE(p.init.has_value());
  CHECK(p.init->state == 0);
  CHECK(p.init->vector == IntVec{Int(1), Int(0)});
  REQUIRE(p.target.has_value());
  CHECK(p.target->state == 3);
  CHECK(p.target->vector == IntVec{Int(16), Int(0)});
}

TEST_CASE("serialization round trip is stable") {
  ParsedVass p = parse_vass_text(slurp("unit_loops3.vass"));
  std::string once = serialize_vass(p.vass, p.init, p.target);
  ParsedVass again = parse_vass_text(once);
  CHECK(serialize_vass(again.vass, again.init, again.target) == once);
  CHECK(again.vass.state_count() == p.vass.state_count());
  CHECK(again.vass.transitions().size() == p.vass.transitions().size());
  CHECK(again.init->vector == p.init->vector);
  CHECK(again.target->vector == p.target->vector);
}

TEST_CASE("comments and blank lines are ignored with line numbers kept") {
  auto lines = detail::logical_lines("# header\n\n  dim 2 # inline\n\nstate a\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].first == 3);
  CHECK(lines[0].second == "  dim 2");
  CHECK(lines[1].first == 5);
}

namespace {

int error_line(const std::string& text) {
  try {
    parse_vass_text(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("parse errors carry positions and reasons") {
  CHECK(error_line("") == 1);
  CHECK(error_line("state a\n") == 1);               // missing dim header
  CHECK(error_line("dim 0\n") == 1);                 // range check
  CHECK(error_line("dim 2\ndim 2\n") == 2);          // duplicate header
  CHECK(error_line("dim 2\nstate a\nfoo bar\n") == 3);
  // Transition ids must run 0,1,... in declaration order.
  CHECK(error_line("dim 1\nstate a\ntrans 1: a (0) a\n") == 3);
  CHECK(error_line("dim 1\nstate a\ntrans 0: a (0) b\n") == 3);  // unknown dst
  // Vector arity mismatch.
  CHECK(error_line("dim 2\nstate a\ntrans 0: a (1) a\n") == 3);
  // Trailing tokens.
  CHECK(error_line("dim 2\nstate a\ninit a (1,2) junk\n") == 3);
  // Unknown state in init.
  CHECK(error_line("dim 2\nstate a\ninit b (1,2)\n") == 3);

  try {
    parse_vass_text("dim 2\nstate a\ntrans 0: a (1,x) a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 1);
    CHECK(std::string(e.what()).find("integer expected") != std::string::npos);
  }
}

TEST_CASE("scheme files parse with implied trailing segment") {
  Slps l = parse_slps_text(
      "slps dim 2\nseg (1,0) (0,1)\nloop (1,-1)\nseg\nloop (-1,1)\n");
  CHECK(l.loop_count() == 2);
  REQUIRE(l.segments.size() == 3);
  CHECK(l.segments[0].size() == 2);
  CHECK(l.segments[1].empty());
  CHECK(l.segments[2].empty());  // implied by the trailing loop
  CHECK(l.loops[0] == IntVec{Int(1), Int(-1)});

  Slps bare = parse_slps_text("slps dim 2\nseg\n");
  CHECK(bare.loop_count() == 0);
  REQUIRE(bare.segments.size() == 1);

  CHECK_THROWS_AS(parse_slps_text("slps dim 3\nseg\n"), ParseError);
  CHECK_THROWS_AS(parse_slps_text("slps dim 2\nloop (1,-1)\n"), ParseError);
  CHECK_THROWS_AS(parse_slps_text("slps dim 2\nseg\nseg\n"), ParseError);
  CHECK_THROWS_AS(parse_slps_text("slps dim 2\nseg (1,2,3)\n"), ParseError);
}
