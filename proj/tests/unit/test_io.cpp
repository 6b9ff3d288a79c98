#include <doctest.h>

#include "cocoakit/families.hpp"
#include "cocoakit/io.hpp"
#include "test_support.hpp"

using namespace cocoakit;

TEST_CASE("aut text round-trips for every generator output") {
  std::vector<Automaton> samples = {
      gen_prop1_dpw(3),   gen_dpw_P(2),      gen_dpw_Phat(2),
      gen_dcw_L(2, 1),    gen_dcw_Lhat(2, 2), gen_dcw_L(2, 0),
      gen_example31_dpw()};
  for (const Automaton& aut : samples) {
    Automaton back = parse_aut(print_aut(aut, "sample"));
    CHECK(same_structure(aut, back));
  }
}

TEST_CASE("aut parsing rejects invariant violations with diagnostics") {
  CHECK_THROWS_WITH_AS(
      parse_aut("aut t\nalphabet a b\nstates 1\ninitial 0\n"
                "trans 0 b 2 0\nend\n"),
      doctest::Contains("INPUT_INCOMPLETE at (0,'a')"), Error);
  CHECK_THROWS_WITH_AS(
      parse_aut("aut t\nalphabet a\nstates 1\ninitial 0\n"
                "trans 0 a 1 0\ntrans 0 a 2 0\nend\n"),
      doctest::Contains("NON_UNIFORM_COLOR"), Error);
  CHECK_THROWS_AS(parse_aut("aut t\nalphabet a\nstates 1\ninitial 1\n"
                            "trans 0 a 2 0\nend\n"),
                  Error);
  CHECK_THROWS_AS(parse_aut("aut t\nalphabet a\nstates 1\ninitial 0\n"
                            "trans 0 z 2 0\nend\n"),
                  Error);
  CHECK_THROWS_AS(parse_aut("aut t\nalphabet a\nstates 1\ninitial 0\n"
                            "trans 0 a 2 7\nend\n"),
                  Error);
}

TEST_CASE("cocoa text round-trips") {
  Cocoa chain = gen_cocoa_C(2);
  Cocoa back = parse_cocoa(print_cocoa(chain, "c2"));
  REQUIRE(back.member_count() == chain.member_count());
  for (int level = 1; level <= chain.member_count(); ++level)
    CHECK(same_structure(back.member(level), chain.member(level)));

  ParsedFile file = parse_aut_or_cocoa(print_cocoa(chain, "c2"));
  CHECK(file.name == "c2");
  CHECK(std::holds_alternative<Cocoa>(file.content));
  file = parse_aut_or_cocoa(print_aut(gen_dpw_P(1), "p1"));
  CHECK(std::holds_alternative<Automaton>(file.content));
}

TEST_CASE("printing is deterministic") {
  CHECK(print_aut(gen_dpw_P(2), "p") == print_aut(gen_dpw_P(2), "p"));
  CHECK(print_cocoa(gen_cocoa_C(2), "c") == print_cocoa(gen_cocoa_C(2), "c"));
}

TEST_CASE("hoa export carries the parity header and all transitions") {
  Automaton aut = gen_dpw_P(1);
  std::string hoa = print_hoa(aut, "p1");
  CHECK(hoa.find("HOA: v1") == 0);
  CHECK(hoa.find("acc-name: parity min even 2") != std::string::npos);
  CHECK(hoa.find("Acceptance: 2 Inf(0) | (Fin(1))") != std::string::npos);
  CHECK(hoa.find("properties: trans-labels explicit-labels trans-acc deterministic") !=
        std::string::npos);
  CHECK(hoa.find("--BODY--") != std::string::npos);
  CHECK(hoa.find("--END--") != std::string::npos);
  size_t edges = 0;
  for (size_t at = hoa.find('['); at != std::string::npos;
       at = hoa.find('[', at + 1))
    ++edges;
  CHECK(edges == 2u * 6u);  // 2 states x 6 letters
}

TEST_CASE("lasso text syntax") {
  LassoWord w = parse_lasso("X_1 a_0|a_3 a_3");
  CHECK(w.stem == std::vector<std::string>{"X_1", "a_0"});
  CHECK(w.loop == std::vector<std::string>{"a_3", "a_3"});
  CHECK(format_lasso(w) == "X_1 a_0|a_3 a_3");

  LassoWord empty_stem = parse_lasso("|c");
  CHECK(empty_stem.stem.empty());
  CHECK(format_lasso(empty_stem) == "|c");

  CHECK_THROWS_AS(parse_lasso("a b c"), Error);   // no separator
  CHECK_THROWS_AS(parse_lasso("a|"), Error);      // empty loop
  CHECK_THROWS_AS(parse_lasso("a|b|c"), Error);   // two separators

  Alphabet ab({"a", "b"});
  CHECK_THROWS_AS(map_lasso(ab, parse_lasso("a|z")), Error);
}
