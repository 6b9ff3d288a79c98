#include <doctest.h>

#include <set>

#include "cocoakit/automaton.hpp"
#include "cocoakit/families.hpp"
#include "cocoakit/lasso.hpp"
#include "cocoakit/ops.hpp"
#include "test_support.hpp"

using namespace cocoakit;
using test::small_alphabet;

TEST_CASE("alphabet rejects malformed symbol lists") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK_THROWS_AS(Alphabet({"a b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a|b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a.b"}), Error);
  CHECK_THROWS_AS(Alphabet({}), Error);

  Alphabet ab({"x_1", "y_1"});
  CHECK(ab.index_of("y_1") == 1);
  CHECK(ab.index_of("z") == -1);
  CHECK_THROWS_AS(ab.require("z"), Error);
}

TEST_CASE("validate_automaton reports the violated invariants") {
  Alphabet ab = small_alphabet(2);

  AutomatonBuilder complete(ab, 1, 0);
  complete.add_edge(0, 0, 2, 0).add_edge(0, 1, 2, 0);
  CHECK(validate_automaton(std::move(complete).build()).empty());

  AutomatonBuilder incomplete(ab, 1, 0);
  incomplete.add_edge(0, 1, 2, 0);  // nothing for (0, 'a')
  auto diags = validate_automaton(std::move(incomplete).build());
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].kind == DiagnosticKind::InputIncomplete);
  CHECK(diags[0].state == 0);
  CHECK(diags[0].symbol == 0);
  CHECK(diags[0].message(ab) == "INPUT_INCOMPLETE at (0,'a')");

  AutomatonBuilder mixed(ab, 2, 0);
  mixed.add_edge(0, 0, 1, 0).add_edge(0, 0, 2, 1);
  mixed.add_edge(0, 1, 2, 0);
  mixed.add_edge(1, 0, 2, 1).add_edge(1, 1, 2, 1);
  diags = validate_automaton(std::move(mixed).build());
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].kind == DiagnosticKind::NonUniformColor);
  CHECK(diags[0].message(ab) == "NON_UNIFORM_COLOR at (0,'a')");
}

TEST_CASE("duplicate entries collapse at construction") {
  Alphabet ab = small_alphabet(1);
  AutomatonBuilder b(ab, 1, 0);
  b.add_edge(0, 0, 2, 0).add_edge(0, 0, 2, 0);
  Automaton aut = std::move(b).build();
  CHECK(aut.edges(0, 0).size() == 1);
}

TEST_CASE("is_deterministic") {
  CHECK(is_deterministic(gen_dpw_P(2)));

  Alphabet ab = small_alphabet(1);
  AutomatonBuilder split(ab, 2, 0);
  split.add_edge(0, 0, 2, 0).add_edge(0, 0, 2, 1).add_edge(1, 0, 2, 1);
  CHECK_FALSE(is_deterministic(std::move(split).build()));

  AutomatonBuilder universal(small_alphabet(2), 1, 0);
  universal.add_edge(0, 0, 2, 0).add_edge(0, 1, 2, 0);
  CHECK(is_deterministic(std::move(universal).build()));
}

TEST_CASE("reachable_restrict drops unreachable states and is idempotent") {
  Alphabet ab = small_alphabet(1);
  AutomatonBuilder b(ab, 3, 0);
  b.add_edge(0, 0, 2, 0);
  b.add_edge(1, 0, 1, 2);  // unreachable tail
  b.add_edge(2, 0, 1, 1);
  Automaton aut = std::move(b).build();

  Automaton restricted = reachable_restrict(aut);
  CHECK(restricted.state_count() == 1);
  CHECK(same_structure(restricted, reachable_restrict(restricted)));

  Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
  CHECK(product.state_count() == 4);
  CHECK(reachable_restrict(product).state_count() == 4);
}

TEST_CASE("rename_letters") {
  Automaton p1 = gen_dpw_P(1);

  SUBCASE("identity mapping") {
    std::vector<std::pair<std::string, std::string>> identity;
    for (const std::string& s : p1.alphabet().symbols())
      identity.emplace_back(s, s);
    CHECK(same_structure(rename_letters(p1, identity), p1));
  }

  SUBCASE("non-bijective mappings are rejected") {
    CHECK_THROWS_AS(rename_letters(p1, {{"X_1", "Y_1"}}), Error);
    std::vector<std::pair<std::string, std::string>> doubled;
    for (const std::string& s : p1.alphabet().symbols())
      doubled.emplace_back(s, "a_0");
    CHECK_THROWS_AS(rename_letters(p1, doubled), Error);
  }

  SUBCASE("x/y and window swap tracks the mirrored window oracle") {
    // rename_letters(P(1)) under the mirror bijection recognizes the hatted
    // language; compare with the independent window oracle
    std::vector<std::pair<std::string, std::string>> mirror = {
        {"X_1", "Y_1"}, {"Y_1", "X_1"}, {"a_0", "a_3"}, {"a_1", "a_2"},
        {"a_2", "a_1"}, {"a_3", "a_0"}};
    Automaton renamed = rename_letters(p1, mirror);
    for_each_lasso(renamed.alphabet().size(), 2, 2, [&](const MappedLasso& w) {
      LassoWord word = unmap_lasso(renamed.alphabet(), w);
      bool expect = !lasso_in_Lhat(1, 1, word);  // chain semantics at k=1
      CHECK(dpw_accepts(renamed, w) == expect);
    });
  }

  SUBCASE("swapping letters outside the language support") {
    // c and d both lead to a rejecting sink, so swapping them changes nothing
    Alphabet ab = small_alphabet(4);
    AutomatonBuilder b(ab, 2, 0);
    for (int x = 0; x < 4; ++x) b.add_edge(1, x, 1, 1);
    b.add_edge(0, 0, 2, 0).add_edge(0, 1, 2, 0);
    b.add_edge(0, 2, 1, 1).add_edge(0, 3, 1, 1);
    Automaton aut = std::move(b).build();
    Automaton swapped = rename_letters(
        aut, {{"a", "a"}, {"b", "b"}, {"c", "d"}, {"d", "c"}});
    for_each_lasso(4, 2, 3, [&](const MappedLasso& w) {
      CHECK(dpw_accepts(aut, w) == dpw_accepts(swapped, w));
    });
  }

  SUBCASE("round trip through the inverse is the identity") {
    std::mt19937_64 rng(7);
    Automaton aut = test::random_dpw(rng, 4, 3, 3);
    std::vector<std::pair<std::string, std::string>> cycle = {
        {"a", "b"}, {"b", "c"}, {"c", "a"}};
    std::vector<std::pair<std::string, std::string>> inverse = {
        {"b", "a"}, {"c", "b"}, {"a", "c"}};
    CHECK(same_structure(rename_letters(rename_letters(aut, cycle), inverse),
                         aut));
  }
}

TEST_CASE("scc_decompose") {
  SUBCASE("window-flip automaton is one component") {
    Automaton p1 = gen_dpw_P(1);
    auto sccs = scc_decompose(p1);
    REQUIRE(sccs.size() == 1);
    CHECK(sccs[0].states == std::vector<int>{0, 1});
  }

  SUBCASE("one-way bridge keeps two components apart") {
    Alphabet ab = small_alphabet(2);
    AutomatonBuilder b(ab, 2, 0);
    b.add_edge(0, 0, 2, 0).add_edge(0, 1, 2, 1);
    b.add_edge(1, 0, 2, 1).add_edge(1, 1, 2, 1);
    auto sccs = scc_decompose(std::move(b).build());
    REQUIRE(sccs.size() == 2);
    CHECK(sccs[0].states == std::vector<int>{0});
    CHECK(sccs[1].states == std::vector<int>{1});
  }

  SUBCASE("no letters, no components") {
    CHECK(scc_decompose(gen_dpw_P(1), std::vector<int>{}).empty());
  }

  SUBCASE("matches the mutual-reachability oracle on random automata") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
      Automaton aut = test::random_ncw(rng, 2 + test::draw(rng, 7), 2);
      std::vector<int> letters;
      for (int x = 0; x < aut.alphabet().size(); ++x)
        if (round % 3 != 0 || x % 2 == 0) letters.push_back(x);
      auto got = scc_decompose(aut, letters);
      auto expect = test::brute_force_sccs(aut, letters);
      REQUIRE(got.size() == expect.size());
      for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].states == expect[i]);
      // every listed transition stays inside its component
      for (const Scc& scc : got)
        for (const Transition& t : scc.transitions) {
          CHECK(scc.contains(t.src));
          CHECK(scc.contains(t.target));
        }
    }
  }
}

TEST_CASE("terminal_sccs") {
  SUBCASE("strongly connected automaton is its own terminal component") {
    Automaton p1 = gen_dpw_P(1);
    auto terminals = terminal_sccs(p1);
    REQUIRE(terminals.size() == 1);
    CHECK(terminals[0].states.size() == 2);
  }

  SUBCASE("chain product is one terminal component of four states") {
    auto terminals = terminal_sccs(cocoa_to_dpw(gen_cocoa_C(2)));
    REQUIRE(terminals.size() == 1);
    CHECK(terminals[0].states == std::vector<int>{0, 1, 2, 3});
  }

  SUBCASE("transient initial state feeding a sink loop") {
    Alphabet ab = small_alphabet(1);
    AutomatonBuilder b(ab, 2, 0);
    b.add_edge(0, 0, 2, 1).add_edge(1, 0, 2, 1);
    auto terminals = terminal_sccs(std::move(b).build());
    REQUIRE(terminals.size() == 1);
    CHECK(terminals[0].states == std::vector<int>{1});
  }

  SUBCASE("never empty for input-complete automata") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 30; ++round) {
      Automaton aut = test::random_ncw(rng, 2 + test::draw(rng, 6), 3);
      CHECK_FALSE(terminal_sccs(aut).empty());
    }
  }
}
