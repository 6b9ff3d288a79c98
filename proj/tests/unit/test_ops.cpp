#include <doctest.h>

#include <cmath>

#include "cocoakit/families.hpp"
#include "cocoakit/lasso.hpp"
#include "cocoakit/ops.hpp"
#include "test_support.hpp"

using namespace cocoakit;

namespace {

// brute-force joint emptiness: is there a lasso within the bounds that every
// constraint approves of?
std::optional<MappedLasso> brute_force_witness(
    const std::vector<ParityConstraint>& constraints, int max_stem,
    int max_loop) {
  std::optional<MappedLasso> found;
  for_each_lasso(constraints.front().automaton->alphabet().size(), max_stem,
                 max_loop, [&](const MappedLasso& w) {
                   if (found) return;
                   for (const ParityConstraint& c : constraints) {
                     bool accepted = dpw_accepts(*c.automaton, w);
                     if (accepted != (c.polarity == Polarity::RequireAccepting))
                       return;
                   }
                   found = w;
                 });
  return found;
}

}  // namespace

TEST_CASE("dcw_conjunction") {
  SUBCASE("universal member is an identity element") {
    Automaton l21 = gen_dcw_L(2, 1);
    Automaton conj = dcw_conjunction(universal_cobuchi(l21.alphabet()), l21);
    CHECK(conj.state_count() == l21.state_count());
    CHECK(dpw_equivalent(conj, l21).holds);
  }

  SUBCASE("two window automata") {
    Automaton conj = dcw_conjunction(gen_dcw_L(2, 1), gen_dcw_Lhat(2, 1));
    CHECK(conj.state_count() <= 4);
    CHECK(dpw_accepts(conj, parse_lasso("|a_3")));
    CHECK_FALSE(dpw_accepts(conj, parse_lasso("X_1|a_7")));
  }

  SUBCASE("idempotent on the language level") {
    Automaton member = gen_cocoa_C(2).member(1);
    CHECK(dpw_equivalent(dcw_conjunction(member, member), member).holds);
  }

  SUBCASE("errors") {
    std::mt19937_64 rng(1);
    Automaton ncw = test::random_ncw(rng, 2, 2);
    while (is_deterministic(ncw)) ncw = test::random_ncw(rng, 2, 2);
    CHECK_THROWS_AS(dcw_conjunction(ncw, ncw), Error);
    CHECK_THROWS_AS(dcw_conjunction(gen_dpw_P(1), gen_dpw_P(1)), Error);
    CHECK_THROWS_AS(
        dcw_conjunction(universal_cobuchi(test::small_alphabet(2)),
                        universal_cobuchi(test::small_alphabet(3))),
        Error);
    CHECK_THROWS_AS(dcw_conjunction(std::vector<Automaton>{}), Error);
  }
}

TEST_CASE("dcw_disjunction") {
  SUBCASE("empty-language member is an identity element") {
    Automaton l21 = gen_dcw_L(2, 1);
    Automaton disj = dcw_disjunction(empty_cobuchi(l21.alphabet()), l21);
    CHECK(dpw_equivalent(disj, l21).holds);
  }

  SUBCASE("two window automata") {
    Automaton disj = dcw_disjunction(gen_dcw_L(2, 2), gen_dcw_Lhat(2, 2));
    CHECK(dpw_accepts(disj, parse_lasso("|a_0")));
    CHECK(dpw_accepts(disj, parse_lasso("|a_7")));
    CHECK_FALSE(dpw_accepts(disj, parse_lasso("|X_1 a_0 a_7")));
  }

  SUBCASE("idempotent on the language level") {
    Automaton member = gen_cocoa_C(2).member(2);
    CHECK(dpw_equivalent(dcw_disjunction(member, member), member).holds);
  }
}

TEST_CASE("boolean operations: lasso agreement and size bounds") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 25; ++round) {
    Automaton a = test::random_dcw(rng, 1 + test::draw(rng, 4), 2);
    Automaton b = test::random_dcw(rng, 1 + test::draw(rng, 4), 2);
    Automaton conj = dcw_conjunction(a, b);
    Automaton disj = dcw_disjunction(a, b);
    CHECK(conj.state_count() <= a.state_count() * b.state_count());
    CHECK(disj.state_count() <= a.state_count() * b.state_count() * 2);
    for_each_lasso(2, 2, 3, [&](const MappedLasso& w) {
      bool in_a = dpw_accepts(a, w), in_b = dpw_accepts(b, w);
      CHECK(dpw_accepts(conj, w) == (in_a && in_b));
      CHECK(dpw_accepts(disj, w) == (in_a || in_b));
    });
  }
}

TEST_CASE("mh_determinize") {
  SUBCASE("deterministic inputs pass through untouched") {
    Automaton member = gen_cocoa_C(2).member(1);
    CHECK(same_structure(mh_determinize(member), member));
  }

  SUBCASE("guessing automaton for 'finitely many a or finitely many b'") {
    // state 0 bets on finitely many b, state 1 on finitely many a; a
    // rejecting step may move to either side
    Alphabet ab({"a", "b"});
    AutomatonBuilder b(ab, 2, 0);
    b.add_edge(0, "a", 2, 0);
    b.add_edge(0, "b", 1, 0).add_edge(0, "b", 1, 1);
    b.add_edge(1, "b", 2, 1);
    b.add_edge(1, "a", 1, 0).add_edge(1, "a", 1, 1);
    Automaton guess = std::move(b).build();
    REQUIRE_FALSE(is_deterministic(guess));

    Automaton det = mh_determinize(guess);
    CHECK(is_deterministic(det));
    CHECK(is_cobuchi(det));
    for_each_lasso(2, 2, 3, [&](const MappedLasso& w) {
      CHECK(dpw_accepts(det, w) == ncw_accepts(guess, w));
    });
  }

  SUBCASE("breakpoint state count stays within 3^n") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
      int n = 1 + test::draw(rng, 4);
      Automaton ncw = test::random_ncw(rng, n, 2);
      Automaton det = mh_determinize(ncw);
      CHECK(det.state_count() <= static_cast<int>(std::pow(3, n)));
      for_each_lasso(2, 2, 3, [&](const MappedLasso& w) {
        CHECK(dpw_accepts(det, w) == ncw_accepts(ncw, w));
      });
    }
  }

  SUBCASE("rejects non-co-Büchi input") {
    CHECK_THROWS_AS(mh_determinize(gen_dpw_P(1)), Error);
  }
}

TEST_CASE("cocoa_to_dpw") {
  SUBCASE("two-state chain members multiply out exactly") {
    CHECK(cocoa_to_dpw(gen_cocoa_C(2)).state_count() == 4);
    for (int k = 1; k <= 4; ++k)
      CHECK(cocoa_to_dpw(gen_cocoa_C(k)).state_count() == 1 << k);
  }

  SUBCASE("one accepting and one rejecting member yield color 1") {
    CHECK(dpw_color(cocoa_to_dpw(gen_cocoa_C(2)), parse_lasso("|x_2 y_1")) == 1);
  }

  SUBCASE("product color equals the chain color of the determinized members") {
    std::mt19937_64 rng(43);
    std::vector<Cocoa> chains = {gen_cocoa_C(2), gen_prop1_cocoa(3)};
    for (int round = 0; round < 6; ++round)
      chains.push_back(test::random_falling_chain(rng, 3, 3, 2));
    for (const Cocoa& chain : chains) {
      std::vector<Automaton> det;
      for (const Automaton& m : chain.members())
        det.push_back(mh_determinize(m));
      Cocoa det_chain(det);
      Automaton product = cocoa_to_dpw(chain);
      auto [max_stem, max_loop] = default_lasso_bounds(chain.alphabet().size());
      for_each_lasso(chain.alphabet().size(), max_stem, max_loop,
                     [&](const MappedLasso& w) {
                       CHECK(dpw_color(product, w) == cocoa_color(det_chain, w));
                     });
    }
  }
}

TEST_CASE("dpw_complement") {
  SUBCASE("double complement shifts colors but not acceptance") {
    Automaton p2 = gen_dpw_P(2);
    Automaton twice = dpw_complement(dpw_complement(p2));
    for_each_lasso(p2.alphabet().size(), 1, 2, [&](const MappedLasso& w) {
      CHECK(dpw_color(twice, w) == dpw_color(p2, w) + 2);
      CHECK(dpw_accepts(twice, w) == dpw_accepts(p2, w));
    });
  }

  SUBCASE("single-state min-inf automaton") {
    Automaton complement = dpw_complement(gen_prop1_dpw(2));
    CHECK(dpw_color(complement, parse_lasso("|1")) == 2);
    CHECK(dpw_accepts(complement, parse_lasso("|1")));
  }

  SUBCASE("flips acceptance everywhere") {
    Automaton p2 = gen_dpw_P(2);
    Automaton complement = dpw_complement(p2);
    for_each_lasso(p2.alphabet().size(), 1, 2, [&](const MappedLasso& w) {
      CHECK(dpw_accepts(complement, w) == !dpw_accepts(p2, w));
    });
  }
}

TEST_CASE("multi_parity_witness") {
  SUBCASE("finds an accepted lasso of the window automaton") {
    Automaton p2 = gen_dpw_P(2);
    auto w = multi_parity_witness({{&p2, Polarity::RequireAccepting}});
    REQUIRE(w.has_value());
    CHECK(dpw_accepts(p2, *w));
  }

  SUBCASE("contradictory constraints have no witness") {
    Automaton p2 = gen_dpw_P(2);
    CHECK_FALSE(multi_parity_witness({{&p2, Polarity::RequireAccepting},
                                      {&p2, Polarity::RequireRejecting}}));
  }

  SUBCASE("a language and its complement do not intersect") {
    Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
    Automaton complement = dpw_complement(product);
    CHECK_FALSE(multi_parity_witness({{&product, Polarity::RequireAccepting},
                                      {&complement, Polarity::RequireAccepting}}));
  }

  SUBCASE("agrees with brute force on all 1-state pairs") {
    // every pair of one-state two-letter automata with colors <= 2
    std::vector<Automaton> all;
    for (int ca = 0; ca <= 2; ++ca)
      for (int cb = 0; cb <= 2; ++cb) {
        AutomatonBuilder b(test::small_alphabet(2), 1, 0);
        b.add_edge(0, 0, ca, 0).add_edge(0, 1, cb, 0);
        all.push_back(std::move(b).build());
      }
    for (const Automaton& a : all)
      for (const Automaton& b : all) {
        std::vector<ParityConstraint> cs = {{&a, Polarity::RequireAccepting},
                                            {&b, Polarity::RequireRejecting}};
        auto smart = multi_parity_witness(cs);
        auto brute = brute_force_witness(cs, 4, 6);
        CHECK(smart.has_value() == brute.has_value());
      }
  }

  SUBCASE("agrees with brute force on sampled 2-state pairs") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 400; ++round) {
      Automaton a = test::random_dpw(rng, 2, 2, 2);
      Automaton b = test::random_dpw(rng, 2, 2, 2);
      Polarity pa = round % 2 ? Polarity::RequireAccepting
                              : Polarity::RequireRejecting;
      Polarity pb = round % 3 ? Polarity::RequireRejecting
                              : Polarity::RequireAccepting;
      std::vector<ParityConstraint> cs = {{&a, pa}, {&b, pb}};
      auto smart = multi_parity_witness(cs);
      auto brute = brute_force_witness(cs, 4, 6);
      REQUIRE(smart.has_value() == brute.has_value());
      if (smart) {
        CHECK(dpw_accepts(a, *smart) == (pa == Polarity::RequireAccepting));
        CHECK(dpw_accepts(b, *smart) == (pb == Polarity::RequireAccepting));
      }
    }
  }

  SUBCASE("witnesses are reproducible") {
    Automaton p2 = gen_dpw_P(2);
    auto w1 = multi_parity_witness({{&p2, Polarity::RequireRejecting}});
    auto w2 = multi_parity_witness({{&p2, Polarity::RequireRejecting}});
    REQUIRE(w1.has_value());
    CHECK(format_lasso(*w1) == format_lasso(*w2));
  }
}

TEST_CASE("dpw_contains and dpw_equivalent") {
  Cocoa c2 = gen_cocoa_C(2);
  Automaton member1 = mh_determinize(c2.member(1));
  Automaton member2 = mh_determinize(c2.member(2));

  CHECK(dpw_contains(member1, member1).holds);
  CHECK(dpw_contains(member2, member1).holds);

  ContainsResult wrong_way = dpw_contains(member1, member2);
  REQUIRE_FALSE(wrong_way.holds);
  REQUIRE(wrong_way.witness.has_value());
  CHECK(dpw_accepts(member1, *wrong_way.witness));
  CHECK_FALSE(dpw_accepts(member2, *wrong_way.witness));

  SUBCASE("two routes to the same window language") {
    for (int k = 1; k <= 2; ++k) {
      std::vector<Automaton> levels;
      for (int i = 1; i <= k; ++i) levels.push_back(gen_dcw_L(k, i));
      Automaton via_chain = cocoa_to_dpw(Cocoa(levels));
      CHECK(dpw_equivalent(gen_dpw_P(k), via_chain).holds);
    }
  }

  SUBCASE("an automaton is never equivalent to its complement") {
    Automaton p1 = gen_dpw_P(1);
    ContainsResult r = dpw_equivalent(p1, dpw_complement(p1));
    CHECK_FALSE(r.holds);
    CHECK(r.witness.has_value());
  }

  SUBCASE("identity rename preserves equivalence") {
    Automaton p1 = gen_dpw_P(1);
    std::vector<std::pair<std::string, std::string>> identity;
    for (const std::string& s : p1.alphabet().symbols())
      identity.emplace_back(s, s);
    CHECK(dpw_equivalent(p1, rename_letters(p1, identity)).holds);
  }
}

TEST_CASE("residual_partition") {
  SUBCASE("chain products have a single residual") {
    for (int k = 1; k <= 3; ++k)
      CHECK(residual_partition(cocoa_to_dpw(gen_cocoa_C(k))).class_count() == 1);
  }

  SUBCASE("window automata distinguish every parity vector") {
    for (int k = 1; k <= 3; ++k)
      CHECK(residual_partition(gen_dpw_P(k)).class_count() == 1 << k);
  }

  SUBCASE("one state, one class") {
    CHECK(residual_partition(gen_prop1_dpw(4)).class_count() == 1);
  }

  SUBCASE("class count survives renaming and restriction") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 10; ++round) {
      Automaton aut = test::random_dpw(rng, 1 + test::draw(rng, 5), 3, 3);
      int base = residual_partition(aut).class_count();
      std::vector<std::pair<std::string, std::string>> rot = {
          {"a", "b"}, {"b", "c"}, {"c", "a"}};
      CHECK(residual_partition(rename_letters(aut, rot)).class_count() == base);
      CHECK(residual_partition(reachable_restrict(aut)).class_count() == base);
    }
  }

  SUBCASE("separating witnesses check out") {
    Automaton p2 = gen_dpw_P(2);
    ResidualPartition part = residual_partition(p2);
    for (const auto& sep : part.witnesses) {
      // re-root the automaton at both representatives and compare
      AutomatonBuilder a(p2.alphabet(), p2.state_count(),
                         part.classes[sep.class_a].front());
      AutomatonBuilder b(p2.alphabet(), p2.state_count(),
                         part.classes[sep.class_b].front());
      for (int q = 0; q < p2.state_count(); ++q)
        for (int x = 0; x < p2.alphabet().size(); ++x)
          for (const Edge& e : p2.edges(q, x)) {
            a.add_edge(q, x, e.color, e.target);
            b.add_edge(q, x, e.color, e.target);
          }
      CHECK(dpw_accepts(std::move(a).build(), sep.witness));
      CHECK_FALSE(dpw_accepts(std::move(b).build(), sep.witness));
    }
  }
}
