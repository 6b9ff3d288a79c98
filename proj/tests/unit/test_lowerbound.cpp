#include <doctest.h>

#include "cocoakit/families.hpp"
#include "cocoakit/lasso.hpp"
#include "cocoakit/lowerbound.hpp"
#include "cocoakit/ops.hpp"
#include "test_support.hpp"

using namespace cocoakit;

namespace {

// redirect one x_3 self-loop of the k=2 chain product so the two letter-set
// halves collapse into overlapping components
Automaton corrupted_product_k2() {
  Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
  const Alphabet& ab = product.alphabet();
  int x3 = ab.require("x_3");
  AutomatonBuilder b(ab, product.state_count(), product.initial());
  for (int q = 0; q < product.state_count(); ++q)
    for (int x = 0; x < ab.size(); ++x)
      for (const Edge& e : product.edges(q, x)) {
        int target = e.target;
        if (q == 0 && x == x3) target = 3;  // jump into the other half
        b.add_edge(q, x, e.color, target);
      }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("closed_under") {
  Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
  const Alphabet& ab = product.alphabet();

  auto terminals = terminal_sccs(product);
  REQUIRE(terminals.size() == 1);
  CHECK(closed_under(product, terminals[0],
                     def2_level_letters(ab, 1, 1, 2)));
  CHECK(closed_under(product, terminals[0], {}));

  // dropping the x_1/x_2 transitions pins the first two members; the result
  // is closed under everything that remains
  std::vector<int> rest = {ab.require("x_3"), ab.require("y_1"),
                           ab.require("y_2"), ab.require("y_3")};
  auto sub = scc_decompose(product, rest);
  bool found = false;
  for (const Scc& scc : sub)
    if (closed_under(product, scc, rest)) found = true;
  CHECK(found);
}

TEST_CASE("lemma1_split") {
  Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
  Scc whole = terminal_sccs(product).front();

  SUBCASE("splits the product into its two halves") {
    SplitResult split = lemma1_split(product, whole, 1, 1, 2);
    auto* pair = std::get_if<std::pair<Scc, Scc>>(&split);
    REQUIRE(pair != nullptr);
    CHECK(pair->first.states.size() == 2);
    CHECK(pair->second.states.size() == 2);
    std::vector<int> shared;
    std::set_intersection(pair->first.states.begin(), pair->first.states.end(),
                          pair->second.states.begin(),
                          pair->second.states.end(),
                          std::back_inserter(shared));
    CHECK(shared.empty());
    CHECK(closed_under(product, pair->first,
                       def2_level_letters(product.alphabet(), 2, 1, 2)));
    CHECK(closed_under(product, pair->second,
                       def2_level_letters(product.alphabet(), 1, 2, 2)));
  }

  SUBCASE("collapsed halves overlap") {
    Automaton corrupted = corrupted_product_k2();
    Scc all = terminal_sccs(corrupted).front();
    SplitResult split = lemma1_split(corrupted, all, 1, 1, 2);
    auto* violation = std::get_if<LowerBoundViolation>(&split);
    REQUIRE(violation != nullptr);
    CHECK(violation->kind == LowerBoundViolation::Kind::Overlap);
    CHECK_FALSE(violation->states.empty());
  }

  SUBCASE("beyond the base level there is nothing to split") {
    CHECK_THROWS_AS(lemma1_split(product, whole, 3, 1, 2), Error);
  }

  SUBCASE("unclosed state sets are flagged") {
    Scc not_closed{{0}, {}};
    SplitResult split = lemma1_split(product, not_closed, 1, 1, 2);
    auto* violation = std::get_if<LowerBoundViolation>(&split);
    REQUIRE(violation != nullptr);
    CHECK(violation->kind == LowerBoundViolation::Kind::NotClosed);
  }
}

TEST_CASE("certify_lower_bound") {
  SUBCASE("products of the two-state chains are tight") {
    for (int k = 1; k <= 4; ++k) {
      Automaton product = cocoa_to_dpw(gen_cocoa_C(k));
      CertifyResult result = certify_lower_bound(product, k);
      auto* cert = std::get_if<LowerBoundCertificate>(&result);
      REQUIRE(cert != nullptr);
      CHECK(cert->bound == 1 << k);
      CHECK(cert->bound == product.state_count());
      CHECK(verify_certificate(product, *cert).empty());
    }
  }

  SUBCASE("corruption is caught as an overlap") {
    Automaton corrupted = corrupted_product_k2();
    CertifyResult result = certify_lower_bound(corrupted, 2);
    auto* violation = std::get_if<LowerBoundViolation>(&result);
    REQUIRE(violation != nullptr);
    CHECK(violation->kind == LowerBoundViolation::Kind::Overlap);

    // and the corrupted automaton indeed recognizes a different language
    ContainsResult equiv =
        dpw_equivalent(corrupted, cocoa_to_dpw(gen_cocoa_C(2)));
    CHECK_FALSE(equiv.holds);
    CHECK(equiv.witness.has_value());
  }

  SUBCASE("padding with duplicate states never raises the bound") {
    Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
    int y1 = product.alphabet().require("y_1");
    Automaton padded = test::duplicate_state(product, 0, 1, y1);
    REQUIRE(padded.state_count() == 5);
    CHECK(dpw_equivalent(padded, product).holds);
    CertifyResult result = certify_lower_bound(padded, 2);
    auto* cert = std::get_if<LowerBoundCertificate>(&result);
    REQUIRE(cert != nullptr);
    CHECK(cert->bound == 4);
    CHECK(verify_certificate(padded, *cert).empty());
  }

  SUBCASE("wrong alphabet is rejected") {
    CHECK_THROWS_AS(certify_lower_bound(gen_dpw_P(2), 2), Error);
    CHECK_THROWS_AS(certify_lower_bound(cocoa_to_dpw(gen_cocoa_C(2)), 3),
                    Error);
  }
}

TEST_CASE("certificate serialization round-trips and verifies") {
  Automaton product = cocoa_to_dpw(gen_cocoa_C(2));
  CertifyResult result = certify_lower_bound(product, 2);
  auto* cert = std::get_if<LowerBoundCertificate>(&result);
  REQUIRE(cert != nullptr);

  std::string text = serialize_certificate(*cert);
  LowerBoundCertificate parsed = parse_certificate(text);
  CHECK(parsed.k == cert->k);
  CHECK(parsed.bound == cert->bound);
  REQUIRE(parsed.nodes.size() == cert->nodes.size());
  CHECK(verify_certificate(product, parsed).empty());
  CHECK(serialize_certificate(parsed) == text);

  SUBCASE("tampered certificates are refused") {
    LowerBoundCertificate wrong_bound = parsed;
    wrong_bound.bound = 5;
    CHECK_FALSE(verify_certificate(product, wrong_bound).empty());

    LowerBoundCertificate overlapping = parsed;
    // force the two root children onto the same states
    overlapping.nodes[overlapping.nodes[0].child_y].states =
        overlapping.nodes[overlapping.nodes[0].child_x].states;
    CHECK_FALSE(verify_certificate(product, overlapping).empty());

    LowerBoundCertificate bad_letters = parsed;
    bad_letters.nodes[0].states = {0};  // not closed under the full alphabet
    CHECK_FALSE(verify_certificate(product, bad_letters).empty());

    CHECK_THROWS_AS(parse_certificate("(bogus)"), Error);
  }
}
