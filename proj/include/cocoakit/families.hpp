#ifndef COCOAKIT_FAMILIES_HPP
#define COCOAKIT_FAMILIES_HPP

#include <vector>

#include "cocoakit/automaton.hpp"
#include "cocoakit/chain.hpp"
#include "cocoakit/lasso_word.hpp"

namespace cocoakit {

/// Level pair (i, j) under the componentwise partial order.
struct IndexPair {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// {1..k} — used by the min-inf family.
Alphabet prop1_alphabet(int k);
/// {x_1..x_{k+1}, y_1..y_{k+1}} — used by the two-state chain family.
Alphabet def2_alphabet(int k);
/// {X_1..X_k, Y_1..Y_k, a_0..a_{4k-1}} — used by the window families.
Alphabet def3_alphabet(int k);

/// One state, a self-loop of color m for every letter m in {1..k}; accepts
/// the words whose least infinitely recurring letter is even.
Automaton gen_prop1_dpw(int k);

/// k one-state chain members; member i accepts the words whose letters below
/// i recur only finitely often, so the chain color of a word equals its
/// least infinitely recurring letter.
Cocoa gen_prop1_cocoa(int k);

/// k two-state members over the x/y alphabet; member j accepts the words in
/// which the letters x_1..x_j or the letters y_1..y_j occur only finitely
/// often. Every member is deterministic.
Cocoa gen_cocoa_C(int k);

/// Inf-set oracle for the members of gen_cocoa_C: true iff the loop avoids
/// {x_1..x_j} or avoids {y_1..y_j}.
bool lasso_in_C_member(int k, int j, const LassoWord& w);

/// Two-state window automaton tracking the parity of X_i: in the even state
/// the letters a_0..a_{4k-2i+1} are accepting, in the odd state a_0..a_{4k-2i};
/// X_i flips the state and rejects; everything else rejects. Level 0 is the
/// one-state universal automaton.
Automaton gen_dcw_L(int k, int i);
/// Mirror of gen_dcw_L with Y_j parity and windows a_{2j-2}..a_{4k-1} (even)
/// and a_{2j-1}..a_{4k-1} (odd).
Automaton gen_dcw_Lhat(int k, int j);

/// Window-arithmetic oracles for the two families above, independent of the
/// automaton construction. Level 0 is always true.
bool lasso_in_L(int k, int i, const LassoWord& w);
bool lasso_in_Lhat(int k, int j, const LassoWord& w);

/// Componentwise-greatest (i, j) with lasso_in_L(k,i,w) and
/// lasso_in_Lhat(k,j,w); the satisfied pairs are exactly its downward
/// closure.
IndexPair greatest_pair(int k, const LassoWord& w);

/// Explicit 2^k-state parity automaton over the window alphabet: states are
/// the X-parity bit vectors, upper-case letters have color 0, a_{4k-2i} has
/// color i, a_{4k-2i+1} has color i or i-1 depending on bit i, everything
/// else color k.
Automaton gen_dpw_P(int k);
/// gen_dpw_P with x/y roles swapped and a_m renamed to a_{4k-1-m}.
Automaton gen_dpw_Phat(int k);

/// Level-u pair set of the grouped intersection chain: for even u the pairs
/// with even coordinates summing to u, for odd u the pairs with an odd
/// coordinate and u <= i+j <= u+1. Sorted ascending.
std::vector<IndexPair> gamma(int k, int u);

/// Componentwise-maximal elements.
std::vector<IndexPair> nondominated(std::vector<IndexPair> pairs);

/// 2k-member chain for the intersection of the two window languages;
/// member u is the disjunction over all pairs in gamma(k, u) of the
/// conjunction of the corresponding window automata. An empty pair set
/// yields the one-state empty-language member.
Cocoa gen_cocoa_theorem2(int k);

/// Size-comparison variant of gen_cocoa_theorem2 built from the
/// componentwise-maximal pairs only. Its level languages can differ from the
/// full chain's at odd levels; it is reported, never used as the reference.
Cocoa gen_cocoa_theorem2_nondominated(int k);

/// Hand-built 4-state parity automaton over {a,b,c} for the language of
/// words with infinitely many a, plus the words with finitely many a where
/// eventually every b is immediately followed by a c and an even total
/// number of a forces infinitely many b.
Automaton gen_example31_dpw();

/// Brute-force evaluator for the same language, deciding the prose
/// conditions directly on the stem and loop.
bool lasso_in_example31(const LassoWord& w);

}  // namespace cocoakit

#endif
