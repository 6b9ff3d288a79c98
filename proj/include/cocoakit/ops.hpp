#ifndef COCOAKIT_OPS_HPP
#define COCOAKIT_OPS_HPP

#include <optional>
#include <vector>

#include "cocoakit/automaton.hpp"
#include "cocoakit/chain.hpp"
#include "cocoakit/lasso_word.hpp"

namespace cocoakit {

/// Deterministic co-Büchi product for the intersection of the member
/// languages: a transition is accepting (color 2) iff every component
/// transition is. Restricted to reachable state tuples, so the result has at
/// most the product of the member sizes.
Automaton dcw_conjunction(const std::vector<Automaton>& members);
Automaton dcw_conjunction(const Automaton& a, const Automaton& b);

/// Deterministic co-Büchi automaton for the union of the member languages,
/// over (state tuple, round-robin pointer). The transition carries the
/// pointed member's color; a rejecting transition of the pointed member
/// advances the pointer. At most the product of the sizes times the member
/// count many states.
Automaton dcw_disjunction(const std::vector<Automaton>& members);
Automaton dcw_disjunction(const Automaton& a, const Automaton& b);

/// Breakpoint determinization of a co-Büchi automaton. States are pairs
/// (S, B) with B ⊆ S; a transition is accepting iff some obligation state in
/// B survives along an accepting edge, otherwise the obligation resets to the
/// full successor set (a "breakpoint", color 1). At most 3^n reachable
/// states. Deterministic inputs are returned unchanged.
Automaton mh_determinize(const Automaton& ncw);

/// Deterministic parity automaton for the chain's language: the reachable
/// product of the determinized members where a transition's color is the
/// smallest 0-based index whose member takes a rejecting transition, capped
/// at the member count. A word of chain color j hence sees color j
/// infinitely often and smaller colors only finitely often, so the product
/// recognizes every word with its chain color.
Automaton cocoa_to_dpw(const Cocoa& chain);

/// Complement of a deterministic parity automaton: same structure with every
/// transition color incremented by one.
Automaton dpw_complement(const Automaton& dpw);

enum class Polarity { RequireAccepting, RequireRejecting };

/// One side of a joint parity witness query. Non-owning.
struct ParityConstraint {
  const Automaton* automaton;
  Polarity polarity;
};

/// Searches for a lasso accepted by every require-accepting automaton and
/// rejected by every require-rejecting one, or std::nullopt if no such
/// ω-word exists. All automata must be deterministic over one alphabet.
///
/// Method: explore the joint product; for each tuple of target dominating
/// colors (right parity per constraint, enumerated by increasing sum),
/// restrict to transitions whose per-automaton colors are componentwise at
/// least the targets, decompose into SCCs, and succeed on a reachable SCC
/// containing a transition achieving every target color exactly. The stem is
/// the breadth-first path to the SCC (letters tried in alphabet order); the
/// loop visits one exact-target transition per constraint and closes the
/// cycle.
std::optional<LassoWord> multi_parity_witness(
    const std::vector<ParityConstraint>& constraints);

struct ContainsResult {
  bool holds = false;
  std::optional<LassoWord> witness;  // set iff !holds
};

/// L(a) ⊆ L(b)? On failure the witness is accepted by a and rejected by b.
ContainsResult dpw_contains(const Automaton& a, const Automaton& b);

/// Two-sided containment; the witness comes from the failing side.
ContainsResult dpw_equivalent(const Automaton& a, const Automaton& b);

/// Partition of the reachable states of a deterministic automaton into
/// classes of language-equivalent states. In a deterministic automaton the
/// residual language after a prefix is the language of the state reached, so
/// class_count equals the number of residual languages.
struct ResidualPartition {
  struct SeparatingWitness {
    int class_a;
    int class_b;
    LassoWord witness;  // accepted from class_a's representative only
  };

  std::vector<std::vector<int>> classes;  // disjoint, sorted state sets
  std::vector<SeparatingWitness> witnesses;

  int class_count() const { return static_cast<int>(classes.size()); }
};

ResidualPartition residual_partition(const Automaton& dpw);

}  // namespace cocoakit

#endif
