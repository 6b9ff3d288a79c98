#ifndef COCOAKIT_CHAIN_HPP
#define COCOAKIT_CHAIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "cocoakit/automaton.hpp"
#include "cocoakit/lasso_word.hpp"

namespace cocoakit {

/// Ordered chain of co-Büchi automata over one shared alphabet. Construction
/// checks that every member is a valid co-Büchi automaton and that the
/// alphabets agree; the strictly falling language property is checked
/// separately by chain_validate (it needs deterministic members).
///
/// A word's chain color is the highest 1-based member index accepting it
/// (0 if none); the word belongs to the chain's language iff that color is
/// even. Members may be nondeterministic (e.g. history-deterministic).
class Cocoa {
 public:
  explicit Cocoa(std::vector<Automaton> members);

  int member_count() const { return static_cast<int>(members_.size()); }
  /// 1-based access matching the chain-level numbering.
  const Automaton& member(int level) const { return members_.at(level - 1); }
  const std::vector<Automaton>& members() const { return members_; }
  const Alphabet& alphabet() const { return members_.front().alphabet(); }

 private:
  std::vector<Automaton> members_;
};

enum class ChainDiagnosticKind { NotContained, NotStrict };

struct ChainDiagnostic {
  ChainDiagnosticKind kind;
  int level;  // 1-based index of the earlier member of the offending pair
  std::optional<LassoWord> witness;

  std::string message() const;
};

/// Checks the falling-chain property: for each consecutive pair, containment
/// L(member_{i+1}) ⊆ L(member_i) and strictness witnessed by a separating
/// lasso. Requires deterministic members (determinize with mh_determinize
/// first); throws ErrorCode::NotDeterministic otherwise.
std::vector<ChainDiagnostic> chain_validate(const Cocoa& chain);

/// Complement by chain shift: drops a universal first member, otherwise
/// prepends the one-state all-accepting automaton. For every lasso the result
/// accepts iff the input chain rejects.
Cocoa cocoa_complement(const Cocoa& chain);

/// Sum of the member state counts.
int cocoa_size(const Cocoa& chain);

/// One-state co-Büchi automaton accepting every word (all colors 2).
Automaton universal_cobuchi(const Alphabet& alphabet);

/// One-state co-Büchi automaton accepting nothing (all colors 1).
Automaton empty_cobuchi(const Alphabet& alphabet);

}  // namespace cocoakit

#endif
