#ifndef COCOAKIT_AUTOMATON_HPP
#define COCOAKIT_AUTOMATON_HPP

#include <span>
#include <string>
#include <vector>

#include "cocoakit/alphabet.hpp"
#include "cocoakit/errors.hpp"

namespace cocoakit {

/// One successor entry of a (state, symbol) cell.
struct Edge {
  int target = 0;
  int color = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Colored omega-automaton with transition-based acceptance. States are dense
/// integers 0..state_count-1; colors are unbounded non-negative integers, the
/// co-Büchi subclass (colors within {1,2}) is a computed property, never a
/// declared one. Values are immutable after construction and safe to share
/// across threads.
///
/// Invariants that construction enforces: state/initial/target bounds,
/// non-negative colors, duplicate (target, color) entries collapsed.
/// Input-completeness and per-cell color uniformity are reported by
/// validate_automaton instead, so partially broken automata can be
/// represented and diagnosed.
class Automaton {
 public:
  Automaton(Alphabet alphabet, int state_count, int initial,
            std::vector<std::vector<Edge>> entries,
            std::vector<std::string> labels = {});

  const Alphabet& alphabet() const { return alphabet_; }
  int state_count() const { return state_count_; }
  int initial() const { return initial_; }

  std::span<const Edge> edges(int state, int symbol) const {
    return entries_[cell(state, symbol)];
  }

  /// Color of the (state, symbol) cell. Meaningful for cells with uniform
  /// colors; returns the first entry's color and -1 for empty cells.
  int color_at(int state, int symbol) const {
    const auto& es = entries_[cell(state, symbol)];
    return es.empty() ? -1 : es.front().color;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int state) const {
    return labels_.empty() ? std::string() : labels_.at(state);
  }

  /// Distinct transition colors, ascending.
  std::vector<int> color_set() const;
  int max_color() const;

 private:
  int cell(int state, int symbol) const {
    return state * alphabet_.size() + symbol;
  }

  Alphabet alphabet_;
  int state_count_;
  int initial_;
  std::vector<std::vector<Edge>> entries_;
  std::vector<std::string> labels_;
};

/// Incremental construction helper; build() collapses duplicate entries.
class AutomatonBuilder {
 public:
  AutomatonBuilder(Alphabet alphabet, int state_count, int initial);

  AutomatonBuilder& add_edge(int src, int symbol, int color, int target);
  AutomatonBuilder& add_edge(int src, std::string_view symbol, int color,
                             int target);
  AutomatonBuilder& set_label(int state, std::string label);

  Automaton build() &&;

 private:
  Alphabet alphabet_;
  int state_count_;
  int initial_;
  std::vector<std::vector<Edge>> entries_;
  std::vector<std::string> labels_;
  bool any_label_ = false;
};

enum class DiagnosticKind { InputIncomplete, NonUniformColor };

/// A violated automaton invariant at one (state, symbol) cell.
struct Diagnostic {
  DiagnosticKind kind;
  int state;
  int symbol;

  std::string message(const Alphabet& alphabet) const;
};

/// Empty result iff all Automaton invariants hold.
std::vector<Diagnostic> validate_automaton(const Automaton& aut);

/// True iff every (state, symbol) cell has exactly one successor entry.
bool is_deterministic(const Automaton& aut);

/// True iff every transition color lies in {1, 2}.
bool is_cobuchi(const Automaton& aut);

/// Sub-automaton induced by the states reachable from the initial state.
/// State identifiers are re-densified preserving their relative order; the
/// language is unchanged. Idempotent.
Automaton reachable_restrict(const Automaton& aut);

/// Relabels transitions under a bijection on the alphabet symbols; the
/// resulting language is the image of the original one under the bijection.
/// Throws ErrorCode::NotBijective if the mapping misses or duplicates a
/// symbol.
Automaton rename_letters(
    const Automaton& aut,
    const std::vector<std::pair<std::string, std::string>>& mapping);

struct Transition {
  int src = 0;
  int symbol = 0;
  int target = 0;
  int color = 0;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Strongly connected component: a state set plus all transitions of the host
/// automaton (over the considered letters) connecting them. Every listed
/// transition lies on a path between some ordered state pair.
struct Scc {
  std::vector<int> states;            // sorted ascending
  std::vector<Transition> transitions;  // sorted

  bool contains(int state) const;
};

/// Maximal SCCs of the transition graph restricted to `allowed_symbols`
/// (symbol indices). Trivial single-state components without a self-loop are
/// excluded. Components are ordered by their least state.
std::vector<Scc> scc_decompose(const Automaton& aut,
                               const std::vector<int>& allowed_symbols);
std::vector<Scc> scc_decompose(const Automaton& aut);

/// SCCs over the full alphabet without outgoing transitions. Non-empty for
/// every input-complete automaton.
std::vector<Scc> terminal_sccs(const Automaton& aut);

/// Structural equality ignoring labels: same alphabet, state count, initial
/// state and transition entries.
bool same_structure(const Automaton& a, const Automaton& b);

}  // namespace cocoakit

#endif
