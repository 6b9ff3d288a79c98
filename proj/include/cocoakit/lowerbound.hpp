#ifndef COCOAKIT_LOWERBOUND_HPP
#define COCOAKIT_LOWERBOUND_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cocoakit/automaton.hpp"

namespace cocoakit {

/// Machine-checkable certificate that a parity automaton over the x/y chain
/// alphabet has at least 2^k states: a binary tree of nested, letter-closed,
/// pairwise-disjoint state sets. A node at level (i, j) is closed under the
/// letters {x_i..x_{k+1}, y_j..y_{k+1}}; its children refine it at levels
/// (max(i,j)+1, j) and (i, max(i,j)+1). Nodes with max(i, j) > k are leaves;
/// the bound is the leaf count.
struct LowerBoundCertificate {
  struct Node {
    std::vector<int> states;  // sorted, non-empty
    int level_i = 1;
    int level_j = 1;
    int child_x = -1;  // indices into nodes, -1 for leaves
    int child_y = -1;
  };

  int k = 0;
  int bound = 0;
  std::vector<Node> nodes;  // preorder, nodes[0] is the root at level (1,1)
};

/// Structural refutation discovered while building a certificate. An overlap
/// of the two refined components proves that the automaton does not
/// recognize the level-k chain language.
struct LowerBoundViolation {
  enum class Kind { Overlap, NotClosed };

  Kind kind;
  int level_i = 0;
  int level_j = 0;
  std::vector<int> states;  // shared states (Overlap) or the escaping ones

  std::string message() const;
};

/// Symbol indices of {x_i..x_{k+1}, y_j..y_{k+1}} in `alphabet`.
std::vector<int> def2_level_letters(const Alphabet& alphabet, int i, int j,
                                    int k);

/// True iff every transition from an scc state on one of the given symbols
/// targets an scc state again.
bool closed_under(const Automaton& dpw, const Scc& scc,
                  const std::vector<int>& symbols);

/// Refines an SCC closed under the level-(i,j) letters into the terminal
/// components of the two sub-letter graphs (x-side and y-side). Both results
/// are closed under their sub-letter sets; they are disjoint whenever the
/// automaton recognizes the level-k chain language. Requires
/// max(i, j) <= k (throws ErrorCode::NotApplicable beyond the base).
using SplitResult = std::variant<std::pair<Scc, Scc>, LowerBoundViolation>;
SplitResult lemma1_split(const Automaton& dpw, const Scc& scc, int i, int j,
                         int k);

/// Builds the full certificate starting from a terminal SCC of the automaton
/// at level (1,1), splitting recursively while max(i, j) <= k. When every
/// split succeeds the bound is 2^k. The caller is responsible for checking
/// language equivalence separately; the certifier only needs the structure.
using CertifyResult = std::variant<LowerBoundCertificate, LowerBoundViolation>;
CertifyResult certify_lower_bound(const Automaton& dpw, int k);

/// Independent re-check of all certificate invariants (letter closure, child
/// nesting and disjointness, reachability, levels, leaf count). Uses only
/// closed_under and set computations, none of the construction machinery.
/// Returns human-readable problems; empty means the certificate is valid.
std::vector<std::string> verify_certificate(const Automaton& dpw,
                                            const LowerBoundCertificate& cert);

/// Nested s-expression text form, e.g.
///   (lower-bound-certificate (k 1) (bound 2)
///     (node (level 1 1) (states 0 1) (letters x_1 x_2 y_1 y_2)
///       (node (level 2 1) (states 0) (letters x_2 y_1 y_2))
///       (node (level 1 2) (states 1) (letters x_1 x_2 y_2))))
std::string serialize_certificate(const LowerBoundCertificate& cert);
LowerBoundCertificate parse_certificate(std::string_view text);

}  // namespace cocoakit

#endif
