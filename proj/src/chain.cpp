#include "cocoakit/chain.hpp"

#include "cocoakit/lasso.hpp"
#include "cocoakit/ops.hpp"

namespace cocoakit {

Cocoa::Cocoa(std::vector<Automaton> members) : members_(std::move(members)) {
  if (members_.empty())
    throw Error(ErrorCode::Invalid, "a chain needs at least one member");
  for (size_t i = 0; i < members_.size(); ++i) {
    const Automaton& a = members_[i];
    if (a.alphabet() != members_.front().alphabet())
      throw Error(ErrorCode::AlphabetMismatch,
                  "chain member " + std::to_string(i + 1) +
                      " uses a different alphabet");
    if (!is_cobuchi(a))
      throw Error(ErrorCode::NotCobuchi,
                  "chain member " + std::to_string(i + 1) +
                      " has colors outside {1,2}");
    if (!validate_automaton(a).empty())
      throw Error(ErrorCode::Invalid,
                  "chain member " + std::to_string(i + 1) +
                      " violates automaton invariants");
  }
}

std::string ChainDiagnostic::message() const {
  std::string out = kind == ChainDiagnosticKind::NotContained ? "NOT_CONTAINED"
                                                              : "NOT_STRICT";
  out += " at " + std::to_string(level);
  if (witness) out += " witness=" + format_lasso(*witness);
  return out;
}

std::vector<ChainDiagnostic> chain_validate(const Cocoa& chain) {
  for (int level = 1; level <= chain.member_count(); ++level)
    if (!is_deterministic(chain.member(level)))
      throw Error(ErrorCode::NotDeterministic,
                  "chain member " + std::to_string(level) +
                      " is nondeterministic; determinize first");

  std::vector<ChainDiagnostic> out;
  for (int level = 1; level < chain.member_count(); ++level) {
    const Automaton& upper = chain.member(level);
    const Automaton& lower = chain.member(level + 1);
    ContainsResult contained = dpw_contains(lower, upper);
    if (!contained.holds) {
      out.push_back({ChainDiagnosticKind::NotContained, level,
                     std::move(contained.witness)});
      continue;
    }
    auto strict_witness = multi_parity_witness(
        {{&upper, Polarity::RequireAccepting},
         {&lower, Polarity::RequireRejecting}});
    if (!strict_witness)
      out.push_back({ChainDiagnosticKind::NotStrict, level, std::nullopt});
  }
  return out;
}

Cocoa cocoa_complement(const Cocoa& chain) {
  Automaton universal = universal_cobuchi(chain.alphabet());
  Automaton head = mh_determinize(chain.member(1));
  bool head_universal = dpw_equivalent(head, universal).holds;

  std::vector<Automaton> members;
  if (head_universal) {
    if (chain.member_count() == 1)
      return Cocoa({empty_cobuchi(chain.alphabet())});
    members.assign(chain.members().begin() + 1, chain.members().end());
  } else {
    members.reserve(chain.member_count() + 1);
    members.push_back(std::move(universal));
    members.insert(members.end(), chain.members().begin(),
                   chain.members().end());
  }
  return Cocoa(std::move(members));
}

int cocoa_size(const Cocoa& chain) {
  int total = 0;
  for (const Automaton& a : chain.members()) total += a.state_count();
  return total;
}

Automaton universal_cobuchi(const Alphabet& alphabet) {
  AutomatonBuilder b(alphabet, 1, 0);
  for (int x = 0; x < alphabet.size(); ++x) b.add_edge(0, x, 2, 0);
  return std::move(b).build();
}

Automaton empty_cobuchi(const Alphabet& alphabet) {
  AutomatonBuilder b(alphabet, 1, 0);
  for (int x = 0; x < alphabet.size(); ++x) b.add_edge(0, x, 1, 0);
  return std::move(b).build();
}

}  // namespace cocoakit
