#ifndef COCOAKIT_IO_HPP
#define COCOAKIT_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "cocoakit/automaton.hpp"
#include "cocoakit/chain.hpp"

namespace cocoakit {

/// AUT v1: line-based, UTF-8, LF endings.
///   aut <name>
///   alphabet <sym> <sym> ...
///   states <n>
///   initial <q>
///   trans <src> <sym> <color> <dst>   (one line per entry)
///   end
/// Printing orders transitions by (src, symbol index, dst); state labels are
/// not part of the format.
std::string print_aut(const Automaton& aut, std::string_view name);

/// Parses an AUT v1 block. Violations of the automaton invariants
/// (input-completeness, color uniformity, bounds) are rejected with
/// ErrorCode::Parse carrying the validation diagnostics.
Automaton parse_aut(std::string_view text);

/// COCOA container: `cocoa <name> <n>` followed by n embedded AUT v1 blocks
/// in chain order, closed by `endcocoa`.
std::string print_cocoa(const Cocoa& chain, std::string_view name);
Cocoa parse_cocoa(std::string_view text);

struct ParsedFile {
  std::string name;
  std::variant<Automaton, Cocoa> content;
};

/// Dispatches on the first keyword (`aut` or `cocoa`).
ParsedFile parse_aut_or_cocoa(std::string_view text);

/// One-way export to the HOA v1 interchange format with "parity min even"
/// acceptance on transitions. Alphabet symbols are binary-encoded over
/// atomic propositions b0, b1, ...
std::string print_hoa(const Automaton& aut, std::string_view name);

}  // namespace cocoakit

#endif
