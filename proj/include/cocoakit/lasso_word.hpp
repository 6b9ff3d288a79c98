#ifndef COCOAKIT_LASSO_WORD_HPP
#define COCOAKIT_LASSO_WORD_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cocoakit/alphabet.hpp"

namespace cocoakit {

/// Ultimately periodic word stem·loop^ω given by its finite presentation.
/// The loop is non-empty; symbols are checked against an alphabet at use.
struct LassoWord {
  std::vector<std::string> stem;
  std::vector<std::string> loop;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

/// Text syntax: symbols separated by single spaces, stem and loop separated
/// by '|'; the stem may be empty ("|c", "X_1 a_0|a_3 a_3").
LassoWord parse_lasso(std::string_view text);
std::string format_lasso(const LassoWord& w);

/// Lasso with symbols resolved to indices of a concrete alphabet.
struct MappedLasso {
  std::vector<int> stem;
  std::vector<int> loop;
};

/// Throws ErrorCode::AlphabetMismatch on unknown symbols or an empty loop.
MappedLasso map_lasso(const Alphabet& alphabet, const LassoWord& w);
LassoWord unmap_lasso(const Alphabet& alphabet, const MappedLasso& w);

}  // namespace cocoakit

#endif
