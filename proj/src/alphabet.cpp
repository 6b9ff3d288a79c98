#include "cocoakit/alphabet.hpp"

#include <cctype>

#include "cocoakit/errors.hpp"

namespace cocoakit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlphabetMismatch: return "ALPHABET_MISMATCH";
    case ErrorCode::NotDeterministic: return "NOT_DETERMINISTIC";
    case ErrorCode::NotCobuchi: return "NOT_COBUCHI";
    case ErrorCode::NotBijective: return "NOT_BIJECTIVE";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Invalid: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw Error(ErrorCode::Invalid, "alphabet must not be empty");
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty())
      throw Error(ErrorCode::Invalid, "empty alphabet symbol");
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '|' || c == '.')
        throw Error(ErrorCode::Invalid, "illegal character in symbol '" + s + "'");
    }
    if (!index_.emplace(s, i).second)
      throw Error(ErrorCode::Invalid, "duplicate alphabet symbol '" + s + "'");
  }
}

int Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Alphabet::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0)
    throw Error(ErrorCode::AlphabetMismatch,
                "symbol '" + std::string(name) + "' is not in the alphabet");
  return i;
}

}  // namespace cocoakit
