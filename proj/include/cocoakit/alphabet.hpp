#ifndef COCOAKIT_ALPHABET_HPP
#define COCOAKIT_ALPHABET_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cocoakit {

/// Ordered finite alphabet. Symbol order is fixed at construction and defines
/// the canonical iteration order everywhere (transition printing, witness
/// search, lasso enumeration).
class Alphabet {
 public:
  /// Symbols must be pairwise distinct, non-empty, and free of whitespace,
  /// '|' and '.' (reserved by the text formats).
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Index of `name`, or -1 if the symbol is not part of the alphabet.
  int index_of(std::string_view name) const;

  /// Like index_of but throws ErrorCode::AlphabetMismatch on unknown symbols.
  int require(std::string_view name) const;

  bool contains(std::string_view name) const { return index_of(name) >= 0; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace cocoakit

#endif
