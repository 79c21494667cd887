#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// Ordered alphabet of lattice steps. Symbol order is the lexicographic order of the
// enumeration; each symbol moves the height by its delta in {-1, 0, +1}.
class StepAlphabet {
 public:
  struct Symbol {
    char glyph;
    int delta;
  };

  explicit StepAlphabet(std::vector<Symbol> symbols);

  // '(' < ')'
  static const StepAlphabet& parentheses();
  // U < D
  static const StepAlphabet& dyck();
  // U < D < S < W
  static const StepAlphabet& two_motzkin();

  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  // Rank of glyph in the alphabet, or size() when absent.
  std::size_t rank(char glyph) const;

  // True iff a word at height h can be closed back to the axis in exactly `remaining` steps.
  bool completable(long height, std::size_t remaining) const {
    if (height < 0 || static_cast<std::size_t>(height) > remaining) return false;
    return has_level_ || (remaining - static_cast<std::size_t>(height)) % 2 == 0;
  }

 private:
  std::vector<Symbol> symbols_;
  bool has_level_ = false;
};

// Walks every word of a fixed length over an alphabet that starts and ends on the axis
// and never goes below it, in lexicographic order, optionally restricted to words that
// begin with a fixed prefix. Successor is computed in place.
class LatticeWordCursor {
 public:
  LatticeWordCursor(const StepAlphabet& alphabet, std::size_t length, std::string_view prefix = {});

  bool valid() const { return valid_; }
  const std::string& word() const { return word_; }
  void advance();

 private:
  bool fill_minimal(std::size_t from);

  const StepAlphabet* alphabet_;
  std::size_t length_;
  std::size_t fixed_;
  std::string word_;
  std::vector<long> height_before_;
  bool valid_ = false;
};

template <class Fn>
void for_each_lattice_word(const StepAlphabet& alphabet, std::size_t length, std::string_view prefix, Fn&& fn) {
  for (LatticeWordCursor c(alphabet, length, prefix); c.valid(); c.advance()) fn(std::string_view(c.word()));
}

// All prefixes of the given length that extend to at least one complete word, in
// lexicographic order. Used to shard an enumeration; the shards partition the words.
std::vector<std::string> completable_prefixes(const StepAlphabet& alphabet, std::size_t length,
                                              std::size_t prefix_length);

// Throws ParseError unless every glyph is in the alphabet, no prefix dips below the axis
// and the word ends on it. A word left open is reported at its earliest unmatched up step.
void validate_lattice_word(const StepAlphabet& alphabet, std::string_view word);

}  // namespace catalan
