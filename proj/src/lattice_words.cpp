#include "catalan/lattice_words.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalan/errors.hpp"

namespace catalan {

StepAlphabet::StepAlphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (const auto& s : symbols_) {
    if (s.delta < -1 || s.delta > 1) throw std::invalid_argument("step delta must be -1, 0 or +1");
    if (s.delta == 0) has_level_ = true;
  }
}

const StepAlphabet& StepAlphabet::parentheses() {
  static const StepAlphabet a({{'(', +1}, {')', -1}});
  return a;
}

const StepAlphabet& StepAlphabet::dyck() {
  static const StepAlphabet a({{'U', +1}, {'D', -1}});
  return a;
}

const StepAlphabet& StepAlphabet::two_motzkin() {
  static const StepAlphabet a({{'U', +1}, {'D', -1}, {'S', 0}, {'W', 0}});
  return a;
}

std::size_t StepAlphabet::rank(char glyph) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].glyph == glyph) return i;
  return symbols_.size();
}

LatticeWordCursor::LatticeWordCursor(const StepAlphabet& alphabet, std::size_t length, std::string_view prefix)
    : alphabet_(&alphabet), length_(length), fixed_(prefix.size()), word_(length, '\0'),
      height_before_(length + 1, 0) {
  if (prefix.size() > length) return;
  long h = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const std::size_t r = alphabet.rank(prefix[i]);
    if (r == alphabet.size()) return;
    height_before_[i] = h;
    word_[i] = prefix[i];
    h += alphabet[r].delta;
    if (h < 0) return;
  }
  height_before_[prefix.size()] = h;
  if (!alphabet.completable(h, length - prefix.size())) return;
  valid_ = fill_minimal(prefix.size());
}

bool LatticeWordCursor::fill_minimal(std::size_t from) {
  long h = height_before_[from];
  for (std::size_t i = from; i < length_; ++i) {
    bool placed = false;
    for (std::size_t r = 0; r < alphabet_->size(); ++r) {
      const long next = h + (*alphabet_)[r].delta;
      if (alphabet_->completable(next, length_ - i - 1)) {
        word_[i] = (*alphabet_)[r].glyph;
        h = next;
        height_before_[i + 1] = h;
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return true;
}

void LatticeWordCursor::advance() {
  if (!valid_) return;
  for (std::size_t i = length_; i-- > fixed_;) {
    const long h = height_before_[i];
    for (std::size_t r = alphabet_->rank(word_[i]) + 1; r < alphabet_->size(); ++r) {
      const long next = h + (*alphabet_)[r].delta;
      if (alphabet_->completable(next, length_ - i - 1)) {
        word_[i] = (*alphabet_)[r].glyph;
        height_before_[i + 1] = next;
        valid_ = fill_minimal(i + 1);
        return;
      }
    }
  }
  valid_ = false;
}

std::vector<std::string> completable_prefixes(const StepAlphabet& alphabet, std::size_t length,
                                              std::size_t prefix_length) {
  prefix_length = std::min(prefix_length, length);
  std::vector<std::string> out;
  std::string current;
  // depth-first in alphabet order keeps the output lexicographic
  auto rec = [&](auto&& self, long h) -> void {
    if (current.size() == prefix_length) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < alphabet.size(); ++r) {
      const long next = h + alphabet[r].delta;
      if (!alphabet.completable(next, length - current.size() - 1)) continue;
      current.push_back(alphabet[r].glyph);
      self(self, next);
      current.pop_back();
    }
  };
  if (alphabet.completable(0, length)) rec(rec, 0);
  return out;
}

void validate_lattice_word(const StepAlphabet& alphabet, std::string_view word) {
  long h = 0;
  std::size_t last_rise_from_axis = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t r = alphabet.rank(word[i]);
    if (r == alphabet.size()) throw ParseError(std::string("unexpected character '") + word[i] + "'", i);
    if (h == 0 && alphabet[r].delta > 0) last_rise_from_axis = i;
    h += alphabet[r].delta;
    if (h < 0) throw ParseError("step goes below the axis", i);
  }
  if (h != 0) throw ParseError("unmatched up step", last_rise_from_axis);
}

}  // namespace catalan
