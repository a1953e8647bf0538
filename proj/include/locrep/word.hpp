#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locrep {

// A letter is a signed generator index: +k is x_k, -k is x_k^{-1} (k >= 1).
using Letter = std::int32_t;

// Generator indices of the rank-2 and rank-3 alphabets used throughout.
inline constexpr Letter kA = 1;
inline constexpr Letter kB = 2;
inline constexpr Letter kC = 3;

// A freely reduced word in a free group of arbitrary finite rank.
//
// Words are immutable values; every operation returns a new word.  The
// constructor always reduces, so no Word ever contains a cancelling pair.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  // Parses compact ("abAB", 'a'..'z' generators, uppercase inverses, "1" or
  // "" for the identity) or indexed ("x1 X2 x3") syntax.
  static Word parse(std::string_view text);

  // x_k as a word.
  static Word generator(Letter k);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Largest generator index occurring, 0 for the identity.
  Letter max_generator() const;

  bool operator==(const Word&) const = default;
  // Shortlex order with x_k < x_k^{-1} < x_{k+1} < ...
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend Word reduce(std::span<const Letter> raw);
  friend Word concat(const Word& u, const Word& v);
  friend Word invert(const Word& w);
  friend Word substitute(const Word& w, std::span<const Word> images);
  friend Word reverse(const Word& w);
  friend Word swap_letters(const Word& w);
};

// Unique freely reduced form of an arbitrary letter sequence.
Word reduce(std::span<const Letter> raw);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

// Replaces x_k^{±1} by images[k-1]^{±1}; throws IncompleteSubstitution when
// an occurring generator has no image.
Word substitute(const Word& w, std::span<const Word> images);

Word reverse(const Word& w);

// Exchanges a and b; throws RankError for generators beyond b.
Word swap_letters(const Word& w);

// w^k for any integer k.
Word power(const Word& w, int k);

struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

// w = conjugator * core * conjugator^{-1} with core cyclically reduced.
CyclicDecomposition cyclically_reduce(const Word& w);

bool is_conjugate(const Word& u, const Word& v);

// Signed number of occurrences of x_gen.
int exponent_sum(const Word& w, Letter gen);

// Number of occurrences of x_gen^{±1}.
int occurrences(const Word& w, Letter gen);

enum class WordStyle {
  Auto,     // compact for rank <= 2, indexed otherwise
  Compact,  // a, b, c, ... with uppercase inverses (rank <= 26)
  Indexed,  // "x1 X2"
};

std::string to_string(const Word& w, WordStyle style = WordStyle::Auto);

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

}  // namespace locrep
