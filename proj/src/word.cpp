#include "locrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "locrep/errors.hpp"

namespace locrep {

namespace {

int letter_rank(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

// Appends `l` onto a reduced stack, cancelling against the top if needed.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == -l) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

bool looks_indexed(std::string_view text) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if ((text[i] == 'x' || text[i] == 'X') &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      return true;
    }
  }
  return false;
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Letter> letters) : letters_(reduce(letters).letters_) {}

Word Word::generator(Letter k) {
  if (k < 1) throw std::invalid_argument("generator index must be positive");
  return Word(Reduced{}, {k});
}

Letter Word::max_generator() const {
  Letter m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (auto c = letter_rank(letters_[i]) <=> letter_rank(other.letters_[i]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  if (looks_indexed(text)) {
    std::size_t i = 0;
    while (i < text.size()) {
      unsigned char c = static_cast<unsigned char>(text[i]);
      if (std::isspace(c)) {
        ++i;
        continue;
      }
      if (c != 'x' && c != 'X') {
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                         "' in word \"" + std::string(text) + "\"");
      }
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1) throw ParseError("generator token without index in \"" + std::string(text) + "\"");
      long k = std::strtol(std::string(text.substr(i + 1, j - i - 1)).c_str(), nullptr, 10);
      if (k < 1 || k > 1'000'000) throw ParseError("generator index out of range in \"" + std::string(text) + "\"");
      raw.push_back(c == 'x' ? static_cast<Letter>(k) : -static_cast<Letter>(k));
      i = j;
    }
    return reduce(raw);
  }
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "1") return Word{};
  for (char ch : trimmed) {
    if (ch >= 'a' && ch <= 'z') {
      raw.push_back(ch - 'a' + 1);
    } else if (ch >= 'A' && ch <= 'Z') {
      raw.push_back(-(ch - 'A' + 1));
    } else {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in word \"" +
                       std::string(text) + "\"");
    }
  }
  return reduce(raw);
}

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("letter 0 is not a generator");
    push_reduced(stack, l);
  }
  return Word(Word::Reduced{}, std::move(stack));
}

Word concat(const Word& u, const Word& v) {
  const auto& a = u.letters_;
  const auto& b = v.letters_;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == -b[k]) ++k;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * k);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  return Word(Word::Reduced{}, std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters_.rbegin(), w.letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(Word::Reduced{}, std::move(out));
}

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Letter> stack;
  for (Letter l : w.letters_) {
    auto g = static_cast<std::size_t>(std::abs(l));
    if (g > images.size()) {
      throw IncompleteSubstitution("no image for generator x" + std::to_string(g));
    }
    const auto& img = images[g - 1].letters_;
    if (l > 0) {
      for (Letter m : img) push_reduced(stack, m);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(stack, -*it);
    }
  }
  return Word(Word::Reduced{}, std::move(stack));
}

Word reverse(const Word& w) {
  // Reversal of a reduced word is reduced.
  return Word(Word::Reduced{}, std::vector<Letter>(w.letters_.rbegin(), w.letters_.rend()));
}

Word swap_letters(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters_) {
    Letter g = std::abs(l);
    if (g > 2) throw RankError("swap_letters needs a word over {a, b}; found x" + std::to_string(g));
    Letter s = 3 - g;
    out.push_back(l > 0 ? s : -s);
  }
  return Word(Word::Reduced{}, std::move(out));
}

Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : invert(w);
  Word out;
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

CyclicDecomposition cyclically_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t n = letters.size();
  std::size_t k = 0;
  while (2 * k + 1 < n && letters[k] == -letters[n - 1 - k]) ++k;
  return {Word(letters.subspan(k, n - 2 * k)), Word(letters.subspan(0, k))};
}

bool is_conjugate(const Word& u, const Word& v) {
  Word cu = cyclically_reduce(u).core;
  Word cv = cyclically_reduce(v).core;
  if (cu.length() != cv.length()) return false;
  if (cu.empty()) return true;
  // v is a rotation of u iff v occurs in u.u
  auto a = cu.letters();
  auto b = cv.letters();
  std::vector<Letter> doubled(a.begin(), a.end());
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

int exponent_sum(const Word& w, Letter gen) {
  int s = 0;
  for (Letter l : w.letters()) {
    if (l == gen) ++s;
    if (l == -gen) --s;
  }
  return s;
}

int occurrences(const Word& w, Letter gen) {
  int s = 0;
  for (Letter l : w.letters()) {
    if (std::abs(l) == gen) ++s;
  }
  return s;
}

std::string to_string(const Word& w, WordStyle style) {
  if (w.empty()) return "1";
  if (style == WordStyle::Auto) {
    style = w.max_generator() <= 2 ? WordStyle::Compact : WordStyle::Indexed;
  }
  if (style == WordStyle::Compact && w.max_generator() > 26) style = WordStyle::Indexed;
  std::string out;
  if (style == WordStyle::Compact) {
    for (Letter l : w.letters()) {
      char base = l > 0 ? 'a' : 'A';
      out.push_back(static_cast<char>(base + std::abs(l) - 1));
    }
    return out;
  }
  std::ostringstream os;
  bool first = true;
  for (Letter l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << (l > 0 ? 'x' : 'X') << std::abs(l);
  }
  return os.str();
}

}  // namespace locrep
