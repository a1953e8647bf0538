#include "locrep/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "locrep/errors.hpp"

namespace locrep {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid strand count must be >= 1");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw std::out_of_range("braid generator " + std::to_string(l) + " outside B_" +
                              std::to_string(strands_));
    }
  }
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("braid strand count must be >= 1");
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    std::string_view token = text.substr(i, j - i);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed braid token \"" + std::string(token) + "\"");
    }
    if (value == 0 || std::abs(value) >= strands) {
      throw ParseError("braid generator " + std::string(token) + " outside 1.." +
                       std::to_string(strands - 1));
    }
    letters.push_back(value);
    i = j;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord free_reduce_braid(const BraidWord& b) {
  std::vector<int> stack;
  for (int l : b.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(b.strands(), std::move(stack));
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch("concatenating braids on different strand counts");
  auto letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(b.strands(), std::move(letters));
}

std::string to_string(const BraidWord& b) {
  std::string out;
  for (int l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

Endo local_endo(const LocalRep& rep, int i, int sign) {
  int n = rep.strands();
  if (i < 1 || i >= n) {
    throw std::out_of_range("generator " + std::to_string(i) + " outside B_" + std::to_string(n));
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return Endo::local(n, i, sign > 0 ? rep.core(i) : rep.inverse_core(i));
}

Endo endo_of_braid(const LocalRep& rep, const BraidWord& b) {
  if (b.strands() != rep.strands()) {
    throw StrandMismatch("braid on " + std::to_string(b.strands()) + " strands, representation on " +
                         std::to_string(rep.strands()));
  }
  int n = rep.strands();
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images.push_back(Word::generator(k));
  for (int l : b.letters()) {
    int i = std::abs(l);
    const AutF2& c = l > 0 ? rep.core(i) : rep.inverse_core(i);
    // Only x_i and x_{i+1} move, so substitute through a short image table.
    std::vector<Word> table;
    table.reserve(static_cast<std::size_t>(i + 1));
    for (int k = 1; k < i; ++k) table.push_back(Word::generator(k));
    const Word embed[] = {Word::generator(i), Word::generator(i + 1)};
    table.push_back(substitute(c.image_a(), embed));
    table.push_back(substitute(c.image_b(), embed));
    for (int k = i + 2; k <= n; ++k) table.push_back(Word::generator(k));
    for (auto& w : images) w = substitute(w, table);
  }
  return Endo(std::move(images));
}

bool verify_braid_relations(const std::vector<AutF2>& cores) {
  int n = static_cast<int>(cores.size()) + 1;
  std::vector<Endo> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Endo::local(n, i, cores[static_cast<std::size_t>(i - 1)]));
  for (int i = 1; i + 1 < n; ++i) {
    const Endo& s = gens[static_cast<std::size_t>(i - 1)];
    const Endo& t = gens[static_cast<std::size_t>(i)];
    if (compose(compose(s, t), s) != compose(compose(t, s), t)) return false;
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      const Endo& s = gens[static_cast<std::size_t>(i - 1)];
      const Endo& t = gens[static_cast<std::size_t>(j - 1)];
      if (compose(s, t) != compose(t, s)) return false;
    }
  }
  return true;
}

bool verify_braid_relations(const LocalRep& rep) { return verify_braid_relations(rep.cores()); }

}  // namespace locrep
