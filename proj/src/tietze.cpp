#include "locrep/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace locrep {

namespace {

Word rotate(const Word& w, std::size_t k) {
  auto l = w.letters();
  std::vector<Letter> out(l.begin() + static_cast<std::ptrdiff_t>(k), l.end());
  out.insert(out.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
  return Word(std::span<const Letter>(out));
}

// Least rotation of w or w^-1; identifies relators defining the same normal
// closure.
Word cyclic_key(const Word& w) {
  Word best = w;
  for (const Word& v : {w, invert(w)}) {
    for (std::size_t k = 0; k < v.length(); ++k) {
      Word r = rotate(v, k);
      if (r < best) best = std::move(r);
    }
  }
  return best;
}

std::optional<GroupPresentation> normalize(const GroupPresentation& p) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : p.relators) {
    Word core = cyclically_reduce(r).core;
    if (core.empty()) continue;
    if (!seen.insert(cyclic_key(core)).second) continue;
    out.push_back(std::move(core));
  }
  if (out == p.relators) return std::nullopt;
  return GroupPresentation(p.generators, std::move(out));
}

std::optional<GroupPresentation> eliminate(const GroupPresentation& p) {
  std::vector<std::size_t> order(p.relators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return p.relators[i].length() < p.relators[j].length();
  });
  for (std::size_t ri : order) {
    const Word& r = p.relators[ri];
    for (Letter gen = r.max_generator(); gen >= 1; --gen) {
      if (occurrences(r, gen) != 1) continue;
      std::size_t pos = 0;
      while (std::abs(r[pos]) != gen) ++pos;
      // r ~ x^e u, so x = u^-1 (e = 1) or x = u (e = -1)
      Word rot = rotate(r, pos);
      auto rest = rot.letters().subspan(1);
      Word u(rest);
      Word value = rot.front() > 0 ? invert(u) : u;

      std::vector<Word> images;
      for (Letter k = 1; k <= p.generators; ++k) {
        if (k == gen) {
          images.push_back(value);
        } else {
          images.push_back(Word::generator(k));
        }
      }
      std::vector<Word> renumber;
      for (Letter k = 1; k <= p.generators; ++k) {
        renumber.push_back(k < gen ? Word::generator(k) : k == gen ? Word{} : Word::generator(k - 1));
      }
      std::vector<Word> out;
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i == ri) continue;
        out.push_back(substitute(substitute(p.relators[i], images), renumber));
      }
      return GroupPresentation(p.generators - 1, std::move(out));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<GroupPresentation> tietze_step(const GroupPresentation& p) {
  if (auto n = normalize(p)) return n;
  return eliminate(p);
}

GroupPresentation tietze_simplify(const GroupPresentation& p, int max_iterations) {
  GroupPresentation cur = p;
  for (int i = 0; i < max_iterations; ++i) {
    auto next = tietze_step(cur);
    if (!next) break;
    cur = std::move(*next);
  }
  return cur;
}

}  // namespace locrep
