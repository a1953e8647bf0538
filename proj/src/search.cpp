#include "locrep/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "locrep/autf2.hpp"

namespace locrep {

std::vector<Word> reduced_words(int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<std::vector<Letter>> frontier{{}};
  constexpr Letter kLetters[] = {kA, -kA, kB, -kB};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (Letter l : kLetters) {
        if (!w.empty() && w.back() == -l) continue;
        auto grown = w;
        grown.push_back(l);
        out.emplace_back(std::span<const Letter>(grown));
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::pair<Word, Word>> basis_pairs(int max_len) {
  auto words = reduced_words(max_len);
  std::vector<std::pair<Word, Word>> out;
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (std::abs(abelian_determinant(a, b)) != 1) continue;
      if (is_basis(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::set<Quad> classify_search(int max_len, int jobs, SearchStats* stats) {
  if (max_len < 1) throw std::invalid_argument("classify_search: max_len must be >= 1");
  jobs = std::max(1, jobs);
  auto pairs = basis_pairs(max_len);

  // Partitioned by the first core; each worker owns its result set.
  std::vector<std::set<Quad>> partial(static_cast<std::size_t>(jobs));
  std::vector<std::size_t> found(static_cast<std::size_t>(jobs), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t slot) {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= pairs.size()) return;
      for (const auto& kappa : pairs) {
        Quad q(pairs[i].first, pairs[i].second, kappa.first, kappa.second);
        if (!satisfies_braid_equations(q)) continue;
        ++found[slot];
        partial[slot].insert(canonicalize(q));
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, static_cast<std::size_t>(j));
  }

  std::set<Quad> result;
  for (auto& s : partial) result.merge(s);
  if (stats) {
    stats->words = reduced_words(max_len).size();
    stats->basis_pairs = pairs.size();
    stats->quads_tested = pairs.size() * pairs.size();
    stats->solutions = 0;
    for (auto f : found) stats->solutions += f;
  }
  return result;
}

}  // namespace locrep
