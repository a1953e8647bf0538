#pragma once

#include <set>
#include <vector>

#include "locrep/quad.hpp"
#include "locrep/word.hpp"

namespace locrep {

// Reduced words over {a, b} of length <= max_len, in shortlex order.
std::vector<Word> reduced_words(int max_len);

// Pairs (A, B) of reduced words of length <= max_len forming a basis of F_2.
std::vector<std::pair<Word, Word>> basis_pairs(int max_len);

struct SearchStats {
  std::size_t words = 0;
  std::size_t basis_pairs = 0;
  std::size_t quads_tested = 0;
  std::size_t solutions = 0;  // before canonicalization
};

// Canonical representatives of every valid quad whose four words have length
// <= max_len.  The result does not depend on `jobs`.
std::set<Quad> classify_search(int max_len, int jobs = 1, SearchStats* stats = nullptr);

}  // namespace locrep
